#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "cwick/errors.hpp"

namespace cwick {

// Slot variance of a word space: a covariant slot is a copy of E (basis
// f_1..f_d), a contravariant slot is a copy of the dual E* (basis e_1..e_d).
enum class Variance : std::uint8_t { covariant, contravariant };

inline char variance_letter(Variance v) {
    return v == Variance::covariant ? 'f' : 'e';
}

// Ordered list of slot variances; the empty signature is the scalar level.
class Signature {
public:
    Signature() = default;
    Signature(std::initializer_list<Variance> vs) : slots_(vs) {}
    explicit Signature(std::vector<Variance> vs) : slots_(std::move(vs)) {}

    static Signature covariant(std::size_t n) {
        return Signature(std::vector<Variance>(n, Variance::covariant));
    }

    static Signature contravariant(std::size_t n) {
        return Signature(std::vector<Variance>(n, Variance::contravariant));
    }

    std::size_t size() const noexcept { return slots_.size(); }
    bool empty() const noexcept { return slots_.empty(); }

    // 1-based slot access, matching the index convention used everywhere.
    Variance slot(std::size_t pos) const {
        if (pos < 1 || pos > slots_.size())
            throw slot_error("slot position " + std::to_string(pos) + " out of range 1.." +
                             std::to_string(slots_.size()));
        return slots_[pos - 1];
    }

    bool is_covariant_word() const noexcept {
        for (Variance v : slots_)
            if (v != Variance::covariant) return false;
        return true;
    }

    // Length of the maximal covariant run starting at 1-based position pos.
    std::size_t covariant_run(std::size_t pos) const {
        std::size_t n = 0;
        while (pos + n <= slots_.size() && slots_[pos + n - 1] == Variance::covariant) ++n;
        return n;
    }

    Signature concat(const Signature& o) const {
        std::vector<Variance> vs = slots_;
        vs.insert(vs.end(), o.slots_.begin(), o.slots_.end());
        return Signature(std::move(vs));
    }

    // Replaces 1-based slots pos, pos+1 with the given pair (possibly empty).
    Signature splice_pair(std::size_t pos, const std::vector<Variance>& out) const {
        std::vector<Variance> vs;
        vs.reserve(slots_.size() - 2 + out.size());
        vs.insert(vs.end(), slots_.begin(), slots_.begin() + static_cast<std::ptrdiff_t>(pos - 1));
        vs.insert(vs.end(), out.begin(), out.end());
        vs.insert(vs.end(), slots_.begin() + static_cast<std::ptrdiff_t>(pos + 1), slots_.end());
        return Signature(std::move(vs));
    }

    auto operator<=>(const Signature&) const = default;

    std::string str() const {
        if (slots_.empty()) return "<scalar>";
        std::string s;
        for (Variance v : slots_) {
            if (!s.empty()) s += ' ';
            s += v == Variance::covariant ? "E" : "E*";
        }
        return s;
    }

private:
    std::vector<Variance> slots_;
};

// Basis indices of a word, 1-based, one per slot.
using IndexWord = std::vector<int>;

struct BasisWord {
    Signature sig;
    IndexWord idx;

    auto operator<=>(const BasisWord&) const = default;

    std::string str() const {
        if (idx.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i) s += ' ';
            s += variance_letter(sig.slot(i + 1));
            s += std::to_string(idx[i]);
        }
        return s;
    }
};

// All index words of the given length over 1..dim, lexicographic.
inline std::vector<IndexWord> all_index_words(int dim, std::size_t len) {
    std::vector<IndexWord> out;
    IndexWord w(len, 1);
    while (true) {
        out.push_back(w);
        std::size_t i = len;
        while (i > 0) {
            if (w[i - 1] < dim) {
                ++w[i - 1];
                break;
            }
            w[i - 1] = 1;
            --i;
        }
        if (i == 0) break;
    }
    return out;
}

}  // namespace cwick
