#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cwick/contraction.hpp"
#include "cwick/errors.hpp"
#include "cwick/scalar_parser.hpp"
#include "cwick/tensor.hpp"
#include "cwick/twist.hpp"

namespace cwick {

// One formal symbol: a creator A<i> or an annihilator a<i>.
struct OpSymbol {
    bool creator;
    int index;

    // creators order before annihilators so normal-form terms print first
    auto operator<=>(const OpSymbol& o) const {
        if (creator != o.creator) return creator ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
        return index <=> o.index;
    }
    bool operator==(const OpSymbol&) const = default;

    std::string str() const {
        return (creator ? "A" : "a") + std::to_string(index);
    }

    static OpSymbol create(int i) { return {true, i}; }
    static OpSymbol annihilate(int i) { return {false, i}; }
};

using OpString = std::vector<OpSymbol>;

// Number of (annihilator, creator-to-its-right) pairs. Each rewrite of an
// adjacent a A pair strictly decreases this, which is what makes the
// normal-ordering loop terminate.
inline std::size_t inversion_count(const OpString& s) {
    std::size_t inv = 0, creators_right = 0;
    for (std::size_t i = s.size(); i-- > 0;) {
        if (s[i].creator)
            ++creators_right;
        else
            inv += creators_right;
    }
    return inv;
}

// Formal linear combination of symbol strings with exact coefficients.
class OpWord {
public:
    OpWord() = default;

    static OpWord one() {
        OpWord w;
        w.terms_.emplace(OpString{}, Scalar(1));
        return w;
    }

    static OpWord symbol(OpSymbol s) {
        OpWord w;
        w.terms_.emplace(OpString{s}, Scalar(1));
        return w;
    }

    static OpWord term(OpString s, Scalar c) {
        OpWord w;
        if (!c.is_zero()) w.terms_.emplace(std::move(s), std::move(c));
        return w;
    }

    const std::map<OpString, Scalar>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Scalar coeff(const OpString& s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? Scalar() : it->second;
    }

    void add_term(const OpString& s, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(s);
        if (it == terms_.end()) {
            terms_.emplace(s, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    friend OpWord operator+(OpWord a, const OpWord& b) {
        for (const auto& [s, c] : b.terms_) a.add_term(s, c);
        return a;
    }

    friend OpWord operator-(OpWord a, const OpWord& b) {
        for (const auto& [s, c] : b.terms_) a.add_term(s, -c);
        return a;
    }

    OpWord& operator+=(const OpWord& o) { return *this = *this + o; }

    OpWord scaled(const Scalar& k) const {
        OpWord r;
        if (k.is_zero()) return r;
        for (const auto& [s, c] : terms_) r.terms_.emplace(s, c * k);
        return r;
    }

    friend OpWord operator*(const Scalar& k, const OpWord& w) { return w.scaled(k); }

    // Concatenation product.
    friend OpWord operator*(const OpWord& a, const OpWord& b) {
        OpWord r;
        for (const auto& [sa, ca] : a.terms_) {
            for (const auto& [sb, cb] : b.terms_) {
                OpString s = sa;
                s.insert(s.end(), sb.begin(), sb.end());
                r.add_term(s, ca * cb);
            }
        }
        return r;
    }

    bool operator==(const OpWord&) const = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [s, c] : terms_) {
            if (!out.empty()) out += " + ";
            std::string word;
            for (const auto& sym : s) {
                if (!word.empty()) word += ' ';
                word += sym.str();
            }
            if (s.empty()) {
                out += c.str();
            } else if (c.is_one()) {
                out += word;
            } else {
                std::string cs = c.str();
                bool wrap = cs.find_first_of("+-/") != std::string::npos && cs.size() > 1;
                out += (wrap ? "(" + cs + ")" : cs) + " " + word;
            }
        }
        return out;
    }

private:
    std::map<OpString, Scalar> terms_;
};

// Rewrites every term until no annihilator stands left of a creator, using
// only the cross relation
//
//     a_i A_j  ->  delta_ij + sum_{k,l} c_{i,j,k,l} A_k a_l.
//
// The exchange relations among creators (and among annihilators) are not
// oriented as rewrites: their tensors are invertible, so neither direction
// is a reduction, and no confluent orientation is available in general.
// Creator strings that are equal only modulo those relations are compared
// through the quotient module instead. Within a term the creator block and
// annihilator block are therefore left untouched.
inline OpWord normal_order(const TwistSystem& ts, const OpWord& w) {
    OpWord result;
    std::vector<std::pair<OpString, Scalar>> work(w.terms().begin(), w.terms().end());

    while (!work.empty()) {
        auto [s, c] = std::move(work.back());
        work.pop_back();
        std::size_t hit = s.size();
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            if (!s[i].creator && s[i + 1].creator) {
                hit = i;
                break;
            }
        }
        if (hit == s.size()) {
            result.add_term(s, c);
            continue;
        }

        // termination measure: every replacement must lose inversions
        const std::size_t inv_before = inversion_count(s);
        auto push = [&](OpString next, Scalar coeff) {
            if (inversion_count(next) >= inv_before)
                throw error("normal-ordering rewrite failed to decrease inversions");
            work.emplace_back(std::move(next), std::move(coeff));
        };

        const int x = s[hit].index, y = s[hit + 1].index;
        if (x == y) {
            OpString shorter;
            shorter.reserve(s.size() - 2);
            shorter.insert(shorter.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(hit));
            shorter.insert(shorter.end(), s.begin() + static_cast<std::ptrdiff_t>(hit + 2), s.end());
            push(std::move(shorter), c);
        }
        if (const auto* col = ts.C.column(x, y)) {
            for (const auto& [out, coeff] : *col) {
                OpString swapped = s;
                swapped[hit] = OpSymbol::create(out[0]);
                swapped[hit + 1] = OpSymbol::annihilate(out[1]);
                push(std::move(swapped), c * coeff);
            }
        }
    }
    return result;
}

// Realizes a symbol string as the corresponding operator product on word
// tensors, applying symbols right to left through the contraction engine.
// Terms of different net degree accumulate into separate components.
inline std::map<std::size_t, Tensor> act_on_graded(const ContractionEngine& eng,
                                                   const OpWord& w, const Tensor& y) {
    if (!y.signature().is_covariant_word())
        throw slot_error("operator words act on purely covariant tensors");
    std::map<std::size_t, Tensor> acc;
    for (const auto& [s, c] : w.terms()) {
        Tensor t = y;
        for (std::size_t i = s.size(); i-- > 0;)
            t = s[i].creator ? eng.create(s[i].index, t) : eng.annihilate(s[i].index, t);
        if (t.is_zero()) continue;
        std::size_t degree = t.signature().size();
        auto it = acc.find(degree);
        if (it == acc.end())
            acc.emplace(degree, t.scaled(c));
        else
            it->second.add_scaled(t, c);
    }
    for (auto it = acc.begin(); it != acc.end();)
        it = it->second.is_zero() ? acc.erase(it) : std::next(it);
    return acc;
}

// Single-tensor variant for degree-homogeneous words (the common case);
// refuses words whose terms land in distinct degrees.
inline Tensor act_on(const ContractionEngine& eng, const OpWord& w, const Tensor& y) {
    auto graded = act_on_graded(eng, w, y);
    if (graded.empty()) return Tensor(y.signature());
    if (graded.size() > 1)
        throw signature_error("operator word maps input across distinct degrees");
    return graded.begin()->second;
}

// Coefficient of the empty string after normal ordering; the algebraic
// vacuum expectation of the word.
inline Scalar vacuum_expectation(const TwistSystem& ts, const OpWord& w) {
    return normal_order(ts, w).coeff({});
}

// Parses the CLI word syntax: terms joined by '+', each an optional
// coefficient (a product-level scalar expression; parenthesize sums)
// followed by symbols `a<i>` / `A<i>`, e.g. "a1 A1" or "q^2 a1 A2 + 1/2".
inline OpWord parse_op_word(std::string_view text, int dim, bool allow_q = true) {
    ScalarParser p(text, allow_q);
    OpWord out;
    if (p.at_end()) throw parse_error("empty operator word", 0, 1);
    while (true) {
        Scalar coeff(1);
        bool have_any = false;
        if (p.at_atom_start()) {
            coeff = p.parse_term();
            have_any = true;
        }
        OpString syms;
        while (true) {
            char c = p.peek();
            if (c != 'a' && c != 'A') break;
            bool creator = c == 'A';
            int start_col = p.column();
            std::size_t pos = p.pos() + 1;  // past the letter
            long long idx = 0;
            std::size_t digits = 0;
            while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                idx = idx * 10 + (text[pos] - '0');
                ++pos;
                ++digits;
                if (idx > 1'000'000) throw parse_error("symbol index out of range", 0, start_col);
            }
            if (digits == 0)
                throw parse_error("expected a basis index after symbol letter", 0, start_col + 1);
            if (idx < 1 || idx > dim)
                throw parse_error("basis index " + std::to_string(idx) + " out of range 1.." +
                                      std::to_string(dim),
                                  0, start_col);
            syms.push_back({creator, static_cast<int>(idx)});
            have_any = true;
            p.advance_to(pos);
        }
        if (!have_any)
            throw parse_error("expected a coefficient or an operator symbol", 0, p.column());
        out.add_term(syms, coeff);
        if (p.at_end()) break;
        if (p.peek() != '+')
            throw parse_error("expected '+' between operator word terms", 0, p.column());
        p.advance_to(p.pos() + 1);
    }
    return out;
}

}  // namespace cwick
