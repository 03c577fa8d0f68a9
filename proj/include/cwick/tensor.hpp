#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cwick/errors.hpp"
#include "cwick/scalar.hpp"
#include "cwick/signature.hpp"

namespace cwick {

// Runtime bound on word length. Word spaces grow like d^n, so operations
// that would build longer signatures refuse with a resource error instead.
inline std::atomic<std::size_t>& max_word_length_ref() {
    static std::atomic<std::size_t> cap{8};
    return cap;
}

inline std::size_t max_word_length() { return max_word_length_ref().load(); }
inline void set_max_word_length(std::size_t n) { max_word_length_ref().store(n); }

inline void check_word_length(std::size_t len) {
    if (len > max_word_length())
        throw resource_error("word length " + std::to_string(len) +
                             " exceeds the configured limit " +
                             std::to_string(max_word_length()));
}

// Sparse exact linear combination of basis words sharing one signature.
// The term map is ordered, so iteration (and therefore every report and
// every row reduction) is reproducible.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(Signature sig) : sig_(std::move(sig)) {}

    static Tensor basis(const Signature& sig, IndexWord idx, Scalar coeff = Scalar(1)) {
        if (idx.size() != sig.size())
            throw signature_error("index word length does not match signature");
        check_word_length(sig.size());
        Tensor t(sig);
        t.accumulate(std::move(idx), std::move(coeff));
        return t;
    }

    static Tensor basis(const BasisWord& w, Scalar coeff = Scalar(1)) {
        return basis(w.sig, w.idx, std::move(coeff));
    }

    // Scalar-level tensor (empty signature).
    static Tensor unit(Scalar value = Scalar(1)) {
        Tensor t;
        t.accumulate(IndexWord{}, std::move(value));
        return t;
    }

    const Signature& signature() const noexcept { return sig_; }
    const std::map<IndexWord, Scalar>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    Scalar coeff(const IndexWord& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Scalar() : it->second;
    }

    void accumulate(IndexWord w, Scalar c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(std::move(w), std::move(c));
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    void add_term(const IndexWord& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    // this += k * other (signatures must agree)
    void add_scaled(const Tensor& other, const Scalar& k) {
        require_same_signature(other);
        if (k.is_zero()) return;
        if (&other == this) {
            *this = scaled(Scalar(1) + k);
            return;
        }
        for (const auto& [w, c] : other.terms_) add_term(w, c * k);
    }

    friend Tensor operator+(Tensor a, const Tensor& b) {
        a.add_scaled(b, Scalar(1));
        return a;
    }

    friend Tensor operator-(Tensor a, const Tensor& b) {
        a.add_scaled(b, Scalar(-1));
        return a;
    }

    Tensor& operator+=(const Tensor& o) {
        add_scaled(o, Scalar(1));
        return *this;
    }

    Tensor& operator-=(const Tensor& o) {
        add_scaled(o, Scalar(-1));
        return *this;
    }

    friend Tensor operator*(const Scalar& k, const Tensor& t) { return t.scaled(k); }

    Tensor scaled(const Scalar& k) const {
        Tensor r(sig_);
        if (k.is_zero()) return r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, c * k);
        return r;
    }

    friend Tensor operator-(const Tensor& t) { return t.scaled(Scalar(-1)); }

    bool operator==(const Tensor&) const = default;

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [w, c] : terms_) {
            if (!out.empty()) out += " + ";
            std::string word = BasisWord{sig_, w}.str();
            if (w.empty()) {
                out += c.str();
            } else if (c.is_one()) {
                out += word;
            } else {
                std::string cs = c.str();
                bool wrap = cs.find_first_of("+-/") != std::string::npos && cs.size() > 1;
                out += (wrap ? "(" + cs + ")" : cs) + "*" + word;
            }
        }
        return out;
    }

private:
    void require_same_signature(const Tensor& o) const {
        if (sig_ != o.sig_)
            throw signature_error("signature mismatch: [" + sig_.str() + "] vs [" +
                                  o.sig_.str() + "]");
    }

    Signature sig_;
    std::map<IndexWord, Scalar> terms_;  // no zero coefficients stored
};

inline Tensor tensor_product(const Tensor& a, const Tensor& b) {
    Signature sig = a.signature().concat(b.signature());
    check_word_length(sig.size());
    Tensor r(sig);
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            IndexWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.accumulate(std::move(w), ca * cb);
        }
    }
    return r;
}

// Linear map acting on two adjacent slots. Input is a fixed variance pair;
// output is either a variance pair or empty (the evaluation map E* x E -> C,
// which devours both slots). Entries are stored column-wise and sparsely:
// column (i,j) lists the output words reachable from input word (i,j).
class TwoSlotMap {
public:
    using Column = std::map<IndexWord, Scalar>;

    TwoSlotMap(int dim, std::array<Variance, 2> in, std::vector<Variance> out)
        : dim_(dim), in_(in), out_(std::move(out)) {
        if (dim_ < 1) throw input_error("dimension must be >= 1");
        if (out_.size() != 0 && out_.size() != 2)
            throw input_error("two-slot map output must have zero or two slots");
    }

    // The canonical pairing ev(e_i (x) f_j) = delta_ij.
    static TwoSlotMap evaluation(int dim) {
        TwoSlotMap m(dim, {Variance::contravariant, Variance::covariant}, {});
        for (int i = 1; i <= dim; ++i) m.cols_[{i, i}][{}] = Scalar(1);
        return m;
    }

    static TwoSlotMap identity(int dim, Variance v1, Variance v2) {
        TwoSlotMap m(dim, {v1, v2}, {v1, v2});
        for (int i = 1; i <= dim; ++i)
            for (int j = 1; j <= dim; ++j) m.cols_[{i, j}][{i, j}] = Scalar(1);
        return m;
    }

    int dim() const noexcept { return dim_; }
    const std::array<Variance, 2>& input_pair() const noexcept { return in_; }
    const std::vector<Variance>& output_pair() const noexcept { return out_; }

    // Registers the matrix element (input word (i,j)) -> (output word (k,l)).
    void add_entry(int i, int j, int k, int l, Scalar c) {
        if (out_.size() != 2) throw input_error("entry insertion needs a two-slot output");
        check_index(i);
        check_index(j);
        check_index(k);
        check_index(l);
        auto& col = cols_[{i, j}];
        IndexWord out{k, l};
        if (col.contains(out))
            throw input_error("duplicate entry (" + std::to_string(i) + "," +
                              std::to_string(j) + "," + std::to_string(k) + "," +
                              std::to_string(l) + ")");
        if (!c.is_zero()) col.emplace(std::move(out), std::move(c));
    }

    Scalar entry(int i, int j, int k, int l) const {
        auto it = cols_.find({i, j});
        if (it == cols_.end()) return {};
        auto jt = it->second.find({k, l});
        return jt == it->second.end() ? Scalar() : jt->second;
    }

    const Column* column(int i, int j) const {
        auto it = cols_.find({i, j});
        return it == cols_.end() ? nullptr : &it->second;
    }

    const std::map<std::array<int, 2>, Column>& columns() const noexcept { return cols_; }

    bool operator==(const TwoSlotMap&) const = default;

private:
    void check_index(int i) const {
        if (i < 1 || i > dim_)
            throw input_error("basis index " + std::to_string(i) + " out of range 1.." +
                              std::to_string(dim_));
    }

    int dim_;
    std::array<Variance, 2> in_;
    std::vector<Variance> out_;
    std::map<std::array<int, 2>, Column> cols_;
};

// Applies m to slots pos, pos+1 (1-based) of t. Linear in t; the result's
// signature swaps in m's output pair, or drops both slots for evaluation.
inline Tensor apply_two_slot(const TwoSlotMap& m, const Tensor& t, std::size_t pos) {
    const Signature& sig = t.signature();
    if (pos < 1 || pos + 1 > sig.size())
        throw slot_error("two-slot position " + std::to_string(pos) +
                         " out of range for signature [" + sig.str() + "]");
    if (sig.slot(pos) != m.input_pair()[0] || sig.slot(pos + 1) != m.input_pair()[1])
        throw slot_error("variance mismatch at position " + std::to_string(pos) +
                         " of signature [" + sig.str() + "]");

    Tensor out(sig.splice_pair(pos, m.output_pair()));
    for (const auto& [w, c] : t.terms()) {
        const auto* col = m.column(w[pos - 1], w[pos]);
        if (!col) continue;
        for (const auto& [ow, mc] : *col) {
            IndexWord nw;
            nw.reserve(w.size() - 2 + ow.size());
            nw.insert(nw.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos - 1));
            nw.insert(nw.end(), ow.begin(), ow.end());
            nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + 1), w.end());
            out.add_term(nw, c * mc);
        }
    }
    return out;
}

}  // namespace cwick
