#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cwick/contraction.hpp"
#include "cwick/errors.hpp"
#include "cwick/subspace.hpp"
#include "cwick/tensor.hpp"
#include "cwick/twist.hpp"

namespace cwick {

// Degree-graded quotient of the tensor algebra by the two-sided ideal
// generated by the image of (1 - B) in degree two:
//
//     J_2 = Im(1 - B),   J_n = E (x) J_{n-1} + J_{n-1} (x) E,  J_0 = J_1 = 0.
//
// Each level is a finite-dimensional subspace, so plain exact row reduction
// replaces any noncommutative ideal machinery. Canonical coset
// representatives are reductions against the echelon basis, spanned by the
// non-pivot words; levels are memoized per instance.
//
// annihilate()/create() push the operators of the contraction engine down
// to coset representatives. Creation always descends; annihilation descends
// only on systems whose twists preserve the ideal, which the checkers
// verify. A recorded failure makes annihilate() refuse.
class QuotientSpace {
public:
    explicit QuotientSpace(TwistSystem ts, std::size_t ambient_cap = 100000)
        : eng_(std::move(ts)), ambient_cap_(ambient_cap) {}

    const TwistSystem& twist() const noexcept { return eng_.twist(); }
    const ContractionEngine& engine() const noexcept { return eng_; }

    // Echelon basis of the degree-n ideal level.
    const Subspace& ideal_level(std::size_t n) const {
        auto it = levels_.find(n);
        if (it != levels_.end()) return it->second;
        check_ambient(n);
        Subspace level = build_level(n);
        return levels_.emplace(n, std::move(level)).first->second;
    }

    // Canonical representative of the coset of t; linear, idempotent, and
    // constant exactly on cosets.
    Tensor project(const Tensor& t) const {
        require_covariant(t);
        return ideal_level(t.signature().size()).reduce(t);
    }

    bool in_ideal(const Tensor& t) const {
        require_covariant(t);
        return ideal_level(t.signature().size()).contains(t);
    }

    // Quotient annihilation d_i = project o a_i on representatives.
    Tensor annihilate(int i, const Tensor& representative) const {
        if (!ill_defined_reason_.empty())
            throw ill_defined_error(
                "quotient annihilation is not well defined on this system: " +
                ill_defined_reason_);
        return project(eng_.annihilate(i, representative));
    }

    // Quotient creation d+_i = project o a+_i on representatives; this is
    // unconditionally well defined because E (x) J_n lies inside J_{n+1}.
    Tensor create(int i, const Tensor& representative) const {
        return project(eng_.create(i, representative));
    }

    // Canonical basis of the degree-n quotient: the non-pivot words.
    std::vector<IndexWord> representative_words(std::size_t n) const {
        const Subspace& level = ideal_level(n);
        std::vector<IndexWord> out;
        for (IndexWord& w : all_index_words(twist().dim, n))
            if (!level.is_pivot(w)) out.push_back(std::move(w));
        return out;
    }

    std::size_t full_dim(std::size_t n) const {
        std::size_t d = 1;
        for (std::size_t k = 0; k < n; ++k) d *= static_cast<std::size_t>(twist().dim);
        return d;
    }

    std::size_t quotient_dim(std::size_t n) const { return full_dim(n) - ideal_level(n).dim(); }

    std::size_t ambient_cap() const noexcept { return ambient_cap_; }

    // Recorded by the checkers when ideal preservation fails.
    void mark_ill_defined(std::string reason) { ill_defined_reason_ = std::move(reason); }
    const std::string& ill_defined_reason() const noexcept { return ill_defined_reason_; }

private:
    void require_covariant(const Tensor& t) const {
        if (!t.signature().is_covariant_word())
            throw signature_error("quotient levels live in purely covariant words, got [" +
                                  t.signature().str() + "]");
    }

    void check_ambient(std::size_t n) const {
        check_word_length(n);
        if (full_dim(n) > ambient_cap_)
            throw resource_error("ambient dimension " + std::to_string(full_dim(n)) +
                                 " at degree " + std::to_string(n) + " exceeds the cap " +
                                 std::to_string(ambient_cap_));
    }

    Subspace build_level(std::size_t n) const {
        Subspace level{Signature::covariant(n)};
        if (n < 2) return level;
        if (n == 2) {
            for (const IndexWord& w : all_index_words(twist().dim, 2)) {
                Tensor t = Tensor::basis(level.signature(), w);
                level.insert(t - apply_two_slot(twist().B, t, 1));
            }
            return level;
        }
        const Subspace& below = ideal_level(n - 1);
        for (const auto& [pivot, row] : below.rows()) {
            for (int i = 1; i <= twist().dim; ++i) {
                Tensor fi = Tensor::basis(Signature{Variance::covariant}, {i});
                level.insert(tensor_product(fi, row));
                level.insert(tensor_product(row, fi));
            }
        }
        return level;
    }

    ContractionEngine eng_;
    std::size_t ambient_cap_;
    mutable std::map<std::size_t, Subspace> levels_;
    std::string ill_defined_reason_;
};

}  // namespace cwick
