#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "cwick/errors.hpp"
#include "cwick/tensor.hpp"

namespace cwick {

// Linear subspace of a fixed word space, kept in reduced row echelon form:
// each row's pivot is its lexicographically greatest basis word, pivot
// coefficients are 1, and pivots are eliminated from every other row. The
// representation is canonical, so two equal subspaces compare equal, and
// reduce() yields the canonical coset representative (supported on the
// non-pivot words, which span a complement).
class Subspace {
public:
    explicit Subspace(Signature sig) : sig_(std::move(sig)) {}

    const Signature& signature() const noexcept { return sig_; }
    std::size_t dim() const noexcept { return rows_.size(); }

    const std::map<IndexWord, Tensor>& rows() const noexcept { return rows_; }

    bool is_pivot(const IndexWord& w) const { return rows_.contains(w); }

    // Canonical remainder of t against the echelon basis. Linear and
    // idempotent; zero exactly when t lies in the subspace.
    Tensor reduce(const Tensor& t) const {
        require_signature(t);
        if (rows_.empty() || t.is_zero()) return t;
        // one pass suffices: rows carry no pivot words other than their own,
        // so eliminating never reintroduces a pivot
        std::vector<std::pair<const Tensor*, Scalar>> hits;
        for (const auto& [w, c] : t.terms()) {
            auto it = rows_.find(w);
            if (it != rows_.end()) hits.emplace_back(&it->second, c);
        }
        if (hits.empty()) return t;
        Tensor r = t;
        for (const auto& [row, c] : hits) r.add_scaled(*row, -c);
        return r;
    }

    bool contains(const Tensor& t) const { return reduce(t).is_zero(); }

    // Adds the span of t; returns true when the dimension grew.
    bool insert(const Tensor& t) {
        Tensor r = reduce(t);
        if (r.is_zero()) return false;
        IndexWord pivot = r.terms().rbegin()->first;
        Scalar lead = r.terms().rbegin()->second;
        if (!lead.is_one()) r = r.scaled(lead.inverse());

        // eliminate the new pivot from rows that contain it as a tail word
        auto occ = occurrences_.find(pivot);
        if (occ != occurrences_.end()) {
            std::set<IndexWord> holders = occ->second;
            for (const IndexWord& hp : holders) {
                Tensor& row = rows_.at(hp);
                unindex(hp, row);
                row.add_scaled(r, -row.coeff(pivot));
                index(hp, row);
            }
        }
        index_new(pivot, r);
        rows_.emplace(std::move(pivot), std::move(r));
        return true;
    }

    static Subspace span(Signature sig, const std::vector<Tensor>& generators) {
        Subspace s(std::move(sig));
        for (const Tensor& g : generators) s.insert(g);
        return s;
    }

    bool operator==(const Subspace& o) const { return sig_ == o.sig_ && rows_ == o.rows_; }

private:
    void require_signature(const Tensor& t) const {
        if (t.signature() != sig_)
            throw signature_error("subspace signature [" + sig_.str() +
                                  "] does not match tensor [" + t.signature().str() + "]");
    }

    void index_new(const IndexWord& pivot, const Tensor& row) { index(pivot, row); }

    void index(const IndexWord& pivot, const Tensor& row) {
        for (const auto& [w, c] : row.terms())
            if (w != pivot) occurrences_[w].insert(pivot);
    }

    void unindex(const IndexWord& pivot, const Tensor& row) {
        for (const auto& [w, c] : row.terms()) {
            if (w == pivot) continue;
            auto it = occurrences_.find(w);
            if (it == occurrences_.end()) continue;
            it->second.erase(pivot);
            if (it->second.empty()) occurrences_.erase(it);
        }
    }

    Signature sig_;
    std::map<IndexWord, Tensor> rows_;                 // pivot word -> row
    std::map<IndexWord, std::set<IndexWord>> occurrences_;  // tail word -> pivots of rows holding it
};

// Echelonized spanning set of the image of a linear map, with preimages
// carried along, for deciding solvability of  map(X) = target  and
// producing a particular solution.
class PreimageSolver {
public:
    PreimageSolver(Signature image_sig, Signature preimage_sig)
        : image_sig_(std::move(image_sig)), preimage_sig_(std::move(preimage_sig)) {}

    // Registers image = map(preimage) as a potential echelon row.
    void insert(const Tensor& image, const Tensor& preimage) {
        Tensor img = image, pre = preimage;
        forward_reduce(img, pre);
        if (img.is_zero()) return;
        IndexWord pivot = img.terms().rbegin()->first;
        Scalar lead = img.terms().rbegin()->second;
        if (!lead.is_one()) {
            Scalar inv = lead.inverse();
            img = img.scaled(inv);
            pre = pre.scaled(inv);
        }
        rows_.emplace(std::move(pivot), std::make_pair(std::move(img), std::move(pre)));
    }

    // Solves map(X) = target within the registered span; returns X, or
    // nullopt together with nothing when target is outside the image.
    std::optional<Tensor> solve(const Tensor& target) const {
        Tensor rem = target, pre(preimage_sig_);
        forward_reduce(rem, pre);
        if (!rem.is_zero()) return std::nullopt;
        return pre.scaled(Scalar(-1));
    }

    // Remainder of target against the image span (zero iff solvable).
    Tensor residual(const Tensor& target) const {
        Tensor rem = target, pre(preimage_sig_);
        forward_reduce(rem, pre);
        return rem;
    }

private:
    // Eliminates pivots from img greatest-first, mirroring every operation
    // on pre. Rows are only forward-reduced (their tails may contain other
    // pivots), so repeat until no term of img is a pivot; each step removes
    // a word and introduces only strictly smaller ones, so this terminates.
    void forward_reduce(Tensor& img, Tensor& pre) const {
        bool changed = true;
        while (changed && !img.is_zero()) {
            changed = false;
            for (auto it = img.terms().rbegin(); it != img.terms().rend(); ++it) {
                auto jt = rows_.find(it->first);
                if (jt == rows_.end()) continue;
                Scalar coeff = it->second;
                img.add_scaled(jt->second.first, -coeff);
                pre.add_scaled(jt->second.second, -coeff);
                changed = true;
                break;  // the term map just changed; rescan
            }
        }
    }

    Signature image_sig_;
    Signature preimage_sig_;
    std::map<IndexWord, std::pair<Tensor, Tensor>> rows_;  // pivot -> (image row, preimage)
};

}  // namespace cwick
