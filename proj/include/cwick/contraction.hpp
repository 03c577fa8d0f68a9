#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "cwick/errors.hpp"
#include "cwick/tensor.hpp"
#include "cwick/twist.hpp"

namespace cwick {

// The twisted contraction and the operators built from it.
//
// contract() pairs the dual slot at a given position against each vector
// slot of the covariant run that follows it. Pairing with the k-th slot
// first threads the dual vector rightward through k-1 applications of the
// elementary twist, so the k-th summand is
//
//     (ev at k) o (C at k-1) o ... o (C at pos)        k = 1 .. n
//
// acting relative to pos. contract_leibniz() computes the same map through
// the twisted Leibniz recursion
//
//     ct_n = ct_1 + ct_{n-1} o C
//
// entirely independently; the two implementations agreeing on every input
// is a theorem, and both are shipped so the checkers can exploit the free
// cross-validation.
class ContractionEngine {
public:
    explicit ContractionEngine(TwistSystem ts, std::size_t degree_cap = 0)
        : ts_(std::move(ts)),
          ev_(TwoSlotMap::evaluation(ts_.dim)),
          degree_cap_(degree_cap ? degree_cap : max_word_length()) {
        if (degree_cap_ < 1) throw input_error("degree cap must be >= 1");
    }

    const TwistSystem& twist() const noexcept { return ts_; }
    std::size_t degree_cap() const noexcept { return degree_cap_; }

    // Contraction with the covariant run length inferred from the signature:
    // the run ends where covariance ends, which is exactly what mixed-prefix
    // expressions need.
    Tensor contract(const Tensor& t, std::size_t pos) const {
        return contract(t, pos, run_length(t, pos));
    }

    Tensor contract(const Tensor& t, std::size_t pos, std::size_t n) const {
        require_run(t, pos, n);
        // the contraction removes the dual slot and one covariant slot
        Tensor acc(t.signature().splice_pair(pos, {}));
        // accumulate sum_{k=1..n} ev^(pos+k-1) C^(pos+k-2) ... C^(pos)
        Tensor threaded = t;
        for (std::size_t k = 1; k <= n; ++k) {
            if (k > 1) threaded = apply_two_slot(ts_.C, threaded, pos + k - 2);
            acc += apply_two_slot(ev_, threaded, pos + k - 1);
        }
        return acc;
    }

    Tensor contract_leibniz(const Tensor& t, std::size_t pos) const {
        return contract_leibniz(t, pos, run_length(t, pos));
    }

    Tensor contract_leibniz(const Tensor& t, std::size_t pos, std::size_t n) const {
        require_run(t, pos, n);
        if (n == 1) return apply_two_slot(ev_, t, pos);
        Tensor head = apply_two_slot(ev_, t, pos);
        Tensor rest = contract_leibniz(apply_two_slot(ts_.C, t, pos), pos + 1, n - 1);
        return head + rest;
    }

    // Annihilation a_{n,i}(y) = contract(e_i (x) y, 1) on covariant y;
    // at the scalar level it is zero (nothing to pair against).
    Tensor annihilate(int i, const Tensor& y) const {
        return annihilate_via(i, y, false);
    }

    // The same operator through the Leibniz recursion; the checkers run
    // both routes and compare.
    Tensor annihilate_leibniz(int i, const Tensor& y) const {
        return annihilate_via(i, y, true);
    }

    // Creation a+_{n,j}(y) = f_j (x) y; refuses to grow past the degree cap.
    Tensor create(int j, const Tensor& y) const {
        require_covariant(y, "create");
        check_basis_index(j);
        if (y.signature().size() + 1 > degree_cap_)
            throw resource_error("creation would exceed the degree cap " +
                                 std::to_string(degree_cap_));
        Tensor fj = Tensor::basis(Signature{Variance::covariant}, {j});
        return tensor_product(fj, y);
    }

private:
    Tensor annihilate_via(int i, const Tensor& y, bool leibniz) const {
        require_covariant(y, "annihilate");
        check_basis_index(i);
        if (y.signature().empty() || y.is_zero())
            return Tensor(y.signature().empty()
                              ? Signature()
                              : Signature::covariant(y.signature().size() - 1));
        Tensor ei = Tensor::basis(Signature{Variance::contravariant}, {i});
        Tensor t = tensor_product(ei, y);
        return leibniz ? contract_leibniz(t, 1) : contract(t, 1);
    }

    std::size_t run_length(const Tensor& t, std::size_t pos) const {
        const Signature& sig = t.signature();
        if (pos < 1 || pos > sig.size())
            throw slot_error("contraction position " + std::to_string(pos) +
                             " out of range for signature [" + sig.str() + "]");
        std::size_t n = sig.covariant_run(pos + 1);
        if (n == 0)
            throw slot_error("no covariant slot follows position " + std::to_string(pos));
        return n;
    }

    void require_run(const Tensor& t, std::size_t pos, std::size_t n) const {
        const Signature& sig = t.signature();
        if (n < 1) throw slot_error("contraction needs a run of length >= 1");
        if (pos < 1 || pos + n > sig.size())
            throw slot_error("contraction run " + std::to_string(pos) + "+" +
                             std::to_string(n) + " out of range for signature [" +
                             sig.str() + "]");
        if (sig.slot(pos) != Variance::contravariant)
            throw slot_error("slot " + std::to_string(pos) + " must be contravariant");
        if (sig.covariant_run(pos + 1) < n)
            throw slot_error("slots " + std::to_string(pos + 1) + ".." +
                             std::to_string(pos + n) + " must be covariant");
    }

    void require_covariant(const Tensor& y, const char* op) const {
        if (!y.signature().is_covariant_word())
            throw slot_error(std::string(op) + " needs a purely covariant tensor, got [" +
                             y.signature().str() + "]");
    }

    void check_basis_index(int i) const {
        if (i < 1 || i > ts_.dim)
            throw input_error("basis index " + std::to_string(i) + " out of range 1.." +
                              std::to_string(ts_.dim));
    }

    TwistSystem ts_;
    TwoSlotMap ev_;
    std::size_t degree_cap_;
};

}  // namespace cwick
