#pragma once

// Deterministic random generators shared by the property tests and the
// acceptance suite. Everything is seeded explicitly; two runs of any suite
// see identical data.

#include <random>
#include <vector>

#include "cwick/cwick.hpp"

namespace gen {

using Rng = std::mt19937_64;
using namespace cwick;

inline int pick(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational rational(Rng& rng, int max_abs = 3) {
    return Rational(pick(rng, -max_abs, max_abs)) / Rational(pick(rng, 1, max_abs));
}

inline Rational nonzero_rational(Rng& rng, int max_abs = 3) {
    Rational r;
    do {
        r = rational(rng, max_abs);
    } while (r.is_zero());
    return r;
}

inline Scalar scalar(Rng& rng, bool allow_q = false) {
    Scalar s(nonzero_rational(rng));
    if (allow_q && pick(rng, 0, 2) == 0) s *= Scalar::q_power(pick(rng, -2, 2));
    return s;
}

// Sparse random entries: each input pair (i,j) gets `per_col` outputs at
// random positions with small rational coefficients.
inline std::vector<TwistEntry> random_entries(Rng& rng, int d, int per_col) {
    std::vector<TwistEntry> out;
    for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
            std::vector<std::pair<int, int>> used;
            for (int n = 0; n < per_col; ++n) {
                int k = pick(rng, 1, d), l = pick(rng, 1, d);
                bool dup = false;
                for (auto [uk, ul] : used) dup = dup || (uk == k && ul == l);
                if (dup) continue;
                used.emplace_back(k, l);
                out.push_back({i, j, k, l, Scalar(nonzero_rational(rng))});
            }
        }
    }
    return out;
}

// Unstructured random system; almost never satisfies any consistency
// condition, which is exactly what the unconditional identities need.
inline TwistSystem random_system(Rng& rng, int d, int per_col = 1) {
    return make_twist_system(d, random_entries(rng, d, per_col),
                             random_entries(rng, d, per_col),
                             random_entries(rng, d, per_col));
}

// Scaled flips B(f_i (x) f_j) = beta_ij f_j (x) f_i etc. With
// beta_ij beta_ji = 1, beta_ii = 1 and gamma_ij = beta_ji the linear
// consistency condition holds by construction; pass compatible = false to
// break it deliberately.
inline TwistSystem scaled_flip_system(Rng& rng, int d, bool compatible = true) {
    std::vector<std::vector<Rational>> beta(static_cast<std::size_t>(d) + 1,
                                            std::vector<Rational>(static_cast<std::size_t>(d) + 1,
                                                                  Rational(1)));
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) {
            Rational b = nonzero_rational(rng);
            beta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = b;
            beta[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = b.inverse();
        }

    std::vector<TwistEntry> b_entries, bt_entries, c_entries;
    for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
            Rational bij = beta[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            Rational gij = beta[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            if (!compatible) gij = gij + Rational(pick(rng, 1, 2));
            b_entries.push_back({i, j, j, i, Scalar(bij)});
            bt_entries.push_back({i, j, j, i, Scalar(nonzero_rational(rng))});
            c_entries.push_back({i, j, j, i, Scalar(gij)});
        }
    }
    return make_twist_system(d, b_entries, bt_entries, c_entries);
}

inline Tensor random_tensor(Rng& rng, const Signature& sig, int dim, int terms = 2,
                            bool allow_q = false) {
    Tensor t(sig);
    for (int n = 0; n < terms; ++n) {
        IndexWord w(sig.size());
        for (auto& idx : w) idx = pick(rng, 1, dim);
        t.add_term(w, scalar(rng, allow_q));
    }
    return t;
}

inline OpString random_op_string(Rng& rng, int dim, std::size_t len) {
    OpString s;
    for (std::size_t i = 0; i < len; ++i)
        s.push_back({pick(rng, 0, 1) == 1, pick(rng, 1, dim)});
    return s;
}

}  // namespace gen
