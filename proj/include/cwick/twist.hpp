#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cwick/errors.hpp"
#include "cwick/tensor.hpp"

namespace cwick {

// One matrix element of a twist tensor: input word (i,j), output word (k,l).
struct TwistEntry {
    int i, j, k, l;
    Scalar coeff;
};

// The defining data of a twisted Wick algebra on a d-dimensional space:
//
//   B  : E  (x) E  -> E  (x) E    creator exchange,  B(f_i (x) f_j)  = sum b_{i,j,k,l} f_k (x) f_l
//   Bt : E* (x) E* -> E* (x) E*   annihilator exchange
//   C  : E* (x) E  -> E  (x) E*   elementary twist,  C(e_i (x) f_j)  = sum c_{i,j,k,l} f_k (x) e_l
//
// Ct is derived from C by ct_{i,j,k,l} = c_{j,l,i,k}; it acts on E (x) E and
// appears in the linear consistency condition. It is precomputed eagerly so
// the checkers stay stateless.
struct TwistSystem {
    int dim;
    TwoSlotMap B;
    TwoSlotMap Btilde;
    TwoSlotMap C;
    TwoSlotMap Ctilde;

    bool operator==(const TwistSystem&) const = default;
};

namespace detail {

inline TwoSlotMap build_map(int d, std::array<Variance, 2> in, std::array<Variance, 2> out,
                            const std::vector<TwistEntry>& entries) {
    TwoSlotMap m(d, in, {out[0], out[1]});
    for (const auto& e : entries) m.add_entry(e.i, e.j, e.k, e.l, e.coeff);
    return m;
}

inline TwoSlotMap derive_ctilde(const TwoSlotMap& c) {
    TwoSlotMap ct(c.dim(), {Variance::covariant, Variance::covariant},
                  {Variance::covariant, Variance::covariant});
    // ct_{i,j,k,l} = c_{j,l,i,k}: the C entry (a,b)->(k0,l0) lands at (k0,a)->(l0,b)
    for (const auto& [in, col] : c.columns())
        for (const auto& [out, coeff] : col)
            ct.add_entry(out[0], in[0], out[1], in[1], coeff);
    return ct;
}

}  // namespace detail

inline TwistSystem make_twist_system(int d, const std::vector<TwistEntry>& b_entries,
                                     const std::vector<TwistEntry>& bt_entries,
                                     const std::vector<TwistEntry>& c_entries) {
    if (d < 1) throw input_error("dimension must be >= 1");
    constexpr auto cov = Variance::covariant;
    constexpr auto con = Variance::contravariant;
    TwoSlotMap B = detail::build_map(d, {cov, cov}, {cov, cov}, b_entries);
    TwoSlotMap Bt = detail::build_map(d, {con, con}, {con, con}, bt_entries);
    TwoSlotMap C = detail::build_map(d, {con, cov}, {cov, con}, c_entries);
    TwoSlotMap Ct = detail::derive_ctilde(C);
    return {d, std::move(B), std::move(Bt), std::move(C), std::move(Ct)};
}

inline const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"boson", "fermion", "mixed", "qdeform",
                                                "qdeform-alt"};
    return names;
}

// The builtin example families. All are scaled flips b_{i,j,k,l} =
// s(i,j) delta_{i,l} delta_{j,k}:
//
//   boson        s = 1 everywhere (for all three tensors)
//   fermion      s = -1
//   mixed        s = (-1)^(i-j)
//   qdeform      B, Bt scale q^(j-i); C scales q^(i-j)   (q kept symbolic)
//   qdeform-alt  B, Bt scale q^(i-j); C scales q^(i-j)
//
// qdeform and qdeform-alt differ only in the exchange exponent convention;
// both are provided so the checkers can compare the two. qdeform-alt fails
// the linear consistency condition for generic q.
inline TwistSystem builtin_preset(std::string_view name, int d) {
    if (d < 1) throw input_error("dimension must be >= 1");

    enum class Family { boson, fermion, mixed, q, q_alt };
    Family fam;
    if (name == "boson")
        fam = Family::boson;
    else if (name == "fermion")
        fam = Family::fermion;
    else if (name == "mixed")
        fam = Family::mixed;
    else if (name == "qdeform")
        fam = Family::q;
    else if (name == "qdeform-alt")
        fam = Family::q_alt;
    else
        throw input_error("unknown preset '" + std::string(name) + "'");

    auto scale = [&](int i, int j, bool exchange) -> Scalar {
        switch (fam) {
            case Family::boson:
                return Scalar(1);
            case Family::fermion:
                return Scalar(-1);
            case Family::mixed:
                return ((i - j) % 2) ? Scalar(-1) : Scalar(1);
            case Family::q:
                return Scalar::q_power(exchange ? j - i : i - j);
            case Family::q_alt:
                return Scalar::q_power(i - j);
        }
        return Scalar(1);
    };

    std::vector<TwistEntry> b, bt, c;
    for (int i = 1; i <= d; ++i) {
        for (int j = 1; j <= d; ++j) {
            b.push_back({i, j, j, i, scale(i, j, true)});
            bt.push_back({i, j, j, i, scale(i, j, true)});
            c.push_back({i, j, j, i, scale(i, j, false)});
        }
    }
    return make_twist_system(d, b, bt, c);
}

// Specializes every entry at q = q0 (exact). Fails with evaluation_pole if
// some entry has a pole there, e.g. q-deformed entries at q0 = 0.
inline TwistSystem specialize(const TwistSystem& ts, const Rational& q0) {
    auto eval_map = [&](const TwoSlotMap& m) {
        TwoSlotMap out(m.dim(), m.input_pair(), m.output_pair());
        for (const auto& [in, col] : m.columns())
            for (const auto& [ow, coeff] : col)
                out.add_entry(in[0], in[1], ow[0], ow[1], Scalar(coeff.eval(q0)));
        return out;
    };
    TwistSystem r{ts.dim, eval_map(ts.B), eval_map(ts.Btilde), eval_map(ts.C),
                  eval_map(ts.Ctilde)};
    return r;
}

}  // namespace cwick
