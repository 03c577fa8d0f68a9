#pragma once

#include <optional>
#include <string>
#include <utility>

#include "cwick/errors.hpp"
#include "cwick/polynomial.hpp"
#include "cwick/rational.hpp"

namespace cwick {

// Exact field element: a rational function of the deformation parameter q
// with rational coefficients. Canonical form is
//
//     q^offset * num(q) / den(q)
//
// where num and den have nonzero constant terms (all q-powers live in the
// offset), gcd(num, den) = 1 and den is monic. Plain rationals are the
// constant case. Canonical form is unique, so operator== is structural and
// doubles as mathematical equality; the row reduction layer depends on that.
class Scalar {
public:
    Scalar() : den_(Poly::one()) {}
    Scalar(long long v) : num_(Poly(Rational(v))), den_(Poly::one()) {}
    Scalar(Rational r) : num_(Poly(std::move(r))), den_(Poly::one()) {}

    static Scalar q_power(long long k) {
        Scalar s(1);
        s.qexp_ = k;
        return s;
    }

    static Scalar from_fraction(Poly num, Poly den, long long qexp = 0) {
        if (den.is_zero()) throw division_by_zero("scalar with zero denominator");
        Scalar s;
        s.qexp_ = qexp;
        s.num_ = std::move(num);
        s.den_ = std::move(den);
        s.canonicalize();
        return s;
    }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return qexp_ == 0 && num_.is_one() && den_.is_one(); }

    // True when the value is a Laurent polynomial in q (unit denominator);
    // everything the coefficient grammar can produce is of this shape.
    bool is_laurent() const noexcept { return den_.is_one(); }

    bool is_constant() const noexcept {
        return is_zero() || (qexp_ == 0 && num_.is_constant() && den_.is_one());
    }

    std::optional<Rational> as_rational() const {
        if (is_zero()) return Rational();
        if (!is_constant()) return std::nullopt;
        return num_.coeff(0);
    }

    long long q_offset() const noexcept { return qexp_; }
    const Poly& numerator() const noexcept { return num_; }
    const Poly& denominator() const noexcept { return den_; }

    friend Scalar operator-(Scalar a) {
        a.num_ = -a.num_;
        return a;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long long base = std::min(a.qexp_, b.qexp_);
        Poly na = a.num_.shifted_up(static_cast<std::size_t>(a.qexp_ - base));
        Poly nb = b.num_.shifted_up(static_cast<std::size_t>(b.qexp_ - base));
        return from_fraction(na * b.den_ + nb * a.den_, a.den_ * b.den_, base);
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.is_zero() || b.is_zero()) return {};
        return from_fraction(a.num_ * b.num_, a.den_ * b.den_, a.qexp_ + b.qexp_);
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const {
        if (is_zero()) throw division_by_zero("inverse of zero scalar");
        return from_fraction(den_, num_, -qexp_);
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    bool operator==(const Scalar&) const = default;

    // Exact value at q = q0; throws evaluation_pole when the denominator
    // vanishes there (including q0 = 0 against a negative offset).
    Rational eval(const Rational& q0) const {
        if (is_zero()) return {};
        if (q0.is_zero()) {
            if (qexp_ < 0) throw evaluation_pole("pole at q = 0");
            if (qexp_ > 0) return {};
            return num_.coeff(0) / den_.coeff(0);
        }
        Rational d = den_.eval(q0);
        if (d.is_zero()) throw evaluation_pole("denominator vanishes at q = " + q0.str());
        return Rational::pow(q0, qexp_) * num_.eval(q0) / d;
    }

    // Display form; for Laurent values this is also valid input for the
    // coefficient grammar ("q^-1", "1/2*q^2-1/2", ...).
    std::string str() const {
        if (is_zero()) return "0";
        std::string numerator_str = laurent_str(num_, qexp_);
        if (den_.is_one()) return numerator_str;
        return "(" + numerator_str + ")/(" + laurent_str(den_, 0) + ")";
    }

    // Grammar form for spec files; only Laurent values are expressible.
    std::string spec_string() const {
        if (!is_laurent())
            throw input_error("coefficient is not a Laurent polynomial: " + str());
        return str();
    }

private:
    static std::string laurent_str(const Poly& p, long long offset) {
        std::string out;
        for (int k = p.degree(); k >= 0; --k) {
            Rational c = p.coeff(static_cast<std::size_t>(k));
            if (c.is_zero()) continue;
            long long e = offset + k;
            bool neg = c.is_negative();
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? "-" : "+";
            }
            Rational a = c.abs();
            if (e == 0) {
                out += a.str();
            } else {
                if (!a.is_one()) out += a.str() + "*";
                out += e == 1 ? "q" : "q^" + std::to_string(e);
            }
        }
        return out;
    }

    void canonicalize() {
        if (num_.is_zero()) {
            qexp_ = 0;
            den_ = Poly::one();
            return;
        }
        std::size_t a = num_.low_degree();
        std::size_t b = den_.low_degree();
        if (a) num_ = num_.shifted_down(a);
        if (b) den_ = den_.shifted_down(b);
        qexp_ += static_cast<long long>(a) - static_cast<long long>(b);
        Poly g = Poly::gcd(num_, den_);
        if (!g.is_one() && !g.is_zero()) {
            num_ = Poly::divmod(num_, g).first;
            den_ = Poly::divmod(den_, g).first;
        }
        if (!den_.lead().is_one()) {
            Rational inv = den_.lead().inverse();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    long long qexp_ = 0;
    Poly num_;  // zero polynomial iff the scalar is zero
    Poly den_;  // monic, nonzero constant term
};

}  // namespace cwick
