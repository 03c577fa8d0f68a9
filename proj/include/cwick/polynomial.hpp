#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cwick/errors.hpp"
#include "cwick/rational.hpp"

namespace cwick {

// Dense polynomial in the deformation parameter over Rational. Degrees stay
// small here (entries of a twist system are short Laurent expressions), so a
// dense coefficient vector beats anything fancier.
class Poly {
public:
    Poly() = default;  // zero

    explicit Poly(Rational c) {
        if (!c.is_zero()) c_.push_back(std::move(c));
    }

    static Poly monomial(Rational c, std::size_t k) {
        Poly p;
        if (c.is_zero()) return p;
        p.c_.assign(k + 1, Rational());
        p.c_[k] = std::move(c);
        return p;
    }

    static Poly one() { return Poly(Rational(1)); }
    static Poly variable() { return monomial(Rational(1), 1); }

    // -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }

    // Smallest exponent carrying a nonzero coefficient; 0 for zero.
    std::size_t low_degree() const noexcept {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return i;
        return 0;
    }

    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(); }

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }

    const Rational& lead() const { return c_.back(); }

    friend Poly operator-(Poly a) {
        for (auto& c : a.c_) c = -c;
        return a;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c_.resize(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }

    Poly scaled(const Rational& k) const {
        Poly r;
        if (k.is_zero()) return r;
        r.c_.reserve(c_.size());
        for (const auto& c : c_) r.c_.push_back(c * k);
        return r;
    }

    // Exact division by q^k; requires all lower coefficients to vanish.
    Poly shifted_down(std::size_t k) const {
        if (k == 0 || is_zero()) return *this;
        Poly r;
        r.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end());
        return r;
    }

    Poly shifted_up(std::size_t k) const {
        if (k == 0 || is_zero()) return *this;
        Poly r;
        r.c_.assign(k, Rational());
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }

    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw division_by_zero("polynomial division by zero");
        Poly q, r = a;
        if (a.degree() < b.degree()) return {q, r};
        q.c_.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational());
        Rational inv_lead = b.lead().inverse();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            Rational f = r.lead() * inv_lead;
            q.c_[shift] = f;
            r = r - b.scaled(f).shifted_up(shift);
        }
        q.trim();
        return {q, r};
    }

    // Monic gcd; gcd(p, 0) = monic(p), gcd(0, 0) = 0.
    static Poly gcd(Poly a, Poly b) {
        // constants are units, and that is the overwhelmingly common case
        if (a.is_constant() || b.is_constant()) {
            if (a.is_zero() && b.is_zero()) return {};
            if (a.is_zero()) return b.monic();
            if (b.is_zero()) return a.monic();
            return one();
        }
        while (!b.is_zero()) {
            Poly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    Poly monic() const {
        if (is_zero() || lead().is_one()) return *this;
        return scaled(lead().inverse());
    }

    Rational eval(const Rational& q0) const {
        Rational acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q0 + c_[i];
        return acc;
    }

    bool operator==(const Poly&) const = default;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;  // c_[k] is the q^k coefficient; no zero tail
};

}  // namespace cwick
