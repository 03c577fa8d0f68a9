#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>

#include "cwick/bigint.hpp"
#include "cwick/errors.hpp"

namespace cwick {

// Exact rational number. Always stored reduced with a positive denominator,
// zero as 0/1, so equality is structural.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}

    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_.is_zero()) throw division_by_zero("rational with zero denominator");
        normalize();
    }

    // "p" or "p/q" with an optional leading sign on p.
    static Rational from_string(std::string_view s) {
        auto slash = s.find('/');
        if (slash == std::string_view::npos) return {BigInt::from_string(s), BigInt(1)};
        return {BigInt::from_string(s.substr(0, slash)),
                BigInt::from_string(s.substr(slash + 1))};
    }

    const BigInt& num() const noexcept { return num_; }
    const BigInt& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_negative() const noexcept { return num_.sign() < 0; }
    bool is_integer() const noexcept { return den_.is_one(); }

    friend Rational operator-(Rational a) {
        a.num_ = -a.num_;
        return a;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw division_by_zero("rational division by zero");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational inverse() const {
        if (is_zero()) throw division_by_zero("inverse of zero");
        return {den_, num_};
    }

    Rational abs() const { return is_negative() ? -*this : *this; }

    static Rational pow(const Rational& base, long long e) {
        if (e >= 0)
            return {BigInt::pow(base.num_, static_cast<unsigned long long>(e)),
                    BigInt::pow(base.den_, static_cast<unsigned long long>(e))};
        return pow(base.inverse(), -e);
    }

    bool operator==(const Rational&) const = default;

    std::strong_ordering operator<=>(const Rational& o) const {
        return (num_ * o.den_) <=> (o.num_ * den_);
    }

    std::string str() const {
        return den_.is_one() ? num_.str() : num_.str() + "/" + den_.str();
    }

private:
    void normalize() {
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }

    BigInt num_;
    BigInt den_;
};

}  // namespace cwick
