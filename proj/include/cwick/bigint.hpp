#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cwick/errors.hpp"

namespace cwick {

// Arbitrary-precision signed integer, sign/magnitude with base-2^32 limbs.
// Coefficients in this library are usually tiny (one limb), but exact row
// reduction over random rational matrices has no useful a-priori bound, so
// everything above the scalar layer assumes unbounded integers.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) {
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        // careful with LLONG_MIN: negate as unsigned
        std::uint64_t u = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
        mag_.push_back(static_cast<std::uint32_t>(u));
        if (u >> 32) mag_.push_back(static_cast<std::uint32_t>(u >> 32));
    }

    static BigInt from_string(std::string_view s) {
        std::size_t pos = 0;
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        if (pos == s.size()) throw parse_error("expected digits", 0, static_cast<int>(pos) + 1);
        BigInt r;
        for (; pos < s.size(); ++pos) {
            if (s[pos] < '0' || s[pos] > '9')
                throw parse_error("invalid digit in integer", 0, static_cast<int>(pos) + 1);
            mul_small(r.mag_, 10);
            add_small(r.mag_, static_cast<std::uint32_t>(s[pos] - '0'));
        }
        trim(r.mag_);
        r.sign_ = r.mag_.empty() ? 0 : (neg ? -1 : 1);
        return r;
    }

    bool is_zero() const noexcept { return sign_ == 0; }
    bool is_one() const noexcept { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    int sign() const noexcept { return sign_; }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator-(BigInt a) {
        a.sign_ = -a.sign_;
        return a;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
            return r;
        }
        int c = cmp_mag(a.mag_, b.mag_);
        if (c == 0) return r;
        if (c > 0) {
            r.mag_ = sub_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            r.mag_ = sub_mag(b.mag_, a.mag_);
            r.sign_ = b.sign_;
        }
        return r;
    }

    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.sign_ == 0 || b.sign_ == 0) return r;
        r.mag_ = mul_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // Quotient truncated toward zero; remainder carries the dividend's sign.
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b) {
        if (b.sign_ == 0) throw division_by_zero("integer division by zero");
        if (a.sign_ == 0) return {BigInt{}, BigInt{}};
        if (cmp_mag(a.mag_, b.mag_) < 0) return {BigInt{}, a};
        auto [qm, rm] = divmod_mag(a.mag_, b.mag_);
        BigInt q, r;
        q.mag_ = std::move(qm);
        r.mag_ = std::move(rm);
        q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
        r.sign_ = r.mag_.empty() ? 0 : a.sign_;
        return {std::move(q), std::move(r)};
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

    static BigInt gcd(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b.abs();
        if (b.sign_ == 0) return a.abs();
        if (a.mag_.size() <= 2 && b.mag_.size() <= 2) {
            std::uint64_t x = to_u64(a.mag_), y = to_u64(b.mag_);
            while (y != 0) {
                std::uint64_t t = x % y;
                x = y;
                y = t;
            }
            return from_u64(x);
        }
        BigInt x = a.abs(), y = b.abs();
        while (!y.is_zero()) {
            BigInt t = x % y;
            x = std::move(y);
            y = std::move(t);
        }
        return x;
    }

    static BigInt pow(const BigInt& base, unsigned long long e) {
        BigInt r(1), b = base;
        while (e != 0) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e != 0) b *= b;
        }
        return r;
    }

    bool operator==(const BigInt&) const = default;

    std::strong_ordering operator<=>(const BigInt& o) const {
        if (sign_ != o.sign_) return sign_ <=> o.sign_;
        int c = cmp_mag(mag_, o.mag_);
        if (sign_ < 0) c = -c;
        return c <=> 0;
    }

    std::string str() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = m.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            trim(m);
            std::string chunk = std::to_string(rem);
            if (!m.empty()) chunk.insert(0, 9 - chunk.size(), '0');
            digits.insert(0, chunk);
        }
        return sign_ < 0 ? "-" + digits : digits;
    }

private:
    using Mag = std::vector<std::uint32_t>;

    static void trim(Mag& m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
    }

    static std::uint64_t to_u64(const Mag& m) {
        std::uint64_t v = m.empty() ? 0 : m[0];
        if (m.size() > 1) v |= static_cast<std::uint64_t>(m[1]) << 32;
        return v;
    }

    static BigInt from_u64(std::uint64_t u) {
        BigInt r;
        if (u == 0) return r;
        r.sign_ = 1;
        r.mag_.push_back(static_cast<std::uint32_t>(u));
        if (u >> 32) r.mag_.push_back(static_cast<std::uint32_t>(u >> 32));
        return r;
    }

    static int cmp_mag(const Mag& a, const Mag& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static Mag add_mag(const Mag& a, const Mag& b) {
        const Mag& lo = a.size() < b.size() ? a : b;
        const Mag& hi = a.size() < b.size() ? b : a;
        Mag r(hi.size() + 1, 0);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < hi.size(); ++i) {
            std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0);
            r[i] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        r[hi.size()] = static_cast<std::uint32_t>(carry);
        trim(r);
        return r;
    }

    // requires a >= b
    static Mag sub_mag(const Mag& a, const Mag& b) {
        Mag r(a.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow -
                             (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            borrow = s < 0 ? 1 : 0;
            if (s < 0) s += (std::int64_t{1} << 32);
            r[i] = static_cast<std::uint32_t>(s);
        }
        trim(r);
        return r;
    }

    static Mag mul_mag(const Mag& a, const Mag& b) {
        Mag r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            std::uint64_t ai = a[i];
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = r[i + j] + ai * b[j] + carry;
                r[i + j] = static_cast<std::uint32_t>(cur);
                carry = cur >> 32;
            }
            r[i + b.size()] = static_cast<std::uint32_t>(carry);
        }
        trim(r);
        return r;
    }

    static void mul_small(Mag& m, std::uint32_t k) {
        std::uint64_t carry = 0;
        for (auto& limb : m) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * k + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) m.push_back(static_cast<std::uint32_t>(carry));
    }

    static void add_small(Mag& m, std::uint32_t k) {
        std::uint64_t carry = k;
        for (auto& limb : m) {
            if (carry == 0) break;
            std::uint64_t cur = limb + carry;
            limb = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) m.push_back(static_cast<std::uint32_t>(carry));
    }

    // Knuth algorithm D on magnitudes; requires a >= b > 0.
    static std::pair<Mag, Mag> divmod_mag(const Mag& a, const Mag& b) {
        if (b.size() == 1) {
            Mag q(a.size(), 0);
            std::uint64_t rem = 0;
            for (std::size_t i = a.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | a[i];
                q[i] = static_cast<std::uint32_t>(cur / b[0]);
                rem = cur % b[0];
            }
            trim(q);
            Mag r;
            if (rem) r.push_back(static_cast<std::uint32_t>(rem));
            return {std::move(q), std::move(r)};
        }

        const int shift = std::countl_zero(b.back());
        Mag u = shl_bits(a, shift);
        Mag v = shl_bits(b, shift);
        u.push_back(0);  // extra headroom limb
        const std::size_t n = v.size();
        const std::size_t m = u.size() - n - 1;
        Mag q(m + 1, 0);

        const std::uint64_t vtop = v[n - 1];
        const std::uint64_t vsecond = v[n - 2];
        for (std::size_t j = m + 1; j-- > 0;) {
            std::uint64_t numer = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            std::uint64_t qhat = numer / vtop;
            std::uint64_t rhat = numer % vtop;
            if (qhat > 0xFFFFFFFFull) {
                qhat = 0xFFFFFFFFull;
                rhat = numer - qhat * vtop;  // keep the remainder consistent
            }
            while (rhat <= 0xFFFFFFFFull &&
                   qhat * vsecond > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += vtop;
            }
            // multiply-subtract qhat * v from u[j .. j+n]
            std::int64_t borrow = 0;
            std::uint64_t carry = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                std::int64_t t = static_cast<std::int64_t>(u[i + j]) -
                                 static_cast<std::int64_t>(p & 0xFFFFFFFFull) - borrow;
                borrow = t < 0 ? 1 : 0;
                if (t < 0) t += (std::int64_t{1} << 32);
                u[i + j] = static_cast<std::uint32_t>(t);
            }
            std::int64_t t = static_cast<std::int64_t>(u[j + n]) -
                             static_cast<std::int64_t>(carry) - borrow;
            if (t < 0) {
                // qhat was one too large: add v back
                t += (std::int64_t{1} << 32);
                --qhat;
                std::uint64_t c2 = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                    u[i + j] = static_cast<std::uint32_t>(s);
                    c2 = s >> 32;
                }
                t += static_cast<std::int64_t>(c2);
                t &= 0xFFFFFFFFll;
            }
            u[j + n] = static_cast<std::uint32_t>(t);
            q[j] = static_cast<std::uint32_t>(qhat);
        }
        trim(q);
        u.resize(n);
        Mag r = shr_bits(u, shift);
        trim(r);
        return {std::move(q), std::move(r)};
    }

    static Mag shl_bits(const Mag& m, int bits) {
        if (bits == 0) return m;
        Mag r(m.size() + 1, 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            r[i] |= m[i] << bits;
            r[i + 1] = m[i] >> (32 - bits);
        }
        trim(r);
        return r;
    }

    static Mag shr_bits(const Mag& m, int bits) {
        if (bits == 0) return m;
        Mag r(m.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            r[i] = m[i] >> bits;
            if (i + 1 < m.size()) r[i] |= m[i + 1] << (32 - bits);
        }
        trim(r);
        return r;
    }

    int sign_ = 0;
    Mag mag_;  // little-endian limbs, no trailing zeros, empty iff zero
};

}  // namespace cwick
