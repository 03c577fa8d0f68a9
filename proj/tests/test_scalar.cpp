#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cwick/bigint.hpp"
#include "cwick/scalar.hpp"
#include "cwick/scalar_parser.hpp"
#include "gen.hpp"

using namespace cwick;

namespace {
Scalar q() { return Scalar::q_power(1); }
}  // namespace

TEST_CASE("bigint arithmetic on large values") {
    BigInt a = BigInt::from_string("123456789012345678901234567890");
    BigInt b = BigInt::from_string("999999999999999999");
    CHECK((a * b).str() == "123456789012345678777777778877654321098765432110");
    CHECK((a + (-a)).is_zero());
    CHECK((-a).str() == "-123456789012345678901234567890");

    auto [quot, rem] = BigInt::divmod(a, b);
    CHECK(quot * b + rem == a);
    CHECK(rem < b);

    CHECK(BigInt::gcd(BigInt(12341234), BigInt(123412340)).str() == "12341234");
    CHECK(BigInt::gcd(BigInt::from_string("777777777777777777777777"),
                      BigInt::from_string("111111111111111111111111"))
              .str() == "111111111111111111111111");
}

TEST_CASE("bigint division near trial-digit boundaries") {
    // all-ones divisor forces the clamped trial digit path
    BigInt a = BigInt::from_string("340282366920938463454151235394913435647");
    BigInt b = BigInt::from_string("79228162514264337593543950335");
    auto [q, r] = BigInt::divmod(a, b);
    CHECK(q.str() == "4294967295");
    CHECK(q * b + r == a);
    CHECK(r < b);

    BigInt c = BigInt::from_string("79228162532711081671548469247");  // 2^96 + 2^63 - 1
    auto [q2, r2] = BigInt::divmod(c, BigInt::from_string("18446744073709551615"));
    CHECK(q2 * BigInt::from_string("18446744073709551615") + r2 == c);
    CHECK(r2 < BigInt::from_string("18446744073709551615"));
}

TEST_CASE("bigint divmod identity on random values") {
    gen::Rng rng(101);
    for (int iter = 0; iter < 500; ++iter) {
        BigInt a(static_cast<long long>(rng()) >> gen::pick(rng, 0, 40));
        BigInt b(static_cast<long long>(rng()) >> gen::pick(rng, 0, 55));
        a = a * a;  // force multi-limb dividends
        if (b.is_zero()) continue;
        auto [quot, rem] = BigInt::divmod(a, b);
        CHECK(quot * b + rem == a);
        CHECK(rem.abs() < b.abs());
    }
}

TEST_CASE("rational normal form and comparisons") {
    CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
    CHECK(Rational(BigInt(1), BigInt(-2)).str() == "-1/2");
    CHECK(Rational::from_string("6/4").str() == "3/2");
    CHECK(Rational(1) / Rational(3) < Rational(1) / Rational(2));
    CHECK(Rational::pow(Rational(BigInt(2), BigInt(3)), -2).str() == "9/4");
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), division_by_zero);
}

TEST_CASE("scalar inverse pairs and sums") {
    CHECK((q() * Scalar::q_power(-1)).is_one());
    CHECK((Scalar(Rational(BigInt(1), BigInt(2))) + Scalar(Rational(BigInt(1), BigInt(2))))
              .is_one());
    // (q^2 - 1) * 1/(q - 1) = q + 1, by polynomial long division
    Scalar lhs = (q() * q() - Scalar(1)) * (q() - Scalar(1)).inverse();
    CHECK(lhs == q() + Scalar(1));
    CHECK(lhs.str() == "q+1");
}

TEST_CASE("scalar canonical form is syntactic equality") {
    // same value along two different construction routes
    Scalar a = (q() * q() - Scalar(1)) / (q() - Scalar(1));
    Scalar b = q() + Scalar(1);
    CHECK(a == b);
    Scalar c = (Scalar(2) * q()) / Scalar(2);
    CHECK(c == q());
    // offsets normalize: q^2/q = q
    CHECK(Scalar::q_power(2) / q() == q());
    CHECK((q() - q()).is_zero());
    // a common cubic factor cancels
    Scalar one = Scalar(1);
    Scalar ratio = (q() * q() - one) / (q() * q() * q() - one);
    CHECK(ratio == (q() + one) / (q() * q() + q() + one));
    CHECK(ratio.eval(Rational(2)) == Rational(BigInt(3), BigInt(7)));
}

TEST_CASE("scalar evaluation and poles") {
    CHECK((q() * q()).eval(Rational(-1)) == Rational(1));
    Scalar r = (q() + Scalar(1)) / (q() - Scalar(1));
    CHECK(r.eval(Rational(2)) == Rational(3));
    CHECK_THROWS_AS((q() - Scalar(1)).inverse().eval(Rational(1)), evaluation_pole);
    CHECK_THROWS_AS(Scalar::q_power(-1).eval(Rational(0)), evaluation_pole);
    CHECK(Scalar::q_power(3).eval(Rational(0)) == Rational(0));
    CHECK(Scalar(0).eval(Rational(5)) == Rational(0));
    CHECK_THROWS_AS(Scalar(0).inverse(), division_by_zero);
}

TEST_CASE("field axioms on random scalars") {
    gen::Rng rng(102);
    for (int iter = 0; iter < 300; ++iter) {
        Scalar a = gen::scalar(rng, true), b = gen::scalar(rng, true),
               c = gen::scalar(rng, true);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * a.inverse()).is_one());
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    gen::Rng rng(103);
    for (int iter = 0; iter < 300; ++iter) {
        Scalar a = gen::scalar(rng, true), b = gen::scalar(rng, true);
        Rational q0 = gen::nonzero_rational(rng);
        CHECK((a * b).eval(q0) == a.eval(q0) * b.eval(q0));
        CHECK((a + b).eval(q0) == a.eval(q0) + b.eval(q0));
    }
}

TEST_CASE("coefficient grammar accepts the documented forms") {
    CHECK(parse_scalar("1").is_one());
    CHECK(parse_scalar("-1") == Scalar(-1));
    CHECK(parse_scalar("1/2") == Scalar(Rational(BigInt(1), BigInt(2))));
    CHECK(parse_scalar("q^-1") == Scalar::q_power(-1));
    Scalar half{Rational(BigInt(1), BigInt(2))};
    CHECK(parse_scalar("(q^2-1)*1/2") == (q() * q() - Scalar(1)) * half);
}

TEST_CASE("coefficient grammar parses structure correctly") {
    CHECK(parse_scalar("q") == q());
    CHECK(parse_scalar("q^2") == q() * q());
    CHECK(parse_scalar(" 2 * q ^ 3 ") == Scalar(2) * Scalar::q_power(3));
    CHECK(parse_scalar("1+2*3") == Scalar(7));
    CHECK(parse_scalar("-(q-1)*(q+1)") == Scalar(1) - q() * q());
    CHECK(parse_scalar("2-3-4") == Scalar(-5));
}

TEST_CASE("grammar errors carry positions") {
    CHECK_THROWS_AS(parse_scalar(""), parse_error);
    CHECK_THROWS_AS(parse_scalar("q^"), parse_error);
    CHECK_THROWS_AS(parse_scalar("(q"), parse_error);
    CHECK_THROWS_AS(parse_scalar("1/0"), parse_error);
    CHECK_THROWS_AS(parse_scalar("1 + "), parse_error);
    CHECK_THROWS_AS(parse_scalar("x"), parse_error);
    CHECK_THROWS_AS(parse_scalar("q", false), parse_error);  // q not declared
    try {
        parse_scalar("1/0");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.column() == 3);
    }
}

TEST_CASE("only laurent values are expressible in the grammar") {
    Scalar r = (q() + Scalar(1)) / (q() - Scalar(1));
    CHECK(!r.is_laurent());
    CHECK_THROWS_AS(r.spec_string(), input_error);
    CHECK((q() * q() - Scalar(1)).spec_string() == "q^2-1");
    CHECK(Scalar(0).spec_string() == "0");
}

TEST_CASE("laurent display form reparses to the same value") {
    gen::Rng rng(104);
    for (int iter = 0; iter < 200; ++iter) {
        Scalar a = gen::scalar(rng, true) + gen::scalar(rng, true);
        if (!a.is_laurent()) continue;
        CHECK(parse_scalar(a.str()) == a);
    }
}
