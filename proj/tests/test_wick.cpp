#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cwick/wick.hpp"
#include "gen.hpp"

using namespace cwick;

namespace {

OpWord word_of(std::initializer_list<OpSymbol> syms) {
    return OpWord::term(OpString(syms), Scalar(1));
}

OpSymbol A(int i) { return OpSymbol::create(i); }
OpSymbol a(int i) { return OpSymbol::annihilate(i); }

}  // namespace

TEST_CASE("the cross relation as a rewrite") {
    TwistSystem boson = builtin_preset("boson", 2);
    OpWord n = normal_order(boson, word_of({a(1), A(1)}));
    CHECK(n.coeff({}).is_one());
    CHECK(n.coeff({A(1), a(1)}).is_one());
    CHECK(n.terms().size() == 2);

    // off-diagonal: no pairing term, only the twisted swap
    OpWord m = normal_order(boson, word_of({a(1), A(2)}));
    CHECK(m.coeff({}).is_zero());
    CHECK(m.coeff({A(2), a(1)}).is_one());
    CHECK(m.terms().size() == 1);
}

TEST_CASE("normal words are fixed points") {
    TwistSystem boson = builtin_preset("boson", 2);
    OpWord w = word_of({A(1), a(1)});
    CHECK(normal_order(boson, w) == w);
    // creator and annihilator blocks are never reordered internally
    OpWord cc = word_of({A(2), A(1), a(2), a(1)});
    CHECK(normal_order(boson, cc) == cc);
}

TEST_CASE("normal ordering is idempotent") {
    gen::Rng rng(701);
    for (int iter = 0; iter < 100; ++iter) {
        int d = gen::pick(rng, 1, 2);
        TwistSystem ts = gen::random_system(rng, d, 2);
        OpWord w = OpWord::term(gen::random_op_string(rng, d, gen::pick(rng, 0, 5)),
                                gen::scalar(rng));
        OpWord n = normal_order(ts, w);
        CHECK(normal_order(ts, n) == n);
    }
}

TEST_CASE("a full pairing resolves to the vacuum coefficient one") {
    TwistSystem boson = builtin_preset("boson", 2);
    OpWord w = word_of({a(1), a(2), A(2), A(1)});
    OpWord n = normal_order(boson, w);
    CHECK(n.coeff({}).is_one());
    CHECK(vacuum_expectation(boson, w).is_one());
}

TEST_CASE("vacuum expectations from both evaluation routes") {
    TwistSystem qd = builtin_preset("qdeform", 2);
    ContractionEngine eng(qd);
    OpWord w = word_of({a(2), a(1), A(2), A(1)});
    Scalar via_rewrite = vacuum_expectation(qd, w);
    Tensor acted = act_on(eng, w, Tensor::unit());
    CHECK(via_rewrite == acted.coeff({}));
    CHECK(via_rewrite == Scalar::q_power(-1));

    CHECK(vacuum_expectation(qd, word_of({A(1)})).is_zero());
    CHECK(vacuum_expectation(qd, word_of({a(1), A(1)})).is_one());
    CHECK(vacuum_expectation(qd, word_of({a(1), A(2)})).is_zero());
}

TEST_CASE("action realizes creation and annihilation") {
    TwistSystem boson = builtin_preset("boson", 2);
    ContractionEngine eng(boson);
    CHECK(act_on(eng, word_of({A(2)}), Tensor::unit()) ==
          Tensor::basis(Signature::covariant(1), {2}));
    CHECK(act_on(eng, word_of({a(1), A(1)}), Tensor::unit()).coeff({}).is_one());
    CHECK(act_on(eng, word_of({a(1)}), Tensor::unit()).is_zero());
}

TEST_CASE("action is linear in the word and in the argument") {
    gen::Rng rng(702);
    TwistSystem ts = gen::random_system(rng, 2, 2);
    ContractionEngine eng(ts);
    Signature sig = Signature::covariant(2);
    for (int iter = 0; iter < 40; ++iter) {
        OpString s = gen::random_op_string(rng, 2, 3);
        Scalar k = gen::scalar(rng);
        Tensor y = gen::random_tensor(rng, sig, 2, 2);
        Tensor z = gen::random_tensor(rng, sig, 2, 2);
        auto lhs = act_on_graded(eng, OpWord::term(s, k), y + z);
        auto a1 = act_on_graded(eng, OpWord::term(s, Scalar(1)), y);
        auto a2 = act_on_graded(eng, OpWord::term(s, Scalar(1)), z);
        // combine: k*(a1 + a2)
        std::map<std::size_t, Tensor> rhs;
        for (auto* part : {&a1, &a2})
            for (auto& [deg, t] : *part) {
                auto it = rhs.find(deg);
                if (it == rhs.end())
                    rhs.emplace(deg, t.scaled(k));
                else
                    it->second.add_scaled(t, k);
            }
        for (auto it = rhs.begin(); it != rhs.end();)
            it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("rewriting is sound for the concrete operators") {
    gen::Rng rng(703);
    for (int iter = 0; iter < 60; ++iter) {
        int d = gen::pick(rng, 1, 2);
        TwistSystem ts = gen::random_system(rng, d, 2);
        ContractionEngine eng(ts);
        OpWord w = OpWord::term(gen::random_op_string(rng, d, gen::pick(rng, 1, 5)),
                                gen::scalar(rng));
        int n = gen::pick(rng, 0, 3);
        Tensor y = gen::random_tensor(rng, Signature::covariant(static_cast<std::size_t>(n)),
                                      d, 2);
        CHECK(act_on_graded(eng, w, y) == act_on_graded(eng, normal_order(ts, w), y));
    }
}

TEST_CASE("each rewrite strictly reduces the inversion count") {
    gen::Rng rng(704);
    TwistSystem ts = builtin_preset("qdeform", 2);
    for (int iter = 0; iter < 200; ++iter) {
        OpString s = gen::random_op_string(rng, 2, gen::pick(rng, 2, 6));
        std::size_t before = inversion_count(s);
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            if (!s[i].creator && s[i + 1].creator) {
                // the contraction branch drops both symbols
                OpString dropped = s;
                dropped.erase(dropped.begin() + static_cast<std::ptrdiff_t>(i),
                              dropped.begin() + static_cast<std::ptrdiff_t>(i) + 2);
                CHECK(inversion_count(dropped) < before);
                // the exchange branch swaps the pair's roles
                OpString swapped = s;
                swapped[i] = OpSymbol::create(1);
                swapped[i + 1] = OpSymbol::annihilate(2);
                CHECK(inversion_count(swapped) == before - 1);
                break;
            }
        }
    }
    // ordering a fully inverted word of length 6 terminates
    OpWord big = word_of({a(1), a(2), a(1), A(1), A(2), A(1)});
    CHECK(normal_order(ts, normal_order(ts, big)) == normal_order(ts, big));
}

TEST_CASE("word grammar round trips") {
    TwistSystem qd = builtin_preset("qdeform", 2);
    OpWord w = parse_op_word("a1 A1", 2);
    CHECK(w == word_of({a(1), A(1)}));

    OpWord with_coeff = parse_op_word("q^2 a1 A2 + 1/2 A1 a1", 2);
    CHECK(with_coeff.coeff({a(1), A(2)}) == Scalar::q_power(2));
    CHECK(with_coeff.coeff({A(1), a(1)}) == Scalar(Rational(BigInt(1), BigInt(2))));

    OpWord product_coeff = parse_op_word("(q^2-1)*1/2 a1", 2);
    Scalar half{Rational(BigInt(1), BigInt(2))};
    CHECK(product_coeff.coeff({a(1)}) ==
          (Scalar::q_power(2) - Scalar(1)) * half);

    // a bare scalar is a multiple of the empty word
    OpWord scalar_only = parse_op_word("1 + A1 a1", 2);
    CHECK(scalar_only.coeff({}).is_one());
    CHECK(scalar_only.coeff({A(1), a(1)}).is_one());

    // printing reparses to the same word
    OpWord n = normal_order(qd, parse_op_word("a2 a1 A2 A1", 2));
    CHECK(parse_op_word(n.str(), 2) == n);
}

TEST_CASE("word grammar rejects malformed input with positions") {
    CHECK_THROWS_AS(parse_op_word("", 2), parse_error);
    CHECK_THROWS_AS(parse_op_word("a0 A1", 2), parse_error);
    CHECK_THROWS_AS(parse_op_word("a3", 2), parse_error);
    CHECK_THROWS_AS(parse_op_word("b1", 2), parse_error);
    CHECK_THROWS_AS(parse_op_word("A", 2), parse_error);
    CHECK_THROWS_AS(parse_op_word("a1 +", 2), parse_error);
    CHECK_NOTHROW(parse_op_word("a1 A1 a2", 2, false));
    CHECK_THROWS_AS(parse_op_word("q a1", 2, false), parse_error);  // q not declared
    try {
        parse_op_word("a1 a9", 3);
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.column() == 4);
    }
}
