#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cwick/tensor.hpp"
#include "cwick/twist.hpp"
#include "gen.hpp"

using namespace cwick;

namespace {
const Signature kEF{Variance::contravariant, Variance::covariant};
const Signature kFF = Signature::covariant(2);

Tensor word(const Signature& sig, IndexWord idx) { return Tensor::basis(sig, std::move(idx)); }
}  // namespace

TEST_CASE("tensor product is bilinear with concatenated signatures") {
    Tensor f1 = word(Signature::covariant(1), {1});
    Tensor f2 = word(Signature::covariant(1), {2});
    Tensor p = tensor_product(f1, f2);
    CHECK(p.signature() == kFF);
    CHECK(p.coeff({1, 2}).is_one());
    CHECK(p.term_count() == 1);

    Tensor sum = tensor_product(f1 + f2, f1);
    CHECK(sum.coeff({1, 1}).is_one());
    CHECK(sum.coeff({2, 1}).is_one());

    Tensor scaled = tensor_product(Scalar(2) * f1, Scalar::q_power(1) * f2);
    CHECK(scaled.coeff({1, 2}) == Scalar(2) * Scalar::q_power(1));
}

TEST_CASE("addition and scaling prune zeros") {
    Tensor f1 = word(Signature::covariant(1), {1});
    CHECK((f1 - f1).is_zero());
    Tensor zero(Signature::covariant(1));
    CHECK(zero + f1 == f1);
    Tensor t = Scalar::q_power(1) * (word(Signature::covariant(1), {1}) +
                                     word(Signature::covariant(1), {2}));
    CHECK(t.coeff({1}) == Scalar::q_power(1));
    CHECK(t.coeff({2}) == Scalar::q_power(1));
    CHECK_THROWS_AS(f1 + Tensor(kFF), signature_error);
}

TEST_CASE("evaluation map pairs dual slots") {
    TwoSlotMap ev = TwoSlotMap::evaluation(2);
    Tensor t = word(kEF, {1, 1});
    Tensor r = apply_two_slot(ev, t, 1);
    CHECK(r.signature().empty());
    CHECK(r.coeff({}).is_one());
    CHECK(apply_two_slot(ev, word(kEF, {1, 2}), 1).is_zero());
}

TEST_CASE("elementary twist moves a dual slot rightward") {
    TwistSystem boson = builtin_preset("boson", 2);
    Signature dom{Variance::contravariant, Variance::covariant, Variance::covariant};
    Tensor t = word(dom, {1, 2, 1});
    Tensor r = apply_two_slot(boson.C, t, 1);
    Signature expect{Variance::covariant, Variance::contravariant, Variance::covariant};
    CHECK(r.signature() == expect);
    CHECK(r.coeff({2, 1, 1}).is_one());
    CHECK(r.term_count() == 1);
}

TEST_CASE("identity two-slot map fixes everything") {
    gen::Rng rng(201);
    TwoSlotMap id = TwoSlotMap::identity(3, Variance::covariant, Variance::covariant);
    for (int iter = 0; iter < 20; ++iter) {
        Tensor t = gen::random_tensor(rng, Signature::covariant(3), 3, 3);
        CHECK(apply_two_slot(id, t, gen::pick(rng, 1, 2)) == t);
    }
}

TEST_CASE("slot errors: bad position and variance mismatch") {
    TwoSlotMap ev = TwoSlotMap::evaluation(2);
    Tensor t = word(kFF, {1, 1});
    CHECK_THROWS_AS(apply_two_slot(ev, t, 1), slot_error);   // needs E* E
    CHECK_THROWS_AS(apply_two_slot(ev, word(kEF, {1, 1}), 2), slot_error);
    CHECK_THROWS_AS(apply_two_slot(ev, word(kEF, {1, 1}), 0), slot_error);
}

TEST_CASE("two-slot maps are linear") {
    gen::Rng rng(202);
    TwistSystem sys = gen::random_system(rng, 2, 2);
    Signature dom{Variance::contravariant, Variance::covariant, Variance::covariant};
    for (int iter = 0; iter < 50; ++iter) {
        Tensor s = gen::random_tensor(rng, dom, 2, 2);
        Tensor t = gen::random_tensor(rng, dom, 2, 2);
        Scalar a = gen::scalar(rng), b = gen::scalar(rng);
        Tensor lhs = apply_two_slot(sys.C, a * s + b * t, 1);
        Tensor rhs = a * apply_two_slot(sys.C, s, 1) + b * apply_two_slot(sys.C, t, 1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("applications at disjoint positions commute") {
    gen::Rng rng(203);
    TwistSystem sys = gen::random_system(rng, 2, 2);
    Signature dom{Variance::contravariant, Variance::covariant, Variance::contravariant,
                  Variance::covariant};
    for (int iter = 0; iter < 50; ++iter) {
        Tensor t = gen::random_tensor(rng, dom, 2, 3);
        Tensor ab = apply_two_slot(sys.C, apply_two_slot(sys.C, t, 3), 1);
        Tensor ba = apply_two_slot(sys.C, apply_two_slot(sys.C, t, 1), 3);
        CHECK(ab == ba);
    }
}

TEST_CASE("word length cap refuses oversized products") {
    std::size_t old = max_word_length();
    set_max_word_length(3);
    Tensor a = word(kFF, {1, 1});
    CHECK_THROWS_AS(tensor_product(a, a), resource_error);
    CHECK_THROWS_AS(Tensor::basis(Signature::covariant(4), {1, 1, 1, 1}), resource_error);
    set_max_word_length(old);
    CHECK(tensor_product(a, a).signature().size() == 4);
}

TEST_CASE("duplicate and out-of-range entries are rejected") {
    TwoSlotMap m(2, {Variance::covariant, Variance::covariant},
                 {Variance::covariant, Variance::covariant});
    m.add_entry(1, 2, 2, 1, Scalar(1));
    CHECK_THROWS_AS(m.add_entry(1, 2, 2, 1, Scalar(2)), input_error);
    CHECK_THROWS_AS(m.add_entry(0, 1, 1, 1, Scalar(1)), input_error);
    CHECK_THROWS_AS(m.add_entry(1, 1, 3, 1, Scalar(1)), input_error);
}
