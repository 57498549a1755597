#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "planeshell/golden.hpp"

using namespace planeshell;

namespace {

GoldenScalar zphi(long a, long b) { return GoldenScalar(a, b, RingTag::Zphi); }

GoldenScalar random_scalar(std::mt19937_64& rng, RingTag tag) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 3);
    if (ring_tag_is_field(tag)) {
        return GoldenScalar(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)), tag);
    }
    return GoldenScalar(num(rng), ring_tag_has_phi(tag) ? num(rng) : 0, tag);
}

}  // namespace

TEST_CASE("golden multiplication reduces by phi^2 = phi + 1") {
    GoldenScalar phi = GoldenScalar::phi(RingTag::Zphi);
    CHECK(phi * phi == zphi(1, 1));
    // (2 - phi)(1 + phi) = 2 + 2phi - phi - phi^2 = 2 + phi - (1 + phi) = 1.
    CHECK(zphi(2, -1) * zphi(1, 1) == zphi(1, 0));
    CHECK(GoldenScalar::zero(RingTag::Zphi) * zphi(7, -3) == GoldenScalar::zero(RingTag::Zphi));
}

TEST_CASE("ring tag mismatch raises the typed error") {
    CHECK_THROWS_AS(GoldenScalar::one(RingTag::Z) * GoldenScalar::one(RingTag::Zphi),
                    RingMismatchError);
    CHECK_THROWS_AS(GoldenScalar::one(RingTag::Q) + GoldenScalar::one(RingTag::Qphi),
                    RingMismatchError);
}

TEST_CASE("ring mode rejects non-integral or phi-bearing values") {
    CHECK_THROWS_AS(GoldenScalar(mpq_class(1, 2), 0, RingTag::Z), RingMismatchError);
    CHECK_THROWS_AS(GoldenScalar(0, 1, RingTag::Q), RingMismatchError);
}

TEST_CASE("galois conjugation") {
    GoldenScalar phi = GoldenScalar::phi(RingTag::Zphi);
    CHECK(phi.galois() == zphi(1, -1));
    CHECK(zphi(1, 1).galois() == zphi(2, -1));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        GoldenScalar x = random_scalar(rng, RingTag::Qphi);
        CHECK(x.galois().galois() == x);
    }
}

TEST_CASE("galois is a ring homomorphism") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        GoldenScalar x = random_scalar(rng, RingTag::Qphi);
        GoldenScalar y = random_scalar(rng, RingTag::Qphi);
        CHECK((x * y).galois() == x.galois() * y.galois());
        CHECK((x + y).galois() == x.galois() + y.galois());
    }
}

TEST_CASE("ring axioms hold on random samples") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        GoldenScalar x = random_scalar(rng, RingTag::Zphi);
        GoldenScalar y = random_scalar(rng, RingTag::Zphi);
        GoldenScalar z = random_scalar(rng, RingTag::Zphi);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
    }
}

TEST_CASE("exact sign") {
    CHECK(GoldenScalar::phi(RingTag::Zphi).sign_exact() == +1);
    // 1 - phi is about -0.618: 2a+b = 1 > 0, b = -1 < 0, and 1 < 5.
    CHECK(zphi(1, -1).sign_exact() == -1);
    CHECK(GoldenScalar::zero(RingTag::Zphi).sign_exact() == 0);
    CHECK(zphi(-3, 2).sign_exact() == +1);   // 2 phi - 3 ~ 0.236
    CHECK(zphi(2, -1).sign_exact() == +1);   // 2 - phi ~ 0.382
    CHECK(zphi(-2, 1).sign_exact() == -1);
}

TEST_CASE("sign agrees with an exact interval evaluation on random inputs") {
    // Consecutive Fibonacci convergents bracket phi.
    const mpq_class lo(mpz_class("1836311903"), mpz_class("1134903170"));
    const mpq_class hi(mpz_class("1134903170"), mpz_class("701408733"));
    REQUIRE(lo < hi);
    REQUIRE(lo * lo - lo - 1 < 0);  // lo < phi
    REQUIRE(hi * hi - hi - 1 > 0);  // hi > phi

    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> coeff(-1000000, 1000000);
    for (int i = 0; i < 10000; ++i) {
        long a = coeff(rng), b = coeff(rng);
        GoldenScalar x = zphi(a, b);
        mpq_class low = a + b * (b >= 0 ? lo : hi);
        mpq_class high = a + b * (b >= 0 ? hi : lo);
        if (a == 0 && b == 0) {
            CHECK(x.sign_exact() == 0);
            continue;
        }
        // The interval never straddles zero at this coefficient size.
        REQUIRE(sgn(low) == sgn(high));
        CHECK(x.sign_exact() == sgn(low));
    }
}

TEST_CASE("total nonnegativity") {
    CHECK_FALSE(GoldenScalar::phi(RingTag::Zphi).is_totally_nonneg());
    CHECK(zphi(1, 1).is_totally_nonneg());  // conjugate 2 - phi > 0
    CHECK(GoldenScalar::zero(RingTag::Zphi).is_totally_nonneg());
    CHECK(zphi(2, -1).is_totally_nonneg());
}

TEST_CASE("one decompositions are trivial in both rings") {
    auto expect = [](RingTag tag) {
        return std::vector<std::pair<GoldenScalar, GoldenScalar>>{
            {GoldenScalar::zero(tag), GoldenScalar::one(tag)},
            {GoldenScalar::one(tag), GoldenScalar::zero(tag)}};
    };
    CHECK(one_decompositions(RingTag::Z, 10) == expect(RingTag::Z));
    CHECK(one_decompositions(RingTag::Zphi, 10) == expect(RingTag::Zphi));
    CHECK(one_decompositions(RingTag::Zphi, 50) == expect(RingTag::Zphi));
}

TEST_CASE("one decompositions are independent of the bound") {
    auto base = one_decompositions(RingTag::Zphi, 2);
    for (long bound : {3L, 5L, 20L}) {
        CHECK(one_decompositions(RingTag::Zphi, bound) == base);
    }
    CHECK_THROWS_AS(one_decompositions(RingTag::Q, 5), RingMismatchError);
    CHECK_THROWS_AS(one_decompositions(RingTag::Z, 0), std::invalid_argument);
}

TEST_CASE("field inversion and division") {
    GoldenScalar phi = GoldenScalar::phi(RingTag::Qphi);
    CHECK(phi * phi.inverse() == GoldenScalar::one(RingTag::Qphi));
    // 1/phi = phi - 1.
    CHECK(phi.inverse() == GoldenScalar(-1, 1, RingTag::Qphi));
    CHECK_THROWS_AS(GoldenScalar::zero(RingTag::Qphi).inverse(), std::domain_error);
    CHECK_THROWS_AS(GoldenScalar::one(RingTag::Zphi).inverse(), RingMismatchError);
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        GoldenScalar x = random_scalar(rng, RingTag::Qphi);
        if (x.is_zero()) continue;
        CHECK((x / x) == GoldenScalar::one(RingTag::Qphi));
    }
}

TEST_CASE("serialization formats") {
    GoldenScalar half(mpq_class(1, 2), mpq_class(-3, 4), RingTag::Qphi);
    CHECK(half.field_string() == "1/2+-3/4*phi");
    CHECK(GoldenScalar(mpq_class(2, 4), 0, RingTag::Q).field_string() == "1/2+0/1*phi");
    auto [a, b] = zphi(3, -2).ring_pair();
    CHECK(a == 3);
    CHECK(b == -2);
    CHECK_THROWS_AS(half.ring_pair(), RingMismatchError);
}

TEST_CASE("widening and narrowing") {
    GoldenScalar two = GoldenScalar::integer(2, RingTag::Z);
    CHECK(two.widened(RingTag::Qphi).tag() == RingTag::Qphi);
    CHECK_THROWS_AS(GoldenScalar::phi(RingTag::Zphi).widened(RingTag::Q), RingMismatchError);
    GoldenScalar q(mpq_class(4, 2), 0, RingTag::Qphi);
    auto narrowed = q.narrowed(RingTag::Z);
    REQUIRE(narrowed.has_value());
    CHECK(*narrowed == two);
    CHECK_FALSE(GoldenScalar(mpq_class(1, 2), 0, RingTag::Qphi).narrowed(RingTag::Z).has_value());
    CHECK_FALSE(GoldenScalar::phi(RingTag::Qphi).narrowed(RingTag::Q).has_value());
}
