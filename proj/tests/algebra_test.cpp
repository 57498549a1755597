#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "planeshell/algebra.hpp"

using namespace planeshell;

namespace {

AlgebraElement random_element(const AlgebraSpec& spec, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 2);
    std::vector<GoldenScalar> c;
    for (int i = 0; i < spec.dim; ++i) {
        c.push_back(GoldenScalar(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)),
                                 spec.field));
    }
    return AlgebraElement(spec, std::move(c));
}

const std::vector<std::string>& all_names() {
    static const std::vector<std::string> names = {"R", "C", "Ceis", "Cgolden", "H", "Heis",
                                                   "O", "Oeis"};
    return names;
}

}  // namespace

TEST_CASE("quaternion and octonion basis products") {
    const AlgebraSpec& h = algebra("H");
    CHECK(mul(basis_element(h, 1), basis_element(h, 2)) == basis_element(h, 3));  // i j = k
    CHECK(mul(basis_element(h, 2), basis_element(h, 1)) == neg(basis_element(h, 3)));

    const AlgebraSpec& o = algebra("O");
    CHECK(mul(basis_element(o, 1), basis_element(o, 2)) == basis_element(o, 3));
    CHECK(mul(basis_element(o, 2), basis_element(o, 1)) == neg(basis_element(o, 3)));
    CHECK(mul(basis_element(o, 1), basis_element(o, 4)) == basis_element(o, 5));
    CHECK(mul(basis_element(o, 3), basis_element(o, 6)) == basis_element(o, 5));
}

TEST_CASE("algebra mismatch raises the typed error") {
    CHECK_THROWS_AS(mul(unit_element(algebra("H")), unit_element(algebra("O"))),
                    AlgebraMismatchError);
    CHECK_THROWS_AS(polar(unit_element(algebra("C")), unit_element(algebra("Ceis"))),
                    AlgebraMismatchError);
}

TEST_CASE("conjugation fixes the unit coordinate and negates the rest") {
    const AlgebraSpec& h = algebra("H");
    CHECK(conj(unit_element(h)) == unit_element(h));
    CHECK(conj(basis_element(h, 1)) == neg(basis_element(h, 1)));
    AlgebraElement x = element_from_ints(h, {2, 3, -4, 5});
    CHECK(conj(x) == element_from_ints(h, {2, -3, 4, -5}));
}

TEST_CASE("norms of distinguished elements") {
    const AlgebraSpec& h = algebra("H");
    CHECK(norm(basis_element(h, 1)) == GoldenScalar::one(h.field));
    CHECK(norm(element_from_halves(h, {1, 1, 1, 1})) == GoldenScalar::one(h.field));

    // zeta_10 = phi/2 + t in the golden-complex presentation.
    const AlgebraSpec& cg = algebra("Cgolden");
    AlgebraElement zeta(cg, {GoldenScalar(0, mpq_class(1, 2), cg.field), GoldenScalar::one(cg.field)});
    CHECK(norm(zeta) == GoldenScalar::one(cg.field));
}

TEST_CASE("polar form values") {
    const AlgebraSpec& c = algebra("C");
    CHECK(polar(unit_element(c), basis_element(c, 1)) == GoldenScalar::zero(c.field));
    CHECK(polar(unit_element(c), unit_element(c)) == GoldenScalar::integer(2, c.field));

    // B(1, omega) = -1 in the Eisenstein presentation.
    const AlgebraSpec& ce = algebra("Ceis");
    AlgebraElement omega(ce, {GoldenScalar(mpq_class(-1, 2), 0, ce.field), GoldenScalar::one(ce.field)});
    CHECK(norm(omega) == GoldenScalar::one(ce.field));
    CHECK(polar(unit_element(ce), omega) == -GoldenScalar::one(ce.field));
}

TEST_CASE("polar matches N(x+y) - N(x) - N(y) and the conjugate product") {
    std::mt19937_64 rng(31);
    for (const std::string& name : all_names()) {
        const AlgebraSpec& spec = algebra(name);
        for (int s = 0; s < 50; ++s) {
            AlgebraElement x = random_element(spec, rng);
            AlgebraElement y = random_element(spec, rng);
            CHECK(polar(x, y) == norm(add(x, y)) - norm(x) - norm(y));
            // B(x, y) is the e_0 coordinate of x conj(y) + y conj(x).
            AlgebraElement cross = add(mul(x, conj(y)), mul(y, conj(x)));
            CHECK(cross.coord(0) == polar(x, y));
        }
    }
}

TEST_CASE("inverse") {
    const AlgebraSpec& h = algebra("H");
    CHECK(inverse(basis_element(h, 1)) == neg(basis_element(h, 1)));
    AlgebraElement two = scale(GoldenScalar::integer(2, h.field), unit_element(h));
    CHECK(inverse(two) == scale(GoldenScalar(mpq_class(1, 2), 0, h.field), unit_element(h)));
    AlgebraElement half_sum = element_from_halves(h, {1, 1, 1, 1});
    CHECK(inverse(half_sum) == element_from_halves(h, {1, -1, -1, -1}));
    CHECK(mul(half_sum, inverse(half_sum)) == unit_element(h));
    CHECK_THROWS_AS(inverse(zero_element(h)), ZeroNormError);
}

TEST_CASE("associator vanishes on quaternions and measures octonion nonassociativity") {
    const AlgebraSpec& h = algebra("H");
    std::mt19937_64 rng(37);
    for (int s = 0; s < 50; ++s) {
        AlgebraElement a = random_element(h, rng);
        AlgebraElement b = random_element(h, rng);
        AlgebraElement c = random_element(h, rng);
        CHECK(associator(a, b, c).is_zero());
    }
    const AlgebraSpec& o = algebra("O");
    // (e1 e2) e4 = e3 e4 = e7 while e1 (e2 e4) = e1 e6 = -e7.
    AlgebraElement assoc = associator(basis_element(o, 1), basis_element(o, 2), basis_element(o, 4));
    CHECK(assoc == scale(GoldenScalar::integer(2, o.field), basis_element(o, 7)));
}

TEST_CASE("Artin two-generated associativity on samples") {
    const AlgebraSpec& o = algebra("O");
    std::mt19937_64 rng(41);
    for (int s = 0; s < 100; ++s) {
        AlgebraElement a = random_element(o, rng);
        AlgebraElement b = random_element(o, rng);
        CHECK(associator(a, b, mul(a, b)).is_zero());
        CHECK(associator(a, a, b).is_zero());  // alternativity (aa)b = a(ab)
        CHECK(associator(b, a, a).is_zero());
    }
}

TEST_CASE("Moufang identity") {
    const AlgebraSpec& h = algebra("H");
    std::mt19937_64 rng(43);
    for (int s = 0; s < 30; ++s) {
        CHECK(moufang_check(random_element(h, rng), random_element(h, rng),
                            random_element(h, rng)));
    }
    const AlgebraSpec& o = algebra("O");
    // All 16^3 triples of Cayley-Graves unit elements.
    std::vector<AlgebraElement> units;
    for (int i = 0; i < 8; ++i) {
        units.push_back(basis_element(o, i));
        units.push_back(neg(basis_element(o, i)));
    }
    for (const AlgebraElement& a : units) {
        for (const AlgebraElement& b : units) {
            for (const AlgebraElement& c : units) {
                CHECK(moufang_check(a, b, c));
            }
        }
    }
    for (int s = 0; s < 50; ++s) {
        CHECK(moufang_check(random_element(o, rng), random_element(o, rng),
                            random_element(o, rng)));
    }
}

TEST_CASE("multiplicativity of the norm on random pairs in every algebra") {
    std::mt19937_64 rng(47);
    for (const std::string& name : all_names()) {
        const AlgebraSpec& spec = algebra(name);
        for (int s = 0; s < 1000; ++s) {
            AlgebraElement x = random_element(spec, rng);
            AlgebraElement y = random_element(spec, rng);
            CHECK(norm(mul(x, y)) == norm(x) * norm(y));
        }
    }
}

TEST_CASE("conjugation is an anti-automorphism") {
    std::mt19937_64 rng(53);
    for (const std::string& name : all_names()) {
        const AlgebraSpec& spec = algebra(name);
        for (int s = 0; s < 100; ++s) {
            AlgebraElement x = random_element(spec, rng);
            AlgebraElement y = random_element(spec, rng);
            CHECK(conj(mul(x, y)) == mul(conj(y), conj(x)));
        }
    }
}

TEST_CASE("golden complex norm form is totally positive definite") {
    const AlgebraSpec& cg = algebra("Cgolden");
    for (const GoldenScalar& w : cg.norm_diagonal) {
        CHECK(w.is_totally_positive());
    }
    // N(a + b t) = a^2 + b^2 (3 - phi)/4.
    std::mt19937_64 rng(59);
    for (int s = 0; s < 100; ++s) {
        AlgebraElement x = random_element(cg, rng);
        GoldenScalar expected = x.coord(0) * x.coord(0) +
                                GoldenScalar(mpq_class(3, 4), mpq_class(-1, 4), cg.field) *
                                    x.coord(1) * x.coord(1);
        CHECK(norm(x) == expected);
    }
}

TEST_CASE("unknown algebra name") {
    CHECK_THROWS_AS(algebra("sedenion"), std::invalid_argument);
}
