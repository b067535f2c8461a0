#include "ckq/poly.hpp"
#include "ckq/quantum.hpp"

#include <doctest.h>

#include <random>

using namespace ckq;

namespace {

std::mt19937_64 rng(0x5EED);

Sym random_sym() {
    std::uniform_int_distribution<int> kind(0, 3), idx(1, 3);
    return Sym{SymKind(kind(rng)), uint8_t(idx(rng)), uint8_t(idx(rng))};
}

NcPoly random_nc() {
    std::uniform_int_distribution<int> nterms(0, 4), len(0, 2), coef(-3, 3);
    NcPoly out;
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Word w;
        int l = len(rng);
        for (int p = 0; p < l; ++p) w.push(random_sym());
        out.add_term(w, Scalar(coef(rng)));
    }
    return out;
}

Sym t(int r, int c) { return Sym{SymKind::T, uint8_t(r), uint8_t(c)}; }
Sym tau(int r, int c) { return Sym{SymKind::TAU, uint8_t(r), uint8_t(c)}; }

}  // namespace

TEST_CASE("nc_mul examples") {
    NcPoly t12(t(1, 2));
    CHECK(nc_mul(t12, NcPoly(1)) == t12);

    NcPoly lhs = NcPoly(t(1, 1)) + NcPoly(tau(1, 1));
    NcPoly rhs(t(2, 1));
    NcPoly expect;
    expect.add_term(Word(t(1, 1)) * Word(t(2, 1)), Scalar(1));
    expect.add_term(Word(tau(1, 1)) * Word(t(2, 1)), Scalar(1));
    CHECK(nc_mul(lhs, rhs) == expect);

    // Pimenov factors annihilate: (i1 t12)(i1 t21) = 0
    NcPoly a(t(1, 2), Scalar(NilMonomial::iota(1)));
    NcPoly b(t(2, 1), Scalar(NilMonomial::iota(1)));
    CHECK(nc_mul(a, b).is_zero());
}

TEST_CASE("free algebra properties") {
    for (int trial = 0; trial < 400; ++trial) {
        NcPoly a = random_nc(), b = random_nc(), c = random_nc();
        CHECK((a * b) * c == a * (b * c));
        CHECK(NcPoly(1) * a == a);
        CHECK(a * NcPoly(1) == a);
    }
    // generators never commute as stored terms
    NcPoly gh = NcPoly(t(1, 2)) * NcPoly(t(2, 1));
    NcPoly hg = NcPoly(t(2, 1)) * NcPoly(t(1, 2));
    CHECK(gh != hg);
}

TEST_CASE("commutative flavor sorts words") {
    CPoly gh = CPoly(t(1, 2)) * CPoly(t(2, 1));
    CPoly hg = CPoly(t(2, 1)) * CPoly(t(1, 2));
    CHECK(gh == hg);
}

TEST_CASE("tensor product is componentwise") {
    for (int trial = 0; trial < 200; ++trial) {
        NcPoly a(random_sym()), b(random_sym()), c(random_sym()), d(random_sym());
        TensorPoly lhs = TensorPoly::pure(a, b) * TensorPoly::pure(c, d);
        TensorPoly rhs = TensorPoly::pure(a * c, b * d);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("support_pattern") {
    NcPoly p(t(2, 1));
    p += NcPoly(tau(2, 1), Scalar::i() * Scalar(NilMonomial::from_indices({1, 2})));
    auto sp = quantum::support_pattern(p);
    REQUIRE(sp.consistent());
    CHECK(sp.by_generator.at(t(2, 1)) == NilMonomial::unit());
    CHECK(sp.by_generator.at(tau(2, 1)) == NilMonomial::from_indices({1, 2}));

    CHECK(quantum::support_pattern(NcPoly()).by_generator.empty());

    NcPoly quad = NcPoly(t(1, 2)) * NcPoly(t(2, 1));
    CHECK_THROWS_AS(quantum::support_pattern(quad), NonLinear);

    // mixed monomials in the leading part are reported
    NcPoly mixed(t(1, 1), Scalar(1) + Scalar(NilMonomial::iota(1)));
    CHECK_FALSE(quantum::support_pattern(mixed).consistent());
}
