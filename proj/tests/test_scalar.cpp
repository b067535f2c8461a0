#include "ckq/scalar.hpp"

#include <doctest.h>

#include <random>

using namespace ckq;

namespace {

std::mt19937_64 rng(0xBADA55);

BaseNumber random_base() {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    return BaseNumber(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)), 0, 0);
}

Scalar random_scalar(int max_gens = 3) {
    Scalar out;
    std::uniform_int_distribution<int> nterms(0, 4), q2(-4, 4), v(0, 2);
    std::uniform_int_distribution<uint32_t> mono(0, (1u << max_gens) - 1);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i)
        out.add_term({q2(rng), v(rng), NilMonomial::from_mask(mono(rng))}, random_base());
    return out;
}

}  // namespace

TEST_CASE("q powers") {
    CHECK(Scalar::q_pow_half(3) == Scalar::q_pow_half(3));  // q^{3/2}
    CHECK(Scalar::q_pow_half(0) == Scalar(1));
    CHECK(Scalar::q_pow(-1) * Scalar::q_pow(1) == Scalar(1));
    for (int a = -4; a <= 4; ++a)
        for (int b = -4; b <= 4; ++b)
            CHECK(Scalar::q_pow_half(a) * Scalar::q_pow_half(b) == Scalar::q_pow_half(a + b));
}

TEST_CASE("cosh and sinh as Laurent elements") {
    CHECK(cosh_rho_v(0) == Scalar(1));
    CHECK(sinh_rho_v(0).is_zero());
    CHECK(cosh_rho_v(1) ==
          BaseNumber::half() * (Scalar::q_pow_half(1) + Scalar::q_pow_half(-1)));
    for (int rho2 : {0, 1, -1, 2, -2, 3, -3, 4, -4}) {
        Scalar c = cosh_rho_v(rho2), s = sinh_rho_v(rho2);
        CHECK(c * c - s * s == Scalar(1));
    }
}

TEST_CASE("contraction substitution") {
    RescalingJ J23 = RescalingJ::of(NilMonomial::from_indices({2, 3}));
    // q^{3/2} -> 1 + (3/2) iota_2 iota_3 v
    Scalar expect = Scalar(1);
    expect.add_term({0, 1, NilMonomial::from_indices({2, 3})},
                    BaseNumber(Rational(3, 2)));
    CHECK(Scalar::q_pow_half(3).substitute_contracted_q(J23) == expect);

    CHECK(Scalar(1).substitute_contracted_q(J23) == Scalar(1));

    RescalingJ J2 = RescalingJ::of(NilMonomial::iota(2));
    Scalar qdiff = Scalar::q_pow(1) - Scalar::q_pow(-1);
    Scalar expect2;
    expect2.add_term({0, 1, NilMonomial::iota(2)}, BaseNumber(2));
    CHECK(qdiff.substitute_contracted_q(J2) == expect2);

    // (Jv)^2 = 0 is structural
    Scalar jv(NilMonomial::iota(2));
    jv = jv * Scalar::v();
    CHECK((jv * jv).is_zero());
}

TEST_CASE("ring axioms and substitution homomorphism") {
    RescalingJ J = RescalingJ::of(NilMonomial::iota(1));
    for (int trial = 0; trial < 500; ++trial) {
        Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a.substitute_contracted_q(J) + b.substitute_contracted_q(J) ==
              (a + b).substitute_contracted_q(J));
        CHECK(a.substitute_contracted_q(J) * b.substitute_contracted_q(J) ==
              (a * b).substitute_contracted_q(J));
    }
}

TEST_CASE("monomial division carries the offender") {
    Scalar s(NilMonomial::iota(1));
    s += Scalar(1);
    Scalar q;
    auto bad = s.try_div_monomial(NilMonomial::iota(1), &q);
    REQUIRE(bad.has_value());
    CHECK(*bad == NilMonomial::unit());
}

TEST_CASE("rendering") {
    Scalar s;
    s.add_term({-3, 1, NilMonomial::iota(2)}, BaseNumber(Rational(1, 2)));
    CHECK(s.str() == "(1/2)·q^{-3/2}·v·ι2");
    CHECK(Scalar(1).str() == "1");
    CHECK(Scalar().str() == "0");
}
