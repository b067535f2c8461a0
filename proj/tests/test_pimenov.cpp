#include "ckq/pimenov.hpp"

#include <doctest.h>

#include <random>

using namespace ckq;

namespace {

std::mt19937_64 rng(0xC0FFEE);

BaseNumber random_base() {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    return BaseNumber(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                      Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
}

PimenovElement random_pim(int max_gens = 4) {
    PimenovElement out;
    std::uniform_int_distribution<int> nterms(0, 5);
    std::uniform_int_distribution<uint32_t> mono(0, (1u << max_gens) - 1);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) out.add_term(NilMonomial::from_mask(mono(rng)), random_base());
    return out;
}

}  // namespace

TEST_CASE("base field arithmetic") {
    CHECK(BaseNumber::i() * BaseNumber::i() == BaseNumber(-1));
    CHECK(BaseNumber::sqrt2() * BaseNumber::sqrt2() == BaseNumber(2));
    CHECK((BaseNumber::i() * BaseNumber::sqrt2()) * (BaseNumber::i() * BaseNumber::sqrt2()) ==
          BaseNumber(-2));

    for (int trial = 0; trial < 200; ++trial) {
        BaseNumber x = random_base();
        if (x.is_zero()) continue;
        CHECK(x * x.inverse() == BaseNumber(1));
    }
}

TEST_CASE("mon_product") {
    // (1,3) with j_1, j_2 nilpotent collects iota_1 iota_2
    JSignature j5a(5, 0b0011);
    CHECK(mon_product(1, 3, j5a) == NilMonomial::from_indices({1, 2}));

    // (mu,mu) = 1
    CHECK(mon_product(4, 4, j5a) == NilMonomial::unit());

    // independent oracle: direct set comprehension over l = min..max-1
    JSignature j5b(5, 0b1010);  // j_2, j_4 nilpotent
    auto oracle = [](int mu, int nu, const JSignature& j) {
        std::vector<int> idx;
        for (int l = std::min(mu, nu); l < std::max(mu, nu); ++l)
            if (j.nilpotent(l)) idx.push_back(l);
        return NilMonomial::from_indices(idx);
    };
    CHECK(mon_product(2, 5, j5b) == NilMonomial::from_indices({2, 4}));
    for (int mu = 1; mu <= 5; ++mu)
        for (int nu = 1; nu <= 5; ++nu) {
            CHECK(mon_product(mu, nu, j5b) == oracle(mu, nu, j5b));
            CHECK(mon_product(mu, nu, j5a) == oracle(mu, nu, j5a));
        }
}

TEST_CASE("pim_mul examples") {
    PimenovElement one(BaseNumber(1));
    PimenovElement i1 = PimenovElement::iota(1);
    PimenovElement i2 = PimenovElement::iota(2);

    CHECK(pim_mul(one + i1, one - i1) == one);
    CHECK(pim_mul(i1, i2) == PimenovElement(NilMonomial::from_indices({1, 2})));

    // (iota_1 + iota_2)^2: four-term expansion, two vanish by nilpotency
    PimenovElement sum = i1 + i2;
    PimenovElement expected(NilMonomial::from_indices({1, 2}), BaseNumber(2));
    CHECK(pim_mul(sum, sum) == expected);
}

TEST_CASE("pim_div_monomial examples") {
    PimenovElement num(NilMonomial::from_indices({1, 2}), BaseNumber(3));
    CHECK(pim_div_monomial(num, NilMonomial::iota(2)) ==
          PimenovElement(NilMonomial::iota(1), BaseNumber(3)));

    PimenovElement five(BaseNumber(5));
    CHECK(pim_div_monomial(five, NilMonomial::unit()) == five);

    PimenovElement bad = PimenovElement::iota(1) +
                         PimenovElement(NilMonomial::from_indices({1, 2}));
    CHECK_THROWS_AS(pim_div_monomial(bad, NilMonomial::iota(2)), UndefinedDivision);
    try {
        pim_div_monomial(bad, NilMonomial::iota(2));
    } catch (const UndefinedDivision& e) {
        CHECK(e.offending() == NilMonomial::iota(1));
        CHECK(e.divisor() == NilMonomial::iota(2));
    }
}

TEST_CASE("ring axioms over random elements") {
    for (int trial = 0; trial < 1000; ++trial) {
        PimenovElement a = random_pim(), b = random_pim(), c = random_pim();
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("nilpotency and self-division") {
    for (int k = 1; k <= 4; ++k) {
        PimenovElement ik = PimenovElement::iota(k);
        CHECK(pim_mul(ik, ik).is_zero());
        CHECK(pim_div_monomial(ik, NilMonomial::iota(k)) == PimenovElement(BaseNumber(1)));
    }
}

TEST_CASE("division round-trip") {
    std::uniform_int_distribution<uint32_t> mono(0, 15);
    int done = 0;
    while (done < 1000) {
        PimenovElement a = random_pim();
        NilMonomial m = NilMonomial::from_mask(mono(rng));
        bool overlap = false;
        for (const auto& [am, c] : a.terms())
            if (am.mask() & m.mask()) overlap = true;
        if (overlap) continue;
        ++done;
        CHECK(pim_div_monomial(pim_mul(a, PimenovElement(m)), m) == a);
    }
}

TEST_CASE("parse/print round-trip") {
    CHECK(parse_pimenov("0").is_zero());
    for (int trial = 0; trial < 500; ++trial) {
        PimenovElement a = random_pim();
        CHECK(parse_pimenov(a.str()) == a);
    }
}
