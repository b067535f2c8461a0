#include "ckq/contraction.hpp"

#include <doctest.h>

#include <set>

using namespace ckq;
using namespace ckq::contraction;

namespace {

Permutation perm(std::vector<int> v) { return Permutation(std::move(v)); }
uint32_t mask_of(std::initializer_list<int> idx) {
    uint32_t m = 0;
    for (int k : idx) m |= 1u << (k - 1);
    return m;
}

std::set<PredictionRow> as_rows(const std::vector<EnumRow>& rows, bool transformed) {
    std::set<PredictionRow> out;
    for (const auto& r : rows) {
        if (r.mask == 0 || r.J.is_unit() == transformed) continue;
        out.insert({r.mask, r.cls, r.J});
    }
    return out;
}

std::set<PredictionRow> as_rows(const std::vector<PredictionRow>& rows) {
    return {rows.begin(), rows.end()};
}

}  // namespace

TEST_CASE("forced rescaling monomial") {
    // identity sigma with j_2, j_3 nilpotent: ranges [1,4] and [2,3] meet in {2,3}
    CHECK(compute_J(5, perm({1, 2, 3, 4, 5}), JSignature(5, mask_of({2, 3}))).monomial ==
          NilMonomial::from_indices({2, 3}));
    // sigma = (2,3,1,4,5) with j_3 nilpotent
    CHECK(compute_J(5, perm({2, 3, 1, 4, 5}), JSignature(5, mask_of({3}))).monomial ==
          NilMonomial::iota(3));
    // all factors unit
    CHECK(compute_J(5, perm({1, 4, 3, 5, 2}), JSignature(5, mask_of({2}))).is_unit());
}

TEST_CASE("single admissibility checks") {
    // quantum Newton group: j_2 nilpotent, untouched deformation parameter
    {
        ContractionSpec spec{5, JSignature(5, mask_of({2})), perm({1, 4, 3, 5, 2}),
                             RescalingJ::unit()};
        Verdict v = check_admissible(spec);
        CHECK(v.allowed);
        CHECK(v.antipode_ok);
        CHECK(v.orthogonality_ok);
        CHECK(v.coproduct_ok);
        CHECK(v.equation_count == v.baseline_count);
    }
    // no contraction at all: the standard quantum group
    {
        ContractionSpec spec{5, JSignature::all_unit(5), Permutation::identity(5),
                             RescalingJ::unit()};
        CHECK(check_admissible(spec).allowed);
    }
    // the Galilei pattern j_1, j_2 fails for this sigma in both regimes
    {
        JSignature j(5, mask_of({1, 2}));
        Permutation s = perm({1, 2, 5, 3, 4});
        ContractionSpec fixed{5, j, s, RescalingJ::unit()};
        CHECK_FALSE(check_admissible(fixed).allowed);
        ContractionSpec moved{5, j, s, compute_J(5, s, j)};
        CHECK_FALSE(moved.J.is_unit());
        CHECK_FALSE(check_admissible(moved).allowed);
    }
}

TEST_CASE("rtt well-definedness is reported on request") {
    ContractionSpec spec{4, JSignature(4, mask_of({1, 2, 3})), Permutation::identity(4),
                         compute_J(4, Permutation::identity(4), JSignature(4, mask_of({1, 2, 3})))};
    Verdict v = check_admissible(spec, {true, false});
    REQUIRE(v.rtt_defined.has_value());
    CHECK(v.allowed);
    CHECK(*v.rtt_defined);

    Verdict v2 = check_admissible(spec, {false, false});
    CHECK_FALSE(v2.rtt_defined.has_value());
}

TEST_CASE("enumeration at N=3") {
    auto rows = enumerate_allowed(3);
    // identity-class (pair {1,3}) rows: no fixed-J contraction, and the three
    // transformed ones j_1, j_2, j_1 j_2 with J equal to the nilpotent part
    SigmaFingerprint id_class = fingerprint(Permutation::identity(3));
    std::set<PredictionRow> id_rows;
    for (const auto& r : rows)
        if (r.cls == id_class && r.mask != 0) id_rows.insert({r.mask, r.cls, r.J});
    std::set<PredictionRow> expect;
    for (uint32_t mask : {1u, 2u, 3u})
        expect.insert({mask, id_class, RescalingJ::of(NilMonomial::from_mask(mask))});
    CHECK(id_rows == expect);

    // and both regimes match the theorem statements
    CHECK(as_rows(rows, false) == as_rows(theorem_predictions(3, 1)));
    CHECK(as_rows(rows, true) == as_rows(theorem_predictions(3, 3)));
}

TEST_CASE("enumeration at N=4 and the seven identity contractions") {
    auto rows = enumerate_allowed(4);
    SigmaFingerprint id_class = fingerprint(Permutation::identity(4));
    std::set<PredictionRow> id_rows;
    for (const auto& r : rows)
        if (r.cls == id_class && r.mask != 0) id_rows.insert({r.mask, r.cls, r.J});
    // seven admissible contractions, all with transformed parameter
    CHECK(id_rows.size() == 7);
    for (const auto& r : id_rows) {
        CHECK((r.mask & ~mask_of({1, 2, 3})) == 0);
        CHECK(r.J.monomial.mask() == r.mask);
    }
    CHECK(as_rows(rows, false) == as_rows(theorem_predictions(4, 2)));
    CHECK(as_rows(rows, true) == as_rows(theorem_predictions(4, 4)));
}

TEST_CASE("theorem prediction examples") {
    // Theorem 1 at N=5, m=1: sigma = (1,4,3,5,2) carries the j_2, j_3 pattern
    {
        auto rows = theorem_predictions(5, 1);
        PredictionRow want{mask_of({2, 3}), fingerprint(perm({1, 4, 3, 5, 2})),
                           RescalingJ::unit()};
        CHECK(std::find(rows.begin(), rows.end(), want) != rows.end());
        // m=0 and m=2 recipes from the same theorem
        CHECK(std::find_if(rows.begin(), rows.end(), [&](const PredictionRow& r) {
                  return r.mask == mask_of({1, 3}) &&
                         r.cls == fingerprint(perm({2, 4, 1, 5, 3}));
              }) != rows.end());
        CHECK(std::find_if(rows.begin(), rows.end(), [&](const PredictionRow& r) {
                  return r.mask == mask_of({2, 4}) &&
                         r.cls == fingerprint(perm({1, 3, 5, 4, 2}));
              }) != rows.end());
    }
    // Theorem 3 case 3: sigma_{n+1} = n+1, both middle parameters free
    {
        auto rows = theorem_predictions(5, 3);
        SigmaFingerprint id_class = fingerprint(Permutation::identity(5));
        int count = 0;
        for (const auto& r : rows)
            if (r.cls == id_class) {
                ++count;
                CHECK((r.mask & ~mask_of({2, 3})) == 0);
                CHECK(r.J.monomial.mask() == r.mask);
            }
        CHECK(count == 3);
    }
    // Theorem 4 case 6 at N=6: sigma_n = 3, sigma_n' = 4 allows all of j_2 j_3 j_4
    {
        auto rows = theorem_predictions(6, 4);
        SigmaFingerprint id_class = fingerprint(Permutation::identity(6));
        int count = 0;
        for (const auto& r : rows)
            if (r.cls == id_class) {
                ++count;
                CHECK((r.mask & ~mask_of({2, 3, 4})) == 0);
            }
        CHECK(count == 7);
    }
    // parity guard
    CHECK_THROWS(theorem_predictions(5, 2));
    CHECK_THROWS(theorem_predictions(4, 1));
}

TEST_CASE("fixed-parameter mask patterns") {
    auto p5 = fixed_J_mask_patterns(5);
    CHECK(std::set<uint32_t>(p5.begin(), p5.end()) ==
          std::set<uint32_t>{mask_of({1, 3}), mask_of({2, 3}), mask_of({2, 4})});
    auto p4 = fixed_J_mask_patterns(4);
    CHECK(std::set<uint32_t>(p4.begin(), p4.end()) ==
          std::set<uint32_t>{mask_of({1, 2}), mask_of({1, 3}), mask_of({2, 3})});
}

TEST_CASE("primitive element labels") {
    ContractionSpec newton_q{5, JSignature(5, mask_of({2})), perm({1, 4, 3, 5, 2}),
                             RescalingJ::unit()};
    CHECK(primitive_element_labels(newton_q) == std::vector<std::string>{"SO(2)", "SO(2)"});

    ContractionSpec newton_v{5, JSignature(5, mask_of({2})), perm({1, 2, 5, 3, 4}),
                             RescalingJ::of(NilMonomial::iota(2))};
    CHECK(primitive_element_labels(newton_v) == std::vector<std::string>{"G(1,1)", "G(1,1)"});

    ContractionSpec untouched{5, JSignature::all_unit(5), Permutation::identity(5),
                              RescalingJ::unit()};
    CHECK(primitive_element_labels(untouched) == std::vector<std::string>{"SO(2)", "SO(2)"});
}

TEST_CASE("degenerate all-nilpotent reduction at N=3") {
    auto res = degenerate_reduction(3);
    CHECK_FALSE(res.contradiction);
    // a single free tau remains (2n-1 = 1)
    CHECK(res.survivors.size() == 1);
    for (const auto& g : res.survivors) CHECK(g.kind == SymKind::TAU);
    // t_kk and the middle generator are pinned to 1, everything else to 0
    CHECK(res.constants.at(Sym{SymKind::T, 1, 1}) == 1);
    CHECK(res.constants.at(Sym{SymKind::T, 2, 2}) == 1);
    CHECK(res.constants.at(Sym{SymKind::T, 3, 1}) == 0);
    CHECK(res.constants.at(Sym{SymKind::T, 1, 2}) == 0);
    CHECK(res.constants.at(Sym{SymKind::TAU, 1, 2}) == 0);
}

TEST_CASE("coincidence of fixed and transformed regimes on one j-set") {
    // at N=5 the middle pattern {j_2, j_3} contracts with J=1 for one class
    // and with J = i2 i3 for another
    auto rows = enumerate_allowed(5);
    auto coincidences = coincidence_masks(rows);
    CHECK(std::find(coincidences.begin(), coincidences.end(), mask_of({2, 3})) !=
          coincidences.end());
}
