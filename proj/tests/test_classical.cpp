#include "ckq/classical.hpp"

#include <doctest.h>

#include <random>

using namespace ckq;
using namespace ckq::classical;

namespace {

std::mt19937_64 rng(0xD17);

Permutation random_perm(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(v);
}

CPoly sym(SymKind k, int r, int c, Scalar coef = Scalar(1)) {
    return CPoly(Sym{k, uint8_t(r), uint8_t(c)}, coef);
}
Scalar I() { return Scalar::i(); }
Scalar nil(std::vector<int> idx) { return Scalar(NilMonomial::from_indices(idx)); }

}  // namespace

TEST_CASE("basis change solves D^t C0 D = I") {
    for (int n = 2; n <= 7; ++n) {
        Mat<BaseNumber> c0 = c0_matrix(n);
        Mat<BaseNumber> id = Mat<BaseNumber>::identity(n);
        CHECK(d_matrix(n).transpose() * c0 * d_matrix(n) == id);
        for (int trial = 0; trial < 20; ++trial) {
            auto ds = build_D_sigma(n, random_perm(n));
            CHECK(ds.transpose() * c0 * ds == id);
        }
        // and the inverse is the one Eq-style identity implies
        auto sigma = random_perm(n);
        auto lifted = build_D_sigma(n, sigma) * invert_D_sigma(n, sigma);
        CHECK(lifted == id);
    }
    // explicit paper case
    auto ds = build_D_sigma(3, Permutation({2, 1, 3}));
    CHECK(ds.transpose() * c0_matrix(3) * ds == Mat<BaseNumber>::identity(3));
}

TEST_CASE("template path agrees with conjugation path") {
    auto check_nj = [](int n, const Permutation& sigma) {
        auto dict = b_dictionary(n, sigma);
        for (uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
            JSignature j(n, mask);
            Mat<CPoly> templ = build_B_sigma(n, j, sigma);
            Mat<CPoly> conj = conjugated_B_sigma(n, j, sigma);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    CHECK(templ.at(r, c).substitute(dict) == conj.at(r, c));
        }
    };
    for (const auto& sigma : all_permutations(3)) check_nj(3, sigma);
    for (const auto& sigma : all_permutations(4)) check_nj(4, sigma);
    check_nj(5, Permutation::identity(5));
    for (int trial = 0; trial < 8; ++trial) check_nj(5, random_perm(5));
}

TEST_CASE("SO(3) symplectic displays") {
    // sigma = (1,2,3): factors j1j2 on the corners, j1 / j2 on the middle
    for (uint32_t mask = 0; mask < 4; ++mask) {
        JSignature j(3, mask);
        auto f12 = Scalar(mon_product(1, 2, j));  // j1
        auto f23 = Scalar(mon_product(2, 3, j));  // j2
        auto f13 = Scalar(mon_product(1, 3, j));  // j1 j2
        auto B = build_B_sigma(3, j, Permutation({1, 2, 3}));
        CHECK(B.at(0, 0) == sym(SymKind::B, 1, 1) + sym(SymKind::BT, 1, 1, I() * f13));
        CHECK(B.at(0, 1) == sym(SymKind::B, 1, 2, f12) + sym(SymKind::BT, 1, 2, -I() * f23));
        CHECK(B.at(0, 2) == sym(SymKind::B, 3, 1) + sym(SymKind::BT, 3, 1, -I() * f13));
        CHECK(B.at(1, 0) == sym(SymKind::B, 2, 1, f12) + sym(SymKind::BT, 2, 1, I() * f23));
        CHECK(B.at(1, 1) == sym(SymKind::B, 2, 2));
        CHECK(B.at(1, 2) == sym(SymKind::B, 2, 1, f12) + sym(SymKind::BT, 2, 1, -I() * f23));
        CHECK(B.at(2, 0) == sym(SymKind::B, 3, 1) + sym(SymKind::BT, 3, 1, I() * f13));
        CHECK(B.at(2, 1) == sym(SymKind::B, 1, 2, f12) + sym(SymKind::BT, 1, 2, I() * f23));
        CHECK(B.at(2, 2) == sym(SymKind::B, 1, 1) + sym(SymKind::BT, 1, 1, -I() * f13));
    }
    // sigma = (2,1,3): b~11 now carries j2 alone, the middle column j1 j2
    {
        JSignature j(3, 0b11);
        auto B = build_B_sigma(3, j, Permutation({2, 1, 3}));
        CHECK(B.at(0, 0) == sym(SymKind::B, 1, 1) + sym(SymKind::BT, 1, 1, I() * nil({2})));
        CHECK(B.at(0, 1) ==
              sym(SymKind::B, 1, 2, nil({1})) + sym(SymKind::BT, 1, 2, -I() * nil({1, 2})));
    }
    // sigma = (1,3,2): j1 j2 moves onto b_12, j1 onto b~11
    {
        JSignature j(3, 0b11);
        auto B = build_B_sigma(3, j, Permutation({1, 3, 2}));
        CHECK(B.at(0, 0) == sym(SymKind::B, 1, 1) + sym(SymKind::BT, 1, 1, I() * nil({1})));
        CHECK(B.at(0, 1) ==
              sym(SymKind::B, 1, 2, nil({1, 2})) + sym(SymKind::BT, 1, 2, -I() * nil({2})));
    }
    // the three remaining permutations repeat these patterns
    CHECK(sigma_classes(3).size() == 3);
    for (const auto& c : sigma_classes(3)) CHECK(c.members == 2);
}

TEST_CASE("Galilei contraction in the Cartesian basis") {
    auto a = [&](int r, int c) { return sym(SymKind::A, r, c); };
    Mat<CPoly> A(3);
    A.at(0, 0) = CPoly(1);
    A.at(0, 1) = sym(SymKind::A, 1, 2, nil({1}));
    A.at(0, 2) = sym(SymKind::A, 1, 3, nil({1, 2}));
    A.at(1, 0) = sym(SymKind::A, 1, 2, -nil({1}));
    A.at(1, 1) = CPoly(1);
    A.at(1, 2) = sym(SymKind::A, 2, 3, nil({2}));
    A.at(2, 0) = sym(SymKind::A, 3, 1, nil({1, 2}));
    A.at(2, 1) = sym(SymKind::A, 2, 3, -nil({2}));
    A.at(2, 2) = CPoly(1);

    // a_31 = -a_13 + a_12 a_23 closes the j-orthogonality relations
    std::map<Sym, CPoly> constraint{
        {Sym{SymKind::A, 3, 1}, -a(1, 3) + a(1, 2) * a(2, 3)}};
    Mat<CPoly> Ac = A.map([&](const CPoly& p) { return p.substitute(constraint); });
    for (const auto& rel : check_j_orthogonality(Ac)) CHECK(rel.poly.is_zero());

    // without the constraint the (1,3) relation does not close
    bool some_nonzero = false;
    for (const auto& rel : check_j_orthogonality(A)) some_nonzero |= !rel.poly.is_zero();
    CHECK(some_nonzero);
}

namespace {

// the three symplectic Galilei realizations, as displayed
void check_symplectic_fixture(const Permutation& sigma, const std::map<Sym, CPoly>& constraint,
                              const Mat<CPoly>& display) {
    JSignature j = JSignature::all_nilpotent(3);
    Mat<CPoly> B = build_B_sigma(3, j, sigma);
    Mat<CPoly> Bc = B.map([&](const CPoly& p) { return p.substitute(constraint); });
    CHECK(Bc == display);
    for (const auto& rel : check_b_orthogonality(Bc, 3)) CHECK(rel.poly.is_zero());
}

}  // namespace

TEST_CASE("Galilei contraction in the symplectic basis") {
    auto b = [](int r, int c) { return CPoly(Sym{SymKind::B, uint8_t(r), uint8_t(c)}); };
    auto bt = [](int r, int c) { return CPoly(Sym{SymKind::BT, uint8_t(r), uint8_t(c)}); };
    const Sym b11{SymKind::B, 1, 1}, b22{SymKind::B, 2, 2}, b31{SymKind::B, 3, 1};
    const Sym b21{SymKind::B, 2, 1}, bt21{SymKind::BT, 2, 1}, bt31{SymKind::BT, 3, 1};

    {  // sigma = (1,2,3), b~31 = -b12 b~12
        std::map<Sym, CPoly> cs{{b11, CPoly(1)}, {b22, CPoly(1)},   {b31, CPoly()},
                                {b21, -b(1, 2)}, {bt21, -bt(1, 2)}, {bt31, -b(1, 2) * bt(1, 2)}};
        Mat<CPoly> disp(3);
        disp.at(0, 0) = CPoly(1) + (I() * nil({1, 2})) * bt(1, 1);
        disp.at(0, 1) = nil({1}) * b(1, 2) - (I() * nil({2})) * bt(1, 2);
        disp.at(0, 2) = (I() * nil({1, 2})) * (b(1, 2) * bt(1, 2));
        disp.at(1, 0) = -nil({1}) * b(1, 2) - (I() * nil({2})) * bt(1, 2);
        disp.at(1, 1) = CPoly(1);
        disp.at(1, 2) = -nil({1}) * b(1, 2) + (I() * nil({2})) * bt(1, 2);
        disp.at(2, 0) = (-I() * nil({1, 2})) * (b(1, 2) * bt(1, 2));
        disp.at(2, 1) = nil({1}) * b(1, 2) + (I() * nil({2})) * bt(1, 2);
        disp.at(2, 2) = CPoly(1) - (I() * nil({1, 2})) * bt(1, 1);
        check_symplectic_fixture(Permutation({1, 2, 3}), cs, disp);
    }
    {  // sigma = (2,1,3), b~21 = -b~12 - b12 b~11
        std::map<Sym, CPoly> cs{{b11, CPoly(1)},
                                {b22, CPoly(1)},
                                {b31, CPoly()},
                                {bt31, CPoly()},
                                {b21, -b(1, 2)},
                                {bt21, -bt(1, 2) - b(1, 2) * bt(1, 1)}};
        Mat<CPoly> disp(3);
        disp.at(0, 0) = CPoly(1) + (I() * nil({2})) * bt(1, 1);
        disp.at(0, 1) = nil({1}) * b(1, 2) - (I() * nil({1, 2})) * bt(1, 2);
        disp.at(0, 2) = CPoly();
        disp.at(1, 0) =
            -nil({1}) * b(1, 2) + (I() * nil({1, 2})) * (-bt(1, 2) - b(1, 2) * bt(1, 1));
        disp.at(1, 1) = CPoly(1);
        disp.at(1, 2) =
            -nil({1}) * b(1, 2) - (I() * nil({1, 2})) * (-bt(1, 2) - b(1, 2) * bt(1, 1));
        disp.at(2, 0) = CPoly();
        disp.at(2, 1) = nil({1}) * b(1, 2) + (I() * nil({1, 2})) * bt(1, 2);
        disp.at(2, 2) = CPoly(1) - (I() * nil({2})) * bt(1, 1);
        check_symplectic_fixture(Permutation({2, 1, 3}), cs, disp);
    }
    {  // sigma = (1,3,2), b21 = -b12 + b~11 b~12
        std::map<Sym, CPoly> cs{{b11, CPoly(1)},  {b22, CPoly(1)},
                                {b31, CPoly()},   {bt31, CPoly()},
                                {bt21, -bt(1, 2)}, {b21, -b(1, 2) + bt(1, 1) * bt(1, 2)}};
        Mat<CPoly> disp(3);
        disp.at(0, 0) = CPoly(1) + (I() * nil({1})) * bt(1, 1);
        disp.at(0, 1) = nil({1, 2}) * b(1, 2) - (I() * nil({2})) * bt(1, 2);
        disp.at(0, 2) = CPoly();
        disp.at(1, 0) =
            nil({1, 2}) * (-b(1, 2) + bt(1, 1) * bt(1, 2)) - (I() * nil({2})) * bt(1, 2);
        disp.at(1, 1) = CPoly(1);
        disp.at(1, 2) =
            nil({1, 2}) * (-b(1, 2) + bt(1, 1) * bt(1, 2)) + (I() * nil({2})) * bt(1, 2);
        disp.at(2, 0) = CPoly();
        disp.at(2, 1) = nil({1, 2}) * b(1, 2) + (I() * nil({2})) * bt(1, 2);
        disp.at(2, 2) = CPoly(1) - (I() * nil({1})) * bt(1, 1);
        check_symplectic_fixture(Permutation({1, 3, 2}), cs, disp);
    }
}

TEST_CASE("contraction dictionary") {
    // b~kk picks up (sigma_k, sigma_k'), plain bkk does not
    for (int n : {3, 4, 5}) {
        JSignature j = JSignature::all_nilpotent(n);
        for (int trial = 0; trial < 5; ++trial) {
            auto sigma = random_perm(n);
            auto dict = contraction_dictionary(n, j, sigma);
            for (int k = 1; k <= n / 2; ++k) {
                CHECK(dict.at(Sym{SymKind::BT, uint8_t(k), uint8_t(k)}) ==
                      mon_product(sigma(k), sigma.at_primed(k), j));
                CHECK(dict.at(Sym{SymKind::B, uint8_t(k), uint8_t(k)}) == NilMonomial::unit());
            }
        }
    }
    // N=3, sigma=(2,1,3), j=(i1,i2): the range sigma_1=2..sigma_1'=3 only holds j_2
    auto dict = contraction_dictionary(3, JSignature::all_nilpotent(3), Permutation({2, 1, 3}));
    CHECK(dict.at(Sym{SymKind::BT, 1, 1}) == NilMonomial::iota(2));
}

TEST_CASE("quadratic form invariant") {
    JSignature j(3, 0b01);  // j1 nilpotent
    std::vector<Scalar> xi{Scalar(1), Scalar(2), Scalar(3)};
    // xi_1^2 + j1^2 xi_2^2 + (j1 j2)^2 xi_3^2 collapses to xi_1^2
    CHECK(quadratic_form_invariant(xi, j) == Scalar(1));
    JSignature junit = JSignature::all_unit(3);
    CHECK(quadratic_form_invariant(xi, junit) == Scalar(14));
}
