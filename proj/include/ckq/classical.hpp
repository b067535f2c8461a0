#pragma once

#include "ckq/matrix.hpp"
#include "ckq/nilpotent.hpp"
#include "ckq/permutation.hpp"
#include "ckq/poly.hpp"
#include "ckq/templates.hpp"

#include <map>
#include <string>
#include <vector>

namespace ckq {
namespace classical {

/// The anti-diagonal metric C_0, (C_0)_{ik} = delta_{i,k'}.
Mat<BaseNumber> c0_matrix(int n_group);

/// The explicit unitary solution of D^t C_0 D = I for the parity of N.
Mat<BaseNumber> d_matrix(int n_group);

/// D_sigma = D V_sigma with (V_sigma)_{ik} = delta_{sigma_i, k}.
Mat<BaseNumber> build_D_sigma(int n_group, const Permutation& sigma);

Mat<BaseNumber> invert_D_sigma(int n_group, const Permutation& sigma);

/// Cartesian matrix A(j): entry (k,p) carries the factor (k,p) on a_{kp}.
Mat<CPoly> cartesian_A(int n_group, const JSignature& j);

/// Symplectic-basis matrix from the entry templates in the b-symbols.
Mat<CPoly> build_B_sigma(int n_group, const JSignature& j, const Permutation& sigma);

/// B_sigma computed the other way, as D_sigma A(j) D_sigma^{-1}; entries are
/// polynomials in the a-symbols.
Mat<CPoly> conjugated_B_sigma(int n_group, const JSignature& j, const Permutation& sigma);

/// The b <-> a dictionary printed below the entry formulas.
std::map<Sym, CPoly> b_dictionary(int n_group, const Permutation& sigma);

/// Pimenov factor connecting each b-symbol to its j = 1 counterpart.
std::map<Sym, NilMonomial> contraction_dictionary(int n_group, const JSignature& j,
                                                  const Permutation& sigma);

struct TaggedRelation {
    int row, col;
    std::string side;
    CPoly poly;
};

/// Entries of A A^t - I and A^t A - I (zero rows are kept so callers can see
/// which positions vanished).
std::vector<TaggedRelation> check_j_orthogonality(const Mat<CPoly>& A);

/// Entries of B C_0 B^t - C_0 and B^t C_0 B - C_0.
std::vector<TaggedRelation> check_b_orthogonality(const Mat<CPoly>& B, int n_group);

/// Quadratic-form value xi^t(j) xi(j) of a coordinate vector, for callers
/// that want to see the invariant the group preserves.
Scalar quadratic_form_invariant(const std::vector<Scalar>& xi, const JSignature& j);

std::string render_matrix(const Mat<CPoly>& m);

}  // namespace classical
}  // namespace ckq
