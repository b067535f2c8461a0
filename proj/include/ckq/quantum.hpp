#pragma once

#include "ckq/matrix.hpp"
#include "ckq/nilpotent.hpp"
#include "ckq/permutation.hpp"
#include "ckq/poly.hpp"
#include "ckq/templates.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ckq {
namespace quantum {

/// Doubled rho-vector: (2n-1, 2n-3, ..., 1, 0, -1, ...) for N = 2n+1 and
/// (2n-2, ..., 2, 0, 0, -2, ...) for N = 2n.
std::vector<int> rho2_vector(int n_group);

/// The R-matrix, sparse over tensor index pairs ((a,b) -> (a-1)*N + (b-1)).
struct RMatrix {
    int n_group = 0;
    std::map<std::pair<int, int>, Scalar> entries;  // nonzero only

    int dim() const { return n_group * n_group; }
    Scalar at(int row, int col) const {
        auto it = entries.find({row, col});
        return it == entries.end() ? Scalar() : it->second;
    }
    void add(int row, int col, const Scalar& s) {
        if (s.is_zero()) return;
        auto [it, fresh] = entries.emplace(std::pair{row, col}, s);
        if (!fresh) {
            it->second += s;
            if (it->second.is_zero()) entries.erase(it);
        }
    }
};

RMatrix build_R(int n_group, RescalingJ J);

Mat<Scalar> build_C(int n_group, RescalingJ J);
Mat<Scalar> build_C_inv(int n_group, RescalingJ J);

/// T_sigma(j): the entry templates instantiated with the noncommutative
/// generators t, t', tau, tau'.
Mat<NcPoly> build_T_sigma(int n_group, const JSignature& j, const Permutation& sigma);

/// The legal generator set for the given N, in canonical order.
std::vector<Sym> generator_list(int n_group);

/// epsilon: 1 on t_kk (k = 1..n) and t_{n+1,n+1}, 0 elsewhere.  Applied to a
/// matrix it acts on the generators only; the Pimenov coefficients survive,
/// which is why epsilon(T) = I holds for every j.
std::map<Sym, BaseNumber> counit(int n_group);
Mat<Scalar> apply_counit(const Mat<NcPoly>& T, int n_group);

/// S(T)_{ik} = q^{rho_{i'} - rho_{k'}} T_{k'i'}, the entrywise form of
/// C T^t C^{-1}.  The deformation substitution runs over the q-prefactor.
Mat<NcPoly> antipode_matrix(const Mat<NcPoly>& T, int n_group, RescalingJ J);

/// Coproduct matrix, Delta(T)_{ik} = sum_m T_{im} (x) T_{mk}.
Mat<TensorPoly> coproduct_matrix(const Mat<NcPoly>& T);

struct SolveFailure {
    Sym generator;
    NilMonomial divisor;
    NilMonomial offending;
};

template <class P>
struct GenImages {
    std::map<Sym, P> images;          // defined generators only
    std::vector<SolveFailure> failures;
    bool ok() const { return failures.empty(); }
};

/// One linear-combination row of the template-solving plan: generator g is
/// (sum of coef * M_{row,col}) / divisor.
struct GenSolveStep {
    Sym g;
    std::vector<std::tuple<int, int, BaseNumber>> combo;  // 1-based entries
    NilMonomial divisor;
};

std::vector<GenSolveStep> gen_solve_plan(int n_group, const JSignature& j,
                                         const Permutation& sigma);

/// Express a template-shaped matrix in the generators.  Divisions by Pimenov
/// monomials are where contractions die; failures are collected, not thrown.
template <class P>
GenImages<P> solve_generators(const Mat<P>& M, int n_group, const JSignature& j,
                              const Permutation& sigma) {
    GenImages<P> out;
    for (const auto& step : gen_solve_plan(n_group, j, sigma)) {
        P acc;
        for (const auto& [r, c, coef] : step.combo) acc += Scalar(coef) * M.at(r - 1, c - 1);
        P img;
        if (auto bad = acc.try_div_monomial(step.divisor, &img))
            out.failures.push_back({step.g, step.divisor, *bad});
        else
            out.images.emplace(step.g, img);
    }
    return out;
}

struct TaggedRelation {
    std::string tag;  // e.g. "TCTt[2,3]" or "RTT[1,2;2,1]"
    NcPoly poly;
};

/// RTT relations: the N^4 entries of R_v T_1 T_2 - T_2 T_1 R_v.
/// Zero entries are dropped.
std::vector<TaggedRelation> rtt_relations(int n_group, const JSignature& j,
                                          const Permutation& sigma, RescalingJ J);

/// The same relations conjugated into the half-sum/half-difference row basis
/// (the basis in which each T entry carries a single Pimenov factor, so the
/// homogeneous-multiplier test is meaningful).
std::vector<TaggedRelation> transformed_rtt_relations(int n_group, const JSignature& j,
                                                      const Permutation& sigma, RescalingJ J);

/// (v,j)-orthogonality: entries of T C T^t - C and T^t C T - C, all N^2 of
/// each, tagged with side and position (zero entries kept for counting).
std::vector<TaggedRelation> orthogonality_relations(int n_group, const JSignature& j,
                                                    const Permutation& sigma, RescalingJ J);
std::vector<TaggedRelation> orthogonality_relations(const Mat<NcPoly>& T, int n_group,
                                                    RescalingJ J);

/// Appendix closed forms, implemented as an independent code path and used to
/// cross-validate the matrix constructions.
GenImages<NcPoly> appendix_antipode(int n_group, const JSignature& j, const Permutation& sigma,
                                    RescalingJ J);
GenImages<TensorPoly> appendix_coproduct(int n_group, const JSignature& j,
                                         const Permutation& sigma);

/// The closed-form orthogonality relations, and the matching symmetrized
/// combinations of the first-principles T C T^t - C entries.  Both lists use
/// identical tags so they can be compared term-for-term.
std::vector<TaggedRelation> appendix_orthogonality(int n_group, const JSignature& j,
                                                   const Permutation& sigma, RescalingJ J);
std::vector<TaggedRelation> symmetrized_orthogonality(int n_group, const JSignature& j,
                                                      const Permutation& sigma, RescalingJ J,
                                                      bool transpose_side = false);
std::vector<TaggedRelation> symmetrized_orthogonality(const Mat<NcPoly>& T, int n_group,
                                                      RescalingJ J, bool transpose_side = false);

struct SupportPattern {
    std::map<Sym, NilMonomial> by_generator;
    std::vector<std::string> inconsistencies;
    bool consistent() const { return inconsistencies.empty(); }
};

/// Pimenov monomial attached to each generator of a linear polynomial: the
/// monomial of the v^0 part (or of the correction when no v^0 part exists).
/// Mixing distinct monomials within either part is reported, not resolved.
SupportPattern support_pattern(const NcPoly& p);

/// Same pattern keyed by generator kind; entries of T and of S(T) carry the
/// same kinds with permuted indices, so this is the comparable form.
std::optional<std::map<SymKind, NilMonomial>> pattern_by_kind(const NcPoly& p);

}  // namespace quantum
}  // namespace ckq
