#pragma once

#include "ckq/base_number.hpp"
#include "ckq/nilpotent.hpp"
#include "ckq/permutation.hpp"

#include <vector>

namespace ckq {

/// One summand of a symplectic-basis matrix entry: a b-family symbol with a
/// unit coefficient in {1, -1, i, -i} and a Pimenov factor given by a pair of
/// matrix positions (the factor is (sigma_a, sigma_b); 0,0 means no factor).
/// The same templates produce the classical B_sigma(j) in the commutative
/// symbols and the quantum T_sigma(j) in the noncommutative generators.
struct TermTemplate {
    int base_kind;  // 0 = b, 1 = b', 2 = b~, 3 = b~'
    int srow, scol;
    BaseNumber coef;
    int fa = 0, fb = 0;  // factor positions in 1..N, 0 = unit
};

using EntryTemplate = std::vector<TermTemplate>;

/// Entry templates for the full N x N matrix, row-major, indices 0-based.
const std::vector<EntryTemplate>& entry_templates(int n_group);

inline NilMonomial template_factor(const TermTemplate& t, const JSignature& j,
                                   const Permutation& s) {
    if (t.fa == 0) return NilMonomial::unit();
    return mon_product(s(t.fa), s(t.fb), j);
}

}  // namespace ckq
