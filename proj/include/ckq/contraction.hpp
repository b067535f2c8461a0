#pragma once

#include "ckq/permutation.hpp"
#include "ckq/quantum.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ckq {
namespace contraction {

struct ContractionSpec {
    int n_group;
    JSignature j;
    Permutation sigma;
    RescalingJ J;

    std::string str() const {
        return "N=" + std::to_string(n_group) + " j=(" + j.str() + ") σ=" + sigma.str() +
               " J=" + J.str();
    }
};

struct Failure {
    std::string location;
    NilMonomial monomial;
};

struct Verdict {
    bool allowed = false;
    bool antipode_ok = false;
    bool orthogonality_ok = false;
    bool coproduct_ok = false;
    std::optional<bool> rtt_defined;  // informational, computed on request
    int equation_count = 0;
    int baseline_count = 0;
    std::vector<Failure> failures;
};

/// Eq.-style forced rescaling: intersection of the index sets of the
/// (sigma_k, sigma_k') monomials over k = 1..n (odd N) or 1..n-1 (even N).
/// Unit when the intersection is empty or every factor is unit.
RescalingJ compute_J(int n_group, const Permutation& sigma, const JSignature& j);

/// Positions (index ranges, independent of j) whose common intersection
/// determines the possible rescaling; empty when some pair fails to straddle
/// the common cut.
std::pair<int, int> rescaling_range(int n_group, const Permutation& sigma);  // [lo, hi], lo>hi = empty

/// Nonzero-relation counts and per-position word sets of the j = 1 group,
/// against which contracted relation sets are compared.  Independent of
/// sigma, cached per N.
struct Baseline {
    int ortho_count = 0;
    std::map<std::string, std::set<Word>> ortho_words;
    int rtt_count = 0;
    std::map<std::string, std::set<Word>> rtt_words;  // filled on demand
    bool rtt_filled = false;
};
const Baseline& baseline(int n_group, bool with_rtt = false);

struct CheckOptions {
    bool check_rtt = false;
    bool short_circuit = false;  // skip orthogonality/coproduct once antipode failed
};

Verdict check_admissible(const ContractionSpec& spec, const CheckOptions& opt = {});

struct EnumRow {
    uint32_t mask;  // nilpotent j indices
    SigmaFingerprint cls;
    Permutation representative;
    RescalingJ J;
    Verdict verdict;
};

struct EnumOptions {
    int max_nilpotents = -1;       // cap on popcount(mask), -1 = none
    bool only_fixed_J = false;     // restrict to the J = 1 regime
    bool test_submonomials = false;
    int threads = 0;               // 0 = hardware concurrency
};

/// Brute-force scan over deduped sigma-classes, all j-assignments and both
/// rescaling regimes.  Returns the allowed rows in canonical order.
std::vector<EnumRow> enumerate_allowed(int n_group, const EnumOptions& opt = {});

/// Maximal contraction families: allowed nontrivial (mask, class, J) rows
/// grouped under inclusion-maximal masks per rescaling regime.
struct Family {
    uint32_t mask;
    bool transformed;             // J != 1 regime
    RescalingJ J;                 // J at the maximal mask (unit for fixed regime)
    std::vector<SigmaFingerprint> classes;  // classes realizing the maximal mask
};
std::vector<Family> summarize_families(const std::vector<EnumRow>& rows);

/// Masks allowed in both regimes (the paper's coincidence cases).
std::vector<uint32_t> coincidence_masks(const std::vector<EnumRow>& rows);

struct PredictionRow {
    uint32_t mask;
    SigmaFingerprint cls;
    RescalingJ J;

    friend bool operator<(const PredictionRow& a, const PredictionRow& b) {
        if (a.mask != b.mask) return a.mask < b.mask;
        if (!(a.cls == b.cls)) return a.cls < b.cls;
        return a.J < b.J;
    }
    friend bool operator==(const PredictionRow& a, const PredictionRow& b) = default;
};

/// Families predicted directly from the theorem statements (1/2: fixed
/// deformation parameter; 3/4: transformed).  Nontrivial masks only.
std::vector<PredictionRow> theorem_predictions(int n_group, int theorem_id);

/// The maximal nilpotent index patterns of the fixed-parameter theorems
/// (even-index/odd-index runs), before the sub-case expansion.
std::vector<uint32_t> fixed_J_mask_patterns(int n_group);

/// SO(2) / G(1,1) label per diagonal 2x2 block.
std::vector<std::string> primitive_element_labels(const ContractionSpec& spec);

struct CatalogRow {
    std::string name;
    uint32_t mask;
    std::optional<Permutation> sigma;  // empty for the negative rows
    RescalingJ J;
    bool expect_allowed;
    std::string note;
};

/// The fixed SO_q(5) kinematic table; every row is re-verified live by
/// verify_catalog.
std::vector<CatalogRow> kinematic_catalog();

struct CatalogVerification {
    CatalogRow row;
    bool pass;
    std::vector<std::string> labels;  // positives only
};
std::vector<CatalogVerification> verify_catalog();

/// Reduction of the all-nilpotent, identity-sigma, J = 1 case: iterates
/// substitution and word-linear elimination over the split orthogonality
/// relations until the forced constants stabilize.
struct DegenerateResult {
    std::map<Sym, int> constants;  // generator -> 0 or 1
    std::vector<Sym> survivors;
    bool contradiction = false;
    int passes = 0;
};
DegenerateResult degenerate_reduction(int n_group, bool use_rtt = false);

}  // namespace contraction
}  // namespace ckq
