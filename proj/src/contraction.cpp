#include "ckq/contraction.hpp"

#include <atomic>
#include <bit>
#include <mutex>
#include <thread>

namespace ckq {
namespace contraction {

using quantum::TaggedRelation;

RescalingJ compute_J(int N, const Permutation& sigma, const JSignature& j) {
    const int n = N / 2;
    const int kmax = (N % 2) ? n : n - 1;
    if (kmax < 1) return RescalingJ::unit();
    uint32_t inter = ~0u;
    for (int k = 1; k <= kmax; ++k)
        inter &= mon_product(sigma(k), sigma.at_primed(k), j).mask();
    return RescalingJ::of(NilMonomial::from_mask(inter == ~0u ? 0 : inter));
}

std::pair<int, int> rescaling_range(int N, const Permutation& sigma) {
    const int n = N / 2;
    const int kmax = (N % 2) ? n : n - 1;
    int lo = 1, hi = N;  // intersection of [min, max-1] over the constrained pairs
    for (int k = 1; k <= kmax; ++k) {
        int a = sigma(k), b = sigma.at_primed(k);
        lo = std::max(lo, std::min(a, b));
        hi = std::min(hi, std::max(a, b) - 1);
    }
    if (kmax < 1) return {1, 0};
    return {lo, hi};
}

// --- baseline ---------------------------------------------------------------

namespace {

std::map<std::string, std::set<Word>> word_table(const std::vector<TaggedRelation>& rels,
                                                 int* nonzero) {
    std::map<std::string, std::set<Word>> out;
    int count = 0;
    for (const auto& r : rels) {
        if (r.poly.is_zero()) continue;
        ++count;
        out[r.tag] = r.poly.word_set();
    }
    if (nonzero) *nonzero = count;
    return out;
}

std::mutex baseline_mutex;
std::map<int, Baseline> baseline_cache;

}  // namespace

const Baseline& baseline(int N, bool with_rtt) {
    std::lock_guard<std::mutex> lock(baseline_mutex);
    auto& b = baseline_cache[N];
    if (b.ortho_words.empty()) {
        JSignature j1 = JSignature::all_unit(N);
        Permutation id = Permutation::identity(N);
        auto rels = quantum::symmetrized_orthogonality(N, j1, id, RescalingJ::unit(), false);
        auto rels_t = quantum::symmetrized_orthogonality(N, j1, id, RescalingJ::unit(), true);
        rels.insert(rels.end(), rels_t.begin(), rels_t.end());
        b.ortho_words = word_table(rels, &b.ortho_count);
    }
    if (with_rtt && !b.rtt_filled) {
        JSignature j1 = JSignature::all_unit(N);
        Permutation id = Permutation::identity(N);
        auto rels = quantum::transformed_rtt_relations(N, j1, id, RescalingJ::unit());
        b.rtt_words = word_table(rels, &b.rtt_count);
        b.rtt_filled = true;
    }
    return b;
}

// --- admissibility ----------------------------------------------------------

namespace {

// Homogeneous-multiplier test of a relation list against the j = 1 table:
// every relation must have at most one Pimenov component, that component's
// words must appear in the baseline relation at the same tag, and the number
// of surviving relations must be unchanged.
struct HomogeneityReport {
    bool homogeneous = true;
    bool words_match = true;
    int count = 0;
    std::vector<Failure> failures;
};

HomogeneityReport check_homogeneity(const std::vector<TaggedRelation>& rels,
                                    const std::map<std::string, std::set<Word>>& table) {
    HomogeneityReport rep;
    for (const auto& r : rels) {
        if (r.poly.is_zero()) continue;
        auto parts = r.poly.decompose_by_monomial();
        if (parts.size() > 1) {
            rep.homogeneous = false;
            rep.failures.push_back({r.tag + " splits", parts.begin()->first});
            rep.count += int(parts.size());
            continue;
        }
        ++rep.count;
        auto it = table.find(r.tag);
        if (it == table.end()) {
            rep.words_match = false;
            rep.failures.push_back({r.tag + " has no j=1 counterpart", parts.begin()->first});
            continue;
        }
        for (const auto& w : parts.begin()->second.word_set())
            if (!it->second.count(w)) {
                rep.words_match = false;
                rep.failures.push_back({r.tag + " word outside j=1 shape", parts.begin()->first});
                break;
            }
    }
    return rep;
}

}  // namespace

Verdict check_admissible(const ContractionSpec& spec, const CheckOptions& opt) {
    const int N = spec.n_group;
    Verdict v;
    auto T = quantum::build_T_sigma(N, spec.j, spec.sigma);

    // (a) antipode: S must be expressible on every generator, i.e. all the
    // Pimenov divisions of the template solve must be defined.
    auto S = quantum::antipode_matrix(T, N, spec.J);
    auto sol = quantum::solve_generators(S, N, spec.j, spec.sigma);
    v.antipode_ok = sol.ok();
    for (const auto& f : sol.failures)
        v.failures.push_back({"S(" + f.generator.str() + ")/" + f.divisor.str(), f.offending});

    // Eq.-(15) style pattern rule: entry and antipode image must carry the
    // same multiset of Pimenov factors.
    if (v.antipode_ok) {
        for (int i = 0; i < N && v.antipode_ok; ++i)
            for (int k = 0; k < N && v.antipode_ok; ++k) {
                auto pat_t = quantum::support_pattern(T.at(i, k));
                auto pat_s = quantum::support_pattern(S.at(i, k));
                if (!pat_t.consistent() || !pat_s.consistent()) {
                    v.antipode_ok = false;
                    v.failures.push_back({"S-pattern inconsistent at entry (" +
                                              std::to_string(i + 1) + "," + std::to_string(k + 1) +
                                              ")",
                                          NilMonomial::unit()});
                    break;
                }
                std::multiset<NilMonomial> mt, ms;
                for (const auto& [g, m] : pat_t.by_generator) mt.insert(m);
                for (const auto& [g, m] : pat_s.by_generator) ms.insert(m);
                if (mt != ms) {
                    v.antipode_ok = false;
                    v.failures.push_back({"S-pattern mismatch at entry (" + std::to_string(i + 1) +
                                              "," + std::to_string(k + 1) + ")",
                                          NilMonomial::unit()});
                }
            }
    }

    if (!v.antipode_ok && opt.short_circuit) return v;

    // (b) (v,j)-orthogonality in the symmetrized relation basis.
    const Baseline& base = baseline(N, opt.check_rtt);
    auto rels = quantum::symmetrized_orthogonality(T, N, spec.J, false);
    auto rels_t = quantum::symmetrized_orthogonality(T, N, spec.J, true);
    rels.insert(rels.end(), rels_t.begin(), rels_t.end());
    auto rep = check_homogeneity(rels, base.ortho_words);
    v.equation_count = rep.count;
    v.baseline_count = base.ortho_count;
    v.orthogonality_ok = rep.homogeneous && rep.words_match && rep.count == base.ortho_count;
    if (rep.count != base.ortho_count)
        v.failures.push_back({"orthogonality count " + std::to_string(rep.count) + " != " +
                                  std::to_string(base.ortho_count),
                              NilMonomial::unit()});
    for (auto& f : rep.failures) v.failures.push_back(std::move(f));

    if (!v.orthogonality_ok && opt.short_circuit) return v;

    // (c) coproduct divisions always resolve; a failure here is an engine
    // red flag rather than an expected outcome.
    auto D = quantum::coproduct_matrix(T);
    auto dsol = quantum::solve_generators(D, N, spec.j, spec.sigma);
    v.coproduct_ok = dsol.ok();
    for (const auto& f : dsol.failures)
        v.failures.push_back(
            {"Delta(" + f.generator.str() + ")/" + f.divisor.str(), f.offending});

    if (opt.check_rtt) {
        // relations may vanish outright under nilpotency (the algebra becomes
        // more commutative); ill-definedness is a relation that splits or
        // grows words the generic group does not have
        auto rtt = quantum::transformed_rtt_relations(N, spec.j, spec.sigma, spec.J);
        auto rtt_rep = check_homogeneity(rtt, base.rtt_words);
        v.rtt_defined = rtt_rep.homogeneous && rtt_rep.words_match;
    }

    v.allowed = v.antipode_ok && v.orthogonality_ok && v.coproduct_ok;
    return v;
}

// --- enumeration ------------------------------------------------------------

std::vector<EnumRow> enumerate_allowed(int N, const EnumOptions& opt) {
    auto classes = sigma_classes(N);
    baseline(N);  // fill the cache before the parallel section

    const uint32_t mask_limit = 1u << (N - 1);
    struct Task {
        const SigmaClass* cls;
        uint32_t mask;
    };
    std::vector<Task> tasks;
    for (const auto& c : classes)
        for (uint32_t mask = 0; mask < mask_limit; ++mask) {
            if (opt.max_nilpotents >= 0 && std::popcount(mask) > opt.max_nilpotents) continue;
            tasks.push_back({&c, mask});
        }

    std::vector<std::vector<EnumRow>> found(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t idx = next.fetch_add(1);
            if (idx >= tasks.size()) return;
            const auto& [cls, mask] = tasks[idx];
            JSignature j(N, mask);
            const Permutation& sigma = cls->representative;

            std::vector<RescalingJ> regimes{RescalingJ::unit()};
            if (!opt.only_fixed_J) {
                RescalingJ jc = compute_J(N, sigma, j);
                if (!jc.is_unit()) {
                    regimes.push_back(jc);
                    if (opt.test_submonomials) {
                        uint32_t full = jc.monomial.mask();
                        for (uint32_t sub = (full - 1) & full; sub; sub = (sub - 1) & full)
                            regimes.push_back(RescalingJ::of(NilMonomial::from_mask(sub)));
                    }
                }
            }
            for (const auto& J : regimes) {
                ContractionSpec spec{N, j, sigma, J};
                Verdict verdict = check_admissible(spec, {false, true});
                if (verdict.allowed)
                    found[idx].push_back({mask, cls->print, sigma, J, std::move(verdict)});
            }
        }
    };

    int nthreads = opt.threads > 0 ? opt.threads : int(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;
    nthreads = std::min<int>(nthreads, int(tasks.size()));
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::vector<EnumRow> out;
    for (auto& rows : found)
        for (auto& r : rows) out.push_back(std::move(r));
    return out;
}

std::vector<Family> summarize_families(const std::vector<EnumRow>& rows) {
    // regime -> mask -> classes
    std::map<std::pair<bool, uint32_t>, std::vector<const EnumRow*>> by_mask;
    for (const auto& r : rows) {
        if (r.mask == 0) continue;
        by_mask[{!r.J.is_unit(), r.mask}].push_back(&r);
    }
    std::vector<Family> out;
    for (const auto& [key, members] : by_mask) {
        const auto& [transformed, mask] = key;
        bool maximal = true;
        for (const auto& [key2, members2] : by_mask)
            if (key2.first == transformed && key2.second != mask &&
                (key2.second & mask) == mask) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        Family f;
        f.mask = mask;
        f.transformed = transformed;
        f.J = members.front()->J;
        for (const auto* r : members) f.classes.push_back(r->cls);
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<uint32_t> coincidence_masks(const std::vector<EnumRow>& rows) {
    std::set<uint32_t> fixed, transformed;
    for (const auto& r : rows) {
        if (r.mask == 0) continue;
        (r.J.is_unit() ? fixed : transformed).insert(r.mask);
    }
    std::vector<uint32_t> out;
    for (uint32_t m : fixed)
        if (transformed.count(m)) out.push_back(m);
    return out;
}

// --- theorem predictions ----------------------------------------------------

namespace {

bool pair_range_avoids(const std::pair<int, int>& pr, uint32_t mask) {
    for (int l = pr.first; l < pr.second; ++l)
        if ((mask >> (l - 1)) & 1u) return false;
    return true;
}

uint32_t range_mask(int lo, int hi) {  // indices lo..hi inclusive
    uint32_t m = 0;
    for (int l = lo; l <= hi; ++l) m |= 1u << (l - 1);
    return m;
}

}  // namespace

std::vector<uint32_t> fixed_J_mask_patterns(int N) {
    const int n = N / 2;
    std::vector<uint32_t> out;
    if (N % 2) {
        // j_{2s} for s <= m together with j_{2r+1} for r = m..n-1
        for (int m = 0; m <= n; ++m) {
            uint32_t mask = 0;
            for (int s = 1; s <= m; ++s) mask |= 1u << (2 * s - 1);
            for (int r = m; r <= n - 1; ++r) mask |= 1u << (2 * r);
            out.push_back(mask);
        }
    } else {
        for (int m = 1; m <= n; ++m)
            for (int u = m; u <= n; ++u) {
                uint32_t mask = 0;
                for (int s = 1; s <= m - 1; ++s) mask |= 1u << (2 * s - 1);
                for (int p = m; p <= u; ++p) mask |= 1u << (2 * p - 2);
                for (int r = u; r <= n - 1; ++r) mask |= 1u << (2 * r - 1);
                out.push_back(mask);
            }
    }
    return out;
}

std::vector<PredictionRow> theorem_predictions(int N, int theorem_id) {
    const int n = N / 2;
    const bool odd = N % 2;
    if ((theorem_id == 1 || theorem_id == 3) != odd)
        throw std::invalid_argument("theorem_predictions: parity mismatch");
    auto classes = sigma_classes(N);
    std::set<PredictionRow> rows;

    if (theorem_id == 1 || theorem_id == 2) {
        // fixed deformation parameter: any sigma whose constrained pair
        // ranges avoid the nilpotent set (Remark 1), sub-cases by Remark 2
        const int kmax = odd ? n : n - 1;
        for (const auto& c : classes) {
            for (uint32_t mask = 1; mask < (1u << (N - 1)); ++mask) {
                bool ok = true;
                for (int k = 0; k < kmax && ok; ++k)
                    ok = pair_range_avoids(c.print.pairs[k], mask);
                if (ok) rows.insert({mask, c.print, RescalingJ::unit()});
            }
        }
    } else {
        // Each transformed-parameter case is keyed by the nilpotent content
        // of the forced rescaling: a candidate (required set + option subset)
        // belongs to the case whose J it actually produces under Eq-19.
        struct Case {
            uint32_t required;
            std::vector<int> options;
        };
        auto bit = [](int l) { return 1u << (l - 1); };
        for (const auto& c : classes) {
            auto [lo, hi] = rescaling_range(N, c.representative);
            if (lo > hi) continue;  // pairs share no common cut: J = 1 only
            uint32_t ri = range_mask(lo, hi);

            std::vector<Case> cases;
            if (theorem_id == 3) {
                const int mid = c.print.middle;
                // 1. J = j_{n+1}
                if (mid > 1 && mid < n + 1) cases.push_back({bit(n + 1), {}});
                if (mid == 1) cases.push_back({bit(n + 1), {1}});
                // 2. J = j_n
                if (mid > n + 1 && mid < 2 * n + 1) cases.push_back({bit(n), {}});
                if (mid == 2 * n + 1) cases.push_back({bit(n), {2 * n}});
                // 3. J = j_n j_{n+1}, both parameters independently nilpotent
                if (mid == n + 1) {
                    uint32_t three = bit(n) | bit(n + 1);
                    for (uint32_t sub = three; sub; sub = (sub - 1) & three)
                        cases.push_back({sub, {}});
                }
            } else {
                const auto [x, y] = c.print.pairs[n - 1];  // the middle pair, min first
                // 1. J = j_n
                {
                    std::vector<int> opts;
                    if (x == 1) opts.push_back(1);
                    if (y == 2 * n) opts.push_back(2 * n - 1);
                    cases.push_back({bit(n), opts});
                }
                // 2. J = j_{n-1}
                if (y < 2 * n) cases.push_back({bit(n - 1), {}});
                if (x < 2 * n - 1 && y == 2 * n) cases.push_back({bit(n - 1), {2 * n - 1}});
                if (x == 2 * n - 1 && y == 2 * n)
                    cases.push_back({bit(n - 1), {2 * n - 2, 2 * n - 1}});
                // 3. J = j_{n+1}
                if (x > 1) cases.push_back({bit(n + 1), {}});
                if (x == 1 && y > 2) cases.push_back({bit(n + 1), {1}});
                if (x == 1 && y == 2) cases.push_back({bit(n + 1), {1, 2}});
                // 4. J = j_{n-1} j_n
                {
                    std::vector<int> opts;
                    if (y == 2 * n) opts.push_back(2 * n - 1);
                    cases.push_back({bit(n - 1) | bit(n), opts});
                }
                // 5. J = j_n j_{n+1}
                {
                    std::vector<int> opts;
                    if (x == 1) opts.push_back(1);
                    cases.push_back({bit(n) | bit(n + 1), opts});
                }
                // 6. J = j_{n-1} j_n j_{n+1}, each parameter independently
                if (x == n && y == n + 1) {
                    uint32_t three = bit(n - 1) | bit(n) | bit(n + 1);
                    for (uint32_t sub = three; sub; sub = (sub - 1) & three)
                        cases.push_back({sub, {}});
                }
            }
            for (const auto& cs : cases) {
                const size_t nopts = cs.options.size();
                for (uint32_t pick = 0; pick < (1u << nopts); ++pick) {
                    uint32_t mask = cs.required;
                    for (size_t o = 0; o < nopts; ++o)
                        if ((pick >> o) & 1u) mask |= bit(cs.options[o]);
                    // the candidate must realize exactly the case's rescaling
                    if ((mask & ri) != cs.required) continue;
                    rows.insert({mask, c.print, RescalingJ::of(NilMonomial::from_mask(cs.required))});
                }
            }
        }
    }
    return {rows.begin(), rows.end()};
}

std::vector<std::string> primitive_element_labels(const ContractionSpec& spec) {
    std::vector<std::string> out;
    for (int k = 1; k <= spec.n_group / 2; ++k)
        out.push_back(
            mon_product(spec.sigma(k), spec.sigma.at_primed(k), spec.j).is_unit() ? "SO(2)"
                                                                                  : "G(1,1)");
    return out;
}

// --- SO_q(5) kinematic table --------------------------------------------------

std::vector<CatalogRow> kinematic_catalog() {
    auto perm = [](std::vector<int> v) { return Permutation(std::move(v)); };
    auto iota = [](int k) { return RescalingJ::of(NilMonomial::iota(k)); };
    std::vector<CatalogRow> rows;
    rows.push_back({"E_q(4)", 1u << 0, perm({2, 4, 1, 5, 3}), RescalingJ::unit(), true,
                    "quantum Euclidean group, j_1 nilpotent"});
    rows.push_back({"N_q(4)", 1u << 1, perm({1, 4, 3, 5, 2}), RescalingJ::unit(), true,
                    "quantum Newton group, j_2 nilpotent"});
    rows.push_back({"C_q(4)", 1u << 3, perm({1, 3, 5, 4, 2}), RescalingJ::unit(), true,
                    "quantum Carroll group, j_4 nilpotent"});
    rows.push_back({"N_v(4)", 1u << 1, perm({1, 2, 5, 3, 4}), iota(2), true,
                    "second Newton deformation, transformed parameter z = i2*v"});
    rows.push_back({"G(4)", (1u << 0) | (1u << 1), std::nullopt, RescalingJ::unit(), false,
                    "no quantum deformation of the complex Galilei group"});
    rows.push_back({"C0(4)", (1u << 0) | (1u << 3), std::nullopt, RescalingJ::unit(), false,
                    "no quantum deformation of the flat Carroll group"});
    return rows;
}

std::vector<CatalogVerification> verify_catalog() {
    std::vector<CatalogVerification> out;
    for (const auto& row : kinematic_catalog()) {
        CatalogVerification cv{row, false, {}};
        if (row.sigma) {
            ContractionSpec spec{5, JSignature(5, row.mask), *row.sigma, row.J};
            Verdict v = check_admissible(spec);
            cv.pass = v.allowed == row.expect_allowed;
            cv.labels = primitive_element_labels(spec);
        } else {
            // negative rows: no sigma-class and no rescaling regime admits the pattern
            bool any_allowed = false;
            for (const auto& c : sigma_classes(5)) {
                JSignature j(5, row.mask);
                for (RescalingJ J :
                     {RescalingJ::unit(), compute_J(5, c.representative, j)}) {
                    if (any_allowed) break;
                    ContractionSpec spec{5, j, c.representative, J};
                    if (check_admissible(spec, {false, true}).allowed) any_allowed = true;
                }
                if (any_allowed) break;
            }
            cv.pass = !any_allowed;
        }
        out.push_back(std::move(cv));
    }
    return out;
}

// --- degenerate reduction -----------------------------------------------------

namespace {

// Fraction-free row echelon over words; Scalar coefficients here are plain
// Laurent polynomials (the relations are split by monomial first), which form
// an integral domain, so cross-multiplication elimination is exact.
struct LinearSystem {
    std::vector<std::map<Word, Scalar>> rows;

    void add(const NcPoly& p) {
        if (p.is_zero()) return;
        std::map<Word, Scalar> row;
        for (const auto& [w, c] : p.terms()) row[w] = c;
        rows.push_back(std::move(row));
    }

    void eliminate() {
        std::set<Word> cols;
        for (const auto& r : rows)
            for (const auto& [w, c] : r) cols.insert(w);
        size_t pivot_row = 0;
        for (const auto& col : cols) {
            size_t chosen = rows.size();
            for (size_t r = pivot_row; r < rows.size(); ++r)
                if (rows[r].count(col) &&
                    (chosen == rows.size() || rows[r].size() < rows[chosen].size()))
                    chosen = r;
            if (chosen == rows.size()) continue;
            std::swap(rows[pivot_row], rows[chosen]);
            const Scalar pc = rows[pivot_row].at(col);
            for (size_t r = 0; r < rows.size(); ++r) {
                if (r == pivot_row || !rows[r].count(col)) continue;
                const Scalar rc = rows[r].at(col);
                std::map<Word, Scalar> next;
                for (const auto& [w, c] : rows[r]) {
                    Scalar nc = c * pc;
                    auto it = rows[pivot_row].find(w);
                    if (it != rows[pivot_row].end()) nc -= rc * it->second;
                    if (!nc.is_zero()) next[w] = nc;
                }
                for (const auto& [w, c] : rows[pivot_row]) {
                    if (rows[r].count(w)) continue;
                    Scalar nc = -(rc * c);
                    if (!nc.is_zero()) next[w] = nc;
                }
                rows[r] = std::move(next);
            }
            ++pivot_row;
            if (pivot_row == rows.size()) break;
        }
        std::erase_if(rows, [](const auto& r) { return r.empty(); });
    }
};

}  // namespace

DegenerateResult degenerate_reduction(int N, bool use_rtt) {
    DegenerateResult res;
    JSignature j = JSignature::all_nilpotent(N);
    Permutation sigma = Permutation::identity(N);
    RescalingJ J = RescalingJ::unit();

    std::vector<NcPoly> components;
    auto rels = quantum::orthogonality_relations(N, j, sigma, J);
    if (use_rtt) {
        auto rtt = quantum::rtt_relations(N, j, sigma, J);
        rels.insert(rels.end(), rtt.begin(), rtt.end());
    }
    for (const auto& r : rels)
        for (const auto& [m, part] : r.poly.decompose_by_monomial()) components.push_back(part);

    auto eps = quantum::counit(N);
    std::map<Sym, NcPoly> subst;

    for (;;) {
        ++res.passes;
        LinearSystem sys;
        for (const auto& p : components) sys.add(p.substitute(subst));
        sys.eliminate();

        bool progress = false;
        auto assign = [&](Sym g, int value) {
            if (res.constants.count(g)) return;
            res.constants[g] = value;
            subst[g] = NcPoly(value);
            progress = true;
        };
        for (const auto& row : sys.rows) {
            if (row.size() == 1) {
                const auto& [w, c] = *row.begin();
                if (w.size() == 0) {
                    res.contradiction = true;
                } else if (w.size() == 1) {
                    assign(w[0], 0);
                } else if (w.size() == 2 && w[0] == w[1]) {
                    assign(w[0], 0);  // reduced quotient: g^2 = 0 kills g
                }
            } else if (row.size() == 2) {
                auto it = row.begin();
                const auto& [w1, c1] = *it;
                const auto& [w2, c2] = *std::next(it);
                // c1*1 + c2*g^2 = 0 with c1 = -c2 and counit 1 picks g = 1
                if (w1.size() == 0 && w2.size() == 2 && w2[0] == w2[1] && c1 == -c2 &&
                    eps.count(w2[0]) && eps.at(w2[0]) == BaseNumber(1))
                    assign(w2[0], 1);
            }
        }
        if (!progress) break;
    }

    for (Sym g : quantum::generator_list(N))
        if (!res.constants.count(g)) res.survivors.push_back(g);
    return res;
}

}  // namespace contraction
}  // namespace ckq
