#include "ckq/quantum.hpp"

#include <cassert>

namespace ckq {
namespace quantum {

namespace {

Sym sym(SymKind k, int r, int c) { return Sym{k, uint8_t(r), uint8_t(c)}; }
NcPoly gen(SymKind k, int r, int c) { return NcPoly(sym(k, r, c)); }

SymKind quantum_kind(int base) {
    switch (base) {
        case 0: return SymKind::T;
        case 1: return SymKind::TP;
        case 2: return SymKind::TAU;
        default: return SymKind::TAUP;
    }
}

NcPoly com(const NcPoly& a, const NcPoly& b) { return a * b - b * a; }
NcPoly acom(const NcPoly& a, const NcPoly& b) { return a * b + b * a; }

}  // namespace

std::vector<int> rho2_vector(int N) {
    const int n = N / 2;
    std::vector<int> rho2(N, 0);
    for (int k = 1; k <= n; ++k) {
        rho2[k - 1] = (N % 2) ? 2 * (n - k) + 1 : 2 * (n - k);
        rho2[N - k] = -rho2[k - 1];
    }
    return rho2;
}

RMatrix build_R(int N, RescalingJ J) {
    RMatrix R;
    R.n_group = N;
    auto rho2 = rho2_vector(N);
    auto idx = [N](int a, int b) { return (a - 1) * N + (b - 1); };
    auto pr = [N](int k) { return N + 1 - k; };
    auto qh = [&](int e2) { return Scalar::q_pow_half(e2).substitute_contracted_q(J); };

    const Scalar q = qh(2), qinv = qh(-2);
    const Scalar qdiff = q - qinv;

    for (int k = 1; k <= N; ++k) {
        if (k != pr(k)) R.add(idx(k, k), idx(k, k), q);
        for (int r = 1; r <= N; ++r)
            if (k != r && k != pr(r)) R.add(idx(k, r), idx(k, r), Scalar(1));
        if (k != pr(k)) R.add(idx(pr(k), k), idx(pr(k), k), qinv);
    }
    for (int k = 1; k <= N; ++k)
        for (int r = 1; r < k; ++r) {
            R.add(idx(k, r), idx(r, k), qdiff);
            Scalar cross = qdiff * qh(rho2[k - 1] - rho2[r - 1]);
            R.add(idx(k, pr(k)), idx(r, pr(r)), -cross);
        }
    if (N % 2) {
        const int p = (N + 1) / 2;
        R.add(idx(p, p), idx(p, p), Scalar(1));
    }
    return R;
}

Mat<Scalar> build_C(int N, RescalingJ J) {
    auto rho2 = rho2_vector(N);
    Mat<Scalar> c(N);
    for (int i = 1; i <= N; ++i) {
        const int ip = N + 1 - i;
        c.at(i - 1, ip - 1) = Scalar::q_pow_half(rho2[ip - 1]).substitute_contracted_q(J);
    }
    return c;
}

Mat<Scalar> build_C_inv(int N, RescalingJ J) {
    auto rho2 = rho2_vector(N);
    Mat<Scalar> c(N);
    for (int i = 1; i <= N; ++i) {
        const int ip = N + 1 - i;
        c.at(i - 1, ip - 1) = Scalar::q_pow_half(-rho2[i - 1]).substitute_contracted_q(J);
    }
    return c;
}

Mat<NcPoly> build_T_sigma(int N, const JSignature& j, const Permutation& sigma) {
    auto tpl = entry_templates(N);
    Mat<NcPoly> t(N);
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) {
            NcPoly e;
            for (const auto& term : tpl[size_t(r) * N + c]) {
                Scalar coef = Scalar(term.coef) * Scalar(template_factor(term, j, sigma));
                e.add_term(Word(sym(quantum_kind(term.base_kind), term.srow, term.scol)), coef);
            }
            t.at(r, c) = e;
        }
    return t;
}

std::vector<Sym> generator_list(int N) {
    const int n = N / 2;
    const bool odd = N % 2;
    const int m = n + 1;
    std::vector<Sym> out;
    if (odd) out.push_back(sym(SymKind::T, m, m));
    for (int k = 1; k <= n; ++k) {
        const int kp = N + 1 - k;
        out.push_back(sym(SymKind::T, k, k));
        out.push_back(sym(SymKind::TAU, k, k));
        out.push_back(sym(SymKind::T, kp, k));
        out.push_back(sym(SymKind::TAU, kp, k));
        if (odd) {
            out.push_back(sym(SymKind::T, k, m));
            out.push_back(sym(SymKind::TAU, k, m));
            out.push_back(sym(SymKind::T, m, k));
            out.push_back(sym(SymKind::TAU, m, k));
        }
        for (int p = 1; p <= n; ++p) {
            if (p == k) continue;
            out.push_back(sym(SymKind::T, k, p));
            out.push_back(sym(SymKind::TP, k, p));
            out.push_back(sym(SymKind::TAU, k, p));
            out.push_back(sym(SymKind::TAUP, k, p));
        }
    }
    return out;
}

std::map<Sym, BaseNumber> counit(int N) {
    const int n = N / 2;
    std::map<Sym, BaseNumber> eps;
    for (Sym g : generator_list(N)) eps[g] = BaseNumber(0);
    for (int k = 1; k <= n; ++k) eps[sym(SymKind::T, k, k)] = BaseNumber(1);
    if (N % 2) eps[sym(SymKind::T, n + 1, n + 1)] = BaseNumber(1);
    return eps;
}

Mat<Scalar> apply_counit(const Mat<NcPoly>& T, int N) {
    auto eps = counit(N);
    Mat<Scalar> out(N);
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k) {
            Scalar acc;
            for (const auto& [w, c] : T.at(i, k).terms()) {
                BaseNumber val(1);
                for (int p = 0; p < w.size(); ++p) val = val * eps.at(w[p]);
                acc += Scalar(val) * c;
            }
            out.at(i, k) = acc;
        }
    return out;
}

Mat<NcPoly> antipode_matrix(const Mat<NcPoly>& T, int N, RescalingJ J) {
    auto rho2 = rho2_vector(N);
    Mat<NcPoly> s(N);
    for (int i = 1; i <= N; ++i)
        for (int k = 1; k <= N; ++k) {
            const int ip = N + 1 - i, kp = N + 1 - k;
            Scalar qf =
                Scalar::q_pow_half(rho2[ip - 1] - rho2[kp - 1]).substitute_contracted_q(J);
            s.at(i - 1, k - 1) = qf * T.at(kp - 1, ip - 1);
        }
    return s;
}

Mat<TensorPoly> coproduct_matrix(const Mat<NcPoly>& T) {
    const int N = T.size();
    Mat<TensorPoly> d(N);
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k) {
            TensorPoly acc;
            for (int m = 0; m < N; ++m) acc += TensorPoly::pure(T.at(i, m), T.at(m, k));
            d.at(i, k) = acc;
        }
    return d;
}

std::vector<GenSolveStep> gen_solve_plan(int N, const JSignature& j, const Permutation& sigma) {
    const int n = N / 2;
    const bool odd = N % 2;
    const int m = n + 1;
    const BaseNumber one(1), half = BaseNumber::half();
    const BaseNumber quarter(Rational(1, 4));
    const BaseNumber mhalf_i(0, Rational(-1, 2), 0, 0);   // 1/(2i)
    const BaseNumber mquarter_i(0, Rational(-1, 4), 0, 0);  // 1/(4i)
    const BaseNumber quarter_i(0, Rational(1, 4), 0, 0);    // -1/(4i)
    auto mon = [&](int a, int b) { return mon_product(sigma(a), sigma(b), j); };
    const NilMonomial unit = NilMonomial::unit();

    std::vector<GenSolveStep> plan;
    if (odd) plan.push_back({sym(SymKind::T, m, m), {{m, m, one}}, unit});
    for (int k = 1; k <= n; ++k) {
        const int kp = N + 1 - k;
        plan.push_back({sym(SymKind::T, k, k), {{k, k, half}, {kp, kp, half}}, unit});
        plan.push_back(
            {sym(SymKind::TAU, k, k), {{k, k, mhalf_i}, {kp, kp, -mhalf_i}}, mon(k, kp)});
        plan.push_back({sym(SymKind::T, kp, k), {{kp, k, half}, {k, kp, half}}, unit});
        plan.push_back(
            {sym(SymKind::TAU, kp, k), {{kp, k, mhalf_i}, {k, kp, -mhalf_i}}, mon(k, kp)});
        if (odd) {
            plan.push_back({sym(SymKind::T, k, m), {{k, m, half}, {kp, m, half}}, mon(k, m)});
            plan.push_back(
                {sym(SymKind::TAU, k, m), {{kp, m, mhalf_i}, {k, m, -mhalf_i}}, mon(m, kp)});
            plan.push_back({sym(SymKind::T, m, k), {{m, k, half}, {m, kp, half}}, mon(k, m)});
            plan.push_back(
                {sym(SymKind::TAU, m, k), {{m, k, mhalf_i}, {m, kp, -mhalf_i}}, mon(m, kp)});
        }
        for (int p = 1; p <= n; ++p) {
            if (p == k) continue;
            const int pp = N + 1 - p;
            plan.push_back({sym(SymKind::T, k, p),
                            {{k, p, quarter}, {k, pp, quarter}, {kp, p, quarter}, {kp, pp, quarter}},
                            mon(k, p)});
            plan.push_back({sym(SymKind::TP, k, p),
                            {{k, p, quarter}, {k, pp, -quarter}, {kp, p, -quarter}, {kp, pp, quarter}},
                            mon(kp, pp)});
            plan.push_back({sym(SymKind::TAU, k, p),
                            {{k, p, mquarter_i}, {k, pp, -mquarter_i}, {kp, p, mquarter_i}, {kp, pp, -mquarter_i}},
                            mon(k, pp)});
            plan.push_back({sym(SymKind::TAUP, k, p),
                            {{k, p, quarter_i}, {k, pp, quarter_i}, {kp, p, -quarter_i}, {kp, pp, -quarter_i}},
                            mon(kp, p)});
        }
    }
    return plan;
}

std::vector<TaggedRelation> rtt_relations(int N, const JSignature& j, const Permutation& sigma,
                                          RescalingJ J) {
    auto T = build_T_sigma(N, j, sigma);
    auto R = build_R(N, J);
    std::vector<TaggedRelation> out;
    // lhs[(i,j),(k,l)] = sum_{(a,b)} R[(i,j),(a,b)] T_{ak} T_{bl}
    // rhs[(i,j),(k,l)] = sum_{(a,b)} T_{jb} T_{ia} R[(a,b),(k,l)]
    std::vector<NcPoly> rel(size_t(N) * N * N * N);
    auto slot = [N](int i, int jj, int k, int l) {
        return ((size_t(i) * N + jj) * N + k) * N + l;
    };
    for (const auto& [pos, rv] : R.entries) {
        const int row = pos.first, col = pos.second;
        const int i = row / N, jj = row % N;
        const int a = col / N, b = col % N;
        for (int k = 0; k < N; ++k)
            for (int l = 0; l < N; ++l) {
                // R[(i,j),(a,b)] T_{ak} T_{bl}
                rel[slot(i, jj, k, l)] += rv * (T.at(a, k) * T.at(b, l));
                // - T_{jb'} T_{ia'} R[(a',b'),(k,l)] with (a',b') = (i,j) of this entry:
            }
        // subtract T2 T1 R: here (row, col) plays ((a,b),(k,l))
        const int rk = col / N, rl = col % N;
        for (int i2 = 0; i2 < N; ++i2)
            for (int j2 = 0; j2 < N; ++j2)
                rel[slot(i2, j2, rk, rl)] -= (T.at(j2, jj) * T.at(i2, i)) * rv;
    }
    for (int i = 0; i < N; ++i)
        for (int jj = 0; jj < N; ++jj)
            for (int k = 0; k < N; ++k)
                for (int l = 0; l < N; ++l) {
                    NcPoly& p = rel[slot(i, jj, k, l)];
                    if (p.is_zero()) continue;
                    out.push_back({"RTT[" + std::to_string(i + 1) + "," + std::to_string(jj + 1) +
                                       ";" + std::to_string(k + 1) + "," + std::to_string(l + 1) +
                                       "]",
                                   std::move(p)});
                }
    return out;
}

namespace {

// the u/w change of rows: U[k] = (e_k + e_k')/2, U[k'] = (e_k - e_k')/2
Mat<BaseNumber> half_sum_basis(int N) {
    Mat<BaseNumber> u(N);
    const BaseNumber half = BaseNumber::half();
    for (int k = 1; k <= N / 2; ++k) {
        u.at(k - 1, k - 1) = half;
        u.at(k - 1, N - k) = half;
        u.at(N - k, k - 1) = half;
        u.at(N - k, N - k) = -half;
    }
    if (N % 2) u.at(N / 2, N / 2) = BaseNumber(1);
    return u;
}

Mat<BaseNumber> half_sum_basis_inv(int N) {
    Mat<BaseNumber> u(N);
    for (int k = 1; k <= N / 2; ++k) {
        u.at(k - 1, k - 1) = BaseNumber(1);
        u.at(k - 1, N - k) = BaseNumber(1);
        u.at(N - k, k - 1) = BaseNumber(1);
        u.at(N - k, N - k) = BaseNumber(-1);
    }
    if (N % 2) u.at(N / 2, N / 2) = BaseNumber(1);
    return u;
}

using SparseScalar = std::map<std::pair<int, int>, Scalar>;

SparseScalar sparse_mul(const SparseScalar& a, const SparseScalar& b) {
    std::map<int, std::vector<std::pair<int, Scalar>>> brows;
    for (const auto& [pos, v] : b) brows[pos.first].emplace_back(pos.second, v);
    SparseScalar out;
    for (const auto& [pos, v] : a) {
        auto it = brows.find(pos.second);
        if (it == brows.end()) continue;
        for (const auto& [col, bv] : it->second) {
            Scalar prod = v * bv;
            if (prod.is_zero()) continue;
            auto [oit, fresh] = out.emplace(std::pair{pos.first, col}, prod);
            if (!fresh) {
                oit->second += prod;
                if (oit->second.is_zero()) out.erase(oit);
            }
        }
    }
    return out;
}

SparseScalar kron(const Mat<BaseNumber>& a, const Mat<BaseNumber>& b) {
    const int N = a.size();
    SparseScalar out;
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int i2 = 0; i2 < N; ++i2)
                for (int k2 = 0; k2 < N; ++k2) {
                    BaseNumber c = a.at(i, k) * b.at(i2, k2);
                    if (!c.is_zero()) out[{i * N + i2, k * N + k2}] = Scalar(c);
                }
        }
    return out;
}

}  // namespace

std::vector<TaggedRelation> transformed_rtt_relations(int N, const JSignature& j,
                                                      const Permutation& sigma, RescalingJ J) {
    auto lift = [](const Mat<BaseNumber>& m) {
        return m.map([](const BaseNumber& c) { return NcPoly(Scalar(c)); });
    };
    Mat<BaseNumber> U = half_sum_basis(N), Uinv = half_sum_basis_inv(N);
    Mat<NcPoly> T = lift(U) * build_T_sigma(N, j, sigma) * lift(Uinv);

    SparseScalar R;
    for (const auto& [pos, v] : build_R(N, J).entries) R[pos] = v;
    SparseScalar Rt = sparse_mul(sparse_mul(kron(U, U), R), kron(Uinv, Uinv));

    std::vector<NcPoly> rel(size_t(N) * N * N * N);
    auto slot = [N](int i, int jj, int k, int l) {
        return ((size_t(i) * N + jj) * N + k) * N + l;
    };
    for (const auto& [pos, rv] : Rt) {
        const int i = pos.first / N, jj = pos.first % N;
        const int a = pos.second / N, b = pos.second % N;
        for (int k = 0; k < N; ++k)
            for (int l = 0; l < N; ++l)
                rel[slot(i, jj, k, l)] += rv * (T.at(a, k) * T.at(b, l));
        // the same entry read as Rt[(a,b),(k,l)] on the right-hand side
        for (int i2 = 0; i2 < N; ++i2)
            for (int j2 = 0; j2 < N; ++j2)
                rel[slot(i2, j2, a, b)] -= (T.at(j2, jj) * T.at(i2, i)) * rv;
    }
    std::vector<TaggedRelation> out;
    for (int i = 0; i < N; ++i)
        for (int jj = 0; jj < N; ++jj)
            for (int k = 0; k < N; ++k)
                for (int l = 0; l < N; ++l) {
                    NcPoly& p = rel[slot(i, jj, k, l)];
                    if (p.is_zero()) continue;
                    out.push_back({"Rt[" + std::to_string(i + 1) + "," + std::to_string(jj + 1) +
                                       ";" + std::to_string(k + 1) + "," + std::to_string(l + 1) +
                                       "]",
                                   std::move(p)});
                }
    return out;
}

std::vector<TaggedRelation> orthogonality_relations(const Mat<NcPoly>& T, int N, RescalingJ J) {
    auto rho2 = rho2_vector(N);
    auto qsub = [&](int e2) { return Scalar::q_pow_half(e2).substitute_contracted_q(J); };
    std::vector<TaggedRelation> out;
    for (int i = 1; i <= N; ++i)
        for (int k = 1; k <= N; ++k) {
            NcPoly tct, ttc;
            for (int a = 1; a <= N; ++a) {
                const int ap = N + 1 - a;
                Scalar w = qsub(rho2[ap - 1]);
                tct += w * (T.at(i - 1, a - 1) * T.at(k - 1, ap - 1));
                ttc += w * (T.at(a - 1, i - 1) * T.at(ap - 1, k - 1));
            }
            if (N + 1 - i == k) {
                Scalar c = qsub(rho2[N - i]);
                tct -= NcPoly(c);
                ttc -= NcPoly(c);
            }
            out.push_back({"TCTt[" + std::to_string(i) + "," + std::to_string(k) + "]", tct});
            out.push_back({"TtCT[" + std::to_string(i) + "," + std::to_string(k) + "]", ttc});
        }
    return out;
}

std::vector<TaggedRelation> orthogonality_relations(int N, const JSignature& j,
                                                    const Permutation& sigma, RescalingJ J) {
    return orthogonality_relations(build_T_sigma(N, j, sigma), N, J);
}

// ---------------------------------------------------------------------------
// Appendix closed forms

namespace {

struct AppendixCtx {
    int N, n;
    bool odd;
    int m;  // n+1, only meaningful for odd N
    const JSignature& j;
    const Permutation& sigma;
    RescalingJ J;
    std::vector<int> rho2;

    NilMonomial mon(int a, int b) const { return mon_product(sigma(a), sigma(b), j); }
    Scalar fac(int a, int b) const { return Scalar(mon(a, b)); }
    // cosh/sinh of J rho_k v and of 2 J rho_k v
    Scalar ch(int k) const { return cosh_rho_v(rho2[k - 1]).substitute_contracted_q(J); }
    Scalar sh(int k) const { return sinh_rho_v(rho2[k - 1]).substitute_contracted_q(J); }
    Scalar ch2(int k) const { return cosh_rho_v(2 * rho2[k - 1]).substitute_contracted_q(J); }
    Scalar sh2(int k) const { return sinh_rho_v(2 * rho2[k - 1]).substitute_contracted_q(J); }
};

// Accumulate (coeff * num-monomial * val) / den into acc, recording a failure
// against g if the division is undefined.  The Scalar coefficient is fully
// assembled before the division is attempted.
template <class P>
void add_ratio_term(P& acc, std::vector<SolveFailure>& failures, Sym g, const Scalar& coeff,
                    NilMonomial num, NilMonomial den, const P& val) {
    P term = (coeff * Scalar(num)) * val;
    if (term.is_zero()) return;
    P divided;
    if (auto bad = term.try_div_monomial(den, &divided))
        failures.push_back({g, den, *bad});
    else
        acc += divided;
}

}  // namespace

GenImages<NcPoly> appendix_antipode(int N, const JSignature& j, const Permutation& sigma,
                                    RescalingJ J) {
    AppendixCtx cx{N, N / 2, bool(N % 2), N / 2 + 1, j, sigma, J, rho2_vector(N)};
    GenImages<NcPoly> out;
    const Scalar I = Scalar::i();
    const NilMonomial unit = NilMonomial::unit();
    auto t = [&](int r, int c) { return gen(SymKind::T, r, c); };
    auto tp = [&](int r, int c) { return gen(SymKind::TP, r, c); };
    auto tau = [&](int r, int c) { return gen(SymKind::TAU, r, c); };
    auto taup = [&](int r, int c) { return gen(SymKind::TAUP, r, c); };
    auto set = [&](Sym g, NcPoly v) { out.images.emplace(g, std::move(v)); };

    if (cx.odd) set(sym(SymKind::T, cx.m, cx.m), t(cx.m, cx.m));
    for (int k = 1; k <= cx.n; ++k) {
        const int kp = N + 1 - k;
        set(sym(SymKind::T, k, k), t(k, k));
        set(sym(SymKind::TAU, k, k), -tau(k, k));

        // S(t_{k'k}) = t_{k'k} cosh 2J rho_k v + i tau_{k'k} (sig_k,sig_k') sinh 2J rho_k v
        set(sym(SymKind::T, kp, k),
            cx.ch2(k) * t(kp, k) + (I * cx.fac(k, kp) * cx.sh2(k)) * tau(kp, k));

        // S(tau_{k'k}) = tau_{k'k} cosh 2J rho_k v - i t_{k'k} (sig_k,sig_k')^{-1} sinh 2J rho_k v
        {
            Sym g = sym(SymKind::TAU, kp, k);
            NcPoly acc = cx.ch2(k) * tau(kp, k);
            add_ratio_term(acc, out.failures, g, -I * cx.sh2(k), unit, cx.mon(k, kp), t(kp, k));
            set(g, acc);
        }

        if (cx.odd) {
            const int m = cx.m;
            {
                Sym g = sym(SymKind::T, k, m);
                NcPoly acc = cx.ch(k) * t(m, k);
                add_ratio_term(acc, out.failures, g, I * cx.sh(k), cx.mon(kp, m), cx.mon(k, m),
                               tau(m, k));
                set(g, acc);
            }
            {
                Sym g = sym(SymKind::TAU, k, m);
                NcPoly acc = cx.ch(k) * tau(m, k);
                add_ratio_term(acc, out.failures, g, -I * cx.sh(k), cx.mon(k, m), cx.mon(kp, m),
                               t(m, k));
                set(g, acc);
            }
            {
                Sym g = sym(SymKind::T, m, k);
                NcPoly acc = cx.ch(k) * t(k, m);
                add_ratio_term(acc, out.failures, g, I * cx.sh(k), cx.mon(kp, m), cx.mon(k, m),
                               tau(k, m));
                set(g, acc);
            }
            {
                Sym g = sym(SymKind::TAU, m, k);
                NcPoly acc = cx.ch(k) * tau(k, m);
                add_ratio_term(acc, out.failures, g, -I * cx.sh(k), cx.mon(k, m), cx.mon(kp, m),
                               t(k, m));
                set(g, acc);
            }
        }

        for (int p = 1; p <= cx.n; ++p) {
            if (p == k) continue;
            const int pp = N + 1 - p;
            const Scalar chch = cx.ch(k) * cx.ch(p);
            const Scalar shsh = cx.sh(k) * cx.sh(p);
            const Scalar sh_k_ch_p = cx.sh(k) * cx.ch(p);
            const Scalar ch_k_sh_p = cx.ch(k) * cx.sh(p);
            {
                Sym g = sym(SymKind::T, k, p);
                NcPoly acc = chch * t(p, k);
                add_ratio_term(acc, out.failures, g, -shsh, cx.mon(pp, kp), cx.mon(k, p), tp(p, k));
                add_ratio_term(acc, out.failures, g, I * sh_k_ch_p, cx.mon(p, kp), cx.mon(k, p),
                               tau(p, k));
                add_ratio_term(acc, out.failures, g, I * ch_k_sh_p, cx.mon(pp, k), cx.mon(k, p),
                               taup(p, k));
                set(g, acc);
            }
            {
                Sym g = sym(SymKind::TP, k, p);
                NcPoly acc = chch * tp(p, k);
                add_ratio_term(acc, out.failures, g, -shsh, cx.mon(p, k), cx.mon(kp, pp), t(p, k));
                add_ratio_term(acc, out.failures, g, -I * ch_k_sh_p, cx.mon(p, kp), cx.mon(kp, pp),
                               tau(p, k));
                add_ratio_term(acc, out.failures, g, -I * sh_k_ch_p, cx.mon(pp, k), cx.mon(kp, pp),
                               taup(p, k));
                set(g, acc);
            }
            {
                Sym g = sym(SymKind::TAU, k, p);
                NcPoly acc = chch * taup(p, k);
                add_ratio_term(acc, out.failures, g, shsh, cx.mon(p, kp), cx.mon(k, pp), tau(p, k));
                add_ratio_term(acc, out.failures, g, -I * ch_k_sh_p, cx.mon(p, k), cx.mon(k, pp),
                               t(p, k));
                add_ratio_term(acc, out.failures, g, I * sh_k_ch_p, cx.mon(pp, kp), cx.mon(k, pp),
                               tp(p, k));
                set(g, acc);
            }
            {
                Sym g = sym(SymKind::TAUP, k, p);
                NcPoly acc = chch * tau(p, k);
                add_ratio_term(acc, out.failures, g, shsh, cx.mon(pp, k), cx.mon(kp, p), taup(p, k));
                add_ratio_term(acc, out.failures, g, -I * sh_k_ch_p, cx.mon(p, k), cx.mon(kp, p),
                               t(p, k));
                add_ratio_term(acc, out.failures, g, I * ch_k_sh_p, cx.mon(pp, kp), cx.mon(kp, p),
                               tp(p, k));
                set(g, acc);
            }
        }
    }
    return out;
}

GenImages<TensorPoly> appendix_coproduct(int N, const JSignature& j, const Permutation& sigma) {
    AppendixCtx cx{N, N / 2, bool(N % 2), N / 2 + 1, j, sigma, RescalingJ::unit(),
                   rho2_vector(N)};
    GenImages<TensorPoly> out;
    const Scalar I = Scalar::i();
    const Scalar two(2);
    const NilMonomial unit = NilMonomial::unit();
    auto t = [&](int r, int c) { return gen(SymKind::T, r, c); };
    auto tp = [&](int r, int c) { return gen(SymKind::TP, r, c); };
    auto tau = [&](int r, int c) { return gen(SymKind::TAU, r, c); };
    auto taup = [&](int r, int c) { return gen(SymKind::TAUP, r, c); };
    auto ten = [](const NcPoly& a, const NcPoly& b) { return TensorPoly::pure(a, b); };
    auto fac2 = [&](int a, int b) { return cx.fac(a, b) * cx.fac(a, b); };
    auto set = [&](Sym g, TensorPoly v) { out.images.emplace(g, std::move(v)); };
    const int m = cx.m;

    if (cx.odd) {
        TensorPoly acc = ten(t(m, m), t(m, m));
        for (int k = 1; k <= cx.n; ++k) {
            const int kp = N + 1 - k;
            acc += (two * fac2(k, m)) * ten(t(m, k), t(k, m));
            acc += (two * fac2(m, kp)) * ten(tau(m, k), tau(k, m));
        }
        set(sym(SymKind::T, m, m), acc);
    }

    for (int k = 1; k <= cx.n; ++k) {
        const int kp = N + 1 - k;
        {  // Delta t_kk
            TensorPoly acc = ten(t(k, k), t(k, k)) + ten(t(kp, k), t(kp, k));
            if (cx.odd) {
                acc += fac2(k, m) * ten(t(k, m), t(m, k));
                acc += fac2(m, kp) * ten(tau(k, m), tau(m, k));
            }
            acc += fac2(k, kp) * (ten(tau(kp, k), tau(kp, k)) - ten(tau(k, k), tau(k, k)));
            for (int s = 1; s <= cx.n; ++s) {
                if (s == k) continue;
                const int sp = N + 1 - s;
                acc += (two * fac2(k, s)) * ten(t(k, s), t(s, k));
                acc += (two * fac2(kp, sp)) * ten(tp(k, s), tp(s, k));
                acc += (two * fac2(kp, s)) * ten(taup(k, s), tau(s, k));
                acc += (two * fac2(k, sp)) * ten(tau(k, s), taup(s, k));
            }
            set(sym(SymKind::T, k, k), acc);
        }
        {  // Delta tau_kk
            Sym g = sym(SymKind::TAU, k, k);
            TensorPoly acc = ten(tau(k, k), t(k, k)) + ten(t(k, k), tau(k, k)) +
                             ten(t(kp, k), tau(kp, k)) - ten(tau(kp, k), t(kp, k));
            if (cx.odd) {
                auto num = cx.mon(k, m).try_mul(cx.mon(m, kp));
                if (num)
                    add_ratio_term(acc, out.failures, g, Scalar(1), *num, cx.mon(k, kp),
                                   ten(t(k, m), tau(m, k)) - ten(tau(k, m), t(m, k)));
            }
            for (int s = 1; s <= cx.n; ++s) {
                if (s == k) continue;
                const int sp = N + 1 - s;
                if (auto num = cx.mon(k, s).try_mul(cx.mon(s, kp)))
                    add_ratio_term(acc, out.failures, g, two, *num, cx.mon(k, kp),
                                   ten(t(k, s), tau(s, k)) - ten(taup(k, s), t(s, k)));
                if (auto num = cx.mon(k, sp).try_mul(cx.mon(sp, kp)))
                    add_ratio_term(acc, out.failures, g, two, *num, cx.mon(k, kp),
                                   ten(tau(k, s), tp(s, k)) - ten(tp(k, s), taup(s, k)));
            }
            set(g, acc);
        }
        {  // Delta t_{k'k}
            TensorPoly acc = ten(t(kp, k), t(k, k)) + ten(t(k, k), t(kp, k));
            if (cx.odd) {
                acc += fac2(k, m) * ten(t(k, m), t(m, k));
                acc -= fac2(m, kp) * ten(tau(k, m), tau(m, k));
            }
            acc += fac2(k, kp) * (ten(tau(k, k), tau(kp, k)) - ten(tau(kp, k), tau(k, k)));
            for (int s = 1; s <= cx.n; ++s) {
                if (s == k) continue;
                const int sp = N + 1 - s;
                acc += (two * fac2(k, s)) * ten(t(k, s), t(s, k));
                acc -= (two * fac2(kp, sp)) * ten(tp(k, s), tp(s, k));
                acc += (two * fac2(k, sp)) * ten(tau(k, s), taup(s, k));
                acc -= (two * fac2(kp, s)) * ten(taup(k, s), tau(s, k));
            }
            set(sym(SymKind::T, kp, k), acc);
        }
        {  // Delta tau_{k'k}
            Sym g = sym(SymKind::TAU, kp, k);
            TensorPoly acc = ten(tau(kp, k), t(k, k)) + ten(t(k, k), tau(kp, k)) +
                             ten(t(kp, k), tau(k, k)) - ten(tau(k, k), t(kp, k));
            if (cx.odd) {
                if (auto num = cx.mon(k, m).try_mul(cx.mon(m, kp)))
                    add_ratio_term(acc, out.failures, g, Scalar(1), *num, cx.mon(k, kp),
                                   ten(tau(k, m), t(m, k)) + ten(t(k, m), tau(m, k)));
            }
            for (int s = 1; s <= cx.n; ++s) {
                if (s == k) continue;
                const int sp = N + 1 - s;
                if (auto num = cx.mon(k, s).try_mul(cx.mon(s, kp)))
                    add_ratio_term(acc, out.failures, g, two, *num, cx.mon(k, kp),
                                   ten(t(k, s), tau(s, k)) + ten(taup(k, s), t(s, k)));
                if (auto num = cx.mon(k, sp).try_mul(cx.mon(sp, kp)))
                    add_ratio_term(acc, out.failures, g, two, *num, cx.mon(k, kp),
                                   ten(tau(k, s), tp(s, k)) + ten(tp(k, s), taup(s, k)));
            }
            set(g, acc);
        }
        if (cx.odd) {
            {  // Delta t_{k,n+1}
                Sym g = sym(SymKind::T, k, m);
                TensorPoly acc = ten(t(k, m), t(m, m)) + ten(t(k, k) + t(kp, k), t(k, m));
                if (auto num = cx.mon(k, kp).try_mul(cx.mon(kp, m)))
                    add_ratio_term(acc, out.failures, g, Scalar(1), *num, cx.mon(k, m),
                                   ten(tau(k, k) + tau(kp, k), tau(k, m)));
                for (int s = 1; s <= cx.n; ++s) {
                    if (s == k) continue;
                    const int sp = N + 1 - s;
                    if (auto num = cx.mon(k, s).try_mul(cx.mon(s, m)))
                        add_ratio_term(acc, out.failures, g, two, *num, cx.mon(k, m),
                                       ten(t(k, s), t(s, m)));
                    if (auto num = cx.mon(k, sp).try_mul(cx.mon(sp, m)))
                        add_ratio_term(acc, out.failures, g, two, *num, cx.mon(k, m),
                                       ten(tau(k, s), tau(s, m)));
                }
                set(g, acc);
            }
            {  // Delta tau_{k,n+1}
                Sym g = sym(SymKind::TAU, k, m);
                TensorPoly acc = ten(tau(k, m), t(m, m)) + ten(t(k, k) - t(kp, k), tau(k, m));
                if (auto num = cx.mon(k, kp).try_mul(cx.mon(k, m)))
                    add_ratio_term(acc, out.failures, g, Scalar(1), *num, cx.mon(m, kp),
                                   ten(tau(kp, k) - tau(k, k), t(k, m)));
                for (int s = 1; s <= cx.n; ++s) {
                    if (s == k) continue;
                    const int sp = N + 1 - s;
                    if (auto num = cx.mon(kp, s).try_mul(cx.mon(s, m)))
                        add_ratio_term(acc, out.failures, g, two, *num, cx.mon(m, kp),
                                       ten(taup(k, s), t(s, m)));
                    if (auto num = cx.mon(kp, sp).try_mul(cx.mon(sp, m)))
                        add_ratio_term(acc, out.failures, g, two, *num, cx.mon(m, kp),
                                       ten(tp(k, s), tau(s, m)));
                }
                set(g, acc);
            }
            {  // Delta t_{n+1,k}
                Sym g = sym(SymKind::T, m, k);
                TensorPoly acc = ten(t(m, m), t(m, k)) + ten(t(m, k), t(k, k) + t(kp, k));
                if (auto num = cx.mon(k, kp).try_mul(cx.mon(kp, m)))
                    add_ratio_term(acc, out.failures, g, Scalar(1), *num, cx.mon(k, m),
                                   ten(tau(m, k), tau(kp, k) - tau(k, k)));
                for (int s = 1; s <= cx.n; ++s) {
                    if (s == k) continue;
                    const int sp = N + 1 - s;
                    if (auto num = cx.mon(k, s).try_mul(cx.mon(s, m)))
                        add_ratio_term(acc, out.failures, g, two, *num, cx.mon(k, m),
                                       ten(t(m, s), t(s, k)));
                    if (auto num = cx.mon(k, sp).try_mul(cx.mon(sp, m)))
                        add_ratio_term(acc, out.failures, g, two, *num, cx.mon(k, m),
                                       ten(tau(m, s), taup(s, k)));
                }
                set(g, acc);
            }
            {  // Delta tau_{n+1,k}
                Sym g = sym(SymKind::TAU, m, k);
                TensorPoly acc = ten(t(m, m), tau(m, k)) + ten(tau(m, k), t(k, k) - t(kp, k));
                if (auto num = cx.mon(k, kp).try_mul(cx.mon(k, m)))
                    add_ratio_term(acc, out.failures, g, Scalar(1), *num, cx.mon(m, kp),
                                   ten(t(m, k), tau(k, k) + tau(kp, k)));
                for (int s = 1; s <= cx.n; ++s) {
                    if (s == k) continue;
                    const int sp = N + 1 - s;
                    if (auto num = cx.mon(kp, s).try_mul(cx.mon(s, m)))
                        add_ratio_term(acc, out.failures, g, two, *num, cx.mon(m, kp),
                                       ten(t(m, s), tau(s, k)));
                    if (auto num = cx.mon(kp, sp).try_mul(cx.mon(sp, m)))
                        add_ratio_term(acc, out.failures, g, two, *num, cx.mon(m, kp),
                                       ten(tau(m, s), tp(s, k)));
                }
                set(g, acc);
            }
        }
        for (int p = 1; p <= cx.n; ++p) {
            if (p == k) continue;
            const int pp = N + 1 - p;
            {  // Delta t_kp
                Sym g = sym(SymKind::T, k, p);
                TensorPoly acc =
                    ten(t(k, p), t(p, p) + t(pp, p)) + ten(t(k, k) + t(kp, k), t(k, p));
                if (cx.odd)
                    if (auto num = cx.mon(k, m).try_mul(cx.mon(p, m)))
                        add_ratio_term(acc, out.failures, g, Scalar(1), *num, cx.mon(k, p),
                                       ten(t(k, m), t(m, p)));
                if (auto num = cx.mon(k, kp).try_mul(cx.mon(p, kp)))
                    add_ratio_term(acc, out.failures, g, Scalar(1), *num, cx.mon(k, p),
                                   ten(tau(k, k) + tau(kp, k), taup(k, p)));
                if (auto num = cx.mon(k, pp).try_mul(cx.mon(p, pp)))
                    add_ratio_term(acc, out.failures, g, Scalar(1), *num, cx.mon(k, p),
                                   ten(tau(k, p), tau(pp, p) - tau(p, p)));
                for (int s = 1; s <= cx.n; ++s) {
                    if (s == k || s == p) continue;
                    const int sp = N + 1 - s;
                    if (auto num = cx.mon(k, s).try_mul(cx.mon(s, p)))
                        add_ratio_term(acc, out.failures, g, two, *num, cx.mon(k, p),
                                       ten(t(k, s), t(s, p)));
                    if (auto num = cx.mon(k, sp).try_mul(cx.mon(sp, p)))
                        add_ratio_term(acc, out.failures, g, two, *num, cx.mon(k, p),
                                       ten(tau(k, s), taup(s, p)));
                }
                set(g, acc);
            }
            {  // Delta t'_kp
                Sym g = sym(SymKind::TP, k, p);
                TensorPoly acc =
                    ten(tp(k, p), t(p, p) - t(pp, p)) + ten(t(k, k) - t(kp, k), tp(k, p));
                if (cx.odd)
                    if (auto num = cx.mon(m, kp).try_mul(cx.mon(m, pp)))
                        add_ratio_term(acc, out.failures, g, Scalar(1), *num, cx.mon(kp, pp),
                                       ten(tau(k, m), tau(m, p)));
                if (auto num = cx.mon(k, kp).try_mul(cx.mon(k, pp)))
                    add_ratio_term(acc, out.failures, g, Scalar(1), *num, cx.mon(kp, pp),
                                   ten(tau(kp, k) - tau(k, k), tau(k, p)));
                if (auto num = cx.mon(p, kp).try_mul(cx.mon(p, pp)))
                    add_ratio_term(acc, out.failures, g, Scalar(1), *num, cx.mon(kp, pp),
                                   ten(taup(k, p), tau(p, p) + tau(pp, p)));
                for (int s = 1; s <= cx.n; ++s) {
                    if (s == k || s == p) continue;
                    const int sp = N + 1 - s;
                    if (auto num = cx.mon(kp, sp).try_mul(cx.mon(sp, pp)))
                        add_ratio_term(acc, out.failures, g, two, *num, cx.mon(kp, pp),
                                       ten(tp(k, s), tp(s, p)));
                    if (auto num = cx.mon(kp, s).try_mul(cx.mon(s, pp)))
                        add_ratio_term(acc, out.failures, g, two, *num, cx.mon(kp, pp),
                                       ten(taup(k, s), tau(s, p)));
                }
                set(g, acc);
            }
            {  // Delta tau_kp
                Sym g = sym(SymKind::TAU, k, p);
                TensorPoly acc =
                    ten(tau(k, p), t(p, p) - t(pp, p)) + ten(t(k, k) + t(kp, k), tau(k, p));
                if (cx.odd)
                    if (auto num = cx.mon(p, m).try_mul(cx.mon(m, kp)))
                        add_ratio_term(acc, out.failures, g, Scalar(1), *num, cx.mon(k, pp),
                                       ten(tau(k, m), t(m, p)));
                if (auto num = cx.mon(k, kp).try_mul(cx.mon(kp, pp)))
                    add_ratio_term(acc, out.failures, g, Scalar(1), *num, cx.mon(k, pp),
                                   ten(tau(k, k) + tau(kp, k), tp(k, p)));
                if (auto num = cx.mon(k, p).try_mul(cx.mon(p, pp)))
                    add_ratio_term(acc, out.failures, g, Scalar(1), *num, cx.mon(k, pp),
                                   ten(t(k, p), tau(p, p) + tau(pp, p)));
                for (int s = 1; s <= cx.n; ++s) {
                    if (s == k || s == p) continue;
                    const int sp = N + 1 - s;
                    if (auto num = cx.mon(k, sp).try_mul(cx.mon(sp, pp)))
                        add_ratio_term(acc, out.failures, g, two, *num, cx.mon(k, pp),
                                       ten(tau(k, s), tp(s, p)));
                    if (auto num = cx.mon(k, s).try_mul(cx.mon(s, pp)))
                        add_ratio_term(acc, out.failures, g, two, *num, cx.mon(k, pp),
                                       ten(t(k, s), tau(s, p)));
                }
                set(g, acc);
            }
            {  // Delta tau'_kp
                Sym g = sym(SymKind::TAUP, k, p);
                TensorPoly acc =
                    ten(taup(k, p), t(p, p) + t(pp, p)) + ten(t(k, k) - t(kp, k), taup(k, p));
                if (cx.odd)
                    if (auto num = cx.mon(k, m).try_mul(cx.mon(m, pp)))
                        add_ratio_term(acc, out.failures, g, Scalar(1), *num, cx.mon(kp, p),
                                       ten(t(k, m), tau(m, p)));
                if (auto num = cx.mon(k, kp).try_mul(cx.mon(k, p)))
                    add_ratio_term(acc, out.failures, g, Scalar(1), *num, cx.mon(kp, p),
                                   ten(tau(kp, k) - tau(k, k), t(k, p)));
                if (auto num = cx.mon(kp, pp).try_mul(cx.mon(p, pp)))
                    add_ratio_term(acc, out.failures, g, Scalar(1), *num, cx.mon(kp, p),
                                   ten(tp(k, p), tau(pp, p) - tau(p, p)));
                for (int s = 1; s <= cx.n; ++s) {
                    if (s == k || s == p) continue;
                    const int sp = N + 1 - s;
                    if (auto num = cx.mon(kp, s).try_mul(cx.mon(s, p)))
                        add_ratio_term(acc, out.failures, g, two, *num, cx.mon(kp, p),
                                       ten(taup(k, s), t(s, p)));
                    if (auto num = cx.mon(kp, sp).try_mul(cx.mon(sp, p)))
                        add_ratio_term(acc, out.failures, g, two, *num, cx.mon(kp, p),
                                       ten(tp(k, s), taup(s, p)));
                }
                set(g, acc);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Appendix C and its first-principles counterpart.
//
// The closed forms are the entries of T C T^t - C in the half-sum /
// half-difference row basis u_k = (e_k + e_k')/2, w_k = (e_k - e_k')/2 (and
// e_{n+1} for odd N); the sign map below matches each printed relation.

namespace {

struct BasisVec {
    // coefficients on rows k and k' (or the bare middle row)
    int k;       // 1..n, or 0 for the middle row
    bool diff;   // u_k vs w_k
};

NcPoly combo_entry(const Mat<NcPoly>& M, int N, BasisVec r, BasisVec c) {
    auto rows = [N](BasisVec v) {
        std::vector<std::pair<int, BaseNumber>> out;
        if (v.k == 0) {
            out.emplace_back(N / 2 + 1, BaseNumber(1));
        } else {
            out.emplace_back(v.k, BaseNumber::half());
            out.emplace_back(N + 1 - v.k, v.diff ? -BaseNumber::half() : BaseNumber::half());
        }
        return out;
    };
    NcPoly acc;
    for (const auto& [ri, rc] : rows(r))
        for (const auto& [ci, cc] : rows(c))
            acc += Scalar(rc * cc) * M.at(ri - 1, ci - 1);
    return acc;
}

}  // namespace

std::vector<TaggedRelation> symmetrized_orthogonality(const Mat<NcPoly>& T, int N, RescalingJ J,
                                                      bool transpose_side) {
    auto rho2 = rho2_vector(N);
    auto qsub = [&](int e2) { return Scalar::q_pow_half(e2).substitute_contracted_q(J); };
    const int n = N / 2;
    const bool odd = N % 2;

    Mat<NcPoly> M(N);
    for (int i = 1; i <= N; ++i)
        for (int k = 1; k <= N; ++k) {
            NcPoly acc;
            for (int a = 1; a <= N; ++a) {
                const int ap = N + 1 - a;
                if (transpose_side)
                    acc += qsub(rho2[ap - 1]) * (T.at(a - 1, i - 1) * T.at(ap - 1, k - 1));
                else
                    acc += qsub(rho2[ap - 1]) * (T.at(i - 1, a - 1) * T.at(k - 1, ap - 1));
            }
            if (N + 1 - i == k) acc -= NcPoly(qsub(rho2[N - i]));
            M.at(i - 1, k - 1) = acc;
        }

    const BasisVec e{0, false};
    auto u = [](int k) { return BasisVec{k, false}; };
    auto w = [](int k) { return BasisVec{k, true}; };
    auto ks = [](int k) { return std::to_string(k); };
    const std::string pre = transpose_side ? "Ct" : "C";

    std::vector<TaggedRelation> out;
    if (odd) out.push_back({pre + "1", combo_entry(M, N, e, e)});
    for (int k = 1; k <= n; ++k) {
        out.push_back({pre + "2[" + ks(k) + "]", combo_entry(M, N, u(k), u(k))});
        out.push_back({pre + "3[" + ks(k) + "]", -combo_entry(M, N, w(k), w(k))});
        out.push_back({pre + "4[" + ks(k) + "]", combo_entry(M, N, u(k), w(k))});
        out.push_back({pre + "5[" + ks(k) + "]", -combo_entry(M, N, w(k), u(k))});
        if (odd) {
            out.push_back({pre + "10[" + ks(k) + "]", combo_entry(M, N, u(k), e)});
            out.push_back({pre + "11[" + ks(k) + "]", combo_entry(M, N, w(k), e)});
            out.push_back({pre + "12[" + ks(k) + "]", combo_entry(M, N, e, u(k))});
            out.push_back({pre + "13[" + ks(k) + "]", combo_entry(M, N, e, w(k))});
        }
    }
    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) {
            if (i == k) continue;
            const std::string suffix = "[" + ks(i) + "," + ks(k) + "]";
            out.push_back({pre + "6" + suffix, combo_entry(M, N, u(i), u(k))});
            out.push_back({pre + "7" + suffix, -combo_entry(M, N, w(i), w(k))});
            out.push_back({pre + "8" + suffix, combo_entry(M, N, u(i), w(k))});
            out.push_back({pre + "9" + suffix, -combo_entry(M, N, w(i), u(k))});
        }
    return out;
}

std::vector<TaggedRelation> symmetrized_orthogonality(int N, const JSignature& j,
                                                      const Permutation& sigma, RescalingJ J,
                                                      bool transpose_side) {
    return symmetrized_orthogonality(build_T_sigma(N, j, sigma), N, J, transpose_side);
}

std::vector<TaggedRelation> appendix_orthogonality(int N, const JSignature& j,
                                                   const Permutation& sigma, RescalingJ J) {
    AppendixCtx cx{N, N / 2, bool(N % 2), N / 2 + 1, j, sigma, J, rho2_vector(N)};
    const Scalar I = Scalar::i();
    const Scalar two(2), half(BaseNumber::half());
    const Scalar ihalf = I * half;
    auto t = [&](int r, int c) { return gen(SymKind::T, r, c); };
    auto tp = [&](int r, int c) { return gen(SymKind::TP, r, c); };
    auto tau = [&](int r, int c) { return gen(SymKind::TAU, r, c); };
    auto taup = [&](int r, int c) { return gen(SymKind::TAUP, r, c); };
    auto f = [&](int a, int b) { return cx.fac(a, b); };
    auto ks = [](int k) { return std::to_string(k); };
    const int n = cx.n, m = cx.m, N1 = N + 1;

    std::vector<TaggedRelation> out;

    if (cx.odd) {  // 1 = t_mm^2 + 2 sum_p {...}
        NcPoly acc = t(m, m) * t(m, m) - NcPoly(1);
        for (int p = 1; p <= n; ++p) {
            const int pp = N1 - p;
            acc += (two * f(p, m) * f(p, m) * cx.ch(p)) * (t(m, p) * t(m, p));
            acc += (two * f(m, pp) * f(m, pp) * cx.ch(p)) * (tau(m, p) * tau(m, p));
            acc += (two * I * f(p, m) * f(m, pp) * cx.sh(p)) * com(t(m, p), tau(m, p));
        }
        out.push_back({"C1", acc});
    }

    for (int k = 1; k <= n; ++k) {
        const int kp = N1 - k;
        {  // (1/2) cosh Jv_k = (sig_k,sig_m)^2 t_{km}^2 + ...
            NcPoly acc = -NcPoly(half * cx.ch(k));
            if (cx.odd) acc += (f(k, m) * f(k, m)) * (t(k, m) * t(k, m));
            for (int p = 1; p <= n; ++p) {
                if (p == k) continue;
                const int pp = N1 - p;
                acc += (two * f(k, p) * f(k, p) * cx.ch(p)) * (t(k, p) * t(k, p));
                acc += (two * f(k, pp) * f(k, pp) * cx.ch(p)) * (tau(k, p) * tau(k, p));
                acc += (two * I * f(k, p) * f(k, pp) * cx.sh(p)) * com(t(k, p), tau(k, p));
            }
            acc += (half * cx.ch(k)) *
                   (t(k, k) * t(k, k) + t(kp, k) * t(kp, k) + acom(t(k, k), t(kp, k)) +
                    (f(k, kp) * f(k, kp)) * (tau(k, k) * tau(k, k) + tau(kp, k) * tau(kp, k) +
                                             acom(tau(k, k), tau(kp, k))));
            acc += (ihalf * f(k, kp) * cx.sh(k)) *
                   (com(t(k, k), tau(k, k)) + com(t(kp, k), tau(kp, k)) +
                    com(t(kp, k), tau(k, k)) + com(t(k, k), tau(kp, k)));
            out.push_back({"C2[" + ks(k) + "]", acc});
        }
        {  // (1/2) cosh Jv_k = (sig_m,sig_k')^2 tau_{km}^2 + ...
            NcPoly acc = -NcPoly(half * cx.ch(k));
            if (cx.odd) acc += (f(m, kp) * f(m, kp)) * (tau(k, m) * tau(k, m));
            for (int p = 1; p <= n; ++p) {
                if (p == k) continue;
                const int pp = N1 - p;
                acc += (two * f(kp, pp) * f(kp, pp) * cx.ch(p)) * (tp(k, p) * tp(k, p));
                acc += (two * f(kp, p) * f(kp, p) * cx.ch(p)) * (taup(k, p) * taup(k, p));
                acc -= (two * I * f(kp, pp) * f(kp, p) * cx.sh(p)) * com(tp(k, p), taup(k, p));
            }
            acc += (half * cx.ch(k)) *
                   (t(k, k) * t(k, k) + t(kp, k) * t(kp, k) - acom(t(k, k), t(kp, k)) +
                    (f(k, kp) * f(k, kp)) * (tau(k, k) * tau(k, k) + tau(kp, k) * tau(kp, k) -
                                             acom(tau(k, k), tau(kp, k))));
            acc += (ihalf * f(k, kp) * cx.sh(k)) *
                   (com(t(k, k), tau(k, k)) + com(t(kp, k), tau(kp, k)) -
                    com(t(kp, k), tau(k, k)) - com(t(k, k), tau(kp, k)));
            out.push_back({"C3[" + ks(k) + "]", acc});
        }
        {  // (1/2) sinh Jv_k = -i (sig_k,sig_m)(sig_m,sig_k') t_{km} tau_{km} + ...
            NcPoly acc = -NcPoly(half * cx.sh(k));
            if (cx.odd) acc -= (I * f(k, m) * f(m, kp)) * (t(k, m) * tau(k, m));
            for (int p = 1; p <= n; ++p) {
                if (p == k) continue;
                const int pp = N1 - p;
                acc -= (two * I * f(k, p) * f(kp, p) * cx.ch(p)) * (t(k, p) * taup(k, p));
                acc -= (two * I * f(k, pp) * f(kp, pp) * cx.ch(p)) * (tau(k, p) * tp(k, p));
                acc += (two * f(k, p) * f(kp, pp) * cx.sh(p)) * (t(k, p) * tp(k, p));
                acc -= (two * f(k, pp) * f(kp, p) * cx.sh(p)) * (tau(k, p) * taup(k, p));
            }
            acc += (ihalf * f(k, kp) * cx.ch(k)) *
                   (com(t(k, k), tau(k, k)) - com(t(kp, k), tau(kp, k)) +
                    acom(t(kp, k), tau(k, k)) - acom(t(k, k), tau(kp, k)));
            acc += (half * cx.sh(k)) *
                   (t(k, k) * t(k, k) - t(kp, k) * t(kp, k) + com(t(kp, k), t(k, k)) +
                    (f(k, kp) * f(k, kp)) * (tau(k, k) * tau(k, k) - tau(kp, k) * tau(kp, k) +
                                             com(tau(kp, k), tau(k, k))));
            out.push_back({"C4[" + ks(k) + "]", acc});
        }
        {  // (1/2) sinh Jv_k = +i (sig_k,sig_m)(sig_m,sig_k') tau_{km} t_{km} + ...
            NcPoly acc = -NcPoly(half * cx.sh(k));
            if (cx.odd) acc += (I * f(k, m) * f(m, kp)) * (tau(k, m) * t(k, m));
            for (int p = 1; p <= n; ++p) {
                if (p == k) continue;
                const int pp = N1 - p;
                acc += (two * I * f(kp, pp) * f(k, pp) * cx.ch(p)) * (tp(k, p) * tau(k, p));
                acc += (two * I * f(kp, p) * f(k, p) * cx.ch(p)) * (taup(k, p) * t(k, p));
                acc += (two * f(kp, pp) * f(k, p) * cx.sh(p)) * (tp(k, p) * t(k, p));
                acc -= (two * f(k, pp) * f(kp, p) * cx.sh(p)) * (taup(k, p) * tau(k, p));
            }
            acc += (ihalf * f(k, kp) * cx.ch(k)) *
                   (com(t(k, k), tau(k, k)) - com(t(kp, k), tau(kp, k)) -
                    acom(t(kp, k), tau(k, k)) + acom(t(k, k), tau(kp, k)));
            acc += (half * cx.sh(k)) *
                   (t(k, k) * t(k, k) - t(kp, k) * t(kp, k) - com(t(kp, k), t(k, k)) +
                    (f(k, kp) * f(k, kp)) * (tau(k, k) * tau(k, k) - tau(kp, k) * tau(kp, k) -
                                             com(tau(kp, k), tau(k, k))));
            out.push_back({"C5[" + ks(k) + "]", acc});
        }
    }

    for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= n; ++k) {
            if (i == k) continue;
            const int ip = N1 - i, kp = N1 - k;
            const std::string suffix = "[" + ks(i) + "," + ks(k) + "]";
            {  // 0 = (sig_i,sig_m)(sig_k,sig_m) t_{im} t_{km} + ...
                NcPoly acc;
                if (cx.odd) acc += (f(i, m) * f(k, m)) * (t(i, m) * t(k, m));
                for (int p = 1; p <= n; ++p) {
                    if (p == i || p == k) continue;
                    const int pp = N1 - p;
                    acc += (two * f(i, p) * f(k, p) * cx.ch(p)) * (t(i, p) * t(k, p));
                    acc += (two * f(i, pp) * f(k, pp) * cx.ch(p)) * (tau(i, p) * tau(k, p));
                    acc += (two * I * f(i, p) * f(k, pp) * cx.sh(p)) * (t(i, p) * tau(k, p));
                    acc -= (two * I * f(k, p) * f(i, pp) * cx.sh(p)) * (tau(i, p) * t(k, p));
                }
                acc += (f(k, i) * cx.ch(i)) * ((t(i, i) + t(ip, i)) * t(k, i));
                acc += (f(k, ip) * f(i, ip) * cx.ch(i)) * ((tau(i, i) + tau(ip, i)) * tau(k, i));
                acc += (I * f(k, ip) * cx.sh(i)) * ((t(i, i) + t(ip, i)) * tau(k, i));
                acc -= (I * f(i, ip) * f(k, i) * cx.sh(i)) * ((tau(i, i) + tau(ip, i)) * t(k, i));
                acc += (f(i, k) * cx.ch(k)) * (t(i, k) * (t(k, k) + t(kp, k)));
                acc += (f(k, kp) * f(i, kp) * cx.ch(k)) * (tau(i, k) * (tau(k, k) + tau(kp, k)));
                acc -= (I * f(i, kp) * cx.sh(k)) * (tau(i, k) * (t(k, k) + t(kp, k)));
                acc += (I * f(k, kp) * f(i, k) * cx.sh(k)) * (t(i, k) * (tau(k, k) + tau(kp, k)));
                out.push_back({"C6" + suffix, acc});
            }
            {  // 0 = (sig_i',sig_m)(sig_k',sig_m) tau_{im} tau_{km} + ...
                NcPoly acc;
                if (cx.odd) acc += (f(ip, m) * f(kp, m)) * (tau(i, m) * tau(k, m));
                for (int p = 1; p <= n; ++p) {
                    if (p == i || p == k) continue;
                    const int pp = N1 - p;
                    acc += (two * f(ip, pp) * f(kp, pp) * cx.ch(p)) * (tp(i, p) * tp(k, p));
                    acc += (two * f(ip, p) * f(kp, p) * cx.ch(p)) * (taup(i, p) * taup(k, p));
                    acc -= (two * I * f(ip, pp) * f(kp, p) * cx.sh(p)) * (tp(i, p) * taup(k, p));
                    acc += (two * I * f(kp, pp) * f(ip, p) * cx.sh(p)) * (taup(i, p) * tp(k, p));
                }
                acc += (f(kp, ip) * cx.ch(i)) * ((t(i, i) - t(ip, i)) * tp(k, i));
                acc += (f(i, ip) * f(kp, i) * cx.ch(i)) * ((tau(ip, i) - tau(i, i)) * taup(k, i));
                acc += (I * f(kp, i) * cx.sh(i)) * ((t(ip, i) - t(i, i)) * taup(k, i));
                acc += (I * f(i, ip) * f(kp, ip) * cx.sh(i)) * ((tau(ip, i) - tau(i, i)) * tp(k, i));
                acc += (f(ip, kp) * cx.ch(k)) * (tp(i, k) * (t(k, k) - t(kp, k)));
                acc += (f(k, kp) * f(ip, k) * cx.ch(k)) * (taup(i, k) * (tau(kp, k) - tau(k, k)));
                acc += (I * f(ip, k) * cx.sh(k)) * (taup(i, k) * (t(k, k) - t(kp, k)));
                acc += (I * f(k, kp) * f(ip, kp) * cx.sh(k)) * (tp(i, k) * (tau(k, k) - tau(kp, k)));
                out.push_back({"C7" + suffix, acc});
            }
            {  // 0 = -i (sig_i,sig_m)(sig_k',sig_m) t_{im} tau_{km} + ...
                NcPoly acc;
                if (cx.odd) acc -= (I * f(i, m) * f(kp, m)) * (t(i, m) * tau(k, m));
                for (int p = 1; p <= n; ++p) {
                    if (p == i || p == k) continue;
                    const int pp = N1 - p;
                    acc -= (two * I * f(i, p) * f(kp, p) * cx.ch(p)) * (t(i, p) * taup(k, p));
                    acc -= (two * I * f(i, pp) * f(kp, pp) * cx.ch(p)) * (tau(i, p) * tp(k, p));
                    acc += (two * f(i, p) * f(kp, pp) * cx.sh(p)) * (t(i, p) * tp(k, p));
                    acc -= (two * f(i, pp) * f(kp, p) * cx.sh(p)) * (tau(i, p) * taup(k, p));
                }
                acc += (f(kp, ip) * cx.sh(i)) * ((t(i, i) + t(ip, i)) * tp(k, i));
                acc -= (f(i, ip) * f(kp, i) * cx.sh(i)) * ((tau(i, i) + tau(ip, i)) * taup(k, i));
                acc -= (I * f(kp, i) * cx.ch(i)) * ((t(i, i) + t(ip, i)) * taup(k, i));
                acc -= (I * f(i, ip) * f(kp, ip) * cx.ch(i)) * ((tau(i, i) + tau(ip, i)) * tp(k, i));
                acc += (f(i, k) * cx.sh(k)) * (t(i, k) * (t(k, k) - t(kp, k)));
                acc += (f(k, kp) * f(i, kp) * cx.sh(k)) * (tau(i, k) * (tau(k, k) - tau(kp, k)));
                acc += (I * f(i, kp) * cx.ch(k)) * (tau(i, k) * (t(kp, k) - t(k, k)));
                acc += (I * f(k, kp) * f(i, k) * cx.ch(k)) * (t(i, k) * (tau(k, k) - tau(kp, k)));
                out.push_back({"C8" + suffix, acc});
            }
            {  // 0 = +i (sig_k,sig_m)(sig_i',sig_m) tau_{im} t_{km} + ...
                NcPoly acc;
                if (cx.odd) acc += (I * f(k, m) * f(ip, m)) * (tau(i, m) * t(k, m));
                for (int p = 1; p <= n; ++p) {
                    if (p == i || p == k) continue;
                    const int pp = N1 - p;
                    acc += (two * I * f(ip, pp) * f(k, pp) * cx.ch(p)) * (tp(i, p) * tau(k, p));
                    acc += (two * I * f(k, p) * f(ip, p) * cx.ch(p)) * (taup(i, p) * t(k, p));
                    acc += (two * f(ip, pp) * f(k, p) * cx.sh(p)) * (tp(i, p) * t(k, p));
                    acc -= (two * f(ip, p) * f(k, pp) * cx.sh(p)) * (taup(i, p) * tau(k, p));
                }
                acc += (f(k, i) * cx.sh(i)) * ((t(i, i) - t(ip, i)) * t(k, i));
                acc += (f(i, ip) * f(k, ip) * cx.sh(i)) * ((tau(i, i) - tau(ip, i)) * tau(k, i));
                acc += (I * f(k, ip) * cx.ch(i)) * ((t(i, i) - t(ip, i)) * tau(k, i));
                acc += (I * f(i, ip) * f(k, i) * cx.ch(i)) * ((tau(ip, i) - tau(i, i)) * t(k, i));
                acc += (f(ip, kp) * cx.sh(k)) * (tp(i, k) * (t(k, k) + t(kp, k)));
                acc -= (f(k, kp) * f(ip, k) * cx.sh(k)) * (taup(i, k) * (tau(k, k) + tau(kp, k)));
                acc += (I * f(ip, k) * cx.ch(k)) * (taup(i, k) * (t(k, k) + t(kp, k)));
                acc += (I * f(k, kp) * f(ip, kp) * cx.ch(k)) * (tp(i, k) * (tau(k, k) + tau(kp, k)));
                out.push_back({"C9" + suffix, acc});
            }
        }

    if (cx.odd)
        for (int k = 1; k <= n; ++k) {
            const int kp = N1 - k;
            {  // 0 = (sig_k,sig_m) t_{km} t_mm + ...
                NcPoly acc = (f(k, m)) * (t(k, m) * t(m, m));
                for (int p = 1; p <= n; ++p) {
                    if (p == k) continue;
                    const int pp = N1 - p;
                    acc += (two * f(k, p) * f(p, m) * cx.ch(p)) * (t(k, p) * t(m, p));
                    acc += (two * f(k, pp) * f(pp, m) * cx.ch(p)) * (tau(k, p) * tau(m, p));
                    acc += (two * I * f(k, p) * f(pp, m) * cx.sh(p)) * (t(k, p) * tau(m, p));
                    acc -= (two * I * f(k, pp) * f(p, m) * cx.sh(p)) * (tau(k, p) * t(m, p));
                }
                acc += (f(k, m) * cx.ch(k)) * ((t(k, k) + t(kp, k)) * t(m, k));
                acc += (f(k, kp) * f(kp, m) * cx.ch(k)) * ((tau(k, k) + tau(kp, k)) * tau(m, k));
                acc += (I * f(kp, m) * cx.sh(k)) * ((t(k, k) + t(kp, k)) * tau(m, k));
                acc -= (I * f(k, kp) * f(k, m) * cx.sh(k)) * ((tau(k, k) + tau(kp, k)) * t(m, k));
                out.push_back({"C10[" + ks(k) + "]", acc});
            }
            {  // 0 = -i (sig_k',sig_m) tau_{km} t_mm + ...
                NcPoly acc = (-I * f(kp, m)) * (tau(k, m) * t(m, m));
                for (int p = 1; p <= n; ++p) {
                    if (p == k) continue;
                    const int pp = N1 - p;
                    acc -= (two * I * f(kp, p) * f(p, m) * cx.ch(p)) * (taup(k, p) * t(m, p));
                    acc -= (two * I * f(kp, pp) * f(pp, m) * cx.ch(p)) * (tp(k, p) * tau(m, p));
                    acc -= (two * f(kp, pp) * f(p, m) * cx.sh(p)) * (tp(k, p) * t(m, p));
                    acc += (two * f(kp, p) * f(pp, m) * cx.sh(p)) * (taup(k, p) * tau(m, p));
                }
                acc += (f(k, m) * cx.sh(k)) * ((t(kp, k) - t(k, k)) * t(m, k));
                acc += (f(k, kp) * f(kp, m) * cx.sh(k)) * ((tau(kp, k) - tau(k, k)) * tau(m, k));
                acc += (I * f(kp, m) * cx.ch(k)) * ((t(kp, k) - t(k, k)) * tau(m, k));
                acc -= (I * f(k, kp) * f(k, m) * cx.ch(k)) * ((tau(kp, k) - tau(k, k)) * t(m, k));
                out.push_back({"C11[" + ks(k) + "]", acc});
            }
            {  // 0 = (sig_k,sig_m) t_mm t_{km} + ...
                NcPoly acc = (f(k, m)) * (t(m, m) * t(k, m));
                for (int p = 1; p <= n; ++p) {
                    if (p == k) continue;
                    const int pp = N1 - p;
                    acc += (two * f(k, p) * f(p, m) * cx.ch(p)) * (t(m, p) * t(k, p));
                    acc += (two * f(k, pp) * f(pp, m) * cx.ch(p)) * (tau(m, p) * tau(k, p));
                    acc += (two * I * f(k, pp) * f(p, m) * cx.sh(p)) * (t(m, p) * tau(k, p));
                    acc -= (two * I * f(k, p) * f(pp, m) * cx.sh(p)) * (tau(m, p) * t(k, p));
                }
                acc += (f(k, m) * cx.ch(k)) * (t(m, k) * (t(k, k) + t(kp, k)));
                acc += (f(k, kp) * f(kp, m) * cx.ch(k)) * (tau(m, k) * (tau(k, k) + tau(kp, k)));
                acc += (I * f(k, kp) * f(k, m) * cx.sh(k)) * (t(m, k) * (tau(k, k) + tau(kp, k)));
                acc -= (I * f(kp, m) * cx.sh(k)) * (tau(m, k) * (t(k, k) + t(kp, k)));
                out.push_back({"C12[" + ks(k) + "]", acc});
            }
            {  // 0 = -i (sig_k',sig_m) t_mm tau_{km} + ...
                NcPoly acc = (-I * f(kp, m)) * (t(m, m) * tau(k, m));
                for (int p = 1; p <= n; ++p) {
                    if (p == k) continue;
                    const int pp = N1 - p;
                    acc -= (two * I * f(kp, p) * f(p, m) * cx.ch(p)) * (t(m, p) * taup(k, p));
                    acc -= (two * I * f(kp, pp) * f(pp, m) * cx.ch(p)) * (tau(m, p) * tp(k, p));
                    acc += (two * f(kp, pp) * f(p, m) * cx.sh(p)) * (t(m, p) * tp(k, p));
                    acc -= (two * f(kp, p) * f(pp, m) * cx.sh(p)) * (tau(m, p) * taup(k, p));
                }
                acc += (f(k, m) * cx.sh(k)) * (t(m, k) * (t(k, k) - t(kp, k)));
                acc += (f(k, kp) * f(kp, m) * cx.sh(k)) * (tau(m, k) * (tau(k, k) - tau(kp, k)));
                acc += (I * f(k, kp) * f(k, m) * cx.ch(k)) * (t(m, k) * (tau(k, k) - tau(kp, k)));
                acc -= (I * f(kp, m) * cx.ch(k)) * (tau(m, k) * (t(k, k) - t(kp, k)));
                out.push_back({"C13[" + ks(k) + "]", acc});
            }
        }

    return out;
}

SupportPattern support_pattern(const NcPoly& p) {
    SupportPattern out;
    std::map<Sym, Scalar> coeffs;
    for (const auto& [w, c] : p.terms()) {
        if (w.size() > 1) throw NonLinear("support_pattern: word of degree >= 2");
        if (w.size() == 0) continue;  // constant part carries no generator
        coeffs[w[0]] += c;
    }
    for (const auto& [g, c] : coeffs) {
        if (c.is_zero()) continue;
        Scalar v0 = c.v0_part();
        auto monos = v0.is_zero() ? c.monomials() : v0.monomials();
        if (monos.size() != 1) {
            out.inconsistencies.push_back(g.str() + ": mixed monomials in " +
                                          (v0.is_zero() ? "correction" : "leading") + " part");
            continue;
        }
        out.by_generator[g] = *monos.begin();
    }
    return out;
}

std::optional<std::map<SymKind, NilMonomial>> pattern_by_kind(const NcPoly& p) {
    SupportPattern sp = support_pattern(p);
    if (!sp.consistent()) return std::nullopt;
    std::map<SymKind, NilMonomial> out;
    for (const auto& [g, m] : sp.by_generator) {
        auto [it, fresh] = out.emplace(g.kind, m);
        if (!fresh && it->second != m) return std::nullopt;  // two same-kind generators disagree
    }
    return out;
}

}  // namespace quantum
}  // namespace ckq
