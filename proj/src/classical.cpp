#include "ckq/classical.hpp"

namespace ckq {
namespace classical {

Mat<BaseNumber> c0_matrix(int N) {
    Mat<BaseNumber> c(N);
    for (int i = 1; i <= N; ++i) c.at(i - 1, N - i) = BaseNumber(1);
    return c;
}

Mat<BaseNumber> d_matrix(int N) {
    const int n = N / 2;
    Mat<BaseNumber> d(N);
    const BaseNumber inv_rt2(0, 0, Rational(1, 2), 0);  // 1/sqrt2 = sqrt2/2
    const BaseNumber i_unit = BaseNumber::i();
    // block form: [I, -i C~0; C~0, i I] over the n x n corners, with a lone
    // sqrt2 in the middle for odd N (normalized away by the 1/sqrt2 prefactor)
    for (int r = 1; r <= n; ++r) {
        d.at(r - 1, r - 1) = inv_rt2;                          // I block
        d.at(r - 1, N - n + (n - r)) = -i_unit * inv_rt2;      // -i C~0
        d.at(N - n + r - 1, n - r) = inv_rt2;                  // C~0
        d.at(N - n + r - 1, N - n + r - 1) = i_unit * inv_rt2; // i I
    }
    if (N % 2) d.at(n, n) = BaseNumber(1);
    return d;
}

Mat<BaseNumber> build_D_sigma(int N, const Permutation& sigma) {
    Mat<BaseNumber> v(N);
    for (int i = 1; i <= N; ++i) v.at(i - 1, sigma(i) - 1) = BaseNumber(1);
    return d_matrix(N) * v;
}

Mat<BaseNumber> invert_D_sigma(int N, const Permutation& sigma) {
    // D^t C_0 D = I gives D^{-1} = D^t C_0, and V_sigma^{-1} = V_sigma^t.
    Mat<BaseNumber> v(N);
    for (int i = 1; i <= N; ++i) v.at(i - 1, sigma(i) - 1) = BaseNumber(1);
    return v.transpose() * d_matrix(N).transpose() * c0_matrix(N);
}

Mat<CPoly> cartesian_A(int N, const JSignature& j) {
    Mat<CPoly> a(N);
    for (int k = 1; k <= N; ++k)
        for (int p = 1; p <= N; ++p)
            a.at(k - 1, p - 1) =
                CPoly(Sym{SymKind::A, uint8_t(k), uint8_t(p)}, Scalar(mon_product(k, p, j)));
    return a;
}

namespace {
SymKind b_kind(int base) {
    switch (base) {
        case 0: return SymKind::B;
        case 1: return SymKind::BP;
        case 2: return SymKind::BT;
        default: return SymKind::BTP;
    }
}
}  // namespace

Mat<CPoly> build_B_sigma(int N, const JSignature& j, const Permutation& sigma) {
    auto tpl = entry_templates(N);
    Mat<CPoly> b(N);
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) {
            CPoly e;
            for (const auto& t : tpl[size_t(r) * N + c]) {
                Scalar coef = Scalar(t.coef) * Scalar(template_factor(t, j, sigma));
                e.add_term(Word(Sym{b_kind(t.base_kind), uint8_t(t.srow), uint8_t(t.scol)}),
                           coef);
            }
            b.at(r, c) = e;
        }
    return b;
}

Mat<CPoly> conjugated_B_sigma(int N, const JSignature& j, const Permutation& sigma) {
    auto lift = [](const Mat<BaseNumber>& m) {
        return m.map([](const BaseNumber& c) { return CPoly(Scalar(c)); });
    };
    return lift(build_D_sigma(N, sigma)) * cartesian_A(N, j) * lift(invert_D_sigma(N, sigma));
}

std::map<Sym, CPoly> b_dictionary(int N, const Permutation& sigma) {
    const int n = N / 2;
    const bool odd = N % 2;
    const int mid = n + 1;
    std::map<Sym, CPoly> out;
    auto a = [&](int r, int c) { return CPoly(Sym{SymKind::A, uint8_t(r), uint8_t(c)}); };
    auto sym = [](SymKind k, int r, int c) { return Sym{k, uint8_t(r), uint8_t(c)}; };
    const Scalar half(BaseNumber::half());
    const Scalar inv_rt2(BaseNumber(0, 0, Rational(1, 2), 0));

    if (odd) {
        out[sym(SymKind::B, mid, mid)] = a(sigma(mid), sigma(mid));
        for (int k = 1; k <= n; ++k) {
            const int kp = N + 1 - k;
            out[sym(SymKind::B, mid, k)] = inv_rt2 * a(sigma(mid), sigma(k));
            out[sym(SymKind::B, k, mid)] = inv_rt2 * a(sigma(k), sigma(mid));
            out[sym(SymKind::BT, k, mid)] = inv_rt2 * a(sigma(kp), sigma(mid));
            out[sym(SymKind::BT, mid, k)] = inv_rt2 * a(sigma(mid), sigma(kp));
        }
    }
    for (int k = 1; k <= n; ++k) {
        const int kp = N + 1 - k;
        out[sym(SymKind::B, k, k)] = half * (a(sigma(k), sigma(k)) + a(sigma(kp), sigma(kp)));
        out[sym(SymKind::BT, k, k)] = half * (a(sigma(k), sigma(kp)) - a(sigma(kp), sigma(k)));
        out[sym(SymKind::B, kp, k)] = half * (a(sigma(k), sigma(k)) - a(sigma(kp), sigma(kp)));
        out[sym(SymKind::BT, kp, k)] = half * (a(sigma(k), sigma(kp)) + a(sigma(kp), sigma(k)));
        for (int p = 1; p <= n; ++p) {
            if (p == k) continue;
            const int pp = N + 1 - p;
            out[sym(SymKind::B, k, p)] = half * a(sigma(k), sigma(p));
            out[sym(SymKind::BP, k, p)] = half * a(sigma(kp), sigma(pp));
            out[sym(SymKind::BT, k, p)] = half * a(sigma(k), sigma(pp));
            out[sym(SymKind::BTP, k, p)] = half * a(sigma(kp), sigma(p));
        }
    }
    return out;
}

std::map<Sym, NilMonomial> contraction_dictionary(int N, const JSignature& j,
                                                  const Permutation& sigma) {
    const int n = N / 2;
    const bool odd = N % 2;
    const int mid = n + 1;
    std::map<Sym, NilMonomial> out;
    auto sym = [](SymKind k, int r, int c) { return Sym{k, uint8_t(r), uint8_t(c)}; };
    auto mon = [&](int a, int b) { return mon_product(sigma(a), sigma(b), j); };

    if (odd) {
        out[sym(SymKind::B, mid, mid)] = NilMonomial::unit();
        for (int k = 1; k <= n; ++k) {
            const int kp = N + 1 - k;
            out[sym(SymKind::B, k, mid)] = mon(k, mid);
            out[sym(SymKind::B, mid, k)] = mon(k, mid);
            out[sym(SymKind::BT, k, mid)] = mon(kp, mid);
            out[sym(SymKind::BT, mid, k)] = mon(kp, mid);
        }
    }
    for (int k = 1; k <= n; ++k) {
        const int kp = N + 1 - k;
        out[sym(SymKind::B, k, k)] = NilMonomial::unit();
        out[sym(SymKind::B, kp, k)] = NilMonomial::unit();
        out[sym(SymKind::BT, k, k)] = mon(k, kp);
        out[sym(SymKind::BT, kp, k)] = mon(k, kp);
        for (int p = 1; p <= n; ++p) {
            if (p == k) continue;
            const int pp = N + 1 - p;
            out[sym(SymKind::B, k, p)] = mon(k, p);
            out[sym(SymKind::BP, k, p)] = mon(kp, pp);
            out[sym(SymKind::BT, k, p)] = mon(k, pp);
            out[sym(SymKind::BTP, k, p)] = mon(kp, p);
        }
    }
    return out;
}

std::vector<TaggedRelation> check_j_orthogonality(const Mat<CPoly>& A) {
    const int N = A.size();
    Mat<CPoly> id = Mat<CPoly>::identity(N);
    Mat<CPoly> left = A * A.transpose() - id;
    Mat<CPoly> right = A.transpose() * A - id;
    std::vector<TaggedRelation> out;
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k) {
            out.push_back({i + 1, k + 1, "AAt", left.at(i, k)});
            out.push_back({i + 1, k + 1, "AtA", right.at(i, k)});
        }
    return out;
}

std::vector<TaggedRelation> check_b_orthogonality(const Mat<CPoly>& B, int N) {
    Mat<CPoly> c0 = c0_matrix(N).map([](const BaseNumber& c) { return CPoly(Scalar(c)); });
    Mat<CPoly> left = B * c0 * B.transpose() - c0;
    Mat<CPoly> right = B.transpose() * c0 * B - c0;
    std::vector<TaggedRelation> out;
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k) {
            out.push_back({i + 1, k + 1, "BC0Bt", left.at(i, k)});
            out.push_back({i + 1, k + 1, "BtC0B", right.at(i, k)});
        }
    return out;
}

Scalar quadratic_form_invariant(const std::vector<Scalar>& xi, const JSignature& j) {
    Scalar inv;
    for (int k = 1; k <= int(xi.size()); ++k) {
        Scalar factor(mon_product(1, k, j));
        inv += factor * factor * xi[k - 1] * xi[k - 1];
    }
    return inv;
}

std::string render_matrix(const Mat<CPoly>& m) {
    const int N = m.size();
    std::vector<std::string> cells(size_t(N) * N);
    std::vector<size_t> width(N, 0);
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k) {
            cells[size_t(i) * N + k] = m.at(i, k).str();
            width[k] = std::max(width[k], cells[size_t(i) * N + k].size());
        }
    std::string out;
    for (int i = 0; i < N; ++i) {
        out += "[ ";
        for (int k = 0; k < N; ++k) {
            const std::string& c = cells[size_t(i) * N + k];
            out += c + std::string(width[k] - c.size(), ' ');
            out += (k + 1 < N) ? "   " : " ";
        }
        out += "]\n";
    }
    return out;
}

}  // namespace classical
}  // namespace ckq
