#pragma once

#include "ckq/base_number.hpp"
#include "ckq/errors.hpp"
#include "ckq/nilpotent.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>

namespace ckq {

/// The rescaling monomial J of the deformation-parameter transformation
/// z = J*v.  The unit value means the deformation parameter is untouched and
/// q stays a formal Laurent variable.
struct RescalingJ {
    NilMonomial monomial;  // unit <=> J = 1

    static RescalingJ unit() { return {NilMonomial::unit()}; }
    static RescalingJ of(NilMonomial m) { return {m}; }
    bool is_unit() const { return monomial.is_unit(); }

    friend bool operator==(RescalingJ a, RescalingJ b) { return a.monomial == b.monomial; }
    friend bool operator<(RescalingJ a, RescalingJ b) { return a.monomial < b.monomial; }
    std::string str() const { return monomial.str(); }
    std::string ascii() const { return monomial.ascii(); }
};

/// Coefficient ring of the whole build: Laurent polynomials in a formal
/// q^{1/2}, polynomials in v, tensored with Pimenov monomial factors, over
/// Q(i, sqrt2).
///
/// q-exponents are stored doubled so half-integer powers stay integral.
class Scalar {
public:
    struct Key {
        int q2 = 0;   // doubled q-exponent, may be negative
        int v = 0;    // v-degree, nonnegative
        NilMonomial mono;

        friend auto operator<=>(const Key& a, const Key& b) {
            if (a.q2 != b.q2) return a.q2 <=> b.q2;
            if (a.v != b.v) return a.v <=> b.v;
            return a.mono.mask() <=> b.mono.mask();
        }
        friend bool operator==(const Key& a, const Key& b) = default;
    };
    using Terms = std::map<Key, BaseNumber>;

    Scalar() = default;
    Scalar(int n) { add_term({}, BaseNumber(n)); }
    Scalar(const BaseNumber& c) { add_term({}, c); }
    Scalar(NilMonomial m) { add_term({0, 0, m}, BaseNumber(1)); }

    /// q^{q2/2} with unit coefficient.
    static Scalar q_pow_half(int q2) {
        Scalar s;
        s.add_term({q2, 0, NilMonomial::unit()}, BaseNumber(1));
        return s;
    }
    static Scalar q_pow(int a) { return q_pow_half(2 * a); }
    static Scalar v() {
        Scalar s;
        s.add_term({0, 1, NilMonomial::unit()}, BaseNumber(1));
        return s;
    }
    static Scalar i() { return Scalar(BaseNumber::i()); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == Key{});
    }
    BaseNumber constant_part() const {
        auto it = terms_.find(Key{});
        return it == terms_.end() ? BaseNumber(0) : it->second;
    }

    void add_term(Key k, const BaseNumber& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        Scalar out = a;
        for (const auto& [k, c] : b.terms_) out.add_term(k, c);
        return out;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        Scalar out = a;
        for (const auto& [k, c] : b.terms_) out.add_term(k, -c);
        return out;
    }
    Scalar operator-() const {
        Scalar out;
        for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
        return out;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar out;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                if (auto m = ka.mono.try_mul(kb.mono))
                    out.add_term({ka.q2 + kb.q2, ka.v + kb.v, *m}, ca * cb);
        return out;
    }
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) {
        auto ai = a.terms_.begin(), bi = b.terms_.begin();
        for (; ai != a.terms_.end() && bi != b.terms_.end(); ++ai, ++bi) {
            if (ai->first != bi->first) return ai->first < bi->first;
            if (ai->second != bi->second) return ai->second < bi->second;
        }
        return bi != b.terms_.end();
    }

    std::optional<NilMonomial> try_div_monomial(NilMonomial den, Scalar* out) const {
        Scalar q;
        for (const auto& [k, c] : terms_) {
            if (!den.divides(k.mono)) return k.mono;
            q.add_term({k.q2, k.v, den.quotient_of(k.mono)}, c);
        }
        *out = q;
        return std::nullopt;
    }
    Scalar div_monomial(NilMonomial den, const std::string& where = "scalar_div") const {
        Scalar q;
        if (auto bad = try_div_monomial(den, &q)) throw UndefinedDivision(den, *bad, where);
        return q;
    }

    /// The contraction substitution q^a -> 1 + a*J*v, exact because (Jv)^2 = 0.
    /// Identity when J is the unit.
    Scalar substitute_contracted_q(RescalingJ J) const {
        if (J.is_unit()) return *this;
        Scalar out;
        for (const auto& [k, c] : terms_) {
            out.add_term({0, k.v, k.mono}, c);
            if (k.q2 != 0) {
                if (auto m = k.mono.try_mul(J.monomial))
                    out.add_term({0, k.v + 1, *m}, c * BaseNumber(Rational(k.q2, 2)));
            }
        }
        return out;
    }

    /// Evaluation q -> 1 (test helper for classical limits).
    Scalar eval_q1() const {
        Scalar out;
        for (const auto& [k, c] : terms_) out.add_term({0, k.v, k.mono}, c);
        return out;
    }

    std::map<NilMonomial, Scalar> decompose_by_monomial() const {
        std::map<NilMonomial, Scalar> out;
        for (const auto& [k, c] : terms_)
            out[k.mono].add_term({k.q2, k.v, NilMonomial::unit()}, c);
        return out;
    }

    std::set<NilMonomial> monomials() const {
        std::set<NilMonomial> out;
        for (const auto& [k, c] : terms_) out.insert(k.mono);
        return out;
    }

    Scalar v0_part() const {
        Scalar out;
        for (const auto& [k, c] : terms_)
            if (k.v == 0) out.add_term(k, c);
        return out;
    }

    std::string str() const;

private:
    Terms terms_;
};

inline Scalar operator*(const BaseNumber& c, const Scalar& s) { return Scalar(c) * s; }

/// (q^rho + q^-rho)/2 as a Laurent element; rho passed doubled.
inline Scalar cosh_rho_v(int rho2) {
    return BaseNumber::half() * (Scalar::q_pow_half(rho2) + Scalar::q_pow_half(-rho2));
}

/// (q^rho - q^-rho)/2; zero when rho is zero, so cosh^2 - sinh^2 = 1 exactly.
inline Scalar sinh_rho_v(int rho2) {
    return BaseNumber::half() * (Scalar::q_pow_half(rho2) - Scalar::q_pow_half(-rho2));
}

inline std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        std::string piece;
        auto append = [&piece](const std::string& f) {
            if (!piece.empty()) piece += "·";
            piece += f;
        };
        const bool bare_unit = (k.q2 == 0 && k.v == 0 && k.mono.is_unit());
        std::string cs = c.str();
        bool neg = false;
        if (cs[0] == '-') {
            neg = true;
            cs = cs.substr(1);
        }
        if (cs != "1" || bare_unit) {
            if (cs.find('/') != std::string::npos && cs[0] != '(') cs = "(" + cs + ")";
            append(cs);
        }
        if (k.q2 != 0) {
            std::string e = (k.q2 % 2 == 0) ? std::to_string(k.q2 / 2)
                                            : std::to_string(k.q2) + "/2";
            append(k.q2 == 2 ? "q" : "q^{" + e + "}");
        }
        if (k.v == 1) append("v");
        if (k.v > 1) append("v^" + std::to_string(k.v));
        if (!k.mono.is_unit()) append(k.mono.str());
        if (out.empty())
            out += neg ? "-" + piece : piece;
        else
            out += (neg ? " - " : " + ") + piece;
    }
    return out;
}

}  // namespace ckq
