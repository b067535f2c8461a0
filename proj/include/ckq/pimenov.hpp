#pragma once

#include "ckq/base_number.hpp"
#include "ckq/errors.hpp"
#include "ckq/nilpotent.hpp"

#include <map>
#include <optional>
#include <string>

namespace ckq {

/// Element of the Pimenov algebra D_n(iota; C): a finite sum of coefficients
/// times square-free monomials in the nilpotent generators.  Generic over any
/// exact coefficient field with equality.
template <class Coeff>
class PimenovElementT {
public:
    using Terms = std::map<NilMonomial, Coeff>;

    PimenovElementT() = default;
    PimenovElementT(const Coeff& c) { add_term(NilMonomial::unit(), c); }
    PimenovElementT(NilMonomial m, const Coeff& c = Coeff(1)) { add_term(m, c); }

    static PimenovElementT iota(int k) { return PimenovElementT(NilMonomial::iota(k)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Coeff coeff(NilMonomial m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    void add_term(NilMonomial m, const Coeff& c) {
        if (c == Coeff(0)) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == Coeff(0)) terms_.erase(it);
        }
    }

    friend PimenovElementT operator+(const PimenovElementT& a, const PimenovElementT& b) {
        PimenovElementT out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, c);
        return out;
    }
    friend PimenovElementT operator-(const PimenovElementT& a, const PimenovElementT& b) {
        PimenovElementT out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, Coeff(0) - c);
        return out;
    }

    // Distributes over terms; products whose monomials share a generator vanish.
    friend PimenovElementT operator*(const PimenovElementT& a, const PimenovElementT& b) {
        PimenovElementT out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                if (auto m = ma.try_mul(mb)) out.add_term(*m, ca * cb);
        return out;
    }

    PimenovElementT& operator+=(const PimenovElementT& o) { return *this = *this + o; }
    PimenovElementT& operator-=(const PimenovElementT& o) { return *this = *this - o; }
    PimenovElementT& operator*=(const PimenovElementT& o) { return *this = *this * o; }

    friend bool operator==(const PimenovElementT& a, const PimenovElementT& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const PimenovElementT& a, const PimenovElementT& b) { return !(a == b); }

    /// Division by a monomial.  Defined iff every term contains the divisor's
    /// index set; on success the divisor's indices are removed from each term.
    /// Returns the offending monomial otherwise.
    std::optional<NilMonomial> try_div_monomial(NilMonomial den, PimenovElementT* out) const {
        PimenovElementT q;
        for (const auto& [m, c] : terms_) {
            if (!den.divides(m)) return m;
            q.add_term(den.quotient_of(m), c);
        }
        *out = q;
        return std::nullopt;
    }

    PimenovElementT div_monomial(NilMonomial den, const std::string& where = "pim_div") const {
        PimenovElementT q;
        if (auto bad = try_div_monomial(den, &q)) throw UndefinedDivision(den, *bad, where);
        return q;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += c.str();
            if (!m.is_unit()) out += "·" + m.str();
        }
        return out;
    }

private:
    Terms terms_;  // no zero coefficients
};

using PimenovElement = PimenovElementT<BaseNumber>;

inline PimenovElement pim_mul(const PimenovElement& a, const PimenovElement& b) { return a * b; }

inline PimenovElement pim_div_monomial(const PimenovElement& num, NilMonomial den) {
    return num.div_monomial(den);
}

/// Parses the canonical rendering produced by PimenovElement::str().
/// Round-trips exactly on normalized elements; anything else is rejected.
PimenovElement parse_pimenov(const std::string& text);

}  // namespace ckq
