#pragma once

#include "ckq/scalar.hpp"
#include "ckq/symbols.hpp"

#include <functional>
#include <map>
#include <set>

namespace ckq {

/// Polynomial in the symbols with Scalar coefficients.  Commutative == false
/// gives the free (noncommutative) algebra used for the quantum generators;
/// Commutative == true sorts every word and is used for the classical
/// matrices.  One arithmetic core, two normalizations.
template <bool Commutative>
class Poly {
public:
    using Terms = std::map<Word, Scalar>;

    Poly() = default;
    Poly(const Scalar& c) { add_term(Word(), c); }
    Poly(int n) { add_term(Word(), Scalar(n)); }
    Poly(Sym s, const Scalar& c = Scalar(1)) { add_term(Word(s), c); }

    static Poly unit() { return Poly(1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar coeff(const Word& w) const {
        auto it = terms_.find(normal(w));
        return it == terms_.end() ? Scalar() : it->second;
    }

    void add_term(const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        Word key = normal(w);
        auto [it, fresh] = terms_.emplace(key, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly out = a;
        for (const auto& [w, c] : b.terms_) out.add_term(w, c);
        return out;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly out = a;
        for (const auto& [w, c] : b.terms_) out.add_term(w, -c);
        return out;
    }
    Poly operator-() const {
        Poly out;
        for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
        return out;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly out;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) {
                Scalar c = ca * cb;
                if (!c.is_zero()) out.add_term(wa * wb, c);
            }
        return out;
    }
    friend Poly operator*(const Scalar& c, const Poly& p) {
        Poly out;
        for (const auto& [w, pc] : p.terms_) out.add_term(w, c * pc);
        return out;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    int degree() const {
        int d = 0;
        for (const auto& [w, c] : terms_) d = std::max(d, w.size());
        return d;
    }
    bool is_linear() const { return degree() <= 1; }

    std::optional<NilMonomial> try_div_monomial(NilMonomial den, Poly* out) const {
        Poly q;
        for (const auto& [w, c] : terms_) {
            Scalar qc;
            if (auto bad = c.try_div_monomial(den, &qc)) return bad;
            q.add_term(w, qc);
        }
        *out = q;
        return std::nullopt;
    }
    Poly div_monomial(NilMonomial den, const std::string& where = "poly_div") const {
        Poly q;
        if (auto bad = try_div_monomial(den, &q)) throw UndefinedDivision(den, *bad, where);
        return q;
    }

    Poly substitute_contracted_q(RescalingJ J) const {
        Poly out;
        for (const auto& [w, c] : terms_) out.add_term(w, c.substitute_contracted_q(J));
        return out;
    }
    Poly eval_q1() const {
        Poly out;
        for (const auto& [w, c] : terms_) out.add_term(w, c.eval_q1());
        return out;
    }

    /// Replace symbols by polynomials (used by fixtures and the degenerate
    /// reduction).  Symbols absent from the map stay themselves.
    Poly substitute(const std::map<Sym, Poly>& images) const {
        Poly out;
        for (const auto& [w, c] : terms_) {
            Poly prod(c);
            for (int i = 0; i < w.size(); ++i) {
                auto it = images.find(w[i]);
                prod = prod * (it == images.end() ? Poly(w[i]) : it->second);
            }
            out += prod;
        }
        return out;
    }

    std::map<NilMonomial, Poly> decompose_by_monomial() const {
        std::map<NilMonomial, Poly> out;
        for (const auto& [w, c] : terms_)
            for (const auto& [m, part] : c.decompose_by_monomial())
                out[m].add_term(w, part);
        return out;
    }

    std::set<Word> word_set() const {
        std::set<Word> out;
        for (const auto& [w, c] : terms_) out.insert(w);
        return out;
    }

    std::set<Sym> symbols() const {
        std::set<Sym> out;
        for (const auto& [w, c] : terms_)
            for (int i = 0; i < w.size(); ++i) out.insert(w[i]);
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [w, c] : terms_) {
            std::string cs = c.str();
            bool neg = false;
            if (c.terms().size() == 1 && cs[0] == '-') {
                neg = true;
                cs = cs.substr(1);
            }
            std::string piece;
            if (w.empty()) {
                piece = cs;
            } else if (cs == "1") {
                piece = w.str();
            } else {
                if (c.terms().size() > 1) cs = "(" + cs + ")";
                piece = cs + "·" + w.str();
            }
            if (out.empty())
                out += neg ? "-" + piece : piece;
            else
                out += (neg ? " - " : " + ") + piece;
        }
        return out;
    }

private:
    static Word normal(const Word& w) {
        if constexpr (Commutative)
            return w.sorted();
        else
            return w;
    }
    Terms terms_;
};

using NcPoly = Poly<false>;
using CPoly = Poly<true>;

inline NcPoly nc_mul(const NcPoly& a, const NcPoly& b) { return a * b; }

/// Element of the tensor square of the free algebra; coproduct images live
/// here.  Multiplication is (a (x) b)(c (x) d) = ac (x) bd.
class TensorPoly {
public:
    using Key = std::pair<Word, Word>;
    using Terms = std::map<Key, Scalar>;

    TensorPoly() = default;
    TensorPoly(const Scalar& c) { add_term(Word(), Word(), c); }

    static TensorPoly pure(const NcPoly& a, const NcPoly& b) {
        TensorPoly out;
        for (const auto& [wa, ca] : a.terms())
            for (const auto& [wb, cb] : b.terms()) out.add_term(wa, wb, ca * cb);
        return out;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& l, const Word& r, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(Key{l, r}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend TensorPoly operator+(const TensorPoly& a, const TensorPoly& b) {
        TensorPoly out = a;
        for (const auto& [k, c] : b.terms_) out.add_term(k.first, k.second, c);
        return out;
    }
    friend TensorPoly operator-(const TensorPoly& a, const TensorPoly& b) {
        TensorPoly out = a;
        for (const auto& [k, c] : b.terms_) out.add_term(k.first, k.second, -c);
        return out;
    }
    friend TensorPoly operator*(const TensorPoly& a, const TensorPoly& b) {
        TensorPoly out;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                Scalar c = ca * cb;
                if (!c.is_zero())
                    out.add_term(ka.first * kb.first, ka.second * kb.second, c);
            }
        return out;
    }
    friend TensorPoly operator*(const Scalar& c, const TensorPoly& p) {
        TensorPoly out;
        for (const auto& [k, pc] : p.terms_) out.add_term(k.first, k.second, c * pc);
        return out;
    }
    TensorPoly& operator+=(const TensorPoly& o) { return *this = *this + o; }
    TensorPoly& operator-=(const TensorPoly& o) { return *this = *this - o; }

    friend bool operator==(const TensorPoly& a, const TensorPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorPoly& a, const TensorPoly& b) { return !(a == b); }

    std::optional<NilMonomial> try_div_monomial(NilMonomial den, TensorPoly* out) const {
        TensorPoly q;
        for (const auto& [k, c] : terms_) {
            Scalar qc;
            if (auto bad = c.try_div_monomial(den, &qc)) return bad;
            q.add_term(k.first, k.second, qc);
        }
        *out = q;
        return std::nullopt;
    }
    TensorPoly div_monomial(NilMonomial den, const std::string& where = "tensor_div") const {
        TensorPoly q;
        if (auto bad = try_div_monomial(den, &q)) throw UndefinedDivision(den, *bad, where);
        return q;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms_) {
            std::string cs = c.str();
            bool neg = false;
            if (c.terms().size() == 1 && cs[0] == '-') {
                neg = true;
                cs = cs.substr(1);
            }
            if (c.terms().size() > 1) cs = "(" + cs + ")";
            std::string piece = (cs != "1" ? cs + "·" : "");
            piece += k.first.str() + "⊗" + k.second.str();
            if (out.empty())
                out += neg ? "-" + piece : piece;
            else
                out += (neg ? " - " : " + ") + piece;
        }
        return out;
    }

private:
    Terms terms_;
};

}  // namespace ckq
