#pragma once

#include "ckq/rational.hpp"

#include <stdexcept>
#include <string>

namespace ckq {

/// Element of the field Q(i, sqrt2), stored on the basis {1, i, sqrt2, i*sqrt2}.
///
/// This is the smallest field containing every numeric constant of the build:
/// the 1/sqrt2 entries of the basis-change matrices and the factor i carried
/// by the tau-generators.  All four coordinates are exact rationals.
class BaseNumber {
public:
    BaseNumber() = default;
    BaseNumber(Rational re) : re_(std::move(re)) {}
    BaseNumber(int n) : re_(n) {}
    BaseNumber(Rational re, Rational im, Rational rt, Rational imrt)
        : re_(std::move(re)), im_(std::move(im)), rt_(std::move(rt)), imrt_(std::move(imrt)) {}

    static BaseNumber i() { return BaseNumber(0, 1, 0, 0); }
    static BaseNumber sqrt2() { return BaseNumber(0, 0, 1, 0); }
    static BaseNumber half() { return BaseNumber(Rational(1, 2)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    const Rational& rt() const { return rt_; }
    const Rational& imrt() const { return imrt_; }

    bool is_zero() const { return re_ == 0 && im_ == 0 && rt_ == 0 && imrt_ == 0; }
    bool is_rational() const { return im_ == 0 && rt_ == 0 && imrt_ == 0; }

    friend BaseNumber operator+(const BaseNumber& a, const BaseNumber& b) {
        return {a.re_ + b.re_, a.im_ + b.im_, a.rt_ + b.rt_, a.imrt_ + b.imrt_};
    }
    friend BaseNumber operator-(const BaseNumber& a, const BaseNumber& b) {
        return {a.re_ - b.re_, a.im_ - b.im_, a.rt_ - b.rt_, a.imrt_ - b.imrt_};
    }
    BaseNumber operator-() const { return {-re_, -im_, -rt_, -imrt_}; }

    // (a + bi + c*s + d*is)(a' + b'i + c's + d'is) with s^2 = 2, i^2 = -1.
    friend BaseNumber operator*(const BaseNumber& x, const BaseNumber& y) {
        const Rational &a = x.re_, &b = x.im_, &c = x.rt_, &d = x.imrt_;
        const Rational &e = y.re_, &f = y.im_, &g = y.rt_, &h = y.imrt_;
        return {a * e - b * f + 2 * (c * g - d * h),
                a * f + b * e + 2 * (c * h + d * g),
                a * g + c * e - b * h - d * f,
                a * h + d * e + b * g + f * c};
    }

    BaseNumber& operator+=(const BaseNumber& o) { return *this = *this + o; }
    BaseNumber& operator-=(const BaseNumber& o) { return *this = *this - o; }
    BaseNumber& operator*=(const BaseNumber& o) { return *this = *this * o; }

    /// Multiplicative inverse.  Write x = p + q*sqrt2 with p, q in Q(i); then
    /// x * conj(x) = p^2 - 2 q^2 lies in Q(i) and inverts by the usual
    /// complex-conjugate trick.
    BaseNumber inverse() const {
        if (is_zero()) throw std::domain_error("BaseNumber: inverse of zero");
        // conj over sqrt2
        BaseNumber conj_rt(re_, im_, -rt_, -imrt_);
        BaseNumber n = *this * conj_rt;  // in Q(i): n.rt_ == n.imrt_ == 0
        Rational den = n.re_ * n.re_ + n.im_ * n.im_;
        BaseNumber conj_i(n.re_ / den, -n.im_ / den, 0, 0);
        return conj_rt * conj_i;
    }

    friend BaseNumber operator/(const BaseNumber& a, const BaseNumber& b) { return a * b.inverse(); }

    friend bool operator==(const BaseNumber& a, const BaseNumber& b) {
        return a.re_ == b.re_ && a.im_ == b.im_ && a.rt_ == b.rt_ && a.imrt_ == b.imrt_;
    }
    friend bool operator!=(const BaseNumber& a, const BaseNumber& b) { return !(a == b); }

    // total order for canonical term sorting only
    friend bool operator<(const BaseNumber& a, const BaseNumber& b) {
        if (a.re_ != b.re_) return a.re_ < b.re_;
        if (a.im_ != b.im_) return a.im_ < b.im_;
        if (a.rt_ != b.rt_) return a.rt_ < b.rt_;
        return a.imrt_ < b.imrt_;
    }

    /// Canonical rendering, e.g. "1", "-1/2", "i", "-3i", "2√2", "i√2", "(1+i)".
    /// Composite values are parenthesized so they can prefix a monomial.
    std::string str() const;

private:
    Rational re_{0}, im_{0}, rt_{0}, imrt_{0};
};

inline std::string BaseNumber::str() const {
    struct Part {
        const Rational* c;
        const char* unit;
    };
    const Part parts[4] = {{&re_, ""}, {&im_, "i"}, {&rt_, "√2"}, {&imrt_, "i√2"}};
    int nonzero = 0;
    for (const auto& p : parts)
        if (*p.c != 0) nonzero++;
    if (nonzero == 0) return "0";

    std::string out;
    bool first = true;
    for (const auto& p : parts) {
        if (*p.c == 0) continue;
        Rational c = *p.c;
        if (first) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += (c < 0) ? "-" : "+";
            if (c < 0) c = -c;
        }
        const bool has_unit = p.unit[0] != '\0';
        if (!has_unit || c != 1) out += to_string(c);
        out += p.unit;
        first = false;
    }
    if (nonzero > 1) return "(" + out + ")";
    return out;
}

}  // namespace ckq
