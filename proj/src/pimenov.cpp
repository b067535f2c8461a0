#include "ckq/pimenov.hpp"

namespace ckq {

namespace {

// Recursive-descent parser for the canonical PimenovElement rendering.
// Grammar (exactly what str() emits):
//   element :=  "0" | term (" + " term)*
//   term    :=  coeff ("·" iota)*
//   coeff   :=  "(" part (("+"|"-") part)* ")" | ["-"] part
//   part    :=  [rational] unit | rational       unit := "i" | "√2" | "i√2"
//   iota    :=  "ι" digits
struct Cursor {
    const std::string& s;
    size_t pos = 0;

    bool eat(const std::string& tok) {
        if (s.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    bool done() const { return pos == s.size(); }
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("parse_pimenov: " + why + " at byte " + std::to_string(pos));
    }
};

Rational parse_rational(Cursor& c) {
    size_t start = c.pos;
    while (c.pos < c.s.size() && isdigit(static_cast<unsigned char>(c.s[c.pos]))) c.pos++;
    if (c.pos == start) c.fail("expected digits");
    BigInt num(c.s.substr(start, c.pos - start));
    if (c.eat("/")) {
        size_t dstart = c.pos;
        while (c.pos < c.s.size() && isdigit(static_cast<unsigned char>(c.s[c.pos]))) c.pos++;
        if (c.pos == dstart) c.fail("expected denominator");
        return Rational(num, BigInt(c.s.substr(dstart, c.pos - dstart)));
    }
    return Rational(num);
}

// one signed basis part, added into acc
void parse_part(Cursor& c, bool negative, BaseNumber& acc) {
    Rational mag(1);
    bool have_mag = false;
    if (c.pos < c.s.size() && isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
        mag = parse_rational(c);
        have_mag = true;
    }
    if (negative) mag = -mag;
    if (c.eat("i√2")) {
        acc += BaseNumber(0, 0, 0, mag);
    } else if (c.eat("i")) {
        acc += BaseNumber(0, mag, 0, 0);
    } else if (c.eat("√2")) {
        acc += BaseNumber(0, 0, mag, 0);
    } else if (have_mag) {
        acc += BaseNumber(mag);
    } else {
        c.fail("expected coefficient part");
    }
}

BaseNumber parse_coeff(Cursor& c) {
    BaseNumber acc;
    if (c.eat("(")) {
        parse_part(c, c.eat("-"), acc);
        while (!c.eat(")")) {
            if (c.eat("+"))
                parse_part(c, false, acc);
            else if (c.eat("-"))
                parse_part(c, true, acc);
            else
                c.fail("expected '+', '-' or ')'");
        }
        return acc;
    }
    parse_part(c, c.eat("-"), acc);
    return acc;
}

}  // namespace

PimenovElement parse_pimenov(const std::string& text) {
    if (text == "0") return {};
    Cursor c{text};
    PimenovElement out;
    for (;;) {
        BaseNumber coef = parse_coeff(c);
        NilMonomial mono = NilMonomial::unit();
        while (c.eat("·ι")) {
            size_t start = c.pos;
            while (c.pos < c.s.size() && isdigit(static_cast<unsigned char>(c.s[c.pos]))) c.pos++;
            if (c.pos == start) c.fail("expected generator index");
            int k = std::stoi(c.s.substr(start, c.pos - start));
            auto m = mono.try_mul(NilMonomial::iota(k));
            if (!m) c.fail("repeated generator");
            mono = *m;
        }
        out.add_term(mono, coef);
        if (c.done()) break;
        if (!c.eat(" + ")) c.fail("expected ' + '");
    }
    return out;
}

}  // namespace ckq
