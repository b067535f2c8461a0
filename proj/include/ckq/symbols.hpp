#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ckq {

/// Symbol kinds.  t, t', tau, tau' are the quantum generators; a and the
/// b-family are the commutative symbols of the classical matrices.
enum class SymKind : uint8_t { T = 0, TP, TAU, TAUP, A, B, BP, BT, BTP };

inline const char* sym_kind_name(SymKind k) {
    switch (k) {
        case SymKind::T: return "t";
        case SymKind::TP: return "t'";
        case SymKind::TAU: return "τ";
        case SymKind::TAUP: return "τ'";
        case SymKind::A: return "a";
        case SymKind::B: return "b";
        case SymKind::BP: return "b'";
        case SymKind::BT: return "b̃";
        case SymKind::BTP: return "b̃'";
    }
    return "?";
}

inline const char* sym_kind_ascii(SymKind k) {
    switch (k) {
        case SymKind::T: return "t";
        case SymKind::TP: return "t'";
        case SymKind::TAU: return "tau";
        case SymKind::TAUP: return "tau'";
        case SymKind::A: return "a";
        case SymKind::B: return "b";
        case SymKind::BP: return "b'";
        case SymKind::BT: return "bt";
        case SymKind::BTP: return "bt'";
    }
    return "?";
}

struct Sym {
    SymKind kind;
    uint8_t row;
    uint8_t col;

    friend auto operator<=>(const Sym&, const Sym&) = default;

    uint32_t id() const { return (uint32_t(kind) << 16) | (uint32_t(row) << 8) | col; }

    std::string str() const {
        return std::string(sym_kind_name(kind)) + std::to_string(row) + std::to_string(col);
    }
    std::string ascii() const {
        return std::string(sym_kind_ascii(kind)) + std::to_string(row) + std::to_string(col);
    }
    std::string latex() const {
        std::string base;
        switch (kind) {
            case SymKind::T: base = "t"; break;
            case SymKind::TP: base = "t'"; break;
            case SymKind::TAU: base = "\\tau"; break;
            case SymKind::TAUP: base = "\\tau'"; break;
            case SymKind::A: base = "a"; break;
            case SymKind::B: base = "b"; break;
            case SymKind::BP: base = "b'"; break;
            case SymKind::BT: base = "\\tilde{b}"; break;
            case SymKind::BTP: base = "\\tilde{b}'"; break;
        }
        return base + "_{" + std::to_string(row) + std::to_string(col) + "}";
    }
};

/// Word over symbols; the empty word is the algebra unit.  Degree in this
/// project never exceeds 2 (RTT and orthogonality relations are quadratic),
/// the fixed capacity just leaves headroom for tensor-leg products.
class Word {
public:
    Word() = default;
    Word(Sym s) : n_(1) { s_[0] = s; }

    static constexpr int capacity = 6;

    int size() const { return n_; }
    bool empty() const { return n_ == 0; }
    const Sym& operator[](int i) const { return s_[i]; }

    void push(Sym s) {
        if (n_ == capacity) throw std::length_error("Word: degree overflow");
        s_[n_++] = s;
    }

    friend Word operator*(const Word& a, const Word& b) {
        Word out = a;
        for (int i = 0; i < b.n_; ++i) out.push(b.s_[i]);
        return out;
    }

    Word sorted() const {
        Word out = *this;
        std::sort(out.s_.begin(), out.s_.begin() + out.n_);
        return out;
    }

    friend bool operator==(const Word& a, const Word& b) {
        if (a.n_ != b.n_) return false;
        for (int i = 0; i < a.n_; ++i)
            if (a.s_[i] != b.s_[i]) return false;
        return true;
    }
    friend bool operator<(const Word& a, const Word& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        for (int i = 0; i < a.n_; ++i)
            if (a.s_[i] != b.s_[i]) return a.s_[i] < b.s_[i];
        return false;
    }

    std::string str() const {
        if (n_ == 0) return "1";
        std::string out;
        for (int i = 0; i < n_; ++i) {
            if (i) out += "·";
            out += s_[i].str();
        }
        return out;
    }
    std::string latex() const {
        if (n_ == 0) return "1";
        std::string out;
        for (int i = 0; i < n_; ++i) out += s_[i].latex();
        return out;
    }

private:
    std::array<Sym, capacity> s_{};
    int n_ = 0;
};

}  // namespace ckq
