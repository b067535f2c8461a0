#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ckq {

/// Square-free monomial in the nilpotent generators iota_1, iota_2, ...
///
/// Stored as an index bitmask (bit k-1 set <=> iota_k present), so iota^2 = 0
/// is a representation invariant: a product that would repeat an index is the
/// zero element and is reported as such by try_mul.
class NilMonomial {
public:
    constexpr NilMonomial() = default;
    static NilMonomial unit() { return NilMonomial(); }
    static NilMonomial iota(int k) {
        if (k < 1 || k > 31) throw std::out_of_range("NilMonomial: generator index");
        return NilMonomial(1u << (k - 1));
    }
    static NilMonomial from_mask(uint32_t m) { return NilMonomial(m); }
    static NilMonomial from_indices(const std::vector<int>& idx) {
        NilMonomial m;
        for (int k : idx) m.mask_ |= iota(k).mask_;
        return m;
    }

    uint32_t mask() const { return mask_; }
    bool is_unit() const { return mask_ == 0; }
    bool contains(int k) const { return (mask_ >> (k - 1)) & 1u; }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (int k = 1; k <= 31; ++k)
            if (contains(k)) out.push_back(k);
        return out;
    }

    /// Product; nullopt means the product vanished (shared generator squared).
    std::optional<NilMonomial> try_mul(NilMonomial o) const {
        if (mask_ & o.mask_) return std::nullopt;
        return NilMonomial(mask_ | o.mask_);
    }

    bool divides(NilMonomial num) const { return (mask_ & ~num.mask_) == 0; }

    /// Quotient num / *this; caller must have checked divides().
    NilMonomial quotient_of(NilMonomial num) const { return NilMonomial(num.mask_ & ~mask_); }

    NilMonomial intersect(NilMonomial o) const { return NilMonomial(mask_ & o.mask_); }

    friend bool operator==(NilMonomial a, NilMonomial b) { return a.mask_ == b.mask_; }
    friend bool operator!=(NilMonomial a, NilMonomial b) { return a.mask_ != b.mask_; }
    friend bool operator<(NilMonomial a, NilMonomial b) { return a.mask_ < b.mask_; }

    std::string str() const {
        if (is_unit()) return "1";
        std::string out;
        for (int k : indices()) {
            if (!out.empty()) out += "·";
            out += "ι" + std::to_string(k);
        }
        return out;
    }

    /// ASCII form used by the JSON encodings, e.g. "i2i3"; "1" for the unit.
    std::string ascii() const {
        if (is_unit()) return "1";
        std::string out;
        for (int k : indices()) out += "i" + std::to_string(k);
        return out;
    }

private:
    explicit constexpr NilMonomial(uint32_t m) : mask_(m) {}
    uint32_t mask_ = 0;
};

/// The Cayley-Klein parameter vector j = (j_1, ..., j_{N-1}), each entry
/// either 1 or the nilpotent iota_k.
class JSignature {
public:
    JSignature(int n_group, uint32_t nilpotent_mask = 0) : n_(n_group), mask_(nilpotent_mask) {
        if (n_group < 2) throw std::invalid_argument("JSignature: N must be >= 2");
        if (mask_ >> (n_group - 1)) throw std::invalid_argument("JSignature: index out of range");
    }

    static JSignature all_unit(int n_group) { return JSignature(n_group); }
    static JSignature all_nilpotent(int n_group) {
        return JSignature(n_group, (1u << (n_group - 1)) - 1u);
    }

    int group_n() const { return n_; }         // the N of SO(N)
    int size() const { return n_ - 1; }        // number of parameters
    uint32_t nilpotent_mask() const { return mask_; }
    bool nilpotent(int k) const { return (mask_ >> (k - 1)) & 1u; }

    NilMonomial nilpotent_monomial() const { return NilMonomial::from_mask(mask_); }

    friend bool operator==(const JSignature& a, const JSignature& b) {
        return a.n_ == b.n_ && a.mask_ == b.mask_;
    }

    std::string str() const {
        std::string out;
        for (int k = 1; k <= size(); ++k) {
            if (k > 1) out += ",";
            out += nilpotent(k) ? "ι" + std::to_string(k) : "1";
        }
        return out;
    }

private:
    int n_;
    uint32_t mask_;
};

/// The (mu,nu) product: indices l in [min, max) where j_l is nilpotent.
/// (mu,mu) is the unit monomial.
inline NilMonomial mon_product(int mu, int nu, const JSignature& j) {
    if (mu < 1 || nu < 1 || mu > j.group_n() || nu > j.group_n())
        throw std::out_of_range("mon_product: index");
    const int lo = std::min(mu, nu), hi = std::max(mu, nu);
    uint32_t m = 0;
    for (int l = lo; l < hi; ++l)
        if (j.nilpotent(l)) m |= 1u << (l - 1);
    return NilMonomial::from_mask(m);
}

}  // namespace ckq
