#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ckq {

/// Permutation of 1..N, stored as the image vector (sigma_1, ..., sigma_N).
/// The primed index k' = N+1-k is an accessor, never stored.
class Permutation {
public:
    explicit Permutation(std::vector<int> images) : sigma_(std::move(images)) {
        std::vector<char> seen(sigma_.size() + 1, 0);
        for (int v : sigma_) {
            if (v < 1 || v > int(sigma_.size()) || seen[v])
                throw std::invalid_argument("Permutation: not a bijection on 1..N");
            seen[v] = 1;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    int size() const { return int(sigma_.size()); }
    int operator()(int k) const { return sigma_[k - 1]; }          // sigma_k
    int primed(int k) const { return size() + 1 - k; }             // k'
    int at_primed(int k) const { return sigma_[primed(k) - 1]; }   // sigma_{k'}

    const std::vector<int>& images() const { return sigma_; }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.sigma_ == b.sigma_;
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.sigma_ < b.sigma_;
    }

    std::string str() const {
        std::string out = "(";
        for (size_t i = 0; i < sigma_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(sigma_[i]);
        }
        return out + ")";
    }

private:
    std::vector<int> sigma_;
};

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// Fingerprint deciding when two permutations induce the same Pimenov-factor
/// pattern in B_sigma(j) for every j: the list of unordered pairs
/// {sigma_k, sigma_k'} for k = 1..n (plus the middle image for odd N).
/// Swapping a pair only renames symbols, so pairs are stored min-first.
struct SigmaFingerprint {
    std::vector<std::pair<int, int>> pairs;
    int middle = 0;  // sigma_{n+1} for odd N, 0 otherwise

    friend bool operator==(const SigmaFingerprint&, const SigmaFingerprint&) = default;
    friend bool operator<(const SigmaFingerprint& a, const SigmaFingerprint& b) {
        if (a.pairs != b.pairs) return a.pairs < b.pairs;
        return a.middle < b.middle;
    }

    std::string str() const {
        std::string out;
        for (auto [x, y] : pairs)
            out += "{" + std::to_string(x) + "," + std::to_string(y) + "}";
        if (middle) out += "|" + std::to_string(middle);
        return out;
    }
};

inline SigmaFingerprint fingerprint(const Permutation& s) {
    SigmaFingerprint fp;
    const int N = s.size(), n = N / 2;
    for (int k = 1; k <= n; ++k) {
        int a = s(k), b = s.at_primed(k);
        fp.pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
    if (N % 2 == 1) fp.middle = s(n + 1);
    return fp;
}

struct SigmaClass {
    Permutation representative;  // lexicographically smallest member
    SigmaFingerprint print;
    int members = 0;
};

/// All N! permutations deduped by fingerprint, deterministically ordered by
/// representative.
std::vector<SigmaClass> sigma_classes(int n);

}  // namespace ckq
