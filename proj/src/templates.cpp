#include "ckq/templates.hpp"

#include <array>
#include <mutex>
#include <stdexcept>

namespace ckq {

namespace {
std::vector<EntryTemplate> build_entry_templates(int N);
}

// built once per N; the enumeration loops request these constantly
const std::vector<EntryTemplate>& entry_templates(int N) {
    static std::mutex mu;
    static std::array<std::vector<EntryTemplate>, 16> cache;
    if (N < 2 || N >= 16) throw std::invalid_argument("entry_templates: N out of range");
    std::lock_guard<std::mutex> lock(mu);
    if (cache[N].empty()) cache[N] = build_entry_templates(N);
    return cache[N];
}

namespace {

std::vector<EntryTemplate> build_entry_templates(int N) {
    const int n = N / 2;
    const bool odd = N % 2;
    const auto B = 0, BP = 1, BT = 2, BTP = 3;
    const BaseNumber one(1), mone(-1), I = BaseNumber::i(), mI = -BaseNumber::i();

    std::vector<EntryTemplate> tpl(size_t(N) * N);
    auto at = [&](int r, int c) -> EntryTemplate& { return tpl[size_t(r - 1) * N + (c - 1)]; };
    auto pr = [&](int k) { return N + 1 - k; };

    for (int k = 1; k <= n; ++k) {
        const int kp = pr(k);
        at(k, k) = {{B, k, k, one}, {BT, k, k, I, k, kp}};
        at(kp, kp) = {{B, k, k, one}, {BT, k, k, mI, k, kp}};
        at(k, kp) = {{B, kp, k, one}, {BT, kp, k, mI, k, kp}};
        at(kp, k) = {{B, kp, k, one}, {BT, kp, k, I, k, kp}};
    }
    if (odd) {
        const int m = n + 1;
        at(m, m) = {{B, m, m, one}};
        for (int k = 1; k <= n; ++k) {
            const int kp = pr(k);
            at(k, m) = {{B, k, m, one, k, m}, {BT, k, m, mI, m, kp}};
            at(kp, m) = {{B, k, m, one, k, m}, {BT, k, m, I, m, kp}};
            at(m, k) = {{B, m, k, one, k, m}, {BT, m, k, I, m, kp}};
            at(m, kp) = {{B, m, k, one, k, m}, {BT, m, k, mI, m, kp}};
        }
    }
    for (int k = 1; k <= n; ++k)
        for (int p = 1; p <= n; ++p) {
            if (k == p) continue;
            const int kp = pr(k), pp = pr(p);
            at(k, p) = {{B, k, p, one, k, p},
                        {BP, k, p, one, kp, pp},
                        {BT, k, p, I, k, pp},
                        {BTP, k, p, mI, kp, p}};
            at(k, pp) = {{B, k, p, one, k, p},
                         {BP, k, p, mone, kp, pp},
                         {BT, k, p, mI, k, pp},
                         {BTP, k, p, mI, kp, p}};
            at(kp, p) = {{B, k, p, one, k, p},
                         {BP, k, p, mone, kp, pp},
                         {BT, k, p, I, k, pp},
                         {BTP, k, p, I, kp, p}};
            at(kp, pp) = {{B, k, p, one, k, p},
                          {BP, k, p, one, kp, pp},
                          {BT, k, p, mI, k, pp},
                          {BTP, k, p, I, kp, p}};
        }
    return tpl;
}

}  // namespace

}  // namespace ckq
