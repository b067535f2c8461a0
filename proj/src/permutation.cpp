#include "ckq/permutation.hpp"

#include <map>

namespace ckq {

std::vector<SigmaClass> sigma_classes(int n) {
    std::map<SigmaFingerprint, SigmaClass> classes;
    for (const auto& s : all_permutations(n)) {
        auto fp = fingerprint(s);
        auto it = classes.find(fp);
        if (it == classes.end()) {
            classes.emplace(fp, SigmaClass{s, fp, 1});
        } else {
            it->second.members++;
            if (s < it->second.representative) it->second.representative = s;
        }
    }
    std::vector<SigmaClass> out;
    out.reserve(classes.size());
    for (auto& [fp, c] : classes) out.push_back(std::move(c));
    std::sort(out.begin(), out.end(), [](const SigmaClass& a, const SigmaClass& b) {
        return a.representative < b.representative;
    });
    return out;
}

}  // namespace ckq
