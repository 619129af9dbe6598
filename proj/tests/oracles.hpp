#pragma once

// Plain-integer reference implementations used to compute expected values.
// Kept deliberately independent of the library: no fie types, just loops
// over std::vector<int>.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;

inline Vec pointwise_min(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (size_t j = 0; j < a.size(); ++j) out[j] = std::min(a[j], b[j]);
    return out;
}

inline Vec pointwise_max(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (size_t j = 0; j < a.size(); ++j) out[j] = std::max(a[j], b[j]);
    return out;
}

inline int height(const Vec& a) {
    int h = 0;
    for (int v : a) h = std::max(h, v);
    return h;
}

inline int match(const Vec& observation, const Vec& antecedent) {
    int best = 0;
    for (size_t j = 0; j < observation.size(); ++j)
        best = std::max(best, std::min(observation[j], antecedent[j]));
    return best;
}

inline Vec clip(const Vec& consequent, int w) {
    Vec out(consequent.size());
    for (size_t j = 0; j < consequent.size(); ++j) out[j] = std::min(consequent[j], w);
    return out;
}

struct RefRule {
    std::vector<Vec> antecedents;
    Vec consequent;
};

// Brute force over every rule and every element.
inline Vec infer(const std::vector<RefRule>& rules, const std::vector<Vec>& observations) {
    Vec out(rules.front().consequent.size(), 0);
    for (const RefRule& rule : rules) {
        int w = 15;
        for (size_t m = 0; m < observations.size(); ++m)
            w = std::min(w, match(observations[m], rule.antecedents[m]));
        for (size_t j = 0; j < out.size(); ++j)
            out[j] = std::max(out[j], std::min(w, rule.consequent[j]));
    }
    return out;
}

// MSB-first 4-bit expansion.
inline std::vector<int> word_bits(int g) {
    return {(g >> 3) & 1, (g >> 2) & 1, (g >> 1) & 1, g & 1};
}

// Grades -> bit string (each grade MSB first) -> bytes (MSB-first packing,
// zero padded). Mirrors how a person would pack the table by hand.
inline std::vector<std::uint8_t> pack_grades(const Vec& grades) {
    std::vector<int> bits;
    for (int g : grades)
        for (int b : word_bits(g)) bits.push_back(b);
    std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
    for (size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) bytes[i / 8] |= static_cast<std::uint8_t>(0x80u >> (i % 8));
    return bytes;
}

}  // namespace oracle
