#pragma once

#include <random>
#include <vector>

#include "fuzzy.hpp"
#include "oracles.hpp"

namespace testutil {

inline fie::FuzzyVector fv(const oracle::Vec& values) {
    return fie::FuzzyVector::from_values(std::span<const int>(values.data(), values.size()));
}

inline oracle::Vec vec(const fie::FuzzyVector& v) {
    oracle::Vec out;
    out.reserve(static_cast<size_t>(v.universe()));
    for (int j = 0; j < v.universe(); ++j) out.push_back(v[j].value());
    return out;
}

inline oracle::Vec random_vec(std::mt19937_64& rng, int universe) {
    oracle::Vec out(static_cast<size_t>(universe));
    for (int& v : out) v = static_cast<int>(rng() % 16);
    return out;
}

}  // namespace testutil
