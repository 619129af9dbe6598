#pragma once

// Seeded generators used by the equivalence checker and the property tests.
// Reproducibility contract: everything is drawn from one std::mt19937_64
// stream in a fixed order, and a grade is engine() % 16 (unbiased, 16 divides
// 2^64), so a given seed replays the same data on any platform.

#include <random>

#include "fuzzy.hpp"

namespace fie {

inline Grade random_grade(std::mt19937_64& rng) {
    return Grade(static_cast<int>(rng() % Grade::kLevels));
}

FuzzyVector random_vector(std::mt19937_64& rng, int universe);

// Draw order per rule: antecedent rows A1..Ak element by element, then the
// consequent row.
RuleSet random_ruleset(std::mt19937_64& rng, int universe, int rule_count, int antecedent_count);

}  // namespace fie
