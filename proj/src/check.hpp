#pragma once

// Golden-model equivalence checker: seeded random trials comparing the chip
// simulation against the reference inference, bit for bit.

#include <cstdint>
#include <optional>
#include <string>

#include "fuzzy.hpp"

namespace fie {

struct CheckConfig {
    int universe = 31;
    int rule_count = 16;
    int capacity = 16;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 0;
};

struct CheckReport {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::uint64_t first_failure_trial = 0;
    std::string counterexample;  // empty when everything agreed
};

// With `fixed_rules`, every trial reuses that rule set and only the
// observation is drawn; otherwise each trial draws a fresh single-antecedent
// rule set followed by an observation, all from one stream seeded with
// config.seed (see random.hpp for the draw order).
CheckReport run_equivalence_check(const CheckConfig& config, const RuleSet* fixed_rules = nullptr);

}  // namespace fie
