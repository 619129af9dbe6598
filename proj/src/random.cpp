#include "random.hpp"

namespace fie {

FuzzyVector random_vector(std::mt19937_64& rng, int universe) {
    std::vector<Grade> grades;
    grades.reserve(static_cast<size_t>(universe));
    for (int i = 0; i < universe; ++i) grades.push_back(random_grade(rng));
    return FuzzyVector(std::move(grades));
}

RuleSet random_ruleset(std::mt19937_64& rng, int universe, int rule_count, int antecedent_count) {
    std::vector<Rule> rules;
    rules.reserve(static_cast<size_t>(rule_count));
    for (int i = 0; i < rule_count; ++i) {
        std::vector<FuzzyVector> ants;
        ants.reserve(static_cast<size_t>(antecedent_count));
        for (int k = 0; k < antecedent_count; ++k) ants.push_back(random_vector(rng, universe));
        rules.push_back(Rule{std::move(ants), random_vector(rng, universe)});
    }
    return RuleSet(std::move(rules));
}

}  // namespace fie
