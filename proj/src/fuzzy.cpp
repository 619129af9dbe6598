#include "fuzzy.hpp"

#include <algorithm>
#include <string>

namespace fie {

Grade::Grade(int value) {
    if (value < 0 || value > kMax) {
        throw Error(Errc::argument,
                    "grade " + std::to_string(value) + " out of range 0.." + std::to_string(kMax));
    }
    value_ = static_cast<std::uint8_t>(value);
}

FuzzyVector::FuzzyVector(std::vector<Grade> grades) : grades_(std::move(grades)) {
    auto n = grades_.size();
    if (n < kMinUniverse || n > kMaxUniverse) {
        throw Error(Errc::argument, "universe size " + std::to_string(n) + " out of range " +
                                        std::to_string(kMinUniverse) + ".." +
                                        std::to_string(kMaxUniverse));
    }
}

FuzzyVector::FuzzyVector(std::initializer_list<int> values)
    : FuzzyVector(from_values(std::span<const int>(values.begin(), values.size()))) {}

FuzzyVector FuzzyVector::zeros(int universe) {
    if (universe < kMinUniverse || universe > kMaxUniverse) {
        throw Error(Errc::argument, "universe size " + std::to_string(universe) +
                                        " out of range " + std::to_string(kMinUniverse) + ".." +
                                        std::to_string(kMaxUniverse));
    }
    return FuzzyVector(std::vector<Grade>(static_cast<size_t>(universe)));
}

FuzzyVector FuzzyVector::from_values(std::span<const int> values) {
    std::vector<Grade> g;
    g.reserve(values.size());
    for (int v : values) g.emplace_back(v);
    return FuzzyVector(std::move(g));
}

RuleSet::RuleSet(std::vector<Rule> rules) : rules_(std::move(rules)) {
    if (rules_.empty()) throw Error(Errc::argument, "rule set must not be empty");
    universe_ = rules_.front().consequent.universe();
    antecedent_count_ = static_cast<int>(rules_.front().antecedents.size());
    if (antecedent_count_ < 1)
        throw Error(Errc::argument, "rule must have at least one antecedent");
    for (size_t i = 0; i < rules_.size(); ++i) {
        const Rule& r = rules_[i];
        if (static_cast<int>(r.antecedents.size()) != antecedent_count_)
            throw Error(Errc::argument,
                        "rule " + std::to_string(i) + ": antecedent count differs from rule 0");
        if (r.consequent.universe() != universe_)
            throw Error(Errc::dimension,
                        "rule " + std::to_string(i) + ": consequent universe differs from rule 0");
        for (const FuzzyVector& a : r.antecedents) {
            if (a.universe() != universe_)
                throw Error(Errc::dimension, "rule " + std::to_string(i) +
                                                 ": antecedent universe differs from rule 0");
        }
    }
}

namespace {

void require_same_universe(const FuzzyVector& a, const FuzzyVector& b) {
    if (a.universe() != b.universe()) {
        throw Error(Errc::dimension, "universe mismatch: " + std::to_string(a.universe()) +
                                         " vs " + std::to_string(b.universe()));
    }
}

}  // namespace

FuzzyVector intersect(const FuzzyVector& a, const FuzzyVector& b) {
    require_same_universe(a, b);
    std::vector<Grade> out;
    out.reserve(a.grades().size());
    for (int j = 0; j < a.universe(); ++j) out.push_back(grade_min(a[j], b[j]));
    return FuzzyVector(std::move(out));
}

FuzzyVector unite(const FuzzyVector& a, const FuzzyVector& b) {
    require_same_universe(a, b);
    std::vector<Grade> out;
    out.reserve(a.grades().size());
    for (int j = 0; j < a.universe(); ++j) out.push_back(grade_max(a[j], b[j]));
    return FuzzyVector(std::move(out));
}

Grade height(const FuzzyVector& a) {
    Grade h;
    for (Grade g : a.grades()) h = grade_max(h, g);
    return h;
}

Grade match_degree(const FuzzyVector& observation, const FuzzyVector& antecedent) {
    return height(intersect(observation, antecedent));
}

Grade rule_weight(std::span<const Grade> alphas) {
    if (alphas.empty()) throw Error(Errc::argument, "rule weight needs at least one match degree");
    Grade w = alphas.front();
    for (Grade a : alphas.subspan(1)) w = grade_min(w, a);
    return w;
}

FuzzyVector clip(const FuzzyVector& consequent, Grade w) {
    std::vector<Grade> out;
    out.reserve(consequent.grades().size());
    for (Grade g : consequent.grades()) out.push_back(grade_min(g, w));
    return FuzzyVector(std::move(out));
}

FuzzyVector infer(const RuleSet& rules, std::span<const FuzzyVector> observations) {
    if (static_cast<int>(observations.size()) != rules.antecedent_count()) {
        throw Error(Errc::argument,
                    "expected " + std::to_string(rules.antecedent_count()) +
                        " observation(s), got " + std::to_string(observations.size()));
    }
    for (const FuzzyVector& o : observations) {
        if (o.universe() != rules.universe())
            throw Error(Errc::dimension, "observation universe " + std::to_string(o.universe()) +
                                             " differs from rule set universe " +
                                             std::to_string(rules.universe()));
    }
    FuzzyVector result = FuzzyVector::zeros(rules.universe());
    std::vector<Grade> alphas(static_cast<size_t>(rules.antecedent_count()));
    for (const Rule& rule : rules) {
        for (size_t m = 0; m < alphas.size(); ++m)
            alphas[m] = match_degree(observations[m], rule.antecedents[m]);
        Grade w = rule_weight(alphas);
        result = unite(result, clip(rule.consequent, w));
    }
    return result;
}

FuzzyVector infer(const RuleSet& rules, const FuzzyVector& observation) {
    return infer(rules, std::span<const FuzzyVector>(&observation, 1));
}

}  // namespace fie
