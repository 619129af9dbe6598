#pragma once

// Reference model of discretized min-max approximate reasoning. Everything
// here is exact small-integer arithmetic; grades never touch floating point.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "errors.hpp"

namespace fie {

// Membership degree quantized to 16 levels: 0 = no membership, 15 = full.
class Grade {
public:
    static constexpr int kBits = 4;
    static constexpr int kLevels = 16;
    static constexpr int kMax = 15;

    constexpr Grade() = default;
    explicit Grade(int value);

    constexpr int value() const { return value_; }

    friend constexpr bool operator==(Grade, Grade) = default;
    friend constexpr auto operator<=>(Grade, Grade) = default;

private:
    std::uint8_t value_ = 0;
};

constexpr Grade grade_min(Grade a, Grade b) { return a < b ? a : b; }
constexpr Grade grade_max(Grade a, Grade b) { return a < b ? b : a; }

// A fuzzy subset over a finite universe: one grade per element. The length is
// fixed at construction and every operation preserves it.
class FuzzyVector {
public:
    static constexpr int kMinUniverse = 2;
    static constexpr int kMaxUniverse = 64;

    explicit FuzzyVector(std::vector<Grade> grades);
    FuzzyVector(std::initializer_list<int> values);

    static FuzzyVector zeros(int universe);
    static FuzzyVector from_values(std::span<const int> values);

    int universe() const { return static_cast<int>(grades_.size()); }
    Grade operator[](int i) const { return grades_[static_cast<size_t>(i)]; }
    const std::vector<Grade>& grades() const { return grades_; }

    bool operator==(const FuzzyVector&) const = default;

private:
    std::vector<Grade> grades_;
};

// "If x1 is A1, ..., xk is Ak then z is C".
struct Rule {
    std::vector<FuzzyVector> antecedents;
    FuzzyVector consequent;

    bool operator==(const Rule&) const = default;
};

// Ordered, non-empty collection of rules sharing one universe size and one
// antecedent count.
class RuleSet {
public:
    explicit RuleSet(std::vector<Rule> rules);

    int universe() const { return universe_; }
    int antecedent_count() const { return antecedent_count_; }
    int size() const { return static_cast<int>(rules_.size()); }
    const Rule& operator[](int i) const { return rules_[static_cast<size_t>(i)]; }

    auto begin() const { return rules_.begin(); }
    auto end() const { return rules_.end(); }

    bool operator==(const RuleSet&) const = default;

private:
    std::vector<Rule> rules_;
    int universe_ = 0;
    int antecedent_count_ = 0;
};

// Pointwise min / pointwise max. Both demand equal universes.
FuzzyVector intersect(const FuzzyVector& a, const FuzzyVector& b);
FuzzyVector unite(const FuzzyVector& a, const FuzzyVector& b);

// Largest grade in the vector (0 for the empty fuzzy subset).
Grade height(const FuzzyVector& a);

// max over the universe of min(observation, antecedent).
Grade match_degree(const FuzzyVector& observation, const FuzzyVector& antecedent);

// Weight of a rule: minimum of its per-antecedent match degrees.
Grade rule_weight(std::span<const Grade> alphas);

// Limit a consequent pointwise by a rule weight.
FuzzyVector clip(const FuzzyVector& consequent, Grade w);

// Full composition: union over rules of the weight-clipped consequents.
// One observation per antecedent variable.
FuzzyVector infer(const RuleSet& rules, std::span<const FuzzyVector> observations);
FuzzyVector infer(const RuleSet& rules, const FuzzyVector& observation);

}  // namespace fie
