#include "check.hpp"

#include <random>
#include <sstream>

#include "chipsim.hpp"
#include "random.hpp"
#include "rom.hpp"
#include "ruleset_io.hpp"

namespace fie {

namespace {

void append_grades(std::ostringstream& os, const FuzzyVector& v) {
    for (int j = 0; j < v.universe(); ++j) {
        if (j) os << ' ';
        os << v[j].value();
    }
}

}  // namespace

CheckReport run_equivalence_check(const CheckConfig& config, const RuleSet* fixed_rules) {
    if (config.trials < 1) throw Error(Errc::argument, "check needs at least one trial");
    if (fixed_rules && fixed_rules->antecedent_count() != 1)
        throw Error(Errc::unsupported, "the chip holds single-antecedent rules only");

    std::mt19937_64 rng(config.seed);
    CheckReport report;
    report.trials = config.trials;

    for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
        RuleSet rules = fixed_rules
                            ? *fixed_rules
                            : random_ruleset(rng, config.universe, config.rule_count, 1);
        FuzzyVector observation = random_vector(rng, rules.universe());

        FuzzyVector expected = infer(rules, observation);
        ChipSim chip(build_rom(rules), config.capacity);
        RunResult got = chip.run(observation);

        if (got.result != expected) {
            ++report.failures;
            if (report.failures == 1) {
                report.first_failure_trial = trial;
                std::ostringstream os;
                os << "trial=" << trial << '\n';
                os << "observation=";
                append_grades(os, observation);
                os << '\n' << "expected=";
                append_grades(os, expected);
                os << '\n' << "chip=";
                append_grades(os, got.result);
                os << '\n' << "ruleset:\n" << serialize_ruleset(rules);
                report.counterexample = os.str();
            }
        }
    }
    return report;
}

}  // namespace fie
