#pragma once

// Bit-exact rule memory contents: two modules, one for antecedents and one
// for conclusions. Per rule, grades are packed in universe order, each grade
// most significant bit first, so a 31-element rule occupies 124 bits in each
// module.

#include <cstdint>
#include <vector>

#include "fuzzy.hpp"

namespace fie {

enum class RomModule : std::uint8_t { Antecedent, Conclusion };

class RomImage {
public:
    RomImage(int rule_count, int universe);

    int rule_count() const { return rule_count_; }
    int universe() const { return universe_; }
    int bits_per_rule() const { return universe_ * Grade::kBits; }
    long module_bits() const { return static_cast<long>(rule_count_) * bits_per_rule(); }

    bool bit(RomModule m, long index) const;
    void set_bit(RomModule m, long index, bool v);
    void toggle_bit(RomModule m, long index);

    // `pos` is the bit offset inside one rule's slice: element * 4 + bit,
    // bit 0 being the MSB.
    bool rule_bit(RomModule m, int rule, int pos) const;

    Grade grade(RomModule m, int rule, int element) const;
    void set_grade(RomModule m, int rule, int element, Grade g);

    bool operator==(const RomImage&) const = default;

private:
    const std::vector<std::uint8_t>& module(RomModule m) const;
    std::vector<std::uint8_t>& module(RomModule m);

    int rule_count_;
    int universe_;
    std::vector<std::uint8_t> antecedent_;  // one entry per bit
    std::vector<std::uint8_t> conclusion_;
};

// Packs a rule set into ROM form. Only single-antecedent rules fit the chip.
// With `slots` > rule count, the remaining slots hold all-zero rules (an
// all-zero antecedent never matches and an all-zero conclusion never
// contributes). `slots` = 0 means exactly the rule count.
RomImage build_rom(const RuleSet& rules, int slots = 0);

}  // namespace fie
