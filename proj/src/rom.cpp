#include "rom.hpp"

#include <string>

#include "bitserial.hpp"

namespace fie {

RomImage::RomImage(int rule_count, int universe) : rule_count_(rule_count), universe_(universe) {
    if (rule_count < 1) throw Error(Errc::argument, "ROM image needs at least one rule slot");
    if (universe < FuzzyVector::kMinUniverse || universe > FuzzyVector::kMaxUniverse)
        throw Error(Errc::argument, "universe size " + std::to_string(universe) + " out of range");
    antecedent_.assign(static_cast<size_t>(module_bits()), 0);
    conclusion_.assign(static_cast<size_t>(module_bits()), 0);
}

const std::vector<std::uint8_t>& RomImage::module(RomModule m) const {
    return m == RomModule::Antecedent ? antecedent_ : conclusion_;
}

std::vector<std::uint8_t>& RomImage::module(RomModule m) {
    return m == RomModule::Antecedent ? antecedent_ : conclusion_;
}

bool RomImage::bit(RomModule m, long index) const {
    return module(m).at(static_cast<size_t>(index)) != 0;
}

void RomImage::set_bit(RomModule m, long index, bool v) {
    module(m).at(static_cast<size_t>(index)) = v ? 1 : 0;
}

void RomImage::toggle_bit(RomModule m, long index) {
    auto& cell = module(m).at(static_cast<size_t>(index));
    cell = cell ? 0 : 1;
}

bool RomImage::rule_bit(RomModule m, int rule, int pos) const {
    return bit(m, static_cast<long>(rule) * bits_per_rule() + pos);
}

Grade RomImage::grade(RomModule m, int rule, int element) const {
    SerialWord w;
    for (int b = 0; b < Grade::kBits; ++b)
        w.set_bit(b, rule_bit(m, rule, element * Grade::kBits + b));
    return w.decode();
}

void RomImage::set_grade(RomModule m, int rule, int element, Grade g) {
    SerialWord w = SerialWord::encode(g);
    long base = static_cast<long>(rule) * bits_per_rule() + element * Grade::kBits;
    for (int b = 0; b < Grade::kBits; ++b) set_bit(m, base + b, w.bit(b));
}

RomImage build_rom(const RuleSet& rules, int slots) {
    if (rules.antecedent_count() != 1)
        throw Error(Errc::unsupported, "chip rules take exactly one antecedent, rule set has " +
                                           std::to_string(rules.antecedent_count()));
    if (slots == 0) slots = rules.size();
    if (rules.size() > slots)
        throw Error(Errc::capacity, std::to_string(rules.size()) + " rules exceed " +
                                        std::to_string(slots) + " ROM slots");
    RomImage image(slots, rules.universe());
    for (int i = 0; i < rules.size(); ++i) {
        for (int e = 0; e < rules.universe(); ++e) {
            image.set_grade(RomModule::Antecedent, i, e, rules[i].antecedents[0][e]);
            image.set_grade(RomModule::Conclusion, i, e, rules[i].consequent[e]);
        }
    }
    return image;
}

}  // namespace fie
