#pragma once

// Text format (.frs) for rule sets and the FROM binary container for ROM
// images.
//
// .frs is line oriented; `#` starts a comment. Directives come first:
//
//     elements 4
//     levels 16
//     antecedents 1
//
// then one block per rule:
//
//     rule
//     A1 15 8 0 0
//     C 0 5 10 15
//
// `levels` must be 16 and `antecedents` defaults to 1; serialization always
// emits all three directives in the order above.
//
// FROM container: magic "FROM", version byte 1, rule count and element count
// as big-endian 16-bit words, then the antecedent module and the conclusion
// module. Module payloads pack bits into bytes most significant bit first,
// zero padded to a byte boundary per module.

#include <cstdint>
#include <string>
#include <vector>

#include "fuzzy.hpp"
#include "rom.hpp"

namespace fie {

RuleSet parse_ruleset(const std::string& text);
std::string serialize_ruleset(const RuleSet& rules);

// One grade row per antecedent variable, same comment and spacing rules as
// .frs bodies.
std::vector<FuzzyVector> parse_observation(const std::string& text, int universe,
                                           int antecedent_count);

std::vector<std::uint8_t> rom_dump(const RomImage& image);
RomImage rom_load(const std::vector<std::uint8_t>& bytes);

// Whole-file helpers; failures surface as Errc::io.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& data);
void write_file(const std::string& path, const std::vector<std::uint8_t>& data);

}  // namespace fie
