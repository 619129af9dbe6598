#include "fie.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <random>
#include <string>
#include <vector>

#include "check.hpp"
#include "chipsim.hpp"
#include "fuzzy.hpp"
#include "random.hpp"
#include "rom.hpp"
#include "ruleset_io.hpp"

struct fie_ruleset {
    fie::RuleSet impl;
};
struct fie_rom {
    fie::RomImage impl;
};
struct fie_chip {
    fie::ChipSim impl;
};

namespace {

thread_local std::string g_last_error;

fie_status to_status(fie::Errc code) {
    switch (code) {
        case fie::Errc::argument: return FIE_ERR_ARGUMENT;
        case fie::Errc::dimension: return FIE_ERR_DIMENSION;
        case fie::Errc::parse: return FIE_ERR_PARSE;
        case fie::Errc::capacity: return FIE_ERR_CAPACITY;
        case fie::Errc::unsupported: return FIE_ERR_UNSUPPORTED;
        case fie::Errc::protocol: return FIE_ERR_PROTOCOL;
        case fie::Errc::io: return FIE_ERR_IO;
    }
    return FIE_ERR_ARGUMENT;
}

template <typename Fn>
fie_status guarded(Fn&& fn) {
    try {
        fn();
        return FIE_OK;
    } catch (const fie::Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return FIE_ERR_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FIE_ERR_ARGUMENT;
    }
}

fie_status require(bool ok, const char* what) {
    if (ok) return FIE_OK;
    g_last_error = what;
    return FIE_ERR_ARGUMENT;
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

fie::FuzzyVector vector_from_bytes(const uint8_t* grades, size_t n) {
    std::vector<fie::Grade> g;
    g.reserve(n);
    for (size_t i = 0; i < n; ++i) g.emplace_back(static_cast<int>(grades[i]));
    return fie::FuzzyVector(std::move(g));
}

void vector_to_bytes(const fie::FuzzyVector& v, uint8_t* out) {
    for (int j = 0; j < v.universe(); ++j)
        out[static_cast<size_t>(j)] = static_cast<uint8_t>(v[j].value());
}

std::vector<fie::FuzzyVector> observation_rows(const fie::RuleSet& rules, const uint8_t* obs,
                                               size_t len) {
    size_t e = static_cast<size_t>(rules.universe());
    size_t k = static_cast<size_t>(rules.antecedent_count());
    if (len != e * k)
        throw fie::Error(fie::Errc::dimension,
                         "observation must hold " + std::to_string(k) + " x " + std::to_string(e) +
                             " grades, got " + std::to_string(len));
    std::vector<fie::FuzzyVector> rows;
    rows.reserve(k);
    for (size_t r = 0; r < k; ++r) rows.push_back(vector_from_bytes(obs + r * e, e));
    return rows;
}

}  // namespace

extern "C" {

const char* fie_version(void) { return "0.1.0"; }

const char* fie_status_name(fie_status status) {
    switch (status) {
        case FIE_OK: return "ok";
        case FIE_ERR_ARGUMENT: return "argument";
        case FIE_ERR_DIMENSION: return "dimension";
        case FIE_ERR_PARSE: return "parse";
        case FIE_ERR_CAPACITY: return "capacity";
        case FIE_ERR_UNSUPPORTED: return "unsupported";
        case FIE_ERR_PROTOCOL: return "protocol";
        case FIE_ERR_IO: return "io";
    }
    return "?";
}

const char* fie_last_error(void) { return g_last_error.c_str(); }

void fie_string_free(char* s) { std::free(s); }
void fie_buffer_free(uint8_t* p) { std::free(p); }

fie_status fie_ruleset_parse(const char* text, fie_ruleset** out) {
    if (fie_status s = require(text && out, "null argument"); s != FIE_OK) return s;
    return guarded([&] { *out = new fie_ruleset{fie::parse_ruleset(text)}; });
}

fie_status fie_ruleset_load(const char* path, fie_ruleset** out) {
    if (fie_status s = require(path && out, "null argument"); s != FIE_OK) return s;
    return guarded([&] { *out = new fie_ruleset{fie::parse_ruleset(fie::read_file(path))}; });
}

fie_status fie_ruleset_serialize(const fie_ruleset* rules, char** text_out) {
    if (fie_status s = require(rules && text_out, "null argument"); s != FIE_OK) return s;
    return guarded([&] { *text_out = copy_string(fie::serialize_ruleset(rules->impl)); });
}

fie_status fie_ruleset_random(uint64_t seed, uint32_t elements, uint32_t rule_count,
                              uint32_t antecedents, fie_ruleset** out) {
    if (fie_status s = require(out != nullptr, "null argument"); s != FIE_OK) return s;
    return guarded([&] {
        if (rule_count < 1) throw fie::Error(fie::Errc::argument, "rule count must be at least 1");
        if (antecedents < 1)
            throw fie::Error(fie::Errc::argument, "antecedent count must be at least 1");
        std::mt19937_64 rng(seed);
        *out = new fie_ruleset{fie::random_ruleset(rng, static_cast<int>(elements),
                                                   static_cast<int>(rule_count),
                                                   static_cast<int>(antecedents))};
    });
}

void fie_ruleset_free(fie_ruleset* rules) { delete rules; }

uint32_t fie_ruleset_elements(const fie_ruleset* rules) {
    return rules ? static_cast<uint32_t>(rules->impl.universe()) : 0;
}

uint32_t fie_ruleset_rule_count(const fie_ruleset* rules) {
    return rules ? static_cast<uint32_t>(rules->impl.size()) : 0;
}

uint32_t fie_ruleset_antecedents(const fie_ruleset* rules) {
    return rules ? static_cast<uint32_t>(rules->impl.antecedent_count()) : 0;
}

fie_status fie_infer(const fie_ruleset* rules, const uint8_t* observation, size_t observation_len,
                     uint8_t* result) {
    if (fie_status s = require(rules && observation && result, "null argument"); s != FIE_OK)
        return s;
    return guarded([&] {
        auto rows = observation_rows(rules->impl, observation, observation_len);
        vector_to_bytes(fie::infer(rules->impl, rows), result);
    });
}

fie_status fie_observation_load(const char* path, uint32_t elements, uint32_t antecedents,
                                uint8_t* out) {
    if (fie_status s = require(path && out, "null argument"); s != FIE_OK) return s;
    return guarded([&] {
        auto rows = fie::parse_observation(fie::read_file(path), static_cast<int>(elements),
                                           static_cast<int>(antecedents));
        for (size_t r = 0; r < rows.size(); ++r) vector_to_bytes(rows[r], out + r * elements);
    });
}

fie_status fie_rom_build(const fie_ruleset* rules, uint32_t slots, fie_rom** out) {
    if (fie_status s = require(rules && out, "null argument"); s != FIE_OK) return s;
    return guarded(
        [&] { *out = new fie_rom{fie::build_rom(rules->impl, static_cast<int>(slots))}; });
}

fie_status fie_rom_dump(const fie_rom* rom, uint8_t** bytes_out, size_t* len_out) {
    if (fie_status s = require(rom && bytes_out && len_out, "null argument"); s != FIE_OK)
        return s;
    return guarded([&] {
        std::vector<uint8_t> bytes = fie::rom_dump(rom->impl);
        uint8_t* buf = static_cast<uint8_t*>(std::malloc(bytes.size()));
        if (!buf) throw std::bad_alloc();
        std::memcpy(buf, bytes.data(), bytes.size());
        *bytes_out = buf;
        *len_out = bytes.size();
    });
}

fie_status fie_rom_load(const uint8_t* bytes, size_t len, fie_rom** out) {
    if (fie_status s = require(bytes && out, "null argument"); s != FIE_OK) return s;
    return guarded([&] {
        std::vector<uint8_t> data(bytes, bytes + len);
        *out = new fie_rom{fie::rom_load(data)};
    });
}

void fie_rom_free(fie_rom* rom) { delete rom; }

uint32_t fie_rom_rule_count(const fie_rom* rom) {
    return rom ? static_cast<uint32_t>(rom->impl.rule_count()) : 0;
}

uint32_t fie_rom_elements(const fie_rom* rom) {
    return rom ? static_cast<uint32_t>(rom->impl.universe()) : 0;
}

fie_status fie_rom_grades(const fie_rom* rom, int module, uint32_t rule, uint8_t* grades_out) {
    if (fie_status s = require(rom && grades_out, "null argument"); s != FIE_OK) return s;
    return guarded([&] {
        if (module != 0 && module != 1)
            throw fie::Error(fie::Errc::argument, "module must be 0 or 1");
        if (rule >= static_cast<uint32_t>(rom->impl.rule_count()))
            throw fie::Error(fie::Errc::argument, "rule index out of range");
        fie::RomModule m = module == 0 ? fie::RomModule::Antecedent : fie::RomModule::Conclusion;
        for (int e = 0; e < rom->impl.universe(); ++e)
            grades_out[e] =
                static_cast<uint8_t>(rom->impl.grade(m, static_cast<int>(rule), e).value());
    });
}

fie_status fie_chip_new(const fie_rom* rom, uint32_t capacity, fie_chip** out) {
    if (fie_status s = require(rom && out, "null argument"); s != FIE_OK) return s;
    return guarded(
        [&] { *out = new fie_chip{fie::ChipSim(rom->impl, static_cast<int>(capacity))}; });
}

void fie_chip_free(fie_chip* chip) { delete chip; }

fie_status fie_chip_reset(fie_chip* chip) {
    if (fie_status s = require(chip != nullptr, "null argument"); s != FIE_OK) return s;
    return guarded([&] { chip->impl.reset(); });
}

fie_status fie_chip_tick(fie_chip* chip, int input_bit, int* output_bit, int* valid) {
    if (fie_status s = require(chip && output_bit && valid, "null argument"); s != FIE_OK)
        return s;
    return guarded([&] {
        fie::TickResult r = chip->impl.tick(input_bit != 0);
        *output_bit = r.output_bit ? 1 : 0;
        *valid = r.valid ? 1 : 0;
    });
}

uint64_t fie_chip_cycle(const fie_chip* chip) {
    return chip ? static_cast<uint64_t>(chip->impl.cycle()) : 0;
}

uint64_t fie_chip_first_valid_cycle(const fie_chip* chip) {
    return chip ? static_cast<uint64_t>(chip->impl.first_valid_cycle()) : 0;
}

uint64_t fie_chip_cycles_per_inference(const fie_chip* chip) {
    return chip ? static_cast<uint64_t>(chip->impl.cycles_per_inference()) : 0;
}

fie_status fie_chip_run(fie_chip* chip, const uint8_t* observation, size_t observation_len,
                        uint8_t* result, uint64_t* cycles) {
    if (fie_status s = require(chip && observation && result, "null argument"); s != FIE_OK)
        return s;
    return guarded([&] {
        fie::RunResult r = chip->impl.run(vector_from_bytes(observation, observation_len));
        vector_to_bytes(r.result, result);
        if (cycles) *cycles = static_cast<uint64_t>(r.cycles);
    });
}

fie_status fie_chip_run_traced(fie_chip* chip, const uint8_t* observation, size_t observation_len,
                               uint8_t* result, uint64_t* cycles, char** trace_csv) {
    if (fie_status s = require(chip && observation && result && trace_csv, "null argument");
        s != FIE_OK)
        return s;
    return guarded([&] {
        auto [r, trace] = chip->impl.run_traced(vector_from_bytes(observation, observation_len));
        vector_to_bytes(r.result, result);
        if (cycles) *cycles = static_cast<uint64_t>(r.cycles);
        *trace_csv = copy_string(fie::format_trace(trace, chip->impl.capacity()));
    });
}

fie_status fie_check_run(const fie_check_request* request, const fie_ruleset* fixed_rules,
                         fie_check_result* result, char** counterexample) {
    if (fie_status s = require(request && result, "null argument"); s != FIE_OK) return s;
    return guarded([&] {
        fie::CheckConfig config;
        config.capacity = static_cast<int>(request->capacity);
        config.trials = request->trials;
        config.seed = request->seed;
        if (fixed_rules) {
            config.universe = fixed_rules->impl.universe();
            config.rule_count = fixed_rules->impl.size();
        } else {
            config.universe = static_cast<int>(request->elements);
            config.rule_count = static_cast<int>(request->rule_count);
        }
        fie::CheckReport report =
            fie::run_equivalence_check(config, fixed_rules ? &fixed_rules->impl : nullptr);
        result->trials = report.trials;
        result->failures = report.failures;
        result->first_failure_trial = report.first_failure_trial;
        if (counterexample)
            *counterexample =
                report.counterexample.empty() ? nullptr : copy_string(report.counterexample);
    });
}

}  // extern "C"
