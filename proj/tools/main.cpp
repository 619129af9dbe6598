// Command-line front end. Everything goes through the public C API in fie.h.

#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fie.h"

namespace {

// Exit codes: 0 success, 1 check failure, 2 usage/validation, 3 I/O.
int exit_code(fie_status s) {
    if (s == FIE_OK) return 0;
    return s == FIE_ERR_IO ? 3 : 2;
}

int fail(fie_status s) {
    std::fprintf(stderr, "fie: %s error: %s\n", fie_status_name(s), fie_last_error());
    return exit_code(s);
}

using RulesetPtr = std::unique_ptr<fie_ruleset, decltype(&fie_ruleset_free)>;
using RomPtr = std::unique_ptr<fie_rom, decltype(&fie_rom_free)>;
using ChipPtr = std::unique_ptr<fie_chip, decltype(&fie_chip_free)>;

void print_grades(const std::vector<uint8_t>& grades) {
    for (size_t i = 0; i < grades.size(); ++i)
        std::printf("%s%d", i ? " " : "", static_cast<int>(grades[i]));
    std::printf("\n");
}

int load_rules(const std::string& path, RulesetPtr& out) {
    fie_ruleset* raw = nullptr;
    if (fie_status s = fie_ruleset_load(path.c_str(), &raw); s != FIE_OK) return fail(s);
    out.reset(raw);
    return 0;
}

int load_observation(const std::string& path, const fie_ruleset* rules,
                     std::vector<uint8_t>& out) {
    uint32_t e = fie_ruleset_elements(rules);
    uint32_t k = fie_ruleset_antecedents(rules);
    out.assign(static_cast<size_t>(e) * k, 0);
    if (fie_status s = fie_observation_load(path.c_str(), e, k, out.data()); s != FIE_OK)
        return fail(s);
    return 0;
}

int write_text_file(const std::string& path, const char* text) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) {
        std::fprintf(stderr, "fie: io error: cannot open '%s' for writing\n", path.c_str());
        return 3;
    }
    size_t len = std::strlen(text);
    bool ok = std::fwrite(text, 1, len, f) == len && std::fclose(f) == 0;
    if (!ok) {
        std::fprintf(stderr, "fie: io error: write failure on '%s'\n", path.c_str());
        return 3;
    }
    return 0;
}

int cmd_run(const std::string& rules_path, const std::string& input_path) {
    RulesetPtr rules(nullptr, fie_ruleset_free);
    if (int rc = load_rules(rules_path, rules)) return rc;
    std::vector<uint8_t> obs;
    if (int rc = load_observation(input_path, rules.get(), obs)) return rc;

    std::vector<uint8_t> result(fie_ruleset_elements(rules.get()), 0);
    if (fie_status s = fie_infer(rules.get(), obs.data(), obs.size(), result.data()); s != FIE_OK)
        return fail(s);
    print_grades(result);
    return 0;
}

int cmd_sim(const std::string& rules_path, const std::string& input_path,
            const std::string& trace_path, uint32_t capacity) {
    RulesetPtr rules(nullptr, fie_ruleset_free);
    if (int rc = load_rules(rules_path, rules)) return rc;
    std::vector<uint8_t> obs;
    if (int rc = load_observation(input_path, rules.get(), obs)) return rc;

    fie_rom* rom_raw = nullptr;
    if (fie_status s = fie_rom_build(rules.get(), 0, &rom_raw); s != FIE_OK) return fail(s);
    RomPtr rom(rom_raw, fie_rom_free);

    fie_chip* chip_raw = nullptr;
    if (fie_status s = fie_chip_new(rom.get(), capacity, &chip_raw); s != FIE_OK) return fail(s);
    ChipPtr chip(chip_raw, fie_chip_free);

    std::vector<uint8_t> result(fie_ruleset_elements(rules.get()), 0);
    uint64_t cycles = 0;
    if (trace_path.empty()) {
        if (fie_status s = fie_chip_run(chip.get(), obs.data(), obs.size(), result.data(), &cycles);
            s != FIE_OK)
            return fail(s);
    } else {
        char* trace = nullptr;
        fie_status s = fie_chip_run_traced(chip.get(), obs.data(), obs.size(), result.data(),
                                           &cycles, &trace);
        if (s != FIE_OK) return fail(s);
        int rc = write_text_file(trace_path, trace);
        fie_string_free(trace);
        if (rc) return rc;
    }
    print_grades(result);
    std::printf("cycles=%" PRIu64 "\n", cycles);
    return 0;
}

int cmd_check(const std::string& rules_path, uint64_t trials, uint64_t seed, uint32_t elements,
              uint32_t rule_count, uint32_t capacity) {
    RulesetPtr rules(nullptr, fie_ruleset_free);
    if (!rules_path.empty()) {
        if (int rc = load_rules(rules_path, rules)) return rc;
    }

    fie_check_request request{elements, rule_count, capacity, trials, seed};
    fie_check_result result{};
    char* counterexample = nullptr;
    fie_status s = fie_check_run(&request, rules.get(), &result, &counterexample);
    if (s != FIE_OK) return fail(s);

    std::printf("trials=%" PRIu64 "\n", result.trials);
    std::printf("seed=%" PRIu64 "\n", seed);
    std::printf("elements=%u\n", rules ? fie_ruleset_elements(rules.get()) : elements);
    std::printf("rules=%u\n", rules ? fie_ruleset_rule_count(rules.get()) : rule_count);
    std::printf("capacity=%u\n", capacity);
    std::printf("failures=%" PRIu64 "\n", result.failures);
    std::printf("result=%s\n", result.failures == 0 ? "pass" : "fail");
    if (result.failures > 0) {
        std::printf("first_failure=%" PRIu64 "\n", result.first_failure_trial);
        if (counterexample) std::printf("counterexample:\n%s", counterexample);
    }
    fie_string_free(counterexample);
    return result.failures == 0 ? 0 : 1;
}

double timed_flips(const std::function<void()>& one_inference, double duration_s) {
    using clock = std::chrono::steady_clock;
    auto start = clock::now();
    uint64_t count = 0;
    double elapsed = 0;
    do {
        one_inference();
        ++count;
        elapsed = std::chrono::duration<double>(clock::now() - start).count();
    } while (elapsed < duration_s);
    return static_cast<double>(count) / elapsed;
}

int cmd_bench(const std::string& rules_path, const std::string& input_path, double duration_s,
              uint64_t clock_hz, uint32_t capacity) {
    constexpr int kReps = 3;

    RulesetPtr rules(nullptr, fie_ruleset_free);
    if (int rc = load_rules(rules_path, rules)) return rc;
    uint32_t elements = fie_ruleset_elements(rules.get());

    fie_rom* rom_raw = nullptr;
    if (fie_status s = fie_rom_build(rules.get(), 0, &rom_raw); s != FIE_OK) return fail(s);
    RomPtr rom(rom_raw, fie_rom_free);

    fie_chip* chip_raw = nullptr;
    if (fie_status s = fie_chip_new(rom.get(), capacity, &chip_raw); s != FIE_OK) return fail(s);
    ChipPtr chip(chip_raw, fie_chip_free);

    // Default observation: the first rule's antecedent row. Any fixed input
    // measures the same work; this one needs no extra file.
    std::vector<uint8_t> obs(elements, 0);
    if (input_path.empty()) {
        if (fie_status s = fie_rom_grades(rom.get(), 0, 0, obs.data()); s != FIE_OK)
            return fail(s);
    } else {
        if (int rc = load_observation(input_path, rules.get(), obs)) return rc;
    }

    uint64_t cycles = fie_chip_cycles_per_inference(chip.get());
    std::printf("elements=%u\n", elements);
    std::printf("rules=%u\n", fie_ruleset_rule_count(rules.get()));
    std::printf("capacity=%u\n", capacity);
    std::printf("cycles_per_inference=%" PRIu64 "\n", cycles);
    std::printf("simulated_clock_hz=%" PRIu64 "\n", clock_hz);
    if (clock_hz % cycles == 0)
        std::printf("simulated_flips=%" PRIu64 "\n", clock_hz / cycles);
    else
        std::printf("simulated_flips=%.3f\n", static_cast<double>(clock_hz) /
                                                   static_cast<double>(cycles));

    std::vector<uint8_t> result(elements, 0);
    double golden_min = 0, golden_max = 0, chip_min = 0, chip_max = 0;
    for (int rep = 0; rep < kReps; ++rep) {
        double g = timed_flips(
            [&] { fie_infer(rules.get(), obs.data(), obs.size(), result.data()); }, duration_s);
        double c = timed_flips(
            [&] { fie_chip_run(chip.get(), obs.data(), obs.size(), result.data(), nullptr); },
            duration_s);
        golden_min = rep == 0 ? g : std::min(golden_min, g);
        golden_max = rep == 0 ? g : std::max(golden_max, g);
        chip_min = rep == 0 ? c : std::min(chip_min, c);
        chip_max = rep == 0 ? c : std::max(chip_max, c);
    }
    std::printf("reps=%d\n", kReps);
    std::printf("duration_s=%.3f\n", duration_s);
    std::printf("golden_flips_min=%.0f\n", golden_min);
    std::printf("golden_flips_max=%.0f\n", golden_max);
    std::printf("chipsim_flips_min=%.0f\n", chip_min);
    std::printf("chipsim_flips_max=%.0f\n", chip_max);
    return 0;
}

int cmd_romdump(const std::string& rules_path, const std::string& out_path, uint32_t slots) {
    RulesetPtr rules(nullptr, fie_ruleset_free);
    if (int rc = load_rules(rules_path, rules)) return rc;

    fie_rom* rom_raw = nullptr;
    if (fie_status s = fie_rom_build(rules.get(), slots, &rom_raw); s != FIE_OK) return fail(s);
    RomPtr rom(rom_raw, fie_rom_free);

    uint8_t* bytes = nullptr;
    size_t len = 0;
    if (fie_status s = fie_rom_dump(rom.get(), &bytes, &len); s != FIE_OK) return fail(s);

    std::FILE* f = std::fopen(out_path.c_str(), "wb");
    bool ok = f && std::fwrite(bytes, 1, len, f) == len;
    if (f) ok = (std::fclose(f) == 0) && ok;
    fie_buffer_free(bytes);
    if (!ok) {
        std::fprintf(stderr, "fie: io error: cannot write '%s'\n", out_path.c_str());
        return 3;
    }
    std::printf("rules=%u\n", fie_rom_rule_count(rom.get()));
    std::printf("elements=%u\n", fie_rom_elements(rom.get()));
    std::printf("bytes=%zu\n", len);
    std::printf("out=%s\n", out_path.c_str());
    return 0;
}

int cmd_romload(const std::string& rom_path) {
    std::FILE* f = std::fopen(rom_path.c_str(), "rb");
    if (!f) {
        std::fprintf(stderr, "fie: io error: cannot open '%s' for reading\n", rom_path.c_str());
        return 3;
    }
    std::vector<uint8_t> bytes;
    uint8_t buf[4096];
    size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) bytes.insert(bytes.end(), buf, buf + n);
    std::fclose(f);

    fie_rom* rom_raw = nullptr;
    if (fie_status s = fie_rom_load(bytes.data(), bytes.size(), &rom_raw); s != FIE_OK)
        return fail(s);
    RomPtr rom(rom_raw, fie_rom_free);

    uint32_t rules = fie_rom_rule_count(rom.get());
    uint32_t elements = fie_rom_elements(rom.get());
    std::printf("rules=%u\n", rules);
    std::printf("elements=%u\n", elements);
    std::printf("bits_per_rule=%u\n", elements * 4);
    std::vector<uint8_t> grades(elements, 0);
    for (uint32_t r = 0; r < rules; ++r) {
        for (int module = 0; module < 2; ++module) {
            if (fie_status s = fie_rom_grades(rom.get(), module, r, grades.data()); s != FIE_OK)
                return fail(s);
            std::printf("%c%u=", module == 0 ? 'A' : 'C', r);
            for (size_t i = 0; i < grades.size(); ++i)
                std::printf("%s%d", i ? " " : "", static_cast<int>(grades[i]));
            std::printf("\n");
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bit-serial fuzzy inference engine tools"};
    app.require_subcommand(1);

    std::string rules_path, input_path, trace_path, out_path, rom_path;
    uint64_t trials = 10000, seed = 0, clock_hz = 20800000;
    uint32_t elements = 31, rule_count = 16, capacity = 16, slots = 0;
    double duration_s = 1.0;

    CLI::App* run = app.add_subcommand("run", "reference inference on a rule set");
    run->add_option("--rules", rules_path, "rule set (.frs)")->required();
    run->add_option("--input", input_path, "observation file")->required();

    CLI::App* sim = app.add_subcommand("sim", "cycle-accurate chip simulation");
    sim->add_option("--rules", rules_path, "rule set (.frs)")->required();
    sim->add_option("--input", input_path, "observation file")->required();
    sim->add_option("--trace", trace_path, "write per-cycle trace CSV here");
    sim->add_option("--capacity", capacity, "data paths (power of two, 2..64)");

    CLI::App* check = app.add_subcommand("check", "chip-vs-reference equivalence trials");
    check->add_option("--rules", rules_path, "fixed rule set (.frs); otherwise random per trial");
    check->add_option("--trials", trials, "number of trials");
    check->add_option("--seed", seed, "random seed");
    check->add_option("--elements", elements, "universe size for random rule sets");
    check->add_option("--rule-count", rule_count, "rules per random rule set");
    check->add_option("--capacity", capacity, "data paths (power of two, 2..64)");

    CLI::App* bench = app.add_subcommand("bench", "throughput measurement and FLIPS arithmetic");
    bench->add_option("--rules", rules_path, "rule set (.frs)")->required();
    bench->add_option("--input", input_path, "observation file (default: rule 0 antecedent)");
    bench->add_option("--duration", duration_s, "seconds per timed repetition (>= 1)");
    bench->add_option("--clock-hz", clock_hz, "simulated hardware clock");
    bench->add_option("--capacity", capacity, "data paths (power of two, 2..64)");

    CLI::App* romdump = app.add_subcommand("romdump", "pack a rule set into a ROM container");
    romdump->add_option("--rules", rules_path, "rule set (.frs)")->required();
    romdump->add_option("--out", out_path, "output .rom path")->required();
    romdump->add_option("--slots", slots, "pad to this many rule slots (0 = exact)");

    CLI::App* romload = app.add_subcommand("romload", "inspect a ROM container");
    romload->add_option("--rom", rom_path, "input .rom path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (run->parsed()) return cmd_run(rules_path, input_path);
    if (sim->parsed()) return cmd_sim(rules_path, input_path, trace_path, capacity);
    if (check->parsed()) {
        if (trials < 1) {
            std::fprintf(stderr, "fie: --trials must be at least 1\n");
            return 2;
        }
        return cmd_check(rules_path, trials, seed, elements, rule_count, capacity);
    }
    if (bench->parsed()) {
        if (duration_s < 1.0) {
            std::fprintf(stderr, "fie: --duration must be at least 1 second\n");
            return 2;
        }
        return cmd_bench(rules_path, input_path, duration_s, clock_hz, capacity);
    }
    if (romdump->parsed()) return cmd_romdump(rules_path, out_path, slots);
    if (romload->parsed()) return cmd_romload(rom_path);
    return 2;
}
