/* fie — bit-serial fuzzy inference engine: reference model, cycle-accurate
 * chip simulator, rule-set/ROM tooling.
 *
 * C API over opaque handles. Every fallible call returns a fie_status;
 * fie_last_error() holds the message for the most recent failure on the
 * calling thread. Grades are integers 0..15; a fuzzy value over E elements
 * is a buffer of E grade bytes.
 */

#ifndef FIE_H
#define FIE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32) && defined(FIE_BUILD_SHARED)
#define FIE_API __declspec(dllexport)
#else
#define FIE_API
#endif

typedef enum fie_status {
    FIE_OK = 0,
    FIE_ERR_ARGUMENT = 1,    /* bad value, arity, or range */
    FIE_ERR_DIMENSION = 2,   /* vector length mismatch */
    FIE_ERR_PARSE = 3,       /* malformed rule-set, observation, or ROM data */
    FIE_ERR_CAPACITY = 4,    /* more rules than slots/data paths */
    FIE_ERR_UNSUPPORTED = 5, /* rule shape the chip cannot hold */
    FIE_ERR_PROTOCOL = 6,    /* chip clocked outside its cycle protocol */
    FIE_ERR_IO = 7           /* file system failure */
} fie_status;

typedef struct fie_ruleset fie_ruleset;
typedef struct fie_rom fie_rom;
typedef struct fie_chip fie_chip;

FIE_API const char* fie_version(void);
FIE_API const char* fie_status_name(fie_status status);
FIE_API const char* fie_last_error(void);

/* Release buffers handed out by this library. */
FIE_API void fie_string_free(char* s);
FIE_API void fie_buffer_free(uint8_t* p);

/* ---- rule sets (.frs text format) ---- */

FIE_API fie_status fie_ruleset_parse(const char* text, fie_ruleset** out);
FIE_API fie_status fie_ruleset_load(const char* path, fie_ruleset** out);
FIE_API fie_status fie_ruleset_serialize(const fie_ruleset* rules, char** text_out);

/* Uniform random grades from one mt19937_64 stream; see README for the
 * exact draw order. */
FIE_API fie_status fie_ruleset_random(uint64_t seed, uint32_t elements, uint32_t rule_count,
                                      uint32_t antecedents, fie_ruleset** out);

FIE_API void fie_ruleset_free(fie_ruleset* rules);
FIE_API uint32_t fie_ruleset_elements(const fie_ruleset* rules);
FIE_API uint32_t fie_ruleset_rule_count(const fie_ruleset* rules);
FIE_API uint32_t fie_ruleset_antecedents(const fie_ruleset* rules);

/* ---- reference (golden model) inference ----
 * observation: antecedents x elements grades, row major.
 * result: elements grades. */
FIE_API fie_status fie_infer(const fie_ruleset* rules, const uint8_t* observation,
                             size_t observation_len, uint8_t* result);

/* Observation file: one row of grades per antecedent variable; '#' comments.
 * out must hold antecedents x elements bytes. */
FIE_API fie_status fie_observation_load(const char* path, uint32_t elements, uint32_t antecedents,
                                        uint8_t* out);

/* ---- ROM images (FROM binary container) ----
 * slots = 0 packs exactly the rule count; a larger value zero-pads. */

FIE_API fie_status fie_rom_build(const fie_ruleset* rules, uint32_t slots, fie_rom** out);
FIE_API fie_status fie_rom_dump(const fie_rom* rom, uint8_t** bytes_out, size_t* len_out);
FIE_API fie_status fie_rom_load(const uint8_t* bytes, size_t len, fie_rom** out);
FIE_API void fie_rom_free(fie_rom* rom);
FIE_API uint32_t fie_rom_rule_count(const fie_rom* rom);
FIE_API uint32_t fie_rom_elements(const fie_rom* rom);

/* module: 0 = antecedent, 1 = conclusion. grades_out: elements entries. */
FIE_API fie_status fie_rom_grades(const fie_rom* rom, int module, uint32_t rule,
                                  uint8_t* grades_out);

/* ---- cycle-accurate chip simulation ----
 * capacity: data paths, a power of two in 2..64 (the stock chip has 16).
 * Protocol: reset is cycle 1; observation bits enter on cycles 3..2+4E;
 * output bits are flagged valid from fie_chip_first_valid_cycle() through
 * fie_chip_cycles_per_inference(). */

FIE_API fie_status fie_chip_new(const fie_rom* rom, uint32_t capacity, fie_chip** out);
FIE_API void fie_chip_free(fie_chip* chip);
FIE_API fie_status fie_chip_reset(fie_chip* chip);

/* One clock cycle. Ticking past the last cycle is FIE_ERR_PROTOCOL. */
FIE_API fie_status fie_chip_tick(fie_chip* chip, int input_bit, int* output_bit, int* valid);

FIE_API uint64_t fie_chip_cycle(const fie_chip* chip);
FIE_API uint64_t fie_chip_first_valid_cycle(const fie_chip* chip);
FIE_API uint64_t fie_chip_cycles_per_inference(const fie_chip* chip);

/* Full protocol: reset, stream, decode. observation: elements grades. */
FIE_API fie_status fie_chip_run(fie_chip* chip, const uint8_t* observation, size_t observation_len,
                                uint8_t* result, uint64_t* cycles);

/* As fie_chip_run, also returning the per-cycle trace as CSV text. */
FIE_API fie_status fie_chip_run_traced(fie_chip* chip, const uint8_t* observation,
                                       size_t observation_len, uint8_t* result, uint64_t* cycles,
                                       char** trace_csv);

/* ---- golden-model equivalence check ---- */

typedef struct fie_check_request {
    uint32_t elements;   /* ignored when fixed_rules is given */
    uint32_t rule_count; /* ignored when fixed_rules is given */
    uint32_t capacity;
    uint64_t trials;
    uint64_t seed;
} fie_check_request;

typedef struct fie_check_result {
    uint64_t trials;
    uint64_t failures;
    uint64_t first_failure_trial; /* meaningful when failures > 0 */
} fie_check_result;

/* Runs seeded trials of chip-vs-reference comparison. On the first mismatch
 * a textual counterexample is returned through `counterexample` (optional;
 * free with fie_string_free). */
FIE_API fie_status fie_check_run(const fie_check_request* request, const fie_ruleset* fixed_rules,
                                 fie_check_result* result, char** counterexample);

#ifdef __cplusplus
}
#endif

#endif /* FIE_H */
