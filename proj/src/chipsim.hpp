#pragma once

// Cycle-accurate behavioral model of the bit-serial inference engine: rule
// ROM, a two-counter controller, one data path per rule slot (serial min
// unit, recirculating alpha register, serial clip-min unit), and a pipelined
// binary max tree. One tick is one clock cycle.
//
// Cycle schedule, with E elements, D = log2(capacity) tree levels, and
// absolute cycle 1 being the reset pulse:
//
//   1          reset
//   2          idle
//   3 .. 2+4E  observation bits in, antecedent module streamed, alpha
//              registers accumulate the per-rule match degree
//   3+4E ..    conclusion module streamed through a one-cycle ROM register,
//              then the clip stage, then D registered tree levels
//   5+D+4E     first valid output bit
//   4+D+8E     last valid output bit (= total cycles per inference)
//
// At E=31 and capacity 16 that is: input on cycle 3, first output on cycle
// 133, done on cycle 256.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bitserial.hpp"
#include "fuzzy.hpp"
#include "rom.hpp"

namespace fie {

enum class Phase : std::uint8_t { Idle, Antecedent, Conclusion, Done };

const char* phase_name(Phase p);

// Counters driving the two memory modules plus the phase they imply.
struct Controller {
    long cycles_since_reset = 0;  // absolute cycle = cycles_since_reset + 1
    long antecedent_addr = 0;     // bit address into the antecedent module
    long conclusion_addr = 0;     // bit address into the conclusion module
    Phase phase = Phase::Idle;
};

struct TickResult {
    bool output_bit = false;
    bool valid = false;
};

struct TraceRow {
    long cycle = 0;
    Phase phase = Phase::Idle;
    bool input_bit = false;
    bool output_bit = false;
    bool valid = false;
    std::vector<Grade> alphas;  // one register snapshot per data path
};

struct RunResult {
    FuzzyVector result;
    long cycles;
};

class ChipSim {
public:
    static constexpr int kDefaultCapacity = 16;

    // `capacity` is the number of data paths; a power of two in 2..64. The
    // image may hold fewer rules than that; vacant paths read all-zero rules.
    explicit ChipSim(RomImage rom, int capacity = kDefaultCapacity);

    int universe() const { return rom_.universe(); }
    int capacity() const { return capacity_; }
    int tree_depth() const { return tree_.depth(); }

    // Protocol geometry (absolute cycle numbers, reset = cycle 1).
    long first_input_cycle() const { return 3; }
    long last_input_cycle() const { return 2 + 4L * universe(); }
    long first_valid_cycle() const { return 5 + tree_depth() + 4L * universe(); }
    long last_cycle() const { return 4 + tree_depth() + 8L * universe(); }
    long cycles_per_inference() const { return last_cycle(); }

    long cycle() const { return ctrl_.cycles_since_reset + 1; }
    Phase phase() const { return ctrl_.phase; }
    const Controller& controller() const { return ctrl_; }
    bool output_valid() const { return valid_; }
    Grade alpha(int path) const { return alpha_[static_cast<size_t>(path)].value(); }

    // Clears every comparator, register and counter. The reset pulse itself
    // occupies cycle 1; the first tick afterwards is cycle 2.
    void reset();

    // Advances one clock cycle. `input_bit` is sampled only during the input
    // window (cycles 3 .. 2+4E). Ticking past the last cycle is a protocol
    // error; run another inference by calling reset() first.
    TickResult tick(bool input_bit);

    // Full protocol drivers: reset, stream the observation, decode the valid
    // output window. The returned cycle count includes the reset cycle.
    RunResult run(const FuzzyVector& observation);
    std::pair<RunResult, std::vector<TraceRow>> run_traced(const FuzzyVector& observation);

private:
    std::vector<bool> observation_bits(const FuzzyVector& observation) const;
    TraceRow snapshot(bool input_bit, TickResult r) const;
    RunResult drive(const FuzzyVector& observation, std::vector<TraceRow>* trace);

    RomImage rom_;
    int capacity_;
    Controller ctrl_;
    bool valid_ = false;

    // Per data path.
    std::vector<SerialComparator> match_min_;  // observation vs antecedent
    std::vector<SerialComparator> alpha_max_;  // running-max update
    std::vector<AlphaRegister> alpha_;
    std::vector<SerialComparator> clip_min_;   // alpha vs conclusion
    std::vector<std::uint8_t> rom_word_reg_;   // registered conclusion ROM bit
    std::vector<std::uint8_t> clip_reg_;       // registered clip output

    MaxTree tree_;
};

// Delimited trace export; one row per cycle plus a header row.
std::string format_trace(const std::vector<TraceRow>& rows, int capacity);

}  // namespace fie
