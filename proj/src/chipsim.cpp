#include "chipsim.hpp"

#include <sstream>

namespace fie {

const char* phase_name(Phase p) {
    switch (p) {
        case Phase::Idle: return "idle";
        case Phase::Antecedent: return "antecedent";
        case Phase::Conclusion: return "conclusion";
        case Phase::Done: return "done";
    }
    return "?";
}

namespace {

bool is_pow2(int v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

ChipSim::ChipSim(RomImage rom, int capacity)
    : rom_(std::move(rom)),
      capacity_(capacity),
      tree_(capacity) {
    if (!is_pow2(capacity) || capacity < 2 || capacity > 64)
        throw Error(Errc::argument,
                    "capacity must be a power of two in 2..64, got " + std::to_string(capacity));
    if (rom_.rule_count() > capacity)
        throw Error(Errc::capacity, "ROM holds " + std::to_string(rom_.rule_count()) +
                                        " rules but the chip has " + std::to_string(capacity) +
                                        " data paths");
    match_min_.assign(static_cast<size_t>(capacity), SerialComparator(CompareOp::Min));
    alpha_max_.assign(static_cast<size_t>(capacity), SerialComparator(CompareOp::Max));
    alpha_.assign(static_cast<size_t>(capacity), AlphaRegister{});
    clip_min_.assign(static_cast<size_t>(capacity), SerialComparator(CompareOp::Min));
    rom_word_reg_.assign(static_cast<size_t>(capacity), 0);
    clip_reg_.assign(static_cast<size_t>(capacity), 0);
    reset();
}

void ChipSim::reset() {
    ctrl_ = Controller{};
    valid_ = false;
    for (auto& u : match_min_) u.reset();
    for (auto& u : alpha_max_) u.reset();
    for (auto& r : alpha_) r.reset();
    for (auto& u : clip_min_) u.reset();
    std::fill(rom_word_reg_.begin(), rom_word_reg_.end(), 0);
    std::fill(clip_reg_.begin(), clip_reg_.end(), 0);
    tree_.reset();
}

TickResult ChipSim::tick(bool input_bit) {
    if (ctrl_.phase == Phase::Done)
        throw Error(Errc::protocol, "tick past cycle " + std::to_string(last_cycle()) +
                                        "; reset before the next inference");

    ++ctrl_.cycles_since_reset;
    const long t = cycle();
    const long e4 = 4L * universe();

    if (t >= 3 && t <= 2 + e4) ctrl_.phase = Phase::Antecedent;
    else if (t >= 3 + e4) ctrl_.phase = Phase::Conclusion;

    // Root-first evaluation: every stage reads the registers as latched at
    // the end of the previous cycle, then latches its own output.

    // Max tree consumes the clip registers; its input stream starts at
    // cycle 5+4E.
    const long tree_base = 5 + e4;
    bool tree_ws = t >= tree_base && t <= 4 + 2 * e4 && (t - tree_base) % Grade::kBits == 0;
    bool out = tree_.step(clip_reg_, tree_ws);

    // Clip stage: serial min of the recirculating alpha register and the
    // registered conclusion bit. Active one cycle behind the fetch.
    const long clip_base = 4 + e4;
    if (t >= clip_base && t <= 3 + 2 * e4) {
        bool ws = (t - clip_base) % Grade::kBits == 0;
        for (int i = 0; i < capacity_; ++i) {
            bool front = alpha_[static_cast<size_t>(i)].front();
            bool c_bit = rom_word_reg_[static_cast<size_t>(i)] != 0;
            clip_reg_[static_cast<size_t>(i)] =
                clip_min_[static_cast<size_t>(i)].step(front, c_bit, ws) ? 1 : 0;
            alpha_[static_cast<size_t>(i)].shift(front);  // recirculate unchanged
        }
    } else {
        std::fill(clip_reg_.begin(), clip_reg_.end(), 0);
    }

    // Conclusion fetch into the ROM word register.
    const long fetch_base = 3 + e4;
    if (t >= fetch_base && t <= 2 + 2 * e4) {
        ctrl_.conclusion_addr = t - fetch_base;
        for (int i = 0; i < capacity_; ++i) {
            bool b = i < rom_.rule_count() &&
                     rom_.rule_bit(RomModule::Conclusion, i, static_cast<int>(ctrl_.conclusion_addr));
            rom_word_reg_[static_cast<size_t>(i)] = b ? 1 : 0;
        }
    } else {
        std::fill(rom_word_reg_.begin(), rom_word_reg_.end(), 0);
    }

    // Antecedent phase: the observation bit meets each rule's antecedent bit
    // in the match min unit, and the alpha register keeps the running max of
    // the min words.
    if (t >= 3 && t <= 2 + e4) {
        ctrl_.antecedent_addr = t - 3;
        bool ws = ctrl_.antecedent_addr % Grade::kBits == 0;
        for (int i = 0; i < capacity_; ++i) {
            bool a_bit = i < rom_.rule_count() &&
                         rom_.rule_bit(RomModule::Antecedent, i, static_cast<int>(ctrl_.antecedent_addr));
            bool mo = match_min_[static_cast<size_t>(i)].step(input_bit, a_bit, ws);
            bool front = alpha_[static_cast<size_t>(i)].front();
            bool mx = alpha_max_[static_cast<size_t>(i)].step(mo, front, ws);
            alpha_[static_cast<size_t>(i)].shift(mx);
        }
    }

    valid_ = t >= first_valid_cycle() && t <= last_cycle();
    if (t == last_cycle()) ctrl_.phase = Phase::Done;
    return TickResult{out, valid_};
}

std::vector<bool> ChipSim::observation_bits(const FuzzyVector& observation) const {
    if (observation.universe() != universe())
        throw Error(Errc::dimension, "observation has " + std::to_string(observation.universe()) +
                                         " elements, chip expects " + std::to_string(universe()));
    std::vector<bool> bits;
    bits.reserve(static_cast<size_t>(4L * universe()));
    for (Grade g : observation.grades()) {
        SerialWord w = SerialWord::encode(g);
        for (int b = 0; b < Grade::kBits; ++b) bits.push_back(w.bit(b));
    }
    return bits;
}

TraceRow ChipSim::snapshot(bool input_bit, TickResult r) const {
    TraceRow row;
    row.cycle = cycle();
    // The phase the cycle ran in; the live controller may already read Done
    // once the final output bit is out.
    if (cycle() <= 2) row.phase = Phase::Idle;
    else if (cycle() <= last_input_cycle()) row.phase = Phase::Antecedent;
    else row.phase = Phase::Conclusion;
    row.input_bit = input_bit;
    row.output_bit = r.output_bit;
    row.valid = r.valid;
    row.alphas.reserve(static_cast<size_t>(capacity_));
    for (int i = 0; i < capacity_; ++i) row.alphas.push_back(alpha(i));
    return row;
}

RunResult ChipSim::drive(const FuzzyVector& observation, std::vector<TraceRow>* trace) {
    std::vector<bool> in_bits = observation_bits(observation);
    reset();
    if (trace) trace->push_back(snapshot(false, TickResult{}));  // the reset cycle

    std::vector<bool> out_bits;
    out_bits.reserve(in_bits.size());
    while (cycle() < last_cycle()) {
        long next = cycle() + 1;
        bool in = false;
        if (next >= first_input_cycle() && next <= last_input_cycle())
            in = in_bits[static_cast<size_t>(next - first_input_cycle())];
        TickResult r = tick(in);
        if (r.valid) out_bits.push_back(r.output_bit);
        if (trace) trace->push_back(snapshot(in, r));
    }

    std::vector<Grade> grades;
    grades.reserve(static_cast<size_t>(universe()));
    for (int e = 0; e < universe(); ++e) {
        SerialWord w;
        for (int b = 0; b < Grade::kBits; ++b)
            w.set_bit(b, out_bits[static_cast<size_t>(e * Grade::kBits + b)]);
        grades.push_back(w.decode());
    }
    return RunResult{FuzzyVector(std::move(grades)), cycle()};
}

RunResult ChipSim::run(const FuzzyVector& observation) { return drive(observation, nullptr); }

std::pair<RunResult, std::vector<TraceRow>> ChipSim::run_traced(const FuzzyVector& observation) {
    std::vector<TraceRow> trace;
    RunResult r = drive(observation, &trace);
    return {std::move(r), std::move(trace)};
}

std::string format_trace(const std::vector<TraceRow>& rows, int capacity) {
    std::ostringstream os;
    os << "cycle,phase,input_bit,output_bit,valid";
    for (int i = 0; i < capacity; ++i) os << ",alpha_" << i;
    os << '\n';
    for (const TraceRow& row : rows) {
        os << row.cycle << ',' << phase_name(row.phase) << ',' << int(row.input_bit) << ','
           << int(row.output_bit) << ',' << int(row.valid);
        for (Grade g : row.alphas) os << ',' << g.value();
        os << '\n';
    }
    return os.str();
}

}  // namespace fie
