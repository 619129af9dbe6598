#pragma once

// Behavioral models of the chip's serial building blocks. Grades travel as
// 4-bit words, most significant bit first, one bit per clock cycle, so a
// min/max comparison resolves on the earliest differing bit.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "fuzzy.hpp"

namespace fie {

// One grade as it appears on a serial line: bit(0) is the MSB.
class SerialWord {
public:
    SerialWord() = default;
    static SerialWord encode(Grade g);

    Grade decode() const;
    bool bit(int i) const { return bits_[static_cast<size_t>(i)]; }
    void set_bit(int i, bool v) { bits_[static_cast<size_t>(i)] = v; }

    bool operator==(const SerialWord&) const = default;

private:
    std::array<bool, Grade::kBits> bits_{};
};

enum class CompareOp : std::uint8_t { Min, Max };

// Serial comparator. While no bit has differed since the last word-boundary
// reset, the output is AND (min) or OR (max) of the inputs; the first 1/0
// mismatch locks onto the winning operand, which is copied until reset.
class SerialComparator {
public:
    explicit SerialComparator(CompareOp op) : op_(op) {}

    // Presents one bit of each operand. `word_reset` must be asserted on the
    // first bit of every 4-bit word.
    bool step(bool a_bit, bool b_bit, bool word_reset);

    void reset() { select_ = Select::Undecided; }

private:
    enum class Select : std::uint8_t { Undecided, Left, Right };

    CompareOp op_;
    Select select_ = Select::Undecided;
};

// 4-bit recirculating shift register that holds a running maximum. front()
// is the MSB-side stage; each shift emits it and inserts a new bit at the
// tail, so four shifts stream the word MSB first and leave the register
// holding whatever was shifted in.
class AlphaRegister {
public:
    void reset() { bits_.fill(false); }

    bool front() const { return bits_[0]; }
    void shift(bool in);

    // Running-max update: streams the register against `next` through a
    // serial max unit while recirculating the result back in.
    void accumulate(SerialWord next);

    Grade value() const;

private:
    std::array<bool, Grade::kBits> bits_{};
};

// Binary tree of serial max units with one register stage per level, so a
// leaf bit presented on cycle t reappears at the root depth() cycles later.
// Vacant leaf slots read as constant 0.
class MaxTree {
public:
    explicit MaxTree(int leaf_count);

    int leaf_count() const { return leaf_count_; }
    int depth() const { return depth_; }

    void reset();

    // Presents this cycle's leaf bits (size leaf_count, nonzero = 1).
    // Returns the root output visible during this cycle. `word_start` refers
    // to the leaf stream; the per-level delays are handled internally.
    bool step(std::span<const std::uint8_t> leaf_bits, bool word_start);

private:
    int leaf_count_;
    int depth_;
    std::vector<std::vector<SerialComparator>> units_;  // [level][unit]
    std::vector<std::vector<bool>> regs_;               // registered level outputs
    std::vector<bool> word_start_history_;              // word_start_history_[i] = i+1 cycles ago
};

// Streams whole words through a MaxTree sized for `leaves.size()` and returns
// the decoded output stream (one word per input word position).
std::vector<Grade> tree_reduce_max(std::span<const std::vector<Grade>> leaves);

}  // namespace fie
