#include "bitserial.hpp"

#include <algorithm>
#include <string>

namespace fie {

SerialWord SerialWord::encode(Grade g) {
    SerialWord w;
    for (int i = 0; i < Grade::kBits; ++i)
        w.bits_[static_cast<size_t>(i)] = (g.value() >> (Grade::kBits - 1 - i)) & 1;
    return w;
}

Grade SerialWord::decode() const {
    int v = 0;
    for (int i = 0; i < Grade::kBits; ++i)
        v |= static_cast<int>(bits_[static_cast<size_t>(i)]) << (Grade::kBits - 1 - i);
    return Grade(v);
}

bool SerialComparator::step(bool a_bit, bool b_bit, bool word_reset) {
    if (word_reset) select_ = Select::Undecided;
    switch (select_) {
        case Select::Left:
            return a_bit;
        case Select::Right:
            return b_bit;
        case Select::Undecided:
            break;
    }
    if (a_bit != b_bit) {
        // Min keeps the operand that showed 0 first; max keeps the 1 side.
        bool keep_left = (op_ == CompareOp::Min) ? !a_bit : a_bit;
        select_ = keep_left ? Select::Left : Select::Right;
    }
    return (op_ == CompareOp::Min) ? (a_bit && b_bit) : (a_bit || b_bit);
}

void AlphaRegister::shift(bool in) {
    for (size_t i = 0; i + 1 < bits_.size(); ++i) bits_[i] = bits_[i + 1];
    bits_.back() = in;
}

void AlphaRegister::accumulate(SerialWord next) {
    SerialComparator max_unit(CompareOp::Max);
    for (int i = 0; i < Grade::kBits; ++i) {
        bool out = max_unit.step(next.bit(i), front(), i == 0);
        shift(out);
    }
}

Grade AlphaRegister::value() const {
    SerialWord w;
    for (int i = 0; i < Grade::kBits; ++i) w.set_bit(i, bits_[static_cast<size_t>(i)]);
    return w.decode();
}

namespace {

int ceil_log2(int n) {
    int d = 0;
    while ((1 << d) < n) ++d;
    return d;
}

}  // namespace

MaxTree::MaxTree(int leaf_count) : leaf_count_(leaf_count), depth_(ceil_log2(leaf_count)) {
    if (leaf_count < 1) throw Error(Errc::argument, "max tree needs at least one leaf");
    units_.resize(static_cast<size_t>(depth_));
    regs_.resize(static_cast<size_t>(depth_));
    for (int level = 0; level < depth_; ++level) {
        int n = 1 << (depth_ - 1 - level);  // units at this level
        units_[static_cast<size_t>(level)].assign(static_cast<size_t>(n),
                                                  SerialComparator(CompareOp::Max));
        regs_[static_cast<size_t>(level)].assign(static_cast<size_t>(n), false);
    }
    word_start_history_.assign(static_cast<size_t>(depth_), false);
}

void MaxTree::reset() {
    for (auto& level : units_)
        for (auto& u : level) u.reset();
    for (auto& level : regs_) std::fill(level.begin(), level.end(), false);
    std::fill(word_start_history_.begin(), word_start_history_.end(), false);
}

bool MaxTree::step(std::span<const std::uint8_t> leaf_bits, bool word_start) {
    if (static_cast<int>(leaf_bits.size()) != leaf_count_)
        throw Error(Errc::argument, "expected " + std::to_string(leaf_count_) + " leaf bits");
    if (depth_ == 0) return leaf_bits[0] != 0;

    bool out = regs_.back()[0];

    // Walk levels from the root down so each level still reads the previous
    // level's pre-update register values. Level 0 reads the leaves directly;
    // level L sees the leaf word boundary delayed by L cycles.
    auto slot = [&](int level, int j) -> bool {
        if (level == 0) return j < leaf_count_ && leaf_bits[static_cast<size_t>(j)] != 0;
        return regs_[static_cast<size_t>(level - 1)][static_cast<size_t>(j)];
    };
    for (int level = depth_ - 1; level >= 0; --level) {
        bool ws = level == 0 ? word_start : word_start_history_[static_cast<size_t>(level - 1)];
        auto& lvl_units = units_[static_cast<size_t>(level)];
        auto& lvl_regs = regs_[static_cast<size_t>(level)];
        for (size_t j = 0; j < lvl_units.size(); ++j) {
            int left = static_cast<int>(2 * j);
            lvl_regs[j] = lvl_units[j].step(slot(level, left), slot(level, left + 1), ws);
        }
    }

    for (size_t i = word_start_history_.size(); i-- > 1;)
        word_start_history_[i] = word_start_history_[i - 1];
    if (!word_start_history_.empty()) word_start_history_[0] = word_start;
    return out;
}

std::vector<Grade> tree_reduce_max(std::span<const std::vector<Grade>> leaves) {
    if (leaves.empty()) throw Error(Errc::argument, "max reduction needs at least one leaf stream");
    size_t words = leaves.front().size();
    for (const auto& stream : leaves) {
        if (stream.size() != words)
            throw Error(Errc::argument, "leaf streams must be word-aligned");
    }

    MaxTree tree(static_cast<int>(leaves.size()));
    std::vector<std::vector<std::uint8_t>> encoded(leaves.size());
    for (size_t i = 0; i < leaves.size(); ++i) {
        for (Grade g : leaves[i]) {
            SerialWord w = SerialWord::encode(g);
            for (int b = 0; b < Grade::kBits; ++b) encoded[i].push_back(w.bit(b) ? 1 : 0);
        }
    }

    size_t total_bits = words * Grade::kBits;
    std::vector<bool> out_bits;
    std::vector<std::uint8_t> row(leaves.size());
    for (size_t t = 0; t < total_bits + static_cast<size_t>(tree.depth()); ++t) {
        for (size_t i = 0; i < leaves.size(); ++i)
            row[i] = t < total_bits ? encoded[i][t] : 0;
        bool ws = t < total_bits && t % Grade::kBits == 0;
        bool out = tree.step(row, ws);
        if (t >= static_cast<size_t>(tree.depth())) out_bits.push_back(out);
    }

    std::vector<Grade> result;
    result.reserve(words);
    for (size_t w = 0; w < words; ++w) {
        SerialWord sw;
        for (int b = 0; b < Grade::kBits; ++b)
            sw.set_bit(b, out_bits[w * Grade::kBits + static_cast<size_t>(b)]);
        result.push_back(sw.decode());
    }
    return result;
}

}  // namespace fie
