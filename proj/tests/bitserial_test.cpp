#include "bitserial.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "test_util.hpp"

using fie::AlphaRegister;
using fie::CompareOp;
using fie::Grade;
using fie::MaxTree;
using fie::SerialComparator;
using fie::SerialWord;

namespace {

// Streams one 4-bit word pair through a fresh comparator and decodes the
// output word.
int run_pair(CompareOp op, int a, int b) {
    SerialComparator unit(op);
    SerialWord wa = SerialWord::encode(Grade(a));
    SerialWord wb = SerialWord::encode(Grade(b));
    SerialWord out;
    for (int i = 0; i < Grade::kBits; ++i)
        out.set_bit(i, unit.step(wa.bit(i), wb.bit(i), i == 0));
    return out.decode().value();
}

}  // namespace

TEST_CASE("serial words encode MSB first") {
    SerialWord nine = SerialWord::encode(Grade(9));
    CHECK(nine.bit(0) == 1);
    CHECK(nine.bit(1) == 0);
    CHECK(nine.bit(2) == 0);
    CHECK(nine.bit(3) == 1);
    CHECK(SerialWord::encode(Grade(0)) == SerialWord{});
    for (int b = 0; b < 4; ++b) CHECK(SerialWord::encode(Grade(15)).bit(b) == 1);
    for (int g = 0; g < 16; ++g) CHECK(SerialWord::encode(Grade(g)).decode().value() == g);
    for (int g = 0; g < 16; ++g) {
        auto bits = oracle::word_bits(g);
        for (int b = 0; b < 4; ++b) CHECK(int(SerialWord::encode(Grade(g)).bit(b)) == bits[b]);
    }
}

TEST_CASE("serial min and max are exact for all 256 pairs") {
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b) {
            CHECK(run_pair(CompareOp::Min, a, b) == std::min(a, b));
            CHECK(run_pair(CompareOp::Max, a, b) == std::max(a, b));
        }
    // Named cases: 10 vs 9, equal operands, absorbing identities.
    CHECK(run_pair(CompareOp::Min, 10, 9) == 9);
    CHECK(run_pair(CompareOp::Max, 10, 9) == 10);
    CHECK(run_pair(CompareOp::Min, 7, 7) == 7);
    CHECK(run_pair(CompareOp::Max, 7, 7) == 7);
    for (int b = 0; b < 16; ++b) {
        CHECK(run_pair(CompareOp::Min, 15, b) == b);
        CHECK(run_pair(CompareOp::Max, 0, b) == b);
    }
}

TEST_CASE("comparator output depends only on the bits seen so far") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 1000; ++trial) {
        int a = static_cast<int>(rng() % 16);
        int b = static_cast<int>(rng() % 16);
        CompareOp op = rng() % 2 ? CompareOp::Min : CompareOp::Max;
        int cut = 1 + static_cast<int>(rng() % 3);  // keep bits < cut, scramble the rest

        SerialWord wa = SerialWord::encode(Grade(a));
        SerialWord wb = SerialWord::encode(Grade(b));
        SerialWord ma = wa, mb = wb;
        for (int i = cut; i < Grade::kBits; ++i) {
            ma.set_bit(i, rng() % 2);
            mb.set_bit(i, rng() % 2);
        }

        SerialComparator base(op), mutated(op);
        for (int i = 0; i < cut; ++i) {
            bool expect = base.step(wa.bit(i), wb.bit(i), i == 0);
            bool got = mutated.step(ma.bit(i), mb.bit(i), i == 0);
            CHECK(got == expect);
        }
    }
}

TEST_CASE("word-boundary reset isolates words from their history") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 1000; ++trial) {
        CompareOp op = rng() % 2 ? CompareOp::Min : CompareOp::Max;
        SerialComparator unit(op);
        int history = static_cast<int>(rng() % 8);
        for (int w = 0; w < history; ++w) {
            SerialWord wa = SerialWord::encode(Grade(static_cast<int>(rng() % 16)));
            SerialWord wb = SerialWord::encode(Grade(static_cast<int>(rng() % 16)));
            for (int i = 0; i < Grade::kBits; ++i) unit.step(wa.bit(i), wb.bit(i), i == 0);
        }
        int a = static_cast<int>(rng() % 16);
        int b = static_cast<int>(rng() % 16);
        SerialWord wa = SerialWord::encode(Grade(a));
        SerialWord wb = SerialWord::encode(Grade(b));
        SerialWord out;
        for (int i = 0; i < Grade::kBits; ++i)
            out.set_bit(i, unit.step(wa.bit(i), wb.bit(i), i == 0));
        int expect = op == CompareOp::Min ? std::min(a, b) : std::max(a, b);
        CHECK(out.decode().value() == expect);
    }
}

TEST_CASE("alpha register keeps a running maximum") {
    AlphaRegister reg;
    for (int g : {4, 8, 0, 0}) reg.accumulate(SerialWord::encode(Grade(g)));
    CHECK(reg.value().value() == 8);

    reg.reset();
    for (int i = 0; i < 5; ++i) reg.accumulate(SerialWord::encode(Grade(0)));
    CHECK(reg.value().value() == 0);

    reg.reset();
    for (int g : {3, 15, 1}) reg.accumulate(SerialWord::encode(Grade(g)));
    CHECK(reg.value().value() == 15);

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        reg.reset();
        int expect = 0;
        int n = 1 + static_cast<int>(rng() % 40);
        for (int i = 0; i < n; ++i) {
            int g = static_cast<int>(rng() % 16);
            expect = std::max(expect, g);
            reg.accumulate(SerialWord::encode(Grade(g)));
        }
        CHECK(reg.value().value() == expect);
    }
}

TEST_CASE("max tree latency equals its depth") {
    // One full-scale word on a single leaf: the root must stay low for
    // exactly depth() cycles, then replay the word.
    MaxTree tree(16);
    CHECK(tree.depth() == 4);
    std::vector<std::uint8_t> leaves(16, 0);
    std::vector<int> seen;
    for (int t = 0; t < 8; ++t) {
        leaves[5] = t < 4 ? 1 : 0;  // word 15 occupies cycles 0..3
        seen.push_back(tree.step(leaves, t == 0) ? 1 : 0);
    }
    CHECK(seen == std::vector<int>{0, 0, 0, 0, 1, 1, 1, 1});
}

TEST_CASE("tree reduction equals the n-ary maximum") {
    std::mt19937_64 rng(37);

    // Tree-shape invariance: every leaf count from 1 to 16.
    for (int n = 1; n <= 16; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            size_t words = 1 + rng() % 6;
            std::vector<std::vector<Grade>> leaves(static_cast<size_t>(n));
            std::vector<int> expect(words, 0);
            for (auto& stream : leaves) {
                for (size_t w = 0; w < words; ++w) {
                    int g = static_cast<int>(rng() % 16);
                    expect[w] = std::max(expect[w], g);
                    stream.push_back(Grade(g));
                }
            }
            auto out = fie::tree_reduce_max(leaves);
            REQUIRE(out.size() == words);
            for (size_t w = 0; w < words; ++w) CHECK(out[w].value() == expect[w]);
        }
    }

    std::vector<std::vector<Grade>> zeros(16, std::vector<Grade>(3, Grade(0)));
    for (Grade g : fie::tree_reduce_max(zeros)) CHECK(g.value() == 0);

    std::vector<std::vector<Grade>> one_hot(16, std::vector<Grade>(2, Grade(0)));
    one_hot[11] = {Grade(9), Grade(2)};
    auto out = fie::tree_reduce_max(one_hot);
    CHECK(out[0].value() == 9);
    CHECK(out[1].value() == 2);
}
