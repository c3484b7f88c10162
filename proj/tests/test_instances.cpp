#include <gtest/gtest.h>

#include "bimlab/instances.hpp"
#include "bimlab/tx2bm.hpp"
#include "test_support.hpp"

namespace bimlab {
namespace {

using testing::all_words;
using testing::digits;

std::uint64_t power(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

// Direct reading of the definition: try every split point.
std::optional<Word> split_oracle(int k, int n, const Word& word) {
    for (std::size_t cut = 0; cut <= word.size(); ++cut) {
        const std::size_t lo = cut, hi = word.size() - cut;
        if (lo < static_cast<std::size_t>(n) || hi < static_cast<std::size_t>(n)) continue;
        bool ok = true;
        for (std::size_t i = 0; i < word.size(); ++i) {
            const bool low = word[i] < static_cast<SymbolId>(k);
            if ((i < cut) != low || word[i] >= static_cast<SymbolId>(2 * k)) ok = false;
        }
        if (ok) return Word{word[cut + static_cast<std::size_t>(n) - 1], word[cut - static_cast<std::size_t>(n)]};
    }
    return std::nullopt;
}

TEST(InstanceParams, Validation) {
    EXPECT_THROW(InstanceParams(1, 1), InputError);
    EXPECT_THROW(InstanceParams(2, 0), InputError);
    const InstanceParams p(3, 2);
    EXPECT_EQ(p.window_count(), 9u);
    EXPECT_EQ(p.lower_bound(), 10u);
    EXPECT_EQ(p.alphabet().size(), 6u);
    EXPECT_EQ(p.alphabet().token(5), "6");
    EXPECT_TRUE(p.is_low(2));
    EXPECT_TRUE(p.is_high(3));
    EXPECT_FALSE(p.is_high(6));
}

TEST(Oracle, Examples) {
    EXPECT_EQ(oracle_f(InstanceParams(2, 1), digits("13")), digits("31"));
    EXPECT_EQ(oracle_f(InstanceParams(2, 2), digits("121344")), digits("42"));
    EXPECT_EQ(oracle_f(InstanceParams(2, 2), digits("1234")), digits("41"));
    EXPECT_EQ(oracle_f(InstanceParams(3, 1), digits("231564")), digits("51"));
    EXPECT_EQ(oracle_f(InstanceParams(2, 2), digits("1243")), digits("31"));
    EXPECT_FALSE(oracle_f(InstanceParams(2, 1), digits("31")).has_value());
    EXPECT_FALSE(oracle_f(InstanceParams(2, 1), digits("1")).has_value());
    EXPECT_FALSE(oracle_f(InstanceParams(2, 1), Word{}).has_value());
    EXPECT_FALSE(oracle_f(InstanceParams(2, 1), Word{0, 7}).has_value());
}

TEST(Oracle, MatchesSplitDefinition) {
    for (int k : {2, 3}) {
        for (int n : {1, 2, 3}) {
            const InstanceParams p(k, n);
            const std::size_t max_len = k == 3 ? std::min(6, 2 * n + 2) : static_cast<std::size_t>(2 * n + 2);
            for (const Word& word : all_words(static_cast<std::size_t>(2 * k), max_len)) {
                ASSERT_EQ(oracle_f(p, word), split_oracle(k, n, word));
            }
        }
    }
}

TEST(Oracle, ShortWordsOutsideDomain) {
    for (int k : {2, 3}) {
        for (int n : {1, 2, 3}) {
            const InstanceParams p(k, n);
            for (const Word& word : all_words(static_cast<std::size_t>(2 * k), static_cast<std::size_t>(2 * n - 1))) {
                ASSERT_FALSE(oracle_f(p, word).has_value());
            }
        }
    }
}

TEST(InstanceTransducer, StateCounts) {
    for (int k : {2, 3, 4}) {
        for (int n : {1, 2, 3}) {
            const InstanceParams p(k, n);
            EXPECT_EQ(p.transducer_states(true), static_cast<std::size_t>(2 * k * n + 2));
            EXPECT_EQ(p.transducer_states(false), static_cast<std::size_t>(2 * k * (n + 1)));
            EXPECT_EQ(instance_transducer(p, true).state_count(), p.transducer_states(true));
            EXPECT_EQ(instance_transducer(p, false).state_count(), p.transducer_states(false));
        }
    }
}

TEST(InstanceTransducer, EpsilonBridgesCarryOutputs) {
    const InstanceParams p(2, 1);
    const Transducer t = instance_transducer(p, true);
    std::set<Word> bridge_outputs;
    for (const auto& arc : t.arcs()) {
        if (arc.is_epsilon()) bridge_outputs.insert(arc.output);
    }
    EXPECT_EQ(bridge_outputs, (std::set<Word>{digits("31"), digits("32"), digits("41"), digits("42")}));
}

TEST(InstanceTransducer, FourWayAgreement) {
    for (int k : {2, 3}) {
        for (int n : {1, 2}) {
            const InstanceParams p(k, n);
            const Transducer merged = instance_transducer(p, true);
            const Transducer unmerged = instance_transducer(p, false);
            const Transducer prepared = prepared_instance(p);
            EXPECT_FALSE(prepared.has_epsilon_inputs());
            const std::size_t max_len = k == 3 && n == 2 ? 5 : static_cast<std::size_t>(2 * n + 2);
            for (const Word& word : all_words(static_cast<std::size_t>(2 * k), max_len)) {
                const auto expected = oracle_f(p, word);
                const auto outs = testing::enumerate_outputs(merged, word);
                if (expected) {
                    ASSERT_EQ(outs, std::set<Word>{*expected});
                } else {
                    ASSERT_TRUE(outs.empty());
                }
                ASSERT_EQ(testing::enumerate_outputs(unmerged, word), outs);
                ASSERT_EQ(testing::enumerate_outputs(prepared, word), outs);
            }
        }
    }
}

TEST(Handcrafted, StateCountFormula) {
    for (int k : {2, 3, 4}) {
        for (int n : {1, 2, 3}) {
            const InstanceParams p(k, n);
            const Bimachine b = handcrafted_bimachine(p);
            std::uint64_t left = 2, right = 3 + power(k, n - 1);
            for (int m = 0; m <= n; ++m) left += power(k, m);
            for (int c = 0; c < n; ++c) right += power(k, c);
            EXPECT_EQ(b.left.state_count(), left) << k << "," << n;
            EXPECT_EQ(b.right.state_count(), right) << k << "," << n;
            EXPECT_TRUE(validate(b).empty());
        }
    }
    EXPECT_EQ(handcrafted_bimachine(InstanceParams(2, 1)).total_states(), 10u);
}

TEST(Handcrafted, AgreesWithOracleAndGeneric) {
    for (int k : {2, 3}) {
        for (int n : {1, 2, 3}) {
            const InstanceParams p(k, n);
            const Bimachine hand = handcrafted_bimachine(p);
            const bool with_generic = !(k == 3 && n == 3);
            const Bimachine generic = with_generic ? to_bimachine(prepared_instance(p)) : hand;
            const std::size_t max_len =
                std::min<std::size_t>(static_cast<std::size_t>(2 * n + 2), k == 3 ? 6 : 8);
            for (const Word& word : all_words(static_cast<std::size_t>(2 * k), max_len)) {
                const auto expected = oracle_f(p, word);
                ASSERT_EQ(evaluate(hand, word), expected);
                if (with_generic) ASSERT_EQ(evaluate(generic, word), expected);
            }
        }
    }
}

TEST(Handcrafted, LongBlocks) {
    const InstanceParams p(3, 2);
    const Bimachine b = handcrafted_bimachine(p);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> len(2, 12);
    std::uniform_int_distribution<SymbolId> low(0, 2), high(3, 5);
    for (int i = 0; i < 5000; ++i) {
        Word word(len(rng));
        const std::size_t cut = len(rng) % (word.size() + 1);
        for (std::size_t j = 0; j < word.size(); ++j) word[j] = j < cut ? low(rng) : high(rng);
        ASSERT_EQ(evaluate(b, word), oracle_f(p, word));
    }
}

}  // namespace
}  // namespace bimlab
