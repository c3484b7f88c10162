#include <gtest/gtest.h>

#include "bimlab/equivalence.hpp"
#include "test_support.hpp"

namespace bimlab {
namespace {

TEST(ForEachWord, MatchesBruteForceOrder) {
    std::vector<Word> seen;
    for_each_word(3, 3, [&](const Word& w) {
        seen.push_back(w);
        return true;
    });
    EXPECT_EQ(seen, testing::all_words(3, 3));
    EXPECT_EQ(word_count(3, 3), 40u);
}

TEST(ForEachWord, StopsEarly) {
    std::size_t calls = 0;
    for_each_word(2, 10, [&](const Word&) { return ++calls < 5; });
    EXPECT_EQ(calls, 5u);
}

TEST(WordCount, Saturates) {
    EXPECT_EQ(word_count(1, 4), 5u);
    EXPECT_EQ(word_count(0, 4), 1u);
    EXPECT_EQ(word_count(64, 64), SIZE_MAX);
}

TEST(CheckEquivalence, FindsShortestDisagreement) {
    std::vector<NamedFunction> fns{
        {"id", [](const Word& w) { return std::optional<Word>(w); }},
        {"id-but-aab", [](const Word& w) {
             if (w == Word{0, 0, 1}) return std::optional<Word>();
             return std::optional<Word>(w);
         }}};
    auto report = check_equivalence(fns, 2, 4, 0, 1, uniform_sampler(2, 4));
    ASSERT_FALSE(report.equivalent());
    EXPECT_EQ(report.mismatch->word, (Word{0, 0, 1}));
    EXPECT_EQ(report.mismatch->second_name, "id-but-aab");
    EXPECT_FALSE(report.mismatch->second_output.has_value());
    EXPECT_EQ(report.tested, 1u + 2u + 4u + 2u);
}

TEST(CheckEquivalence, SamplingIsSeeded) {
    auto run = [](std::uint64_t seed) {
        std::vector<Word> drawn;
        std::vector<NamedFunction> fns{{"a", [&](const Word& w) {
                                            drawn.push_back(w);
                                            return std::optional<Word>(w);
                                        }},
                                       {"b", [](const Word& w) { return std::optional<Word>(w); }}};
        auto report = check_equivalence(fns, 4, 0, 200, seed, uniform_sampler(4, 9));
        EXPECT_TRUE(report.equivalent());
        EXPECT_EQ(report.tested, 201u);
        return drawn;
    };
    EXPECT_EQ(run(3), run(3));
    EXPECT_NE(run(3), run(4));
}

TEST(InstanceSampler, HitsDomainOften) {
    const InstanceParams p(3, 2);
    auto sampler = instance_sampler(p, 10);
    std::mt19937_64 rng(1);
    int in_domain = 0;
    for (int i = 0; i < 2000; ++i) {
        const Word w = sampler(rng);
        for (SymbolId s : w) ASSERT_LT(s, 6u);
        if (oracle_f(p, w)) ++in_domain;
    }
    EXPECT_GT(in_domain, 400);
    EXPECT_LT(in_domain, 1900);
}

}  // namespace
}  // namespace bimlab
