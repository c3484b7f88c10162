#include <gtest/gtest.h>

#include <map>
#include <set>

#include "bimlab/errors.hpp"
#include "bimlab/fsm.hpp"
#include "bimlab/instances.hpp"
#include "test_support.hpp"

namespace bimlab {
namespace {

using testing::all_words;

Nfa last_letter_is_a() {
    Nfa n;
    n.alphabet = Alphabet({"a", "b"});
    n.state_count = 2;
    n.initial = {0};
    n.final = {1};
    n.arcs = {{0, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    n.canonicalize();
    return n;
}

TEST(RunDfa, EmptyWordStaysAtStart) {
    Dfa d(Alphabet({"a"}), 3, 2, {1, 2, 0});
    EXPECT_EQ(run_dfa(d, Word{}), 2u);
}

TEST(RunDfa, TwoCycle) {
    Dfa d(Alphabet({"a"}), 2, 0, {1, 0});
    EXPECT_EQ(run_dfa(d, Word{0, 0}), 0u);
    EXPECT_EQ(run_dfa(d, Word{0, 0, 0}), 1u);
}

TEST(RunDfa, UnknownSymbolIsInputError) {
    Dfa d(Alphabet({"a"}), 2, 0, {1, 0});
    EXPECT_THROW(run_dfa(d, Word{1}), InputError);
}

TEST(RunDfa, InstanceRightAutomatonOnReversedSuffix) {
    const InstanceParams p(2, 1);
    const Transducer t = prepared_instance(p);
    Determinized det = subset_construction(reverse(t.input_projection()));
    const Word suffix = testing::digits("3");
    const StateId q = det.dfa.run_reversed(det.dfa.start(), suffix);
    const auto expected = testing::coaccessible_on(t, suffix);
    EXPECT_EQ(det.subsets[q], std::vector<StateId>(expected.begin(), expected.end()));
}

TEST(SubsetConstruction, SingleStateAddsOnlySink) {
    Nfa n;
    n.alphabet = Alphabet({"a"});
    n.state_count = 1;
    n.initial = {0};
    auto det = subset_construction(n);
    ASSERT_EQ(det.dfa.state_count(), 2u);
    EXPECT_EQ(det.subsets[0], std::vector<StateId>{0});
    EXPECT_TRUE(det.subsets[1].empty());
    EXPECT_EQ(det.dfa.next(0, 0), 1u);
    EXPECT_EQ(det.dfa.next(1, 0), 1u);
}

TEST(SubsetConstruction, LastLetterIsA) {
    auto det = subset_construction(last_letter_is_a());
    ASSERT_EQ(det.dfa.state_count(), 3u);
    EXPECT_EQ(det.subsets[0], (std::vector<StateId>{0}));
    EXPECT_EQ(det.subsets[1], (std::vector<StateId>{0, 1}));
    EXPECT_TRUE(det.subsets[2].empty());
    EXPECT_TRUE(det.dfa.is_total());
}

TEST(SubsetConstruction, ReachesExactlyTheSimulatedSubset) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Nfa n = testing::random_transducer(rng).input_projection();
        auto det = subset_construction(n);
        ASSERT_TRUE(det.dfa.is_total());
        for (const Word& word : all_words(2, 6)) {
            auto reach = testing::nfa_reach(n, word);
            EXPECT_EQ(det.subsets[det.dfa.run(word)], std::vector<StateId>(reach.begin(), reach.end()));
        }
    }
}

TEST(SubsetConstruction, InstanceSuffixSetsAreCoaccessibleSets) {
    const Transducer t = prepared_instance(InstanceParams(2, 1));
    auto det = subset_construction(reverse(t.input_projection()));
    std::set<std::vector<StateId>> seen;
    for (const Word& suffix : all_words(4, 4)) {
        auto co = testing::coaccessible_on(t, suffix);
        std::vector<StateId> expected(co.begin(), co.end());
        EXPECT_EQ(det.subsets[det.dfa.run_reversed(det.dfa.start(), suffix)], expected);
        if (!expected.empty()) seen.insert(expected);
    }
    std::set<std::vector<StateId>> non_sink;
    for (const auto& s : det.subsets) {
        if (!s.empty()) non_sink.insert(s);
    }
    EXPECT_EQ(non_sink, seen);
}

TEST(SubsetConstruction, RejectsOutOfRangeArcs) {
    Nfa n;
    n.alphabet = Alphabet({"a"});
    n.state_count = 1;
    n.arcs = {{0, 0, 3}};
    EXPECT_THROW(subset_construction(n), InputError);
}

TEST(Reverse, FlipsOneArc) {
    Nfa n;
    n.alphabet = Alphabet({"a"});
    n.state_count = 2;
    n.initial = {0};
    n.final = {1};
    n.arcs = {{0, 0, 1}};
    Nfa r = reverse(n);
    EXPECT_EQ(r.arcs, (std::vector<Arc>{{1, 0, 0}}));
    EXPECT_EQ(r.initial, std::vector<StateId>{1});
    EXPECT_EQ(r.final, std::vector<StateId>{0});
}

TEST(Reverse, IsAnInvolution) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Nfa n = testing::random_transducer(rng).input_projection();
        EXPECT_EQ(reverse(reverse(n)), n);
    }
}

TEST(Reverse, AcceptsReversedWords) {
    const Transducer t = prepared_instance(InstanceParams(2, 1));
    const Nfa proj = t.input_projection();
    const Nfa rev = reverse(proj);
    EXPECT_EQ(testing::nfa_accepts(rev, testing::digits("431")), testing::nfa_accepts(proj, testing::digits("134")));
    for (const Word& word : all_words(4, 4)) {
        EXPECT_EQ(testing::nfa_accepts(rev, reversed(word)), testing::nfa_accepts(proj, word));
    }
}

TEST(MooreReduce, UniformColorOnSinkClosedMachineCollapses) {
    Dfa d(Alphabet({"a", "b"}), 3, 0, {1, 2, 2, 0, 0, 1});
    std::vector<std::size_t> colors(3, 7);
    auto red = moore_reduce(d, colors);
    EXPECT_EQ(red.dfa.state_count(), 1u);
    EXPECT_EQ(red.mapping, (std::vector<StateId>{0, 0, 0}));
}

TEST(MooreReduce, BisimilarPairMerges) {
    // 1 and 2 have the same color and both go to 0.
    Dfa d(Alphabet({"a"}), 3, 0, {1, 0, 0});
    std::vector<std::size_t> colors{0, 1, 1};
    auto red = moore_reduce(d, colors);
    EXPECT_EQ(red.dfa.state_count(), 2u);
    EXPECT_EQ(red.mapping[1], red.mapping[2]);
}

TEST(MooreReduce, QuotientCommutesWithTransitions) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto det = subset_construction(testing::random_transducer(rng).input_projection());
        std::vector<std::size_t> colors(det.dfa.state_count());
        for (std::size_t q = 0; q < colors.size(); ++q) colors[q] = det.subsets[q].size() % 2;
        auto red = moore_reduce(det.dfa, colors);
        EXPECT_LE(red.dfa.state_count(), det.dfa.state_count());
        for (StateId q = 0; q < det.dfa.state_count(); ++q) {
            for (SymbolId a = 0; a < 2; ++a) {
                EXPECT_EQ(red.mapping[det.dfa.next(q, a)], red.dfa.next(red.mapping[q], a));
            }
            // every state's class has the same color as its first member
            StateId rep = 0;
            while (red.mapping[rep] != red.mapping[q]) ++rep;
            EXPECT_EQ(colors[rep], colors[q]);
        }
    }
}

TEST(MooreReduce, InstanceLeftWindowsStayDistinct) {
    // left automaton of the hand-built machine for (2,2), colored by psi rows
    const InstanceParams p(2, 2);
    const Bimachine b = handcrafted_bimachine(p);
    std::vector<std::size_t> colors(b.left.state_count());
    std::map<std::vector<std::pair<PsiKey, Word>>, std::size_t> ids;
    for (StateId l = 0; l < colors.size(); ++l) {
        std::vector<std::pair<PsiKey, Word>> row;
        for (const auto& [key, value] : b.psi) {
            if (key.left == l) row.push_back({{0, key.symbol, key.right}, value});
        }
        colors[l] = ids.emplace(row, ids.size()).first->second;
    }
    auto red = moore_reduce(b.left, colors);
    // pairwise distinguishable full windows: every pair of length-2 low words is
    // separated by the direct definition with some common suffix
    for (const Word& u : all_words(2, 2, 2)) {
        for (const Word& v : all_words(2, 2, 2)) {
            if (u == v) continue;
            bool separated = false;
            for (const Word& tail : all_words(4, 3)) {
                Word us = u, vs = v;
                us.insert(us.end(), tail.begin(), tail.end());
                vs.insert(vs.end(), tail.begin(), tail.end());
                if (oracle_f(p, us) != oracle_f(p, vs)) separated = true;
            }
            ASSERT_TRUE(separated);
            EXPECT_NE(red.mapping[b.left.run(u)], red.mapping[b.left.run(v)]);
        }
    }
    std::set<StateId> window_classes;
    for (const Word& window : all_words(2, 2, 2)) window_classes.insert(red.mapping[b.left.run(window)]);
    EXPECT_GE(window_classes.size(), 4u);
    EXPECT_GE(red.dfa.state_count(), 4u);
}

TEST(MooreReduce, RequiresTotalAutomaton) {
    Dfa d(Alphabet({"a"}), 2, 0, {1, kNoState});
    std::vector<std::size_t> colors{0, 0};
    EXPECT_THROW(moore_reduce(d, colors), PreconditionError);
}

}  // namespace
}  // namespace bimlab
