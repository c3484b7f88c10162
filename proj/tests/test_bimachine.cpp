#include <gtest/gtest.h>

#include "bimlab/bimachine.hpp"
#include "bimlab/instances.hpp"
#include "bimlab/tx2bm.hpp"
#include "test_support.hpp"

namespace bimlab {
namespace {

using testing::all_words;
using testing::digits;

// One state on each side; psi(0, a, 0) = x, psi(0, b, 0) undefined.
Bimachine tiny() {
    Bimachine b;
    const Alphabet sigma({"a", "b"});
    b.left = Dfa(sigma, 1, 0, {0, 0});
    b.right = Dfa(sigma, 1, 0, {0, 0});
    b.output_alphabet = Alphabet({"x"});
    b.psi[{0, 0, 0}] = Word{0};
    return b;
}

std::vector<Bimachine> sample_machines() {
    std::vector<Bimachine> out{tiny()};
    for (int k : {2, 3}) {
        for (int n : {1, 2}) {
            const InstanceParams p(k, n);
            out.push_back(handcrafted_bimachine(p));
            out.push_back(to_bimachine(prepared_instance(p)));
        }
    }
    return out;
}

TEST(PsiStar, EmptyWordIsEmptyOutput) {
    const Bimachine b = handcrafted_bimachine(InstanceParams(2, 1));
    for (StateId l = 0; l < b.left.state_count(); ++l) {
        for (StateId r = 0; r < b.right.state_count(); ++r) EXPECT_EQ(psi_star(b, l, Word{}, r), Word{});
    }
}

TEST(PsiStar, OneLetterIsPsi) {
    const Bimachine b = handcrafted_bimachine(InstanceParams(2, 1));
    for (StateId l = 0; l < b.left.state_count(); ++l) {
        for (SymbolId a = 0; a < 4; ++a) {
            for (StateId r = 0; r < b.right.state_count(); ++r) {
                const Word* expected = b.output(l, a, r);
                auto got = psi_star(b, l, Word{a}, r);
                if (expected == nullptr) {
                    EXPECT_FALSE(got.has_value());
                } else {
                    EXPECT_EQ(got, *expected);
                }
            }
        }
    }
}

TEST(PsiStar, HandcraftedValue) {
    const Bimachine b = handcrafted_bimachine(InstanceParams(2, 1));
    EXPECT_EQ(psi_star(b, b.left.start(), digits("13"), b.right.start()), digits("31"));
}

TEST(PsiStar, UnknownSymbol) {
    EXPECT_THROW(psi_star(tiny(), 0, Word{9}, 0), InputError);
}

TEST(PsiStar, RecursionMatchesPositionalProduct) {
    for (const Bimachine& b : sample_machines()) {
        const std::size_t sigma = b.input_alphabet().size();
        const std::size_t max_len = sigma > 4 ? 5 : 6;
        for (const Word& word : all_words(sigma, max_len)) {
            for (StateId l : {b.left.start(), static_cast<StateId>(b.left.state_count() - 1)}) {
                for (StateId r : {b.right.start(), static_cast<StateId>(b.right.state_count() - 1)}) {
                    ASSERT_EQ(psi_star(b, l, word, r), testing::psi_star_positional(b, l, word, r));
                }
            }
        }
    }
}

TEST(PsiStar, SuffixCompositionality) {
    for (const Bimachine& b : sample_machines()) {
        const std::size_t sigma = b.input_alphabet().size();
        const auto pieces = all_words(sigma, sigma > 4 ? 3 : 4);
        std::mt19937_64 rng(17);
        std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
        for (int i = 0; i < 2000; ++i) {
            const Word& u = pieces[pick(rng)];
            const Word& v = pieces[pick(rng)];
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            const StateId l = b.left.start();
            const StateId r = b.right.start();
            auto whole = psi_star(b, l, uv, r);
            auto first = psi_star(b, l, u, b.right.run_reversed(r, v));
            auto second = psi_star(b, b.left.run(l, u), v, r);
            std::optional<Word> joined;
            if (first && second) {
                joined = *first;
                joined->insert(joined->end(), second->begin(), second->end());
            }
            ASSERT_EQ(whole, joined);
        }
    }
}

TEST(Evaluate, EmptyWordUsesFlag) {
    Bimachine b = tiny();
    EXPECT_FALSE(evaluate(b, Word{}).has_value());
    b.empty_word_output = Word{0, 0};
    EXPECT_EQ(evaluate(b, Word{}), (Word{0, 0}));
}

TEST(Evaluate, HandcraftedTwoTwo) {
    const InstanceParams p(2, 2);
    const Bimachine b = handcrafted_bimachine(p);
    EXPECT_EQ(evaluate(b, digits("121344")), digits("42"));
    // blocks "12" and "34" are both exactly n long: i = 1, j = 4
    EXPECT_EQ(oracle_f(p, digits("1234")), digits("41"));
    EXPECT_EQ(evaluate(b, digits("1234")), digits("41"));
    EXPECT_FALSE(evaluate(b, digits("123")).has_value());
}

TEST(Validate, WellFormed) {
    EXPECT_TRUE(validate(tiny()).empty());
    EXPECT_TRUE(validate(handcrafted_bimachine(InstanceParams(3, 2))).empty());
}

TEST(Validate, MissingRightState) {
    Bimachine b = tiny();
    b.psi[{0, 1, 4}] = Word{};
    auto d = validate(b);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d[0].code, "psi-right-state");
}

TEST(Validate, PartialLeftAutomaton) {
    Bimachine b = tiny();
    b.left = Dfa(b.left.alphabet(), 1, 0, {0, kNoState});
    auto d = validate(b);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d[0].code, "not-total");
}

TEST(Validate, AlphabetMismatchAndBadOutput) {
    Bimachine b = tiny();
    b.right = Dfa(Alphabet({"a", "c"}), 1, 0, {0, 0});
    b.psi[{0, 0, 0}] = Word{3};
    auto d = validate(b);
    ASSERT_EQ(d.size(), 2u);
    EXPECT_EQ(d[0].code, "alphabet-mismatch");
    EXPECT_EQ(d[1].code, "psi-output");
}

TEST(Reduce, DuplicateLeftStateMerges) {
    Bimachine b = tiny();
    // left: 0 -a-> 1, 1 -a-> 0, both -b-> themselves; identical rows
    b.left = Dfa(b.left.alphabet(), 2, 0, {1, 0, 0, 1});
    b.psi[{1, 0, 0}] = Word{0};
    Bimachine r = reduce(b);
    EXPECT_EQ(r.left.state_count(), 1u);
    for (const Word& word : all_words(2, 5)) EXPECT_EQ(evaluate(r, word), evaluate(b, word));
}

TEST(Reduce, Idempotent) {
    for (const Bimachine& b : sample_machines()) {
        const Bimachine once = reduce(b);
        const Bimachine twice = reduce(once);
        EXPECT_EQ(twice.left.state_count(), once.left.state_count());
        EXPECT_EQ(twice.right.state_count(), once.right.state_count());
        EXPECT_LE(once.total_states(), b.total_states());
    }
}

TEST(Reduce, PreservesFunction) {
    for (int k : {2, 3}) {
        for (int n : {1, 2}) {
            const InstanceParams p(k, n);
            for (const Bimachine& b : {handcrafted_bimachine(p), to_bimachine(prepared_instance(p))}) {
                const Bimachine r = reduce(b);
                const std::size_t max_len = k == 3 && n == 2 ? 5 : static_cast<std::size_t>(2 * n + 2);
                for (const Word& word : all_words(static_cast<std::size_t>(2 * k), max_len)) {
                    ASSERT_EQ(evaluate(r, word), evaluate(b, word));
                }
                std::mt19937_64 rng(99);
                std::uniform_int_distribution<std::size_t> len(1, static_cast<std::size_t>(6 * n));
                std::uniform_int_distribution<SymbolId> letter(0, static_cast<SymbolId>(2 * k - 1));
                for (int i = 0; i < 10000; ++i) {
                    Word word(len(rng));
                    // sorted words land in the domain far more often
                    for (auto& s : word) s = letter(rng);
                    if (i % 2 == 0) std::sort(word.begin(), word.end());
                    ASSERT_EQ(evaluate(r, word), evaluate(b, word));
                }
            }
        }
    }
}

TEST(Reduce, GenericTwoTwoRespectsLowerBound) {
    const InstanceParams p(2, 2);
    const Bimachine r = reduce(to_bimachine(prepared_instance(p)));
    EXPECT_GE(r.total_states(), 5u);
}

TEST(MergeStates, RedirectsTransitionsAndDropsRows) {
    const Bimachine b = handcrafted_bimachine(InstanceParams(2, 1));
    const StateId keep = b.left.run(Word{0});
    const StateId drop = b.left.run(Word{1});
    ASSERT_NE(keep, drop);
    const Bimachine m = merge_left_states(b, keep, drop);
    EXPECT_EQ(m.left.state_count(), b.left.state_count() - 1);
    EXPECT_EQ(m.left.run(Word{0}), m.left.run(Word{1}));
    EXPECT_TRUE(validate(m).empty());
    EXPECT_THROW(merge_left_states(b, keep, keep), PreconditionError);
}

}  // namespace
}  // namespace bimlab
