#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "bimlab/alphabet.hpp"

namespace bimlab {

struct Arc {
    StateId src = 0;
    SymbolId label = 0;
    StateId dst = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Nondeterministic automaton without epsilon arcs.
///
/// `initial` and `final` are kept sorted and duplicate-free; `arcs` is sorted
/// by (src, label, dst). Use canonicalize() after mutating the fields directly.
struct Nfa {
    Alphabet alphabet;
    std::size_t state_count = 0;
    std::vector<StateId> initial;
    std::vector<StateId> final;
    std::vector<Arc> arcs;

    void canonicalize();
    /// Throws InputError if any index is out of range.
    void validate() const;

    friend bool operator==(const Nfa&, const Nfa&) = default;
};

/// Deterministic automaton with a dense transition table.
///
/// Entries may be kNoState so that malformed (partial) machines can be loaded
/// and diagnosed; every construction in the library produces total tables.
class Dfa {
public:
    Dfa() = default;
    /// `table` is row-major: table[state * |alphabet| + symbol].
    Dfa(Alphabet alphabet, std::size_t state_count, StateId start, std::vector<StateId> table);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t state_count() const noexcept { return state_count_; }
    StateId start() const noexcept { return start_; }
    const std::vector<StateId>& table() const noexcept { return table_; }

    StateId next(StateId state, SymbolId symbol) const {
        return table_[static_cast<std::size_t>(state) * alphabet_.size() + symbol];
    }

    bool is_total() const noexcept;

    /// Folds the transition function over `word`, starting at `from`.
    /// Throws InputError for symbols outside the alphabet and PreconditionError
    /// if a missing transition is hit.
    StateId run(StateId from, std::span<const SymbolId> word) const;
    StateId run(std::span<const SymbolId> word) const { return run(start_, word); }
    /// Folds over `word` right to left, i.e. runs on the reversed word.
    StateId run_reversed(StateId from, std::span<const SymbolId> word) const;

    friend bool operator==(const Dfa&, const Dfa&) = default;

private:
    Alphabet alphabet_;
    std::size_t state_count_ = 0;
    StateId start_ = 0;
    std::vector<StateId> table_;
};

/// Folds `d` over `word` from its start state.
StateId run_dfa(const Dfa& d, std::span<const SymbolId> word);

struct Determinized {
    Dfa dfa;
    /// subsets[q] is the sorted set of Nfa states represented by Dfa state q.
    std::vector<std::vector<StateId>> subsets;
};

/// Breadth-first subset construction in alphabet order. The empty subset is
/// always present (appended last if never reached) so the result is total.
Determinized subset_construction(const Nfa& nfa);

/// Flips every arc and swaps initial with final states.
Nfa reverse(const Nfa& nfa);

struct Reduction {
    Dfa dfa;
    /// mapping[q] is the quotient state of original state q.
    std::vector<StateId> mapping;
};

/// Coarsest partition that refines `colors` and is compatible with the
/// transition function (Moore refinement). Blocks are numbered by the first
/// original state that falls into them. Requires a total Dfa.
Reduction moore_reduce(const Dfa& dfa, std::span<const std::size_t> colors);

/// Drops states unreachable from the start state, preserving index order.
Reduction remove_unreachable(const Dfa& dfa);

}  // namespace bimlab
