#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bimlab/alphabet.hpp"
#include "bimlab/fsm.hpp"

namespace bimlab {

struct PsiKey {
    StateId left = 0;
    SymbolId symbol = 0;
    StateId right = 0;

    friend auto operator<=>(const PsiKey&, const PsiKey&) = default;
};

/// Partial output function; an absent key means undefined.
using PsiTable = std::map<PsiKey, Word>;

/// A left-to-right automaton, a right-to-left automaton and an output function
/// on (left state, letter, right state) triples, over the free output monoid.
///
/// The right automaton reads the input reversed: at position i of a word w the
/// right state is the one reached on the reversal of the suffix after i. Both
/// automata treat every state as final. Since O(eps) cannot be inferred from
/// psi, the output on the empty word is stored separately; undefined by default.
struct Bimachine {
    Dfa left;
    Dfa right;
    PsiTable psi;
    std::optional<Word> empty_word_output;
    Alphabet output_alphabet;

    const Alphabet& input_alphabet() const noexcept { return left.alphabet(); }
    std::size_t total_states() const noexcept { return left.state_count() + right.state_count(); }

    /// psi(l, a, r) or nullptr when undefined.
    const Word* output(StateId l, SymbolId a, StateId r) const;

    friend bool operator==(const Bimachine&, const Bimachine&) = default;
};

/// Generalized output function psi*(l, w, r), unfolding
/// psi*(l, t a, r) = psi*(l, t, delta_R(r, a)) . psi(delta_L*(l, t), a, r).
/// Undefined as soon as one psi application is undefined.
std::optional<Word> psi_star(const Bimachine& b, StateId l, const Word& w, StateId r);

/// The represented function: psi*(s_L, w, s_R) for nonempty w, and
/// empty_word_output for the empty word.
std::optional<Word> evaluate(const Bimachine& b, const Word& w);

struct Diagnostic {
    std::string code;
    std::string message;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// Structural checks: alphabet agreement, totality of both automata, psi keys
/// and values in range. An empty result means the machine is well formed.
std::vector<Diagnostic> validate(const Bimachine& b);

/// Sound state reduction. Unreachable states are dropped, then left and right
/// states are merged by Moore refinement on their psi rows, alternating sides
/// until neither side shrinks. The represented function is preserved exactly.
Bimachine reduce(const Bimachine& b);

/// Redirects every transition into `drop` to `keep` and removes `drop` (and
/// its psi entries). Used to build deliberately corrupted machines.
Bimachine merge_left_states(const Bimachine& b, StateId keep, StateId drop);
Bimachine merge_right_states(const Bimachine& b, StateId keep, StateId drop);

}  // namespace bimlab
