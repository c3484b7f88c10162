#pragma once

#include <cstddef>
#include <vector>

#include "bimlab/bimachine.hpp"
#include "bimlab/fsm.hpp"
#include "bimlab/transducer.hpp"

namespace bimlab {

/// Right automaton of the generic construction. After reading the reversal of
/// a suffix v, the state's subset is {q : q reaches a final state reading v}.
struct RightAutomaton {
    Dfa dfa;
    std::vector<std::vector<StateId>> subsets;
};

/// Left automaton of the generic construction: states are ordered lists of
/// transducer states; the empty list is the dead sink.
struct LeftAutomaton {
    Dfa dfa;
    std::vector<std::vector<StateId>> lists;
};

inline constexpr std::size_t kDefaultLeftStateCap = 100'000;

RightAutomaton build_right_automaton(const Transducer& t);

/// Start list is the initial states in index order. On a letter, each state of
/// the list is expanded in order through its arcs in canonical order, keeping
/// only the first occurrence of every destination. Throws ResourceError past
/// `state_cap` lists.
LeftAutomaton build_left_automaton(const Transducer& t, std::size_t state_cap = kDefaultLeftStateCap);

/// psi(l, a, r) = output of the first arc (p, a, w, q) with p scanned in list
/// order of l and p's arcs in canonical order, such that q is in r's subset.
PsiTable build_psi(const Transducer& t, const LeftAutomaton& left, const RightAutomaton& right);

/// Equivalent bimachine for a functional, letter-input transducer.
/// Throws PreconditionError on epsilon inputs and NonFunctionalError (carrying
/// the witness) if the transducer is not functional.
Bimachine to_bimachine(const Transducer& t, std::size_t state_cap = kDefaultLeftStateCap);

}  // namespace bimlab
