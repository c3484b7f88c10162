#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "bimlab/alphabet.hpp"
#include "bimlab/errors.hpp"
#include "bimlab/fsm.hpp"

namespace bimlab {

/// Input label of an epsilon arc. Sorts after every letter.
inline constexpr SymbolId kEpsilon = static_cast<SymbolId>(-1);

struct TransducerArc {
    StateId src = 0;
    SymbolId input = kEpsilon;
    Word output;
    StateId dst = 0;

    bool is_epsilon() const noexcept { return input == kEpsilon; }

    friend auto operator<=>(const TransducerArc&, const TransducerArc&) = default;
};

/// Nondeterministic transducer with letter-or-epsilon inputs and word outputs.
///
/// The constructor validates indices and puts the machine in canonical form:
/// initial/final sorted and unique, arcs sorted by (src, input, output, dst)
/// and deduplicated. Instances are immutable afterwards.
class Transducer {
public:
    Transducer() = default;
    Transducer(Alphabet input_alphabet, Alphabet output_alphabet, std::size_t state_count,
               std::vector<StateId> initial, std::vector<StateId> final, std::vector<TransducerArc> arcs);

    const Alphabet& input_alphabet() const noexcept { return input_alphabet_; }
    const Alphabet& output_alphabet() const noexcept { return output_alphabet_; }
    std::size_t state_count() const noexcept { return state_count_; }
    const std::vector<StateId>& initial() const noexcept { return initial_; }
    const std::vector<StateId>& final() const noexcept { return final_; }
    const std::vector<TransducerArc>& arcs() const noexcept { return arcs_; }

    bool is_initial(StateId q) const;
    bool is_final(StateId q) const;
    bool has_epsilon_inputs() const noexcept;
    /// True if some epsilon-input cycle carries a nonempty output.
    bool has_divergent_epsilon_cycle() const noexcept { return divergent_; }

    /// Indices into arcs() of the arcs leaving `q`, in canonical order.
    std::span<const std::size_t> arcs_from(StateId q) const;

    /// The underlying input automaton. Requires letter-only inputs.
    Nfa input_projection() const;

    friend bool operator==(const Transducer& a, const Transducer& b) {
        return a.input_alphabet_ == b.input_alphabet_ && a.output_alphabet_ == b.output_alphabet_ &&
               a.state_count_ == b.state_count_ && a.initial_ == b.initial_ && a.final_ == b.final_ &&
               a.arcs_ == b.arcs_;
    }

private:
    Alphabet input_alphabet_;
    Alphabet output_alphabet_;
    std::size_t state_count_ = 0;
    std::vector<StateId> initial_;
    std::vector<StateId> final_;
    std::vector<TransducerArc> arcs_;
    std::vector<std::size_t> by_source_;   // arc indices grouped by src
    std::vector<std::size_t> source_begin_;  // offsets into by_source_, size state_count + 1
    bool divergent_ = false;
};

/// A path in a transducer: a chain of arcs, or a bare state.
struct Path {
    std::vector<std::size_t> arcs;  // indices into Transducer::arcs()
    StateId source = 0;
    StateId target = 0;
    Word input;
    Word output;

    std::size_t length() const noexcept { return arcs.size(); }
};

/// The empty path at `state`: label (eps, eps), length 0.
Path empty_path(StateId state);
/// Builds the path following `arc_indices`; throws PreconditionError if they do not chain.
Path make_path(const Transducer& t, std::vector<std::size_t> arc_indices);
/// Concatenation; requires first.target == second.source.
Path concat(const Path& first, const Path& second);

/// Raised by evaluate_function when an input has two distinct outputs.
class NonFunctionalError : public Error {
public:
    NonFunctionalError(Word input, Word first, Word second);

    const Word& input() const noexcept { return input_; }
    const Word& first() const noexcept { return first_; }
    const Word& second() const noexcept { return second_; }

private:
    Word input_;
    Word first_;
    Word second_;
};

/// Throws DivergenceError if some epsilon-input cycle has a nonempty output.
void require_no_divergent_cycles(const Transducer& t);

/// Every output of an accepting path reading `w`, sorted and unique.
std::vector<Word> evaluate_relation(const Transducer& t, const Word& w);

/// The unique output for `w`, or nullopt outside the domain. Throws
/// NonFunctionalError when the relation is multi-valued at `w`.
std::optional<Word> evaluate_function(const Transducer& t, const Word& w);

/// Equivalent transducer without epsilon-input arcs.
///
/// Closure outputs are pushed onto the following letter arcs. When a state
/// reaches a final state through epsilon arcs with a nonempty output, that
/// output is appended to the incoming letter arcs, which are redirected to a
/// fresh final state. Throws PreconditionError if the empty input would need
/// a nonempty output (not expressible without epsilon arcs).
Transducer remove_input_epsilons(const Transducer& t);

/// Keeps only states that are accessible and co-accessible, renumbered in index order.
Transducer trim(const Transducer& t);

struct FunctionalityVerdict {
    bool functional = true;
    /// Present iff !functional: an input with at least two distinct outputs.
    std::optional<Word> witness;
};

/// Decides functionality by exploring the square of `t` with output delays.
/// Requires letter-only inputs.
FunctionalityVerdict check_functional(const Transducer& t);

}  // namespace bimlab
