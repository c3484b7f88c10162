#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <variant>

#include "bimlab/bimachine.hpp"
#include "bimlab/instances.hpp"

namespace bimlab {

enum class Side { kLeft, kRight };

/// Two distinct length-n words that drive one automaton of a bimachine into
/// the same state. Left pairs are low words run from s_L; right pairs are high
/// words whose reversals are run from s_R.
///
/// The decomposition splits at the first differing position: from the left
/// for left pairs (first = common + differing_first + residue_first), from the
/// right for right pairs (first = residue_first + differing_first + common).
struct FoolingPair {
    Side side = Side::kLeft;
    Word first;
    Word second;
    StateId collision_state = 0;
    Word common;
    SymbolId differing_first = 0;
    SymbolId differing_second = 0;
    Word residue_first;
    Word residue_second;
};

struct Collisions {
    std::optional<FoolingPair> left;
    std::optional<FoolingPair> right;
};

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// Runs all k^n low words through the left automaton and all k^n high words
/// (reversed) through the right automaton, in lexicographic order, and
/// reports the first collision on each side. No collision on a side certifies
/// that the side has at least k^n states. Throws ResourceError if k^n exceeds
/// `cap`, PreconditionError if the bimachine is not over {1..2k}.
Collisions find_collisions(const Bimachine& b, const InstanceParams& p, std::size_t cap = kDefaultEnumerationCap);

/// The three probe words built from a left and a right fooling pair, with the
/// values the hard function takes on them.
struct Candidates {
    Word alpha1;  // left.first padded with differing_first^|common|
    Word alpha2;  // left.second padded the same way
    Word beta3;   // differing_first^|common| prefixed to right.first
    Word beta4;   // same prefix on right.second
    struct Probe {
        Word word;
        Word expected;
    };
    std::array<Probe, 3> probes;  // alpha1 beta3, alpha2 beta3, alpha1 beta4
};

/// Throws InternalError if the oracle disagrees with the expected values.
Candidates build_candidates(const FoolingPair& left, const FoolingPair& right, const InstanceParams& p);

struct BoundRespected {
    /// A side is certified when its k^n images were pairwise distinct.
    bool left_certified = false;
    bool right_certified = false;
    Collisions collisions;
};

struct Mismatch {
    Word word;
    Word expected;
    std::optional<Word> actual;
};

/// All three probes matched even though both sides collide. Cannot happen for
/// a correct implementation; reported rather than thrown so it can be tested.
struct SoundnessAlarm {
    Candidates candidates;
};

using RefuteVerdict = std::variant<BoundRespected, Mismatch, SoundnessAlarm>;

/// If both automata are smaller than k^n on the probed words, exhibits an
/// input on which the bimachine disagrees with the hard function.
RefuteVerdict refute(const Bimachine& b, const InstanceParams& p, std::size_t cap = kDefaultEnumerationCap);

struct CorollaryConstants {
    double c_k = 0.0;
    /// True iff c_3 >= c_j for every j in 2..64.
    bool k3_is_argmax = false;
};

/// c_k = log2(k) / (2k), the exponent in 2^{c_k (|Q| - 2)}.
CorollaryConstants corollary_constants(int k);

/// Merges the left states of two random distinct low words of length n and
/// the right states of two random distinct high words of length n. A side
/// whose sampled words already collide is left as is.
Bimachine corrupt_by_merging(const Bimachine& b, const InstanceParams& p, std::mt19937_64& rng);

}  // namespace bimlab
