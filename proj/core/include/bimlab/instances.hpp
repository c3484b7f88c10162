#pragma once

#include <cstdint>
#include <optional>

#include "bimlab/alphabet.hpp"
#include "bimlab/bimachine.hpp"
#include "bimlab/transducer.hpp"

namespace bimlab {

/// Parameters (k, n) of the hard family over the alphabet {1, ..., 2k}.
///
/// The low half {1..k} forms the first block of a word and the high half
/// {k+1..2k} the second. Symbol ids are token value minus one, so the low
/// half is ids [0, k) and the high half ids [k, 2k).
class InstanceParams {
public:
    /// Throws InputError unless k >= 2 and n >= 1.
    InstanceParams(int k, int n);

    int k() const noexcept { return k_; }
    int n() const noexcept { return n_; }

    /// {1, ..., 2k} as decimal tokens.
    Alphabet alphabet() const;
    bool is_low(SymbolId s) const noexcept { return s < static_cast<SymbolId>(k_); }
    bool is_high(SymbolId s) const noexcept { return s >= static_cast<SymbolId>(k_) && s < 2u * k_; }

    /// k^n, the per-side pigeonhole threshold.
    std::uint64_t window_count() const;
    /// k^n + 1, the total-state lower bound for any equivalent bimachine.
    std::uint64_t lower_bound() const { return window_count() + 1; }
    /// 2k(n+1) with separate heads and tails; 2kn+2 once they are merged.
    std::size_t transducer_states(bool merged) const;

    friend bool operator==(const InstanceParams&, const InstanceParams&) = default;

private:
    int k_;
    int n_;
};

/// Direct definition of the hard function: defined on u v with u a word of at
/// least n low symbols and v a word of at least n high symbols; the value is
/// j i where i is the n-th symbol of u counted from its end and j the n-th
/// symbol of v.
std::optional<Word> oracle_f(const InstanceParams& p, const Word& w);

/// Chain transducer for the family, with epsilon-input bridges carrying the
/// output j i between the first-block chain for i and the second-block chain
/// for j. `merged` shares one head and one tail across all chains.
Transducer instance_transducer(const InstanceParams& p, bool merged);

/// The merged instance with epsilon bridges removed and trimmed: the form
/// every bimachine construction starts from.
Transducer prepared_instance(const InstanceParams& p);

/// Sliding-window bimachine for the family with O(k^n) states.
///
/// The left automaton remembers the last n low symbols while in the first
/// block, then moves to SECOND on a high symbol and to DEAD on any later low
/// symbol. The right automaton, reading the word backwards, remembers the
/// leading n-1 symbols of the high suffix plus its length capped at n, then
/// moves to CROSSED(long enough) on a low symbol and to DEAD on any later high
/// symbol. psi emits j i at the block boundary and the empty word elsewhere.
Bimachine handcrafted_bimachine(const InstanceParams& p);

}  // namespace bimlab
