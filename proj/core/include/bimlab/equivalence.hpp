#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bimlab/alphabet.hpp"
#include "bimlab/instances.hpp"

namespace bimlab {

/// A partial word function under test, with a name for reports.
struct NamedFunction {
    std::string name;
    std::function<std::optional<Word>(const Word&)> apply;
};

using WordSampler = std::function<Word(std::mt19937_64&)>;

struct EquivalenceMismatch {
    Word word;
    std::string first_name;
    std::optional<Word> first_output;
    std::string second_name;
    std::optional<Word> second_output;
};

struct EquivalenceReport {
    std::size_t tested = 0;
    std::optional<EquivalenceMismatch> mismatch;

    bool equivalent() const noexcept { return !mismatch.has_value(); }
};

/// Calls `visit` on every word over an alphabet of `alphabet_size` letters of
/// length 0..max_len, shortest first and lexicographically within a length.
/// Stops early when `visit` returns false.
void for_each_word(std::size_t alphabet_size, std::size_t max_len, const std::function<bool(const Word&)>& visit);

/// Number of words of length 0..max_len (saturating at SIZE_MAX).
std::size_t word_count(std::size_t alphabet_size, std::size_t max_len);

/// Compares all functions pairwise against the first one, on every word of
/// length <= max_len and then on `samples` words drawn from `sampler` with a
/// generator seeded by `seed`. Stops at the first disagreement in defined-ness
/// or value.
EquivalenceReport check_equivalence(const std::vector<NamedFunction>& functions, std::size_t alphabet_size,
                                    std::size_t max_len, std::size_t samples, std::uint64_t seed,
                                    const WordSampler& sampler);

/// Uniform letters, uniform length in [1, max_len].
WordSampler uniform_sampler(std::size_t alphabet_size, std::size_t max_len);

/// Words shaped like the hard family's domain: a low block then a high block,
/// with block lengths in [0, max_len / 2 + n] and an occasional random
/// corruption, so that roughly half of the samples are in the domain.
WordSampler instance_sampler(const InstanceParams& p, std::size_t max_len);

}  // namespace bimlab
