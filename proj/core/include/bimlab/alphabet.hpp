#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bimlab {

using SymbolId = std::uint32_t;
using StateId = std::uint32_t;

/// Words are sequences of symbol indices into some Alphabet.
using Word = std::vector<SymbolId>;

inline constexpr StateId kNoState = static_cast<StateId>(-1);

/// An ordered, duplicate-free list of symbol tokens.
///
/// Symbols are addressed by their position in the list; that order drives every
/// deterministic iteration in the library. Tokens are non-empty, contain no
/// whitespace and none of the reserved characters `-` (as a whole token), `.`
/// and `#`, which the text formats use as separators.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> tokens);

    std::size_t size() const noexcept { return tokens_.size(); }
    bool empty() const noexcept { return tokens_.empty(); }
    const std::string& token(SymbolId s) const { return tokens_.at(s); }
    const std::vector<std::string>& tokens() const noexcept { return tokens_; }

    std::optional<SymbolId> find(std::string_view token) const;

    /// Like find(), but throws InputError for unknown tokens.
    SymbolId symbol(std::string_view token) const;

    bool contains(SymbolId s) const noexcept { return s < tokens_.size(); }

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.tokens_ == b.tokens_; }

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, SymbolId> index_;
};

/// Parses a `.`-joined token list; `-` and the empty string denote the empty word.
Word parse_word(const Alphabet& alphabet, std::string_view dotted);

/// Inverse of parse_word; the empty word is rendered as `-`.
std::string format_word(const Alphabet& alphabet, const Word& word);

/// Throws InputError unless every symbol of `word` belongs to `alphabet`.
void require_word(const Alphabet& alphabet, const Word& word);

Word reversed(Word word);

}  // namespace bimlab
