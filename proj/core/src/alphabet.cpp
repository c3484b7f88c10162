#include "bimlab/alphabet.hpp"

#include <algorithm>
#include <cctype>

#include "bimlab/errors.hpp"

namespace bimlab {

namespace {

bool valid_token(const std::string& token) {
    if (token.empty() || token == "-") return false;
    return std::none_of(token.begin(), token.end(), [](unsigned char c) {
        return std::isspace(c) != 0 || c == '.' || c == '#';
    });
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
        if (!valid_token(tokens_[i])) {
            throw InputError("invalid symbol token '" + tokens_[i] + "'");
        }
        if (!index_.emplace(tokens_[i], static_cast<SymbolId>(i)).second) {
            throw InputError("duplicate symbol token '" + tokens_[i] + "'");
        }
    }
}

std::optional<SymbolId> Alphabet::find(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

SymbolId Alphabet::symbol(std::string_view token) const {
    if (auto s = find(token)) return *s;
    throw InputError("unknown symbol '" + std::string(token) + "'");
}

Word parse_word(const Alphabet& alphabet, std::string_view dotted) {
    Word word;
    if (dotted.empty() || dotted == "-") return word;
    std::size_t pos = 0;
    while (true) {
        std::size_t dot = dotted.find('.', pos);
        std::string_view piece = dotted.substr(pos, dot == std::string_view::npos ? dotted.npos : dot - pos);
        if (piece.empty()) throw InputError("empty token in word '" + std::string(dotted) + "'");
        word.push_back(alphabet.symbol(piece));
        if (dot == std::string_view::npos) break;
        pos = dot + 1;
    }
    return word;
}

std::string format_word(const Alphabet& alphabet, const Word& word) {
    if (word.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i != 0) out += '.';
        out += alphabet.token(word[i]);
    }
    return out;
}

void require_word(const Alphabet& alphabet, const Word& word) {
    for (SymbolId s : word) {
        if (!alphabet.contains(s)) {
            throw InputError("symbol index " + std::to_string(s) + " outside alphabet of size " +
                             std::to_string(alphabet.size()));
        }
    }
}

Word reversed(Word word) {
    std::reverse(word.begin(), word.end());
    return word;
}

}  // namespace bimlab
