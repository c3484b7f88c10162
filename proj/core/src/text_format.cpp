#include "bimlab/text_format.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "bimlab/errors.hpp"

namespace bimlab {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> fields;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
            std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
            if (i > start) line.fields.push_back(raw.substr(start, i - start));
        }
        if (!line.fields.empty()) lines.push_back(std::move(line));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return lines;
}

std::size_t parse_count(const Line& line, std::string_view field) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw FormatError(line.number, "expected a non-negative integer, got '" + std::string(field) + "'");
    }
    return value;
}

StateId parse_state(const Line& line, std::string_view field, std::size_t state_count) {
    const std::size_t value = parse_count(line, field);
    if (value >= state_count) {
        throw FormatError(line.number, "state " + std::to_string(value) + " out of range (have " +
                                           std::to_string(state_count) + ")");
    }
    return static_cast<StateId>(value);
}

SymbolId parse_symbol(const Line& line, const Alphabet& alphabet, std::string_view field) {
    if (auto s = alphabet.find(field)) return *s;
    throw FormatError(line.number, "unknown symbol '" + std::string(field) + "'");
}

Word parse_output(const Line& line, const Alphabet& alphabet, std::string_view field) {
    try {
        return parse_word(alphabet, field);
    } catch (const InputError& e) {
        throw FormatError(line.number, e.what());
    }
}

Alphabet parse_alphabet(const Line& line) {
    try {
        return Alphabet(std::vector<std::string>(line.fields.begin() + 1, line.fields.end()));
    } catch (const InputError& e) {
        throw FormatError(line.number, e.what());
    }
}

void expect_fields(const Line& line, std::size_t count) {
    if (line.fields.size() != count) {
        throw FormatError(line.number, "'" + std::string(line.fields[0]) + "' expects " + std::to_string(count - 1) +
                                           " arguments");
    }
}

const Line& header(const std::vector<Line>& lines, std::string_view kind) {
    if (lines.empty()) throw FormatError(1, "empty machine file");
    const Line& first = lines.front();
    if (first.fields.size() != 2 || first.fields[0] != kind) {
        throw FormatError(first.number, "expected '" + std::string(kind) + " v1' header");
    }
    if (first.fields[1] != "v1") throw FormatError(first.number, "unsupported format version");
    return first;
}

void write_alphabet(std::ostringstream& out, std::string_view keyword, const Alphabet& alphabet) {
    out << keyword;
    for (const auto& tok : alphabet.tokens()) out << ' ' << tok;
    out << '\n';
}

}  // namespace

MachineKind sniff_kind(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw FormatError(1, "empty machine file");
    const auto& kind = lines.front().fields[0];
    if (kind == "transducer") return MachineKind::kTransducer;
    if (kind == "bimachine") return MachineKind::kBimachine;
    throw FormatError(lines.front().number, "unknown machine kind '" + std::string(kind) + "'");
}

std::string emit_transducer(const Transducer& t) {
    std::ostringstream out;
    out << "transducer v1\n";
    write_alphabet(out, "alphabet", t.input_alphabet());
    if (!(t.output_alphabet() == t.input_alphabet())) write_alphabet(out, "oalphabet", t.output_alphabet());
    out << "states " << t.state_count() << '\n';
    out << "initial";
    for (StateId q : t.initial()) out << ' ' << q;
    out << "\nfinal";
    for (StateId q : t.final()) out << ' ' << q;
    out << '\n';
    for (const auto& a : t.arcs()) {
        out << "arc " << a.src << ' ' << a.dst << ' ' << (a.is_epsilon() ? "-" : t.input_alphabet().token(a.input))
            << ' ' << format_word(t.output_alphabet(), a.output) << '\n';
    }
    return out.str();
}

Transducer parse_transducer(std::string_view text) {
    const auto lines = tokenize(text);
    header(lines, "transducer");

    const Line* alphabet_line = nullptr;
    const Line* oalphabet_line = nullptr;
    const Line* states_line = nullptr;
    const Line* initial_line = nullptr;
    const Line* final_line = nullptr;
    std::vector<const Line*> arc_lines;
    auto once = [](const Line*& slot, const Line& line) {
        if (slot != nullptr) throw FormatError(line.number, "duplicate '" + std::string(line.fields[0]) + "' line");
        slot = &line;
    };
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const auto& kw = line.fields[0];
        if (kw == "alphabet") once(alphabet_line, line);
        else if (kw == "oalphabet") once(oalphabet_line, line);
        else if (kw == "states") once(states_line, line);
        else if (kw == "initial") once(initial_line, line);
        else if (kw == "final") once(final_line, line);
        else if (kw == "arc") arc_lines.push_back(&line);
        else throw FormatError(line.number, "unknown keyword '" + std::string(kw) + "'");
    }
    const std::size_t last = lines.back().number;
    if (alphabet_line == nullptr) throw FormatError(last, "missing 'alphabet' line");
    if (states_line == nullptr) throw FormatError(last, "missing 'states' line");

    Alphabet input = parse_alphabet(*alphabet_line);
    Alphabet output = oalphabet_line != nullptr ? parse_alphabet(*oalphabet_line) : input;
    expect_fields(*states_line, 2);
    const std::size_t state_count = parse_count(*states_line, states_line->fields[1]);

    auto state_list = [&](const Line* line) {
        std::vector<StateId> out;
        if (line == nullptr) return out;
        for (std::size_t i = 1; i < line->fields.size(); ++i) out.push_back(parse_state(*line, line->fields[i], state_count));
        return out;
    };
    std::vector<TransducerArc> arcs;
    for (const Line* line : arc_lines) {
        expect_fields(*line, 5);
        TransducerArc a;
        a.src = parse_state(*line, line->fields[1], state_count);
        a.dst = parse_state(*line, line->fields[2], state_count);
        a.input = line->fields[3] == "-" ? kEpsilon : parse_symbol(*line, input, line->fields[3]);
        a.output = parse_output(*line, output, line->fields[4]);
        arcs.push_back(std::move(a));
    }
    return Transducer(std::move(input), std::move(output), state_count, state_list(initial_line),
                      state_list(final_line), std::move(arcs));
}

std::string emit_bimachine(const Bimachine& b) {
    std::ostringstream out;
    out << "bimachine v1\n";
    write_alphabet(out, "alphabet", b.input_alphabet());
    write_alphabet(out, "oalphabet", b.output_alphabet);
    auto automaton = [&](const Dfa& d, std::string_view side, std::string_view arc) {
        out << side << " states " << d.state_count() << " start " << d.start() << '\n';
        for (StateId q = 0; q < d.state_count(); ++q) {
            for (SymbolId a = 0; a < d.alphabet().size(); ++a) {
                if (d.next(q, a) == kNoState) continue;
                out << arc << ' ' << q << ' ' << d.alphabet().token(a) << ' ' << d.next(q, a) << '\n';
            }
        }
    };
    automaton(b.left, "left", "larc");
    automaton(b.right, "right", "rarc");
    if (b.empty_word_output) out << "epsout " << format_word(b.output_alphabet, *b.empty_word_output) << '\n';
    for (const auto& [key, value] : b.psi) {
        out << "psi " << key.left << ' ' << b.input_alphabet().token(key.symbol) << ' ' << key.right << ' '
            << format_word(b.output_alphabet, value) << '\n';
    }
    return out.str();
}

Bimachine parse_bimachine(std::string_view text) {
    const auto lines = tokenize(text);
    header(lines, "bimachine");

    const Line* alphabet_line = nullptr;
    const Line* oalphabet_line = nullptr;
    const Line* left_line = nullptr;
    const Line* right_line = nullptr;
    const Line* epsout_line = nullptr;
    std::vector<const Line*> larcs, rarcs, psis;
    auto once = [](const Line*& slot, const Line& line) {
        if (slot != nullptr) throw FormatError(line.number, "duplicate '" + std::string(line.fields[0]) + "' line");
        slot = &line;
    };
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const auto& kw = line.fields[0];
        if (kw == "alphabet") once(alphabet_line, line);
        else if (kw == "oalphabet") once(oalphabet_line, line);
        else if (kw == "left") once(left_line, line);
        else if (kw == "right") once(right_line, line);
        else if (kw == "epsout") once(epsout_line, line);
        else if (kw == "larc") larcs.push_back(&line);
        else if (kw == "rarc") rarcs.push_back(&line);
        else if (kw == "psi") psis.push_back(&line);
        else throw FormatError(line.number, "unknown keyword '" + std::string(kw) + "'");
    }
    const std::size_t last = lines.back().number;
    if (alphabet_line == nullptr) throw FormatError(last, "missing 'alphabet' line");
    if (oalphabet_line == nullptr) throw FormatError(last, "missing 'oalphabet' line");
    if (left_line == nullptr) throw FormatError(last, "missing 'left' line");
    if (right_line == nullptr) throw FormatError(last, "missing 'right' line");

    Bimachine b;
    const Alphabet input = parse_alphabet(*alphabet_line);
    b.output_alphabet = parse_alphabet(*oalphabet_line);

    auto automaton = [&](const Line& head, const std::vector<const Line*>& arc_lines, std::string_view side) {
        expect_fields(head, 5);
        if (head.fields[1] != "states" || head.fields[3] != "start") {
            throw FormatError(head.number, "expected '" + std::string(side) + " states <N> start <id>'");
        }
        const std::size_t n = parse_count(head, head.fields[2]);
        if (n == 0) throw FormatError(head.number, "automaton needs at least one state");
        const StateId start = parse_state(head, head.fields[4], n);
        std::vector<StateId> table(n * input.size(), kNoState);
        for (const Line* line : arc_lines) {
            expect_fields(*line, 4);
            const StateId from = parse_state(*line, line->fields[1], n);
            const SymbolId a = parse_symbol(*line, input, line->fields[2]);
            const StateId to = parse_state(*line, line->fields[3], n);
            StateId& slot = table[from * input.size() + a];
            if (slot != kNoState && slot != to) throw FormatError(line->number, "conflicting transition");
            slot = to;
        }
        for (std::size_t q = 0; q < n; ++q) {
            for (SymbolId a = 0; a < input.size(); ++a) {
                if (table[q * input.size() + a] == kNoState) {
                    throw FormatError(head.number, std::string(side) + " automaton is not total: no transition from state " +
                                                       std::to_string(q) + " on '" + input.token(a) + "'");
                }
            }
        }
        return Dfa(input, n, start, std::move(table));
    };
    b.left = automaton(*left_line, larcs, "left");
    b.right = automaton(*right_line, rarcs, "right");

    if (epsout_line != nullptr) {
        expect_fields(*epsout_line, 2);
        b.empty_word_output = parse_output(*epsout_line, b.output_alphabet, epsout_line->fields[1]);
    }
    for (const Line* line : psis) {
        expect_fields(*line, 5);
        PsiKey key{parse_state(*line, line->fields[1], b.left.state_count()),
                   parse_symbol(*line, input, line->fields[2]),
                   parse_state(*line, line->fields[3], b.right.state_count())};
        Word value = parse_output(*line, b.output_alphabet, line->fields[4]);
        auto [it, inserted] = b.psi.emplace(key, value);
        if (!inserted && it->second != value) throw FormatError(line->number, "conflicting psi entry");
    }
    return b;
}

}  // namespace bimlab
