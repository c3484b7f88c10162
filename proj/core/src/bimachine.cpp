#include "bimlab/bimachine.hpp"

#include <algorithm>

#include "bimlab/errors.hpp"

namespace bimlab {

namespace {

enum class Side { kLeft, kRight };

// Renumbers one side of the bimachine through `mapping` (kNoState = dropped).
// Entries that collapse onto the same key must agree; the first one wins.
PsiTable remap_psi(const PsiTable& psi, Side side, const std::vector<StateId>& mapping) {
    PsiTable out;
    for (const auto& [key, value] : psi) {
        PsiKey k = key;
        StateId& s = side == Side::kLeft ? k.left : k.right;
        s = mapping[s];
        if (s == kNoState) continue;
        out.emplace(k, value);
    }
    return out;
}

// Psi row of every state on one side, as a color for moore_reduce.
std::vector<std::size_t> row_colors(const Bimachine& b, Side side) {
    const std::size_t n = side == Side::kLeft ? b.left.state_count() : b.right.state_count();
    using Entry = std::pair<std::pair<StateId, SymbolId>, Word>;
    std::vector<std::vector<Entry>> rows(n);
    for (const auto& [key, value] : b.psi) {
        if (side == Side::kLeft) {
            rows[key.left].push_back({{key.right, key.symbol}, value});
        } else {
            rows[key.right].push_back({{key.left, key.symbol}, value});
        }
    }
    std::map<std::vector<Entry>, std::size_t> ids;
    std::vector<std::size_t> colors(n);
    for (std::size_t q = 0; q < n; ++q) {
        std::sort(rows[q].begin(), rows[q].end());
        colors[q] = ids.emplace(std::move(rows[q]), ids.size()).first->second;
    }
    return colors;
}

Dfa merged_dfa(const Dfa& d, StateId keep, StateId drop, std::vector<StateId>& mapping) {
    const std::size_t n = d.state_count();
    const std::size_t sigma = d.alphabet().size();
    if (keep >= n || drop >= n || keep == drop) throw PreconditionError("invalid state pair to merge");
    mapping.assign(n, kNoState);
    StateId next = 0;
    for (StateId q = 0; q < n; ++q) {
        if (q != drop) mapping[q] = next++;
    }
    auto redirect = [&](StateId q) { return q == kNoState ? kNoState : mapping[q == drop ? keep : q]; };
    std::vector<StateId> table;
    table.reserve((n - 1) * sigma);
    for (StateId q = 0; q < n; ++q) {
        if (q == drop) continue;
        for (SymbolId a = 0; a < sigma; ++a) table.push_back(redirect(d.next(q, a)));
    }
    return Dfa(d.alphabet(), n - 1, redirect(d.start()), std::move(table));
}

}  // namespace

const Word* Bimachine::output(StateId l, SymbolId a, StateId r) const {
    auto it = psi.find({l, a, r});
    return it == psi.end() ? nullptr : &it->second;
}

std::optional<Word> psi_star(const Bimachine& b, StateId l, const Word& w, StateId r) {
    require_word(b.input_alphabet(), w);
    // left_states[i] = delta_L*(l, w[0..i))
    std::vector<StateId> left_states(w.size() + 1);
    left_states[0] = l;
    for (std::size_t i = 0; i < w.size(); ++i) left_states[i + 1] = b.left.run(left_states[i], {&w[i], 1});

    std::vector<const Word*> pieces(w.size());
    StateId right_state = r;
    for (std::size_t i = w.size(); i-- > 0;) {
        const Word* piece = b.output(left_states[i], w[i], right_state);
        if (piece == nullptr) return std::nullopt;
        pieces[i] = piece;
        right_state = b.right.run(right_state, {&w[i], 1});
    }
    Word out;
    for (const Word* piece : pieces) out.insert(out.end(), piece->begin(), piece->end());
    return out;
}

std::optional<Word> evaluate(const Bimachine& b, const Word& w) {
    if (w.empty()) return b.empty_word_output;
    return psi_star(b, b.left.start(), w, b.right.start());
}

std::vector<Diagnostic> validate(const Bimachine& b) {
    std::vector<Diagnostic> out;
    auto report = [&](std::string code, std::string message) {
        out.push_back({std::move(code), std::move(message)});
    };
    if (!(b.left.alphabet() == b.right.alphabet())) {
        report("alphabet-mismatch", "left and right automata use different alphabets");
    }
    auto check_total = [&](const Dfa& d, const char* side) {
        const std::size_t sigma = d.alphabet().size();
        for (StateId q = 0; q < d.state_count(); ++q) {
            for (SymbolId a = 0; a < sigma; ++a) {
                if (d.next(q, a) == kNoState) {
                    report("not-total", std::string(side) + " automaton has no transition from state " +
                                            std::to_string(q) + " on '" + d.alphabet().token(a) + "'");
                }
            }
        }
    };
    check_total(b.left, "left");
    check_total(b.right, "right");
    for (const auto& [key, value] : b.psi) {
        std::string where = "psi(" + std::to_string(key.left) + ", " + std::to_string(key.symbol) + ", " +
                            std::to_string(key.right) + ")";
        if (key.left >= b.left.state_count()) report("psi-left-state", where + " names a missing left state");
        if (key.right >= b.right.state_count()) report("psi-right-state", where + " names a missing right state");
        if (!b.input_alphabet().contains(key.symbol)) report("psi-symbol", where + " names a missing symbol");
        for (SymbolId s : value) {
            if (!b.output_alphabet.contains(s)) {
                report("psi-output", where + " outputs a symbol outside the output alphabet");
                break;
            }
        }
    }
    if (b.empty_word_output) {
        for (SymbolId s : *b.empty_word_output) {
            if (!b.output_alphabet.contains(s)) {
                report("epsout-output", "empty-word output uses a symbol outside the output alphabet");
                break;
            }
        }
    }
    return out;
}

Bimachine reduce(const Bimachine& b) {
    Bimachine cur = b;
    {
        Reduction l = remove_unreachable(cur.left);
        cur.psi = remap_psi(cur.psi, Side::kLeft, l.mapping);
        cur.left = std::move(l.dfa);
        Reduction r = remove_unreachable(cur.right);
        cur.psi = remap_psi(cur.psi, Side::kRight, r.mapping);
        cur.right = std::move(r.dfa);
    }
    while (true) {
        const std::size_t before = cur.total_states();
        auto left_colors = row_colors(cur, Side::kLeft);
        Reduction l = moore_reduce(cur.left, left_colors);
        cur.psi = remap_psi(cur.psi, Side::kLeft, l.mapping);
        cur.left = std::move(l.dfa);

        auto right_colors = row_colors(cur, Side::kRight);
        Reduction r = moore_reduce(cur.right, right_colors);
        cur.psi = remap_psi(cur.psi, Side::kRight, r.mapping);
        cur.right = std::move(r.dfa);
        if (cur.total_states() == before) break;
    }
    return cur;
}

Bimachine merge_left_states(const Bimachine& b, StateId keep, StateId drop) {
    Bimachine out = b;
    std::vector<StateId> mapping;
    out.left = merged_dfa(b.left, keep, drop, mapping);
    out.psi = remap_psi(b.psi, Side::kLeft, mapping);
    return out;
}

Bimachine merge_right_states(const Bimachine& b, StateId keep, StateId drop) {
    Bimachine out = b;
    std::vector<StateId> mapping;
    out.right = merged_dfa(b.right, keep, drop, mapping);
    out.psi = remap_psi(b.psi, Side::kRight, mapping);
    return out;
}

}  // namespace bimlab
