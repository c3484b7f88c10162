#include "bimlab/fsm.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "bimlab/errors.hpp"

namespace bimlab {

namespace {

void sort_unique(std::vector<StateId>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

void Nfa::canonicalize() {
    sort_unique(initial);
    sort_unique(final);
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
}

void Nfa::validate() const {
    auto check = [&](StateId q) {
        if (q >= state_count) throw InputError("state " + std::to_string(q) + " out of range");
    };
    for (StateId q : initial) check(q);
    for (StateId q : final) check(q);
    for (const Arc& a : arcs) {
        check(a.src);
        check(a.dst);
        if (!alphabet.contains(a.label)) throw InputError("arc label outside alphabet");
    }
}

Dfa::Dfa(Alphabet alphabet, std::size_t state_count, StateId start, std::vector<StateId> table)
    : alphabet_(std::move(alphabet)), state_count_(state_count), start_(start), table_(std::move(table)) {
    if (table_.size() != state_count_ * alphabet_.size()) {
        throw InputError("transition table has wrong size");
    }
    if (state_count_ == 0 || start_ >= state_count_) throw InputError("start state out of range");
    for (StateId q : table_) {
        if (q != kNoState && q >= state_count_) throw InputError("transition target out of range");
    }
}

bool Dfa::is_total() const noexcept {
    return std::find(table_.begin(), table_.end(), kNoState) == table_.end();
}

StateId Dfa::run(StateId from, std::span<const SymbolId> word) const {
    StateId q = from;
    for (SymbolId s : word) {
        if (!alphabet_.contains(s)) throw InputError("symbol outside automaton alphabet");
        q = next(q, s);
        if (q == kNoState) throw PreconditionError("missing transition while running automaton");
    }
    return q;
}

StateId Dfa::run_reversed(StateId from, std::span<const SymbolId> word) const {
    StateId q = from;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (!alphabet_.contains(*it)) throw InputError("symbol outside automaton alphabet");
        q = next(q, *it);
        if (q == kNoState) throw PreconditionError("missing transition while running automaton");
    }
    return q;
}

StateId run_dfa(const Dfa& d, std::span<const SymbolId> word) { return d.run(word); }

Determinized subset_construction(const Nfa& nfa) {
    nfa.validate();
    const std::size_t sigma = nfa.alphabet.size();

    // successors[q * sigma + a] = sorted destinations
    std::vector<std::vector<StateId>> successors(nfa.state_count * sigma);
    for (const Arc& a : nfa.arcs) successors[a.src * sigma + a.label].push_back(a.dst);

    std::map<std::vector<StateId>, StateId> index;
    std::vector<std::vector<StateId>> subsets;
    std::vector<StateId> table;
    std::deque<StateId> queue;

    auto intern = [&](std::vector<StateId> set) {
        auto [it, inserted] = index.emplace(set, static_cast<StateId>(subsets.size()));
        if (inserted) {
            subsets.push_back(std::move(set));
            table.resize(subsets.size() * sigma, kNoState);
            queue.push_back(it->second);
        }
        return it->second;
    };

    std::vector<StateId> start = nfa.initial;
    sort_unique(start);
    intern(start);
    while (!queue.empty()) {
        StateId cur = queue.front();
        queue.pop_front();
        for (SymbolId a = 0; a < sigma; ++a) {
            std::vector<StateId> next;
            for (StateId q : subsets[cur]) {
                const auto& succ = successors[q * sigma + a];
                next.insert(next.end(), succ.begin(), succ.end());
            }
            sort_unique(next);
            StateId target = intern(std::move(next));
            table[cur * sigma + a] = target;
        }
    }
    intern({});
    while (!queue.empty()) {
        StateId sink = queue.front();
        queue.pop_front();
        for (SymbolId a = 0; a < sigma; ++a) table[sink * sigma + a] = sink;
    }

    Dfa dfa(nfa.alphabet, subsets.size(), 0, std::move(table));
    return {std::move(dfa), std::move(subsets)};
}

Nfa reverse(const Nfa& nfa) {
    Nfa out;
    out.alphabet = nfa.alphabet;
    out.state_count = nfa.state_count;
    out.initial = nfa.final;
    out.final = nfa.initial;
    out.arcs.reserve(nfa.arcs.size());
    for (const Arc& a : nfa.arcs) out.arcs.push_back({a.dst, a.label, a.src});
    out.canonicalize();
    return out;
}

Reduction moore_reduce(const Dfa& dfa, std::span<const std::size_t> colors) {
    if (!dfa.is_total()) throw PreconditionError("moore_reduce requires a total automaton");
    const std::size_t n = dfa.state_count();
    const std::size_t sigma = dfa.alphabet().size();
    if (colors.size() != n) throw PreconditionError("one color per state required");

    // Blocks are renumbered by first occurrence in state order at every round,
    // so the final numbering is deterministic.
    std::vector<std::size_t> block(n);
    std::size_t block_count = 0;
    {
        std::map<std::size_t, std::size_t> first;
        for (std::size_t q = 0; q < n; ++q) {
            auto [it, inserted] = first.emplace(colors[q], first.size());
            block[q] = it->second;
        }
        block_count = first.size();
    }

    while (true) {
        std::map<std::vector<std::size_t>, std::size_t> signatures;
        std::vector<std::size_t> refined(n);
        std::vector<std::size_t> key(sigma + 1);
        for (std::size_t q = 0; q < n; ++q) {
            key[0] = block[q];
            for (std::size_t a = 0; a < sigma; ++a) {
                key[a + 1] = block[dfa.next(static_cast<StateId>(q), static_cast<SymbolId>(a))];
            }
            auto [it, inserted] = signatures.emplace(key, signatures.size());
            refined[q] = it->second;
        }
        block.swap(refined);
        if (signatures.size() == block_count) break;
        block_count = signatures.size();
    }

    std::vector<StateId> table(block_count * sigma, kNoState);
    for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t a = 0; a < sigma; ++a) {
            table[block[q] * sigma + a] =
                static_cast<StateId>(block[dfa.next(static_cast<StateId>(q), static_cast<SymbolId>(a))]);
        }
    }
    std::vector<StateId> mapping(block.begin(), block.end());
    Dfa quotient(dfa.alphabet(), block_count, mapping[dfa.start()], std::move(table));
    return {std::move(quotient), std::move(mapping)};
}

Reduction remove_unreachable(const Dfa& dfa) {
    const std::size_t n = dfa.state_count();
    const std::size_t sigma = dfa.alphabet().size();
    std::vector<bool> seen(n, false);
    std::deque<StateId> queue{dfa.start()};
    seen[dfa.start()] = true;
    while (!queue.empty()) {
        StateId q = queue.front();
        queue.pop_front();
        for (SymbolId a = 0; a < sigma; ++a) {
            StateId t = dfa.next(q, a);
            if (t != kNoState && !seen[t]) {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    std::vector<StateId> mapping(n, kNoState);
    StateId kept = 0;
    for (std::size_t q = 0; q < n; ++q) {
        if (seen[q]) mapping[q] = kept++;
    }
    std::vector<StateId> table(static_cast<std::size_t>(kept) * sigma, kNoState);
    for (std::size_t q = 0; q < n; ++q) {
        if (!seen[q]) continue;
        for (std::size_t a = 0; a < sigma; ++a) {
            StateId t = dfa.next(static_cast<StateId>(q), static_cast<SymbolId>(a));
            table[mapping[q] * sigma + a] = t == kNoState ? kNoState : mapping[t];
        }
    }
    Dfa out(dfa.alphabet(), kept, mapping[dfa.start()], std::move(table));
    return {std::move(out), std::move(mapping)};
}

}  // namespace bimlab
