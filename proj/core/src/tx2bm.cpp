#include "bimlab/tx2bm.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "bimlab/errors.hpp"

namespace bimlab {

RightAutomaton build_right_automaton(const Transducer& t) {
    if (t.has_epsilon_inputs()) throw PreconditionError("right automaton requires letter-input arcs");
    Determinized det = subset_construction(reverse(t.input_projection()));
    return {std::move(det.dfa), std::move(det.subsets)};
}

LeftAutomaton build_left_automaton(const Transducer& t, std::size_t state_cap) {
    if (t.has_epsilon_inputs()) throw PreconditionError("left automaton requires letter-input arcs");
    const std::size_t sigma = t.input_alphabet().size();

    std::map<std::vector<StateId>, StateId> index;
    std::vector<std::vector<StateId>> lists;
    std::vector<StateId> table;
    std::deque<StateId> queue;
    auto intern = [&](std::vector<StateId> list) {
        auto [it, inserted] = index.emplace(list, static_cast<StateId>(lists.size()));
        if (inserted) {
            if (lists.size() >= state_cap) {
                throw ResourceError("left automaton exceeds " + std::to_string(state_cap) + " states");
            }
            lists.push_back(std::move(list));
            table.resize(lists.size() * sigma, kNoState);
            queue.push_back(it->second);
        }
        return it->second;
    };

    intern(t.initial());
    std::vector<bool> present(t.state_count(), false);
    while (!queue.empty()) {
        const StateId cur = queue.front();
        queue.pop_front();
        for (SymbolId a = 0; a < sigma; ++a) {
            std::vector<StateId> next;
            for (StateId p : lists[cur]) {
                for (std::size_t idx : t.arcs_from(p)) {
                    const TransducerArc& arc = t.arcs()[idx];
                    if (arc.input != a || present[arc.dst]) continue;
                    present[arc.dst] = true;
                    next.push_back(arc.dst);
                }
            }
            for (StateId q : next) present[q] = false;
            const StateId target = intern(std::move(next));
            table[cur * sigma + a] = target;
        }
    }
    Dfa dfa(t.input_alphabet(), lists.size(), 0, std::move(table));
    return {std::move(dfa), std::move(lists)};
}

PsiTable build_psi(const Transducer& t, const LeftAutomaton& left, const RightAutomaton& right) {
    const std::size_t sigma = t.input_alphabet().size();
    const std::size_t n = t.state_count();

    std::vector<std::vector<bool>> member(right.subsets.size(), std::vector<bool>(n, false));
    for (std::size_t r = 0; r < right.subsets.size(); ++r) {
        for (StateId q : right.subsets[r]) member[r][q] = true;
    }

    PsiTable psi;
    std::vector<const TransducerArc*> candidates;
    for (StateId l = 0; l < left.lists.size(); ++l) {
        for (SymbolId a = 0; a < sigma; ++a) {
            candidates.clear();
            for (StateId p : left.lists[l]) {
                for (std::size_t idx : t.arcs_from(p)) {
                    if (t.arcs()[idx].input == a) candidates.push_back(&t.arcs()[idx]);
                }
            }
            if (candidates.empty()) continue;
            for (StateId r = 0; r < right.subsets.size(); ++r) {
                for (const TransducerArc* arc : candidates) {
                    if (member[r][arc->dst]) {
                        psi.emplace(PsiKey{l, a, r}, arc->output);
                        break;
                    }
                }
            }
        }
    }
    return psi;
}

Bimachine to_bimachine(const Transducer& t, std::size_t state_cap) {
    if (t.has_epsilon_inputs()) throw PreconditionError("bimachine construction requires letter-input arcs");
    FunctionalityVerdict verdict = check_functional(t);
    if (!verdict.functional) {
        auto outputs = evaluate_relation(t, *verdict.witness);
        throw NonFunctionalError(*verdict.witness, outputs.at(0), outputs.at(1));
    }
    RightAutomaton right = build_right_automaton(t);
    LeftAutomaton left = build_left_automaton(t, state_cap);

    Bimachine b;
    b.psi = build_psi(t, left, right);
    b.left = std::move(left.dfa);
    b.right = std::move(right.dfa);
    b.output_alphabet = t.output_alphabet();
    const bool accepts_empty = std::any_of(t.initial().begin(), t.initial().end(),
                                           [&](StateId q) { return t.is_final(q); });
    if (accepts_empty) b.empty_word_output = Word{};
    return b;
}

}  // namespace bimlab
