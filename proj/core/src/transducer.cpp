#include "bimlab/transducer.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <utility>

namespace bimlab {

namespace {

void sort_unique(std::vector<StateId>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

Word joined(const Word& a, const Word& b) {
    Word out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

using Config = std::pair<StateId, Word>;

// Adds every configuration reachable through epsilon-input arcs.
void epsilon_close(const Transducer& t, std::set<Config>& configs) {
    std::deque<Config> queue(configs.begin(), configs.end());
    while (!queue.empty()) {
        Config cur = std::move(queue.front());
        queue.pop_front();
        for (std::size_t idx : t.arcs_from(cur.first)) {
            const TransducerArc& arc = t.arcs()[idx];
            if (!arc.is_epsilon()) continue;
            Config next{arc.dst, joined(cur.second, arc.output)};
            if (configs.insert(next).second) queue.push_back(std::move(next));
        }
    }
}

bool compute_divergence(std::size_t state_count, const std::vector<TransducerArc>& arcs) {
    std::vector<std::vector<StateId>> eps(state_count);
    for (const auto& a : arcs) {
        if (a.is_epsilon()) eps[a.src].push_back(a.dst);
    }
    for (const auto& a : arcs) {
        if (!a.is_epsilon() || a.output.empty()) continue;
        // does a.dst reach a.src through epsilon arcs?
        std::vector<bool> seen(state_count, false);
        std::deque<StateId> queue{a.dst};
        seen[a.dst] = true;
        while (!queue.empty()) {
            StateId q = queue.front();
            queue.pop_front();
            if (q == a.src) return true;
            for (StateId r : eps[q]) {
                if (!seen[r]) {
                    seen[r] = true;
                    queue.push_back(r);
                }
            }
        }
    }
    return false;
}

}  // namespace

Transducer::Transducer(Alphabet input_alphabet, Alphabet output_alphabet, std::size_t state_count,
                       std::vector<StateId> initial, std::vector<StateId> final,
                       std::vector<TransducerArc> arcs)
    : input_alphabet_(std::move(input_alphabet)),
      output_alphabet_(std::move(output_alphabet)),
      state_count_(state_count),
      initial_(std::move(initial)),
      final_(std::move(final)),
      arcs_(std::move(arcs)) {
    auto check = [&](StateId q) {
        if (q >= state_count_) throw InputError("state " + std::to_string(q) + " out of range");
    };
    for (StateId q : initial_) check(q);
    for (StateId q : final_) check(q);
    for (const auto& a : arcs_) {
        check(a.src);
        check(a.dst);
        if (!a.is_epsilon() && !input_alphabet_.contains(a.input)) {
            throw InputError("arc input outside input alphabet");
        }
        require_word(output_alphabet_, a.output);
    }
    sort_unique(initial_);
    sort_unique(final_);
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());

    source_begin_.assign(state_count_ + 1, 0);
    for (const auto& a : arcs_) ++source_begin_[a.src + 1];
    for (std::size_t q = 0; q < state_count_; ++q) source_begin_[q + 1] += source_begin_[q];
    // arcs_ is sorted by src, so the grouping is the identity permutation
    by_source_.resize(arcs_.size());
    for (std::size_t i = 0; i < arcs_.size(); ++i) by_source_[i] = i;

    divergent_ = compute_divergence(state_count_, arcs_);
}

bool Transducer::is_initial(StateId q) const { return std::binary_search(initial_.begin(), initial_.end(), q); }

bool Transducer::is_final(StateId q) const { return std::binary_search(final_.begin(), final_.end(), q); }

bool Transducer::has_epsilon_inputs() const noexcept {
    return std::any_of(arcs_.begin(), arcs_.end(), [](const TransducerArc& a) { return a.is_epsilon(); });
}

std::span<const std::size_t> Transducer::arcs_from(StateId q) const {
    return std::span<const std::size_t>(by_source_).subspan(source_begin_[q],
                                                             source_begin_[q + 1] - source_begin_[q]);
}

Nfa Transducer::input_projection() const {
    if (has_epsilon_inputs()) throw PreconditionError("input projection requires letter-input arcs");
    Nfa nfa;
    nfa.alphabet = input_alphabet_;
    nfa.state_count = state_count_;
    nfa.initial = initial_;
    nfa.final = final_;
    for (const auto& a : arcs_) nfa.arcs.push_back({a.src, a.input, a.dst});
    nfa.canonicalize();
    return nfa;
}

Path empty_path(StateId state) {
    Path p;
    p.source = state;
    p.target = state;
    return p;
}

Path make_path(const Transducer& t, std::vector<std::size_t> arc_indices) {
    if (arc_indices.empty()) throw PreconditionError("make_path needs at least one arc; use empty_path");
    Path p;
    p.source = t.arcs().at(arc_indices.front()).src;
    p.target = p.source;
    for (std::size_t idx : arc_indices) {
        const TransducerArc& a = t.arcs().at(idx);
        if (a.src != p.target) throw PreconditionError("arcs do not form a path");
        if (!a.is_epsilon()) p.input.push_back(a.input);
        p.output.insert(p.output.end(), a.output.begin(), a.output.end());
        p.target = a.dst;
    }
    p.arcs = std::move(arc_indices);
    return p;
}

Path concat(const Path& first, const Path& second) {
    if (first.target != second.source) throw PreconditionError("paths do not chain");
    Path p;
    p.source = first.source;
    p.target = second.target;
    p.arcs = first.arcs;
    p.arcs.insert(p.arcs.end(), second.arcs.begin(), second.arcs.end());
    p.input = joined(first.input, second.input);
    p.output = joined(first.output, second.output);
    return p;
}

NonFunctionalError::NonFunctionalError(Word input, Word first, Word second)
    : Error("transducer is not functional: input has two distinct outputs"),
      input_(std::move(input)),
      first_(std::move(first)),
      second_(std::move(second)) {}

void require_no_divergent_cycles(const Transducer& t) {
    if (t.has_divergent_epsilon_cycle()) {
        throw DivergenceError("epsilon-input cycle with nonempty output: relation is infinite");
    }
}

std::vector<Word> evaluate_relation(const Transducer& t, const Word& w) {
    require_no_divergent_cycles(t);
    require_word(t.input_alphabet(), w);

    std::set<Config> current;
    for (StateId q : t.initial()) current.emplace(q, Word{});
    epsilon_close(t, current);
    for (SymbolId a : w) {
        std::set<Config> next;
        for (const auto& [q, out] : current) {
            for (std::size_t idx : t.arcs_from(q)) {
                const TransducerArc& arc = t.arcs()[idx];
                if (arc.input == a) next.emplace(arc.dst, joined(out, arc.output));
            }
        }
        if (next.empty()) return {};
        epsilon_close(t, next);
        current = std::move(next);
    }
    std::set<Word> outputs;
    for (const auto& [q, out] : current) {
        if (t.is_final(q)) outputs.insert(out);
    }
    return {outputs.begin(), outputs.end()};
}

std::optional<Word> evaluate_function(const Transducer& t, const Word& w) {
    auto outputs = evaluate_relation(t, w);
    if (outputs.empty()) return std::nullopt;
    if (outputs.size() > 1) throw NonFunctionalError(w, outputs[0], outputs[1]);
    return std::move(outputs.front());
}

Transducer remove_input_epsilons(const Transducer& t) {
    require_no_divergent_cycles(t);
    const std::size_t n = t.state_count();

    std::vector<std::set<Config>> closure(n);
    for (StateId p = 0; p < n; ++p) {
        closure[p].emplace(p, Word{});
        epsilon_close(t, closure[p]);
    }

    std::vector<TransducerArc> arcs;
    std::vector<StateId> final;
    for (StateId p = 0; p < n; ++p) {
        for (const auto& [q, u] : closure[p]) {
            if (t.is_final(q) && u.empty()) final.push_back(p);
            for (std::size_t idx : t.arcs_from(q)) {
                const TransducerArc& arc = t.arcs()[idx];
                if (arc.is_epsilon()) continue;
                arcs.push_back({p, arc.input, joined(u, arc.output), arc.dst});
            }
        }
    }

    // Epsilon paths into a final state that still owe output: push the
    // owed output onto the incoming letter arcs, targeting a fresh final state.
    std::vector<std::vector<Word>> owed(n);
    for (StateId p = 0; p < n; ++p) {
        for (const auto& [q, u] : closure[p]) {
            if (t.is_final(q) && !u.empty()) owed[p].push_back(u);
        }
    }
    const bool needs_sink =
        std::any_of(owed.begin(), owed.end(), [](const std::vector<Word>& v) { return !v.empty(); });
    std::size_t state_count = n;
    if (needs_sink) {
        for (StateId p : t.initial()) {
            if (!owed[p].empty()) {
                throw PreconditionError("empty input maps to a nonempty output; needs an epsilon arc");
            }
        }
        const auto sink = static_cast<StateId>(n);
        state_count = n + 1;
        final.push_back(sink);
        const std::size_t letter_arcs = arcs.size();
        for (std::size_t i = 0; i < letter_arcs; ++i) {
            for (const Word& u : owed[arcs[i].dst]) {
                arcs.push_back({arcs[i].src, arcs[i].input, joined(arcs[i].output, u), sink});
            }
        }
    }

    return Transducer(t.input_alphabet(), t.output_alphabet(), state_count, t.initial(), std::move(final),
                      std::move(arcs));
}

Transducer trim(const Transducer& t) {
    const std::size_t n = t.state_count();
    std::vector<std::vector<StateId>> fwd(n), bwd(n);
    for (const auto& a : t.arcs()) {
        fwd[a.src].push_back(a.dst);
        bwd[a.dst].push_back(a.src);
    }
    auto reach = [n](const std::vector<StateId>& seeds, const std::vector<std::vector<StateId>>& adj) {
        std::vector<bool> seen(n, false);
        std::deque<StateId> queue;
        for (StateId q : seeds) {
            if (!seen[q]) {
                seen[q] = true;
                queue.push_back(q);
            }
        }
        while (!queue.empty()) {
            StateId q = queue.front();
            queue.pop_front();
            for (StateId r : adj[q]) {
                if (!seen[r]) {
                    seen[r] = true;
                    queue.push_back(r);
                }
            }
        }
        return seen;
    };
    auto accessible = reach(t.initial(), fwd);
    auto coaccessible = reach(t.final(), bwd);

    std::vector<StateId> rename(n, kNoState);
    StateId kept = 0;
    for (StateId q = 0; q < n; ++q) {
        if (accessible[q] && coaccessible[q]) rename[q] = kept++;
    }
    std::vector<StateId> initial, final;
    for (StateId q : t.initial()) {
        if (rename[q] != kNoState) initial.push_back(rename[q]);
    }
    for (StateId q : t.final()) {
        if (rename[q] != kNoState) final.push_back(rename[q]);
    }
    std::vector<TransducerArc> arcs;
    for (const auto& a : t.arcs()) {
        if (rename[a.src] != kNoState && rename[a.dst] != kNoState) {
            arcs.push_back({rename[a.src], a.input, a.output, rename[a.dst]});
        }
    }
    return Transducer(t.input_alphabet(), t.output_alphabet(), kept, std::move(initial), std::move(final),
                      std::move(arcs));
}

}  // namespace bimlab
