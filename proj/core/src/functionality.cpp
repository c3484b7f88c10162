#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

#include "bimlab/transducer.hpp"

namespace bimlab {

namespace {

// Output delay between two runs on the same input: the residual words left
// after cancelling the longest common prefix.
struct Delay {
    Word first;
    Word second;

    bool balanced() const { return first.empty() && second.empty(); }
    friend bool operator==(const Delay&, const Delay&) = default;
};

Delay advance(const Delay& d, const Word& out1, const Word& out2) {
    Word a = d.first;
    a.insert(a.end(), out1.begin(), out1.end());
    Word b = d.second;
    b.insert(b.end(), out2.begin(), out2.end());
    auto [ia, ib] = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
    return {Word(ia, a.end()), Word(ib, b.end())};
}

struct SquareStep {
    SymbolId symbol;
    std::size_t target;
    const Word* out1;
    const Word* out2;
};

}  // namespace

FunctionalityVerdict check_functional(const Transducer& t) {
    if (t.has_epsilon_inputs()) throw PreconditionError("check_functional requires letter-input arcs");
    const std::size_t n = t.state_count();
    const std::size_t pairs = n * n;
    if (pairs == 0) return {};

    // Square transitions, in canonical arc order of both components.
    std::vector<std::vector<SquareStep>> steps(pairs);
    std::vector<std::vector<std::pair<SymbolId, std::size_t>>> back(pairs);
    for (StateId p = 0; p < n; ++p) {
        for (StateId q = 0; q < n; ++q) {
            const std::size_t from = p * n + q;
            for (std::size_t i : t.arcs_from(p)) {
                const TransducerArc& a1 = t.arcs()[i];
                for (std::size_t j : t.arcs_from(q)) {
                    const TransducerArc& a2 = t.arcs()[j];
                    if (a1.input != a2.input) continue;
                    const std::size_t to = a1.dst * n + a2.dst;
                    steps[from].push_back({a1.input, to, &a1.output, &a2.output});
                    back[to].emplace_back(a1.input, from);
                }
            }
        }
    }

    // Co-accessible pairs, with a shortest completion toward a final pair.
    std::vector<bool> coaccessible(pairs, false);
    std::vector<std::pair<SymbolId, std::size_t>> toward_final(pairs, {kEpsilon, 0});
    std::deque<std::size_t> queue;
    for (StateId p : t.final()) {
        for (StateId q : t.final()) {
            coaccessible[p * n + q] = true;
            queue.push_back(p * n + q);
        }
    }
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        for (auto [symbol, pred] : back[cur]) {
            if (!coaccessible[pred]) {
                coaccessible[pred] = true;
                toward_final[pred] = {symbol, cur};
                queue.push_back(pred);
            }
        }
    }
    auto completion = [&](std::size_t pair) {
        Word w;
        while (toward_final[pair].first != kEpsilon) {
            w.push_back(toward_final[pair].first);
            pair = toward_final[pair].second;
        }
        return w;
    };

    std::vector<std::optional<Delay>> delay(pairs);
    std::vector<std::pair<SymbolId, std::size_t>> parent(pairs, {kEpsilon, 0});
    auto prefix = [&](std::size_t pair) {
        Word w;
        while (parent[pair].first != kEpsilon) {
            w.push_back(parent[pair].first);
            pair = parent[pair].second;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };
    auto non_functional = [&](std::initializer_list<Word> candidates) {
        for (const Word& w : candidates) {
            if (evaluate_relation(t, w).size() > 1) return FunctionalityVerdict{false, w};
        }
        throw std::logic_error("functionality check found a conflict without a witness");
    };
    auto concat_words = [](Word a, const Word& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };

    for (StateId p : t.initial()) {
        for (StateId q : t.initial()) {
            const std::size_t pair = p * n + q;
            if (!coaccessible[pair] || delay[pair]) continue;
            delay[pair] = Delay{};
            queue.push_back(pair);
        }
    }
    while (!queue.empty()) {
        const std::size_t cur = queue.front();
        queue.pop_front();
        const Delay current = *delay[cur];
        const auto p = static_cast<StateId>(cur / n);
        const auto q = static_cast<StateId>(cur % n);
        if (t.is_final(p) && t.is_final(q) && !current.balanced()) {
            return non_functional({prefix(cur)});
        }
        for (const SquareStep& step : steps[cur]) {
            if (!coaccessible[step.target]) continue;
            Delay next = advance(current, *step.out1, *step.out2);
            Word via = prefix(cur);
            via.push_back(step.symbol);
            if (!next.first.empty() && !next.second.empty()) {
                return non_functional({concat_words(via, completion(step.target))});
            }
            if (!delay[step.target]) {
                delay[step.target] = std::move(next);
                parent[step.target] = {step.symbol, cur};
                queue.push_back(step.target);
            } else if (*delay[step.target] != next) {
                const Word tail = completion(step.target);
                return non_functional({concat_words(prefix(step.target), tail), concat_words(via, tail)});
            }
        }
    }
    return {};
}

}  // namespace bimlab
