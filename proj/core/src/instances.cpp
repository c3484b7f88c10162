#include "bimlab/instances.hpp"

#include <map>
#include <string>
#include <tuple>

#include "bimlab/errors.hpp"

namespace bimlab {

InstanceParams::InstanceParams(int k, int n) : k_(k), n_(n) {
    if (k < 2) throw InputError("k must be at least 2");
    if (n < 1) throw InputError("n must be at least 1");
}

Alphabet InstanceParams::alphabet() const {
    std::vector<std::string> tokens;
    for (int s = 1; s <= 2 * k_; ++s) tokens.push_back(std::to_string(s));
    return Alphabet(std::move(tokens));
}

std::uint64_t InstanceParams::window_count() const {
    std::uint64_t v = 1;
    for (int i = 0; i < n_; ++i) v *= static_cast<std::uint64_t>(k_);
    return v;
}

std::size_t InstanceParams::transducer_states(bool merged) const {
    const auto k = static_cast<std::size_t>(k_);
    const auto n = static_cast<std::size_t>(n_);
    return merged ? 2 * k * n + 2 : 2 * k * (n + 1);
}

std::optional<Word> oracle_f(const InstanceParams& p, const Word& w) {
    const auto n = static_cast<std::size_t>(p.n());
    std::size_t split = 0;
    while (split < w.size() && p.is_low(w[split])) ++split;
    for (std::size_t i = split; i < w.size(); ++i) {
        if (!p.is_high(w[i])) return std::nullopt;
    }
    const std::size_t second = w.size() - split;
    if (split < n || second < n) return std::nullopt;
    const SymbolId i = w[split - n];
    const SymbolId j = w[split + n - 1];
    return Word{j, i};
}

Transducer instance_transducer(const InstanceParams& p, bool merged) {
    const auto k = static_cast<StateId>(p.k());
    const auto n = static_cast<StateId>(p.n());
    std::vector<TransducerArc> arcs;
    std::vector<StateId> initial, final;
    StateId state_count = 0;
    auto fresh = [&] { return state_count++; };

    // First-block chains: head (low self-loop) -i-> c_1 -low-> ... -low-> c_n.
    std::vector<StateId> heads(k);
    if (merged) {
        heads.assign(k, fresh());
        initial.push_back(heads.front());
    }
    std::vector<StateId> chain_end(k);
    for (SymbolId i = 0; i < k; ++i) {
        if (!merged) {
            heads[i] = fresh();
            initial.push_back(heads[i]);
        }
        StateId prev = fresh();
        arcs.push_back({heads[i], i, {}, prev});
        for (StateId m = 1; m < n; ++m) {
            const StateId cur = fresh();
            for (SymbolId c = 0; c < k; ++c) arcs.push_back({prev, c, {}, cur});
            prev = cur;
        }
        chain_end[i] = prev;
    }
    for (StateId head : initial) {
        for (SymbolId c = 0; c < k; ++c) arcs.push_back({head, c, {}, head});
    }

    // Second-block chains: d_0 -high-> ... -high-> d_{n-1} -j-> tail (high self-loop).
    std::vector<StateId> chain_start(k);
    std::vector<StateId> chain_last(k);
    for (SymbolId j = 0; j < k; ++j) {
        StateId prev = fresh();
        chain_start[j] = prev;
        for (StateId m = 1; m < n; ++m) {
            const StateId cur = fresh();
            for (SymbolId c = k; c < 2 * k; ++c) arcs.push_back({prev, c, {}, cur});
            prev = cur;
        }
        chain_last[j] = prev;
    }
    std::vector<StateId> tails(k);
    if (merged) {
        tails.assign(k, fresh());
        final.push_back(tails.front());
    } else {
        for (SymbolId j = 0; j < k; ++j) {
            tails[j] = fresh();
            final.push_back(tails[j]);
        }
    }
    for (SymbolId j = 0; j < k; ++j) arcs.push_back({chain_last[j], k + j, {}, tails[j]});
    for (StateId tail : final) {
        for (SymbolId c = k; c < 2 * k; ++c) arcs.push_back({tail, c, {}, tail});
    }

    // Bridges: end of first-block chain i -eps/ j i-> start of second-block chain j.
    for (SymbolId i = 0; i < k; ++i) {
        for (SymbolId j = 0; j < k; ++j) {
            arcs.push_back({chain_end[i], kEpsilon, Word{k + j, i}, chain_start[j]});
        }
    }

    const Alphabet sigma = p.alphabet();
    return Transducer(sigma, sigma, state_count, std::move(initial), std::move(final), std::move(arcs));
}

Transducer prepared_instance(const InstanceParams& p) {
    return trim(remove_input_epsilons(instance_transducer(p, true)));
}

namespace {

// Interns structured states in creation order.
template <typename Key>
class StateIndex {
public:
    StateId operator()(const Key& key) {
        auto [it, inserted] = ids_.emplace(key, static_cast<StateId>(keys_.size()));
        if (inserted) keys_.push_back(key);
        return it->second;
    }
    const std::vector<Key>& keys() const { return keys_; }
    std::size_t size() const { return keys_.size(); }

private:
    std::map<Key, StateId> ids_;
    std::vector<Key> keys_;
};

// Left: FIRST(window) | SECOND | DEAD.
enum class LeftKind { kFirst, kSecond, kDead };
using LeftKey = std::tuple<LeftKind, Word>;

// Right: TAIL(leading symbols, capped length) | CROSSED(long enough) | DEAD.
enum class RightKind { kTail, kCrossed, kDead };
using RightKey = std::tuple<RightKind, Word, int>;

}  // namespace

Bimachine handcrafted_bimachine(const InstanceParams& p) {
    const auto n = static_cast<std::size_t>(p.n());
    const Alphabet sigma = p.alphabet();
    const std::size_t width = sigma.size();

    auto left_step = [&](const LeftKey& key, SymbolId a) -> LeftKey {
        const auto& [kind, window] = key;
        switch (kind) {
            case LeftKind::kFirst:
                if (p.is_low(a)) {
                    Word w = window;
                    w.push_back(a);
                    if (w.size() > n) w.erase(w.begin());
                    return {LeftKind::kFirst, w};
                }
                return {LeftKind::kSecond, {}};
            case LeftKind::kSecond:
                return p.is_high(a) ? LeftKey{LeftKind::kSecond, {}} : LeftKey{LeftKind::kDead, {}};
            case LeftKind::kDead:
                break;
        }
        return {LeftKind::kDead, {}};
    };
    // The right automaton reads backwards: `a` is prepended to the suffix.
    auto right_step = [&](const RightKey& key, SymbolId a) -> RightKey {
        const auto& [kind, lead, length] = key;
        switch (kind) {
            case RightKind::kTail:
                if (p.is_high(a)) {
                    Word w{a};
                    w.insert(w.end(), lead.begin(), lead.end());
                    if (w.size() > n - 1) w.resize(n - 1);
                    return {RightKind::kTail, w, std::min<int>(length + 1, p.n())};
                }
                return {RightKind::kCrossed, {}, length >= p.n() ? 1 : 0};
            case RightKind::kCrossed:
                return p.is_low(a) ? RightKey{RightKind::kCrossed, {}, length} : RightKey{RightKind::kDead, {}, 0};
            case RightKind::kDead:
                break;
        }
        return {RightKind::kDead, {}, 0};
    };

    auto explore = [&](auto start, auto step) {
        using Key = decltype(start);
        StateIndex<Key> index;
        index(start);
        std::vector<StateId> table;
        for (std::size_t q = 0; q < index.size(); ++q) {
            for (SymbolId a = 0; a < width; ++a) {
                Key from = index.keys()[q];
                table.push_back(index(step(from, a)));
            }
        }
        return std::pair{std::move(index), std::move(table)};
    };

    auto [left_index, left_table] = explore(LeftKey{LeftKind::kFirst, {}}, left_step);
    auto [right_index, right_table] = explore(RightKey{RightKind::kTail, {}, 0}, right_step);

    Bimachine b;
    b.output_alphabet = sigma;
    for (StateId l = 0; l < left_index.size(); ++l) {
        const auto& [lkind, window] = left_index.keys()[l];
        for (SymbolId a = 0; a < width; ++a) {
            for (StateId r = 0; r < right_index.size(); ++r) {
                const auto& [rkind, lead, length] = right_index.keys()[r];
                std::optional<Word> out;
                if (lkind == LeftKind::kFirst && p.is_low(a)) {
                    // Inside the first block: the rest must still hold a long enough second block.
                    if ((rkind == RightKind::kCrossed && length == 1) ||
                        (rkind == RightKind::kTail && length >= p.n())) {
                        out = Word{};
                    }
                } else if (lkind == LeftKind::kFirst && p.is_high(a)) {
                    // Block boundary.
                    if (window.size() == n && rkind == RightKind::kTail && length >= p.n() - 1) {
                        const SymbolId j = n == 1 ? a : lead[n - 2];
                        out = Word{j, window.front()};
                    }
                } else if (lkind == LeftKind::kSecond && p.is_high(a)) {
                    if (rkind == RightKind::kTail) out = Word{};
                }
                if (out) b.psi.emplace(PsiKey{l, a, r}, std::move(*out));
            }
        }
    }
    b.left = Dfa(sigma, left_index.size(), 0, std::move(left_table));
    b.right = Dfa(sigma, right_index.size(), 0, std::move(right_table));
    return b;
}

}  // namespace bimlab
