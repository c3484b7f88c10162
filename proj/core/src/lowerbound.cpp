#include "bimlab/lowerbound.hpp"

#include <cmath>
#include <map>

#include "bimlab/errors.hpp"

namespace bimlab {

namespace {

// The i-th word (lexicographic) of length n over [base, base + k).
Word nth_word(std::uint64_t index, int k, int n, SymbolId base) {
    Word w(static_cast<std::size_t>(n));
    for (std::size_t pos = w.size(); pos-- > 0;) {
        w[pos] = base + static_cast<SymbolId>(index % static_cast<std::uint64_t>(k));
        index /= static_cast<std::uint64_t>(k);
    }
    return w;
}

FoolingPair decompose(Side side, Word first, Word second, StateId state) {
    FoolingPair pair;
    pair.side = side;
    pair.collision_state = state;
    const std::size_t len = first.size();
    if (side == Side::kLeft) {
        std::size_t d = 0;
        while (first[d] == second[d]) ++d;
        pair.common.assign(first.begin(), first.begin() + static_cast<std::ptrdiff_t>(d));
        pair.residue_first.assign(first.begin() + static_cast<std::ptrdiff_t>(d + 1), first.end());
        pair.residue_second.assign(second.begin() + static_cast<std::ptrdiff_t>(d + 1), second.end());
        pair.differing_first = first[d];
        pair.differing_second = second[d];
    } else {
        std::size_t d = len - 1;
        while (first[d] == second[d]) --d;
        pair.common.assign(first.begin() + static_cast<std::ptrdiff_t>(d + 1), first.end());
        pair.residue_first.assign(first.begin(), first.begin() + static_cast<std::ptrdiff_t>(d));
        pair.residue_second.assign(second.begin(), second.begin() + static_cast<std::ptrdiff_t>(d));
        pair.differing_first = first[d];
        pair.differing_second = second[d];
    }
    pair.first = std::move(first);
    pair.second = std::move(second);
    return pair;
}

void require_instance_alphabet(const Bimachine& b, const InstanceParams& p) {
    if (!(b.input_alphabet() == p.alphabet())) {
        throw PreconditionError("bimachine alphabet is not {1.." + std::to_string(2 * p.k()) + "}");
    }
}

StateId left_image(const Bimachine& b, const Word& w) { return b.left.run(b.left.start(), w); }
StateId right_image(const Bimachine& b, const Word& w) { return b.right.run_reversed(b.right.start(), w); }

Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

Collisions find_collisions(const Bimachine& b, const InstanceParams& p, std::size_t cap) {
    require_instance_alphabet(b, p);
    const std::uint64_t count = p.window_count();
    if (count > cap) {
        throw ResourceError("k^n = " + std::to_string(count) + " exceeds enumeration cap " + std::to_string(cap));
    }
    auto search = [&](Side side) -> std::optional<FoolingPair> {
        const SymbolId base = side == Side::kLeft ? 0 : static_cast<SymbolId>(p.k());
        std::map<StateId, std::uint64_t> seen;
        for (std::uint64_t i = 0; i < count; ++i) {
            Word w = nth_word(i, p.k(), p.n(), base);
            const StateId q = side == Side::kLeft ? left_image(b, w) : right_image(b, w);
            auto [it, inserted] = seen.emplace(q, i);
            if (!inserted) return decompose(side, nth_word(it->second, p.k(), p.n(), base), std::move(w), q);
        }
        return std::nullopt;
    };
    return {search(Side::kLeft), search(Side::kRight)};
}

Candidates build_candidates(const FoolingPair& left, const FoolingPair& right, const InstanceParams& p) {
    if (left.side != Side::kLeft || right.side != Side::kRight) {
        throw PreconditionError("build_candidates needs a left pair and a right pair");
    }
    Candidates c;
    const Word x(left.common.size(), left.differing_first);
    const Word y(right.common.size(), right.differing_first);
    c.alpha1 = concat(left.first, x);
    c.alpha2 = concat(left.second, x);
    c.beta3 = concat(y, right.first);
    c.beta4 = concat(y, right.second);
    c.probes[0] = {concat(c.alpha1, c.beta3), {right.differing_first, left.differing_first}};
    c.probes[1] = {concat(c.alpha2, c.beta3), {right.differing_first, left.differing_second}};
    c.probes[2] = {concat(c.alpha1, c.beta4), {right.differing_second, left.differing_first}};
    for (const auto& probe : c.probes) {
        if (oracle_f(p, probe.word) != probe.expected) {
            throw InternalError("probe word disagrees with the direct definition");
        }
    }
    return c;
}

RefuteVerdict refute(const Bimachine& b, const InstanceParams& p, std::size_t cap) {
    Collisions collisions = find_collisions(b, p, cap);
    if (!collisions.left || !collisions.right) {
        BoundRespected verdict;
        verdict.left_certified = !collisions.left;
        verdict.right_certified = !collisions.right;
        verdict.collisions = std::move(collisions);
        return verdict;
    }
    Candidates c = build_candidates(*collisions.left, *collisions.right, p);
    for (const auto& probe : c.probes) {
        auto actual = evaluate(b, probe.word);
        if (actual != probe.expected) return Mismatch{probe.word, probe.expected, std::move(actual)};
    }
    return SoundnessAlarm{std::move(c)};
}

CorollaryConstants corollary_constants(int k) {
    if (k < 2) throw InputError("k must be at least 2");
    auto c = [](int j) { return std::log2(static_cast<double>(j)) / (2.0 * j); };
    CorollaryConstants out;
    out.c_k = c(k);
    out.k3_is_argmax = true;
    for (int j = 2; j <= 64; ++j) {
        if (c(j) > c(3)) out.k3_is_argmax = false;
    }
    return out;
}

Bimachine corrupt_by_merging(const Bimachine& b, const InstanceParams& p, std::mt19937_64& rng) {
    require_instance_alphabet(b, p);
    const std::uint64_t count = p.window_count();
    std::uniform_int_distribution<std::uint64_t> pick(0, count - 1);
    auto two_distinct = [&] {
        const std::uint64_t i = pick(rng);
        std::uint64_t j = pick(rng);
        while (count > 1 && j == i) j = pick(rng);
        return std::pair{i, j};
    };

    Bimachine out = b;
    {
        auto [i, j] = two_distinct();
        const StateId keep = left_image(out, nth_word(i, p.k(), p.n(), 0));
        const StateId drop = left_image(out, nth_word(j, p.k(), p.n(), 0));
        if (keep != drop) out = merge_left_states(out, keep, drop);
    }
    {
        const auto base = static_cast<SymbolId>(p.k());
        auto [i, j] = two_distinct();
        const StateId keep = right_image(out, nth_word(i, p.k(), p.n(), base));
        const StateId drop = right_image(out, nth_word(j, p.k(), p.n(), base));
        if (keep != drop) out = merge_right_states(out, keep, drop);
    }
    return out;
}

}  // namespace bimlab
