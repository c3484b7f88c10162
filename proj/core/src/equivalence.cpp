#include "bimlab/equivalence.hpp"

#include <limits>

namespace bimlab {

void for_each_word(std::size_t alphabet_size, std::size_t max_len, const std::function<bool(const Word&)>& visit) {
    Word w;
    if (!visit(w)) return;
    if (alphabet_size == 0) return;
    for (std::size_t len = 1; len <= max_len; ++len) {
        w.assign(len, 0);
        while (true) {
            if (!visit(w)) return;
            std::size_t pos = len;
            while (pos > 0 && w[pos - 1] + 1 == alphabet_size) w[--pos] = 0;
            if (pos == 0) break;
            ++w[pos - 1];
        }
    }
}

std::size_t word_count(std::size_t alphabet_size, std::size_t max_len) {
    constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
    std::size_t total = 1;
    std::size_t layer = 1;
    for (std::size_t len = 1; len <= max_len; ++len) {
        if (alphabet_size != 0 && layer > kMax / alphabet_size) return kMax;
        layer *= alphabet_size;
        if (total > kMax - layer) return kMax;
        total += layer;
    }
    return total;
}

EquivalenceReport check_equivalence(const std::vector<NamedFunction>& functions, std::size_t alphabet_size,
                                    std::size_t max_len, std::size_t samples, std::uint64_t seed,
                                    const WordSampler& sampler) {
    EquivalenceReport report;
    if (functions.size() < 2) return report;

    auto compare = [&](const Word& w) {
        ++report.tested;
        const auto reference = functions.front().apply(w);
        for (std::size_t i = 1; i < functions.size(); ++i) {
            auto other = functions[i].apply(w);
            if (other != reference) {
                report.mismatch = EquivalenceMismatch{w, functions.front().name, reference, functions[i].name,
                                                      std::move(other)};
                return false;
            }
        }
        return true;
    };

    bool agreed = true;
    for_each_word(alphabet_size, max_len, [&](const Word& w) { return agreed = compare(w); });
    if (!agreed || !sampler) return report;

    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        if (!compare(sampler(rng))) break;
    }
    return report;
}

WordSampler uniform_sampler(std::size_t alphabet_size, std::size_t max_len) {
    return [alphabet_size, max_len](std::mt19937_64& rng) {
        std::uniform_int_distribution<std::size_t> length(1, std::max<std::size_t>(1, max_len));
        std::uniform_int_distribution<SymbolId> letter(0, static_cast<SymbolId>(alphabet_size - 1));
        Word w(length(rng));
        for (auto& s : w) s = letter(rng);
        return w;
    };
}

WordSampler instance_sampler(const InstanceParams& p, std::size_t max_len) {
    return [p, max_len](std::mt19937_64& rng) {
        const auto k = static_cast<SymbolId>(p.k());
        const std::size_t reach = max_len / 2 + static_cast<std::size_t>(p.n());
        std::uniform_int_distribution<std::size_t> block(0, reach);
        std::uniform_int_distribution<SymbolId> low(0, k - 1);
        std::uniform_int_distribution<SymbolId> high(k, 2 * k - 1);
        std::uniform_int_distribution<SymbolId> any(0, 2 * k - 1);
        std::bernoulli_distribution corrupt(0.25);

        Word w(block(rng));
        for (auto& s : w) s = low(rng);
        const std::size_t second = block(rng);
        for (std::size_t i = 0; i < second; ++i) w.push_back(high(rng));
        if (!w.empty() && corrupt(rng)) {
            std::uniform_int_distribution<std::size_t> where(0, w.size() - 1);
            w[where(rng)] = any(rng);
        }
        return w;
    };
}

}  // namespace bimlab
