#include "bimlab/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <string>
#include <tuple>

#include "bimlab/equivalence.hpp"

namespace bimlab {

namespace {

std::string cell_name(const InstanceParams& p, Construction c) {
    return "cell (k=" + std::to_string(p.k()) + ", n=" + std::to_string(p.n()) + ", " + std::string(to_string(c)) +
           ")";
}

std::size_t exhaustive_length(const InstanceParams& p, const ExperimentBudget& budget) {
    const auto sigma = static_cast<std::size_t>(2 * p.k());
    std::size_t len = static_cast<std::size_t>(2 * p.n() + 2);
    while (len > 0 && word_count(sigma, len) > budget.max_exhaustive_words) --len;
    return len;
}

std::optional<ExperimentRow> run_cell(const InstanceParams& p, Construction construction, std::uint64_t seed,
                                      const ExperimentBudget& budget) {
    if (construction == Construction::kGeneric && p.n() > budget.generic_max_n) return std::nullopt;
    const auto started = std::chrono::steady_clock::now();

    ExperimentRow row;
    row.k = p.k();
    row.n = p.n();
    row.construction = construction;
    row.lower_bound = p.lower_bound();

    const Transducer instance = instance_transducer(p, true);
    row.transducer_states = instance.state_count();
    if (row.transducer_states != p.transducer_states(true)) {
        throw ExperimentFailure(cell_name(p, construction) + ": instance has " +
                                std::to_string(row.transducer_states) + " states, expected " +
                                std::to_string(p.transducer_states(true)));
    }
    const Transducer prepared = trim(remove_input_epsilons(instance));
    if (!check_functional(prepared).functional) {
        throw ExperimentFailure(cell_name(p, construction) + ": instance transducer is not functional");
    }

    Bimachine machine;
    if (construction == Construction::kGeneric) {
        try {
            machine = to_bimachine(prepared, budget.left_state_cap);
        } catch (const ResourceError&) {
            return std::nullopt;
        }
    } else {
        machine = handcrafted_bimachine(p);
    }
    machine = reduce(machine);

    std::vector<NamedFunction> functions{
        {"oracle", [&p](const Word& w) { return oracle_f(p, w); }},
        {"bimachine", [&machine](const Word& w) { return evaluate(machine, w); }},
    };
    const std::size_t max_len = exhaustive_length(p, budget);
    const auto report =
        check_equivalence(functions, static_cast<std::size_t>(2 * p.k()), max_len, budget.samples, seed,
                          instance_sampler(p, static_cast<std::size_t>(4 * p.n())));
    if (!report.equivalent()) {
        const Alphabet sigma = p.alphabet();
        throw ExperimentFailure(cell_name(p, construction) + ": bimachine disagrees with the oracle on " +
                                format_word(sigma, report.mismatch->word));
    }

    row.left_states = machine.left.state_count();
    row.right_states = machine.right.state_count();
    row.total_states = row.left_states + row.right_states;
    if (row.total_states < row.lower_bound) {
        throw ExperimentFailure(cell_name(p, construction) + ": " + std::to_string(row.total_states) +
                                " states, below the bound " + std::to_string(row.lower_bound));
    }
    if (std::max(row.left_states, row.right_states) < p.window_count()) {
        throw ExperimentFailure(cell_name(p, construction) + ": both sides smaller than k^n");
    }
    if (budget.measure_time) {
        row.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    }
    return row;
}

}  // namespace

std::string_view to_string(Construction c) {
    switch (c) {
        case Construction::kGeneric:
            return "generic";
        case Construction::kHandcrafted:
            return "handcrafted";
    }
    return "unknown";
}

double ExperimentRow::ratio() const {
    double windows = 1.0;
    for (int i = 0; i < n; ++i) windows *= k;
    return static_cast<double>(total_states) / windows;
}

std::vector<InstanceParams> make_grid(int kmax, int nmax) {
    std::vector<InstanceParams> grid;
    for (int k = 2; k <= kmax; ++k) {
        for (int n = 1; n <= nmax; ++n) grid.emplace_back(k, n);
    }
    return grid;
}

std::vector<ExperimentRow> run_experiment(const std::vector<InstanceParams>& grid,
                                          const std::vector<Construction>& constructions, std::uint64_t seed,
                                          const ExperimentBudget& budget) {
    std::vector<ExperimentRow> rows;
    for (const InstanceParams& p : grid) {
        for (Construction c : constructions) {
            const std::uint64_t cell_seed = seed * 1'000'003ULL + static_cast<std::uint64_t>(p.k()) * 10'007ULL +
                                            static_cast<std::uint64_t>(p.n()) * 101ULL +
                                            static_cast<std::uint64_t>(c);
            if (auto row = run_cell(p, c, cell_seed, budget)) rows.push_back(*row);
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const ExperimentRow& a, const ExperimentRow& b) {
        return std::tie(a.k, a.n, a.construction) < std::tie(b.k, b.n, b.construction);
    });
    return rows;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
    out << "k,n,construction,transducer_states,left_states,right_states,total_states,lower_bound,elapsed_ms,"
           "ratio\n";
    char buffer[64];
    for (const auto& row : rows) {
        out << row.k << ',' << row.n << ',' << to_string(row.construction) << ',' << row.transducer_states << ','
            << row.left_states << ',' << row.right_states << ',' << row.total_states << ',' << row.lower_bound
            << ',';
        std::snprintf(buffer, sizeof buffer, "%.3f,%.4f", row.elapsed_ms, row.ratio());
        out << buffer << '\n';
    }
}

}  // namespace bimlab
