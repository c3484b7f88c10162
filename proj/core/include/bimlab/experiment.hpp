#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "bimlab/errors.hpp"
#include "bimlab/instances.hpp"
#include "bimlab/tx2bm.hpp"

namespace bimlab {

enum class Construction { kGeneric, kHandcrafted };

std::string_view to_string(Construction c);

struct ExperimentRow {
    int k = 0;
    int n = 0;
    Construction construction = Construction::kGeneric;
    std::size_t transducer_states = 0;  // merged instance, with epsilon bridges
    std::size_t left_states = 0;        // after reduce
    std::size_t right_states = 0;
    std::size_t total_states = 0;
    std::uint64_t lower_bound = 0;  // k^n + 1
    double elapsed_ms = 0.0;

    /// total_states / k^n
    double ratio() const;
};

struct ExperimentBudget {
    /// Generic cells are only run for n up to this value.
    int generic_max_n = 3;
    std::size_t left_state_cap = kDefaultLeftStateCap;
    /// Exhaustive checks stop at the longest length (at most 2n+2) whose word
    /// count stays under this cap; seeded random samples follow.
    std::size_t max_exhaustive_words = 2'000'000;
    std::size_t samples = 10'000;
    /// Wall-clock timing makes the report non-reproducible, so it is opt-in;
    /// elapsed_ms is 0 otherwise.
    bool measure_time = false;
};

/// A cell violated one of the checked properties.
class ExperimentFailure : public Error {
public:
    using Error::Error;
};

/// Every (k, n) with 2 <= k <= kmax and 1 <= n <= nmax, ordered by (k, n).
std::vector<InstanceParams> make_grid(int kmax, int nmax);

/// Runs every construction on every grid cell: builds the merged instance,
/// removes epsilon bridges, trims, checks functionality, builds and reduces
/// the bimachine, compares it with the direct definition, and asserts the
/// k^n + 1 bound. Cells outside the budget are skipped (no row). Rows are
/// ordered by (k, n, construction). Throws ExperimentFailure naming the cell.
std::vector<ExperimentRow> run_experiment(const std::vector<InstanceParams>& grid,
                                          const std::vector<Construction>& constructions, std::uint64_t seed,
                                          const ExperimentBudget& budget = {});

/// Header `k,n,construction,transducer_states,left_states,right_states,
/// total_states,lower_bound,elapsed_ms,ratio`, LF line endings.
void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);

}  // namespace bimlab
