#ifndef CHARGE_DP_DEADLINE_HPP
#define CHARGE_DP_DEADLINE_HPP

#include <cstdint>
#include <vector>

#include "charge/model.hpp"

namespace charge {

struct DpDeadlineOptions {
  // Total memo cells across all levels, sum_i (M_i + 1).
  std::uint64_t max_cells = 100'000'000;
};

struct DpDeadlineStats {
  std::uint64_t memo_cells = 0;       // cells actually dimensioned
  std::uint64_t cell_bound = 0;       // n * (M_n + 1)
  Amount cumulative_supply = 0;       // M_n after demand truncation
};

// Stable deadline-ascending order of agents; ties keep the original
// order. Requires the single-deadline, unbounded-speed variant.
std::vector<int> sort_by_deadline(const Instance& inst);

// Greedy expansion of a selected agent set into a concrete allocation:
// agents in deadline order each consume the earliest remaining supply
// before their deadline. Throws InputError naming the violated prefix if
// the set is infeasible.
Allocation recover_allocation(const Instance& inst,
                              const std::vector<int>& selected);

// The cumulative-supply knapsack DP for single-deadline, unbounded-speed
// instances. Pseudo-polynomial in total supply.
Solution dp_deadline_solve(const Instance& inst,
                           const DpDeadlineOptions& opts = {},
                           DpDeadlineStats* stats = nullptr);

}  // namespace charge

#endif  // CHARGE_DP_DEADLINE_HPP
