#ifndef CHARGE_DP_EXACT_HPP
#define CHARGE_DP_EXACT_HPP

#include <cstdint>
#include <vector>

#include "charge/model.hpp"

namespace charge {

struct DpExactOptions {
  // Upper bound on the residual-supply state space, prod_t (m_t + 1).
  std::uint64_t max_states = 10'000'000;
};

struct DpExactStats {
  std::uint64_t memo_states = 0;     // distinct (residual, i) entries
  std::uint64_t state_space = 0;     // n * prod_t (m_t + 1)
  std::uint64_t candidates_tried = 0;
};

// Candidate per-period charge vectors for one agent given the residual
// supply: the zero vector plus, for every subset of the agent's triples,
// every placement that hits the chosen cumulative thresholds exactly and
// charges nothing after the last chosen deadline. Dominates the full
// allocation range. Sorted lexicographically, deduplicated.
std::vector<std::vector<Amount>> enumerate_agent_allocations(
    const Instance& inst, int agent, const std::vector<Amount>& residual);

// Exact solver for every variant (any speed kind, multiple deadlines),
// memoized over (residual supply vector, agents considered). Exponential
// in the number of periods.
Solution dp_exact_solve(const Instance& inst, const DpExactOptions& opts = {},
                        DpExactStats* stats = nullptr);

}  // namespace charge

#endif  // CHARGE_DP_EXACT_HPP
