#ifndef CHARGE_ORACLE_HPP
#define CHARGE_ORACLE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "charge/model.hpp"

namespace charge {

// A chosen set of (agent index, triple index) pairs whose deadlines a
// schedule commits to meet. Choosing triple k does not require choosing
// earlier triples of the same agent.
struct SatisfactionSet {
  std::vector<std::pair<int, int>> chosen;
};

struct OracleOptions {
  // Refuse instances with more than this many triples in total
  // (enumeration is 2^bits).
  int max_bits = 20;
};

struct OracleStats {
  std::uint64_t sets_enumerated = 0;
};

// Cumulative-supply (Hall) feasibility check. Exact when every agent in
// the set has unbounded speed; throws InternalError otherwise.
bool feasible_hall(const Instance& inst, const SatisfactionSet& s);

// General feasibility via a time-expanded circulation with lower bounds.
// Handles all speed kinds.
bool feasible_flow(const Instance& inst, const SatisfactionSet& s);

// Schedules the set if feasible, returning a witness allocation that
// satisfies every chosen triple and passes check_feasible. Unbounded-speed
// sets use earliest-deadline-first on the earliest supply; otherwise the
// allocation is read off the circulation. Never charges an agent after its
// last chosen deadline.
std::optional<Allocation> schedule_set(const Instance& inst,
                                       const SatisfactionSet& s);

// Ground-truth solver: enumerates every satisfaction set and returns the
// best feasible one. Exponential; guarded by OracleOptions::max_bits.
Solution oracle_solve(const Instance& inst, const OracleOptions& opts = {},
                      OracleStats* stats = nullptr);

}  // namespace charge

#endif  // CHARGE_ORACLE_HPP
