#ifndef CHARGE_ONLINE_HPP
#define CHARGE_ONLINE_HPP

#include <functional>
#include <vector>

#include "charge/model.hpp"

namespace charge {

struct OnlineInstance {
  Instance base;
  std::vector<Period> releases;  // r_i per agent; agent i is invisible
                                 // before period r_i
};

// What a policy is allowed to see at one period: the public supply curve,
// the current period, and the agents revealed so far (with their charge
// state). Nothing about unreleased agents.
struct OnlineView {
  Period period = 1;
  std::vector<Amount> supply;          // full supply vector (public)
  Amount supply_now = 0;               // m_t for the current period
  std::vector<int> revealed;           // original agent indices, ascending
  std::vector<Agent> agents;           // aligned with `revealed`
  std::vector<Amount> charged_so_far;  // cumulative charge, aligned
};

// Charge amounts for the current period, aligned with OnlineView::revealed.
// Decisions are irrevocable; infeasible decisions abort the simulation.
using Policy = std::function<std::vector<Amount>(const OnlineView&)>;

// Runs periods 1..|T|, revealing agents at their release times and
// accumulating the policy's per-period decisions into an allocation.
Solution simulate(const OnlineInstance& oi, const Policy& policy);

// Baseline: each period, grant remaining supply to still-satisfiable
// triples in descending value density (value per unit of remaining need);
// ties prefer the earlier deadline, then the lower agent index.
std::vector<Amount> greedy_policy(const OnlineView& view);

// Replays a fixed allocation (typically an offline optimum), period by
// period.
Policy make_replay_policy(const Allocation& alloc);

// simulate(...).welfare divided by the clairvoyant offline optimum,
// computed with an exact solver picked per the instance variant. Throws
// InputError when the optimum is 0 (the ratio is undefined).
double competitive_ratio(const OnlineInstance& oi, const Policy& policy);

}  // namespace charge

#endif  // CHARGE_ONLINE_HPP
