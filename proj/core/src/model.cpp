#include "charge/model.hpp"

#include <algorithm>
#include <numeric>

#include "charge/errors.hpp"

namespace charge {

Amount SpeedConstraint::cap_at(Period t, Amount ceiling) const {
  switch (kind) {
    case Kind::Unbounded:
      return ceiling;
    case Kind::Fixed:
      return std::min(ceiling, fixed);
    case Kind::Gaps:
      return available[static_cast<std::size_t>(t - 1)] ? ceiling : 0;
  }
  return 0;
}

Allocation Allocation::zero(const Instance& inst) {
  Allocation a;
  a.amounts.assign(inst.agents.size(),
                   std::vector<Amount>(static_cast<std::size_t>(inst.periods), 0));
  return a;
}

std::optional<std::string> validate_instance(const Instance& inst) {
  if (inst.periods <= 0) return "periods must be positive";
  if (static_cast<Period>(inst.supply.size()) != inst.periods)
    return "supply length " + std::to_string(inst.supply.size()) +
           " does not equal periods " + std::to_string(inst.periods);
  for (std::size_t t = 0; t < inst.supply.size(); ++t) {
    if (inst.supply[t] < 0)
      return "supply at period " + std::to_string(t + 1) + " is negative";
  }
  for (std::size_t i = 0; i < inst.agents.size(); ++i) {
    const Agent& ag = inst.agents[i];
    const std::string who = "agent " + std::to_string(i + 1);
    if (ag.triples.empty()) return who + " has no valuation triples";
    if (ag.speed.kind == SpeedConstraint::Kind::Fixed && ag.speed.fixed <= 0)
      return who + ": fixed speed must be positive";
    if (ag.speed.kind == SpeedConstraint::Kind::Gaps &&
        static_cast<Period>(ag.speed.available.size()) != inst.periods)
      return who + ": gaps mask length does not equal periods";
    Period prev_d = 0;
    Amount prev_w = -1;
    for (std::size_t k = 0; k < ag.triples.size(); ++k) {
      const Triple& tr = ag.triples[k];
      const std::string where = who + " triple " + std::to_string(k + 1);
      if (tr.value < 0) return where + ": value is negative";
      if (tr.demand < 0) return where + ": demand is negative";
      if (tr.deadline < 1 || tr.deadline > inst.periods)
        return where + ": deadline " + std::to_string(tr.deadline) +
               " out of range 1.." + std::to_string(inst.periods);
      if (tr.deadline <= prev_d)
        return where + ": deadlines must be strictly increasing";
      if (tr.demand < prev_w)
        return where + ": demands must be nondecreasing in deadline order "
               "(cumulative thresholds)";
      prev_d = tr.deadline;
      prev_w = tr.demand;
    }
  }
  return std::nullopt;
}

Amount cumulative_alloc(const Allocation& alloc, int agent, Period t) {
  if (agent < 0 || static_cast<std::size_t>(agent) >= alloc.amounts.size())
    throw InputError("cumulative_alloc: agent index out of range");
  const auto& row = alloc.amounts[static_cast<std::size_t>(agent)];
  if (t < 1 || static_cast<std::size_t>(t) > row.size())
    throw InputError("cumulative_alloc: period " + std::to_string(t) +
                     " out of range 1.." + std::to_string(row.size()));
  return std::accumulate(row.begin(), row.begin() + t, Amount{0});
}

static void require_dimensions(const Instance& inst, const Allocation& alloc) {
  if (alloc.amounts.size() != inst.agents.size())
    throw InputError("allocation has " + std::to_string(alloc.amounts.size()) +
                     " agent rows, instance has " +
                     std::to_string(inst.agents.size()));
  for (const auto& row : alloc.amounts)
    if (static_cast<Period>(row.size()) != inst.periods)
      throw InputError("allocation row length does not equal periods");
}

Solution evaluate_welfare(const Instance& inst, const Allocation& alloc) {
  require_dimensions(inst, alloc);
  Solution sol;
  sol.allocation = alloc;
  sol.satisfied.resize(inst.agents.size());
  for (std::size_t i = 0; i < inst.agents.size(); ++i) {
    const auto& row = alloc.amounts[i];
    Amount cum = 0;
    Period t = 0;
    sol.satisfied[i].resize(inst.agents[i].triples.size());
    for (std::size_t k = 0; k < inst.agents[i].triples.size(); ++k) {
      const Triple& tr = inst.agents[i].triples[k];
      while (t < tr.deadline) cum += row[static_cast<std::size_t>(t++)];
      const bool ok = cum >= tr.demand;
      sol.satisfied[i][k] = ok;
      if (ok) sol.welfare += tr.value;
    }
  }
  return sol;
}

Feasibility check_feasible(const Instance& inst, const Allocation& alloc) {
  require_dimensions(inst, alloc);
  for (Period t = 1; t <= inst.periods; ++t) {
    Amount used = 0;
    for (std::size_t i = 0; i < inst.agents.size(); ++i) {
      const Amount a = alloc.amounts[i][static_cast<std::size_t>(t - 1)];
      if (a < 0)
        return {false, "agent " + std::to_string(i + 1) + " period " +
                           std::to_string(t) + ": negative charge"};
      const SpeedConstraint& sp = inst.agents[i].speed;
      if (sp.cap_at(t, a) < a)
        return {false, "agent " + std::to_string(i + 1) + " period " +
                           std::to_string(t) + ": speed cap violated"};
      used += a;
    }
    if (used > inst.supply[static_cast<std::size_t>(t - 1)])
      return {false, "period " + std::to_string(t) + ": supply " +
                         std::to_string(inst.supply[static_cast<std::size_t>(t - 1)]) +
                         " exceeded by total charge " + std::to_string(used)};
  }
  return {};
}

VariantTag classify(const Instance& inst) {
  VariantTag tag;
  tag.periods = inst.periods;
  tag.max_supply = inst.supply.empty()
                       ? 0
                       : *std::max_element(inst.supply.begin(), inst.supply.end());
  bool any_fixed = false, any_gaps = false;
  for (const Agent& ag : inst.agents) {
    if (ag.triples.size() > 1) tag.single_deadline = false;
    if (ag.speed.kind == SpeedConstraint::Kind::Fixed) any_fixed = true;
    if (ag.speed.kind == SpeedConstraint::Kind::Gaps) any_gaps = true;
    for (const Triple& tr : ag.triples)
      tag.max_demand = std::max(tag.max_demand, tr.demand);
  }
  tag.speed = any_gaps   ? SpeedKind::Gaps
              : any_fixed ? SpeedKind::Fixed
                          : SpeedKind::Unbounded;
  return tag;
}

}  // namespace charge
