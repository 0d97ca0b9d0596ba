#include "charge/online.hpp"

#include <algorithm>
#include <string>

#include "charge/dp_deadline.hpp"
#include "charge/dp_exact.hpp"
#include "charge/errors.hpp"

namespace charge {

Solution simulate(const OnlineInstance& oi, const Policy& policy) {
  const Instance& inst = oi.base;
  if (oi.releases.size() != inst.agents.size())
    throw InputError("simulate: releases length does not equal agent count");
  for (Period r : oi.releases)
    if (r < 1 || r > std::max<Period>(1, inst.periods))
      throw InputError("simulate: release period out of range");

  Allocation alloc = Allocation::zero(inst);
  OnlineView view;
  view.supply = inst.supply;

  for (Period t = 1; t <= inst.periods; ++t) {
    for (std::size_t i = 0; i < inst.agents.size(); ++i)
      if (oi.releases[i] == t) {
        view.revealed.push_back(static_cast<int>(i));
        view.agents.push_back(inst.agents[i]);
        view.charged_so_far.push_back(0);
      }
    view.period = t;
    view.supply_now = inst.supply[static_cast<std::size_t>(t - 1)];

    const std::vector<Amount> decision = policy(view);
    if (decision.size() != view.revealed.size())
      throw InputError("simulate: policy decision length mismatch at period " +
                       std::to_string(t));
    Amount used = 0;
    for (std::size_t j = 0; j < decision.size(); ++j) {
      const Amount a = decision[j];
      const int i = view.revealed[j];
      if (a < 0)
        throw InputError("simulate: negative charge from policy at period " +
                         std::to_string(t));
      if (inst.agents[static_cast<std::size_t>(i)].speed.cap_at(t, a) < a)
        throw InputError("simulate: policy violated agent " +
                         std::to_string(i + 1) + "'s speed cap at period " +
                         std::to_string(t));
      used += a;
      alloc.amounts[static_cast<std::size_t>(i)][static_cast<std::size_t>(t - 1)] = a;
      view.charged_so_far[j] += a;
    }
    if (used > view.supply_now)
      throw InputError("simulate: policy overcommitted supply at period " +
                       std::to_string(t) + " (" + std::to_string(used) + " > " +
                       std::to_string(view.supply_now) + ")");
  }
  return evaluate_welfare(inst, alloc);
}

std::vector<Amount> greedy_policy(const OnlineView& view) {
  struct Want {
    double density;
    Period deadline;
    int agent_pos;  // position within the view
    Amount need;
  };
  std::vector<Want> wants;
  for (std::size_t j = 0; j < view.agents.size(); ++j) {
    const Agent& ag = view.agents[j];
    const Amount have = view.charged_so_far[j];
    for (const Triple& tr : ag.triples) {
      if (tr.deadline < view.period) continue;
      const Amount need = tr.demand - have;
      if (need <= 0) continue;
      // Still satisfiable given future caps and supply, optimistically
      // assuming no competition.
      Amount reachable = 0;
      for (Period t = view.period; t <= tr.deadline; ++t)
        reachable += ag.speed.cap_at(t, view.supply[static_cast<std::size_t>(t - 1)]);
      if (reachable < need) continue;
      wants.push_back({static_cast<double>(tr.value) / static_cast<double>(need),
                       tr.deadline, static_cast<int>(j), need});
    }
  }
  std::stable_sort(wants.begin(), wants.end(), [&](const Want& a, const Want& b) {
    if (a.density != b.density) return a.density > b.density;
    if (a.deadline != b.deadline) return a.deadline < b.deadline;
    return view.revealed[static_cast<std::size_t>(a.agent_pos)] <
           view.revealed[static_cast<std::size_t>(b.agent_pos)];
  });

  std::vector<Amount> decision(view.agents.size(), 0);
  Amount left = view.supply_now;
  for (const Want& w : wants) {
    if (left == 0) break;
    const Agent& ag = view.agents[static_cast<std::size_t>(w.agent_pos)];
    const Amount cap =
        ag.speed.cap_at(view.period, left) - decision[static_cast<std::size_t>(w.agent_pos)];
    const Amount give = std::min({w.need, left, std::max<Amount>(0, cap)});
    decision[static_cast<std::size_t>(w.agent_pos)] += give;
    left -= give;
  }
  return decision;
}

Policy make_replay_policy(const Allocation& alloc) {
  return [alloc](const OnlineView& view) {
    std::vector<Amount> decision(view.revealed.size(), 0);
    for (std::size_t j = 0; j < view.revealed.size(); ++j)
      decision[j] = alloc.amounts[static_cast<std::size_t>(view.revealed[j])]
                                 [static_cast<std::size_t>(view.period - 1)];
    return decision;
  };
}

double competitive_ratio(const OnlineInstance& oi, const Policy& policy) {
  const VariantTag tag = classify(oi.base);
  Solution offline;
  if (tag.single_deadline && tag.speed == SpeedKind::Unbounded)
    offline = dp_deadline_solve(oi.base);
  else
    offline = dp_exact_solve(oi.base);
  if (offline.welfare <= 0)
    throw InputError("competitive_ratio: offline optimum is 0, ratio undefined");
  const Solution online = simulate(oi, policy);
  return online.welfare / offline.welfare;
}

}  // namespace charge
