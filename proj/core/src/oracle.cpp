#include "charge/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <queue>

#include "charge/errors.hpp"

namespace charge {

namespace {

// Dinic max flow on int64 capacities.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : head_(static_cast<std::size_t>(n), -1) {}

  int add_edge(int u, int v, Amount cap) {
    const int id = static_cast<int>(to_.size());
    to_.push_back(v); cap_.push_back(cap); next_.push_back(head_[static_cast<std::size_t>(u)]);
    head_[static_cast<std::size_t>(u)] = id;
    to_.push_back(u); cap_.push_back(0); next_.push_back(head_[static_cast<std::size_t>(v)]);
    head_[static_cast<std::size_t>(v)] = id + 1;
    return id;
  }

  Amount flow_on(int edge_id) const {
    return cap_[static_cast<std::size_t>(edge_id ^ 1)];
  }

  Amount run(int s, int t) {
    Amount total = 0;
    while (bfs(s, t)) {
      iter_ = head_;
      while (Amount f = dfs(s, t, std::numeric_limits<Amount>::max())) total += f;
    }
    return total;
  }

 private:
  bool bfs(int s, int t) {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    level_[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front(); q.pop();
      for (int e = head_[static_cast<std::size_t>(u)]; e != -1; e = next_[static_cast<std::size_t>(e)]) {
        const int v = to_[static_cast<std::size_t>(e)];
        if (cap_[static_cast<std::size_t>(e)] > 0 && level_[static_cast<std::size_t>(v)] < 0) {
          level_[static_cast<std::size_t>(v)] = level_[static_cast<std::size_t>(u)] + 1;
          q.push(v);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  Amount dfs(int u, int t, Amount limit) {
    if (u == t) return limit;
    for (int& e = iter_[static_cast<std::size_t>(u)]; e != -1; e = next_[static_cast<std::size_t>(e)]) {
      const int v = to_[static_cast<std::size_t>(e)];
      if (cap_[static_cast<std::size_t>(e)] <= 0 ||
          level_[static_cast<std::size_t>(v)] != level_[static_cast<std::size_t>(u)] + 1)
        continue;
      const Amount f = dfs(v, t, std::min(limit, cap_[static_cast<std::size_t>(e)]));
      if (f > 0) {
        cap_[static_cast<std::size_t>(e)] -= f;
        cap_[static_cast<std::size_t>(e ^ 1)] += f;
        return f;
      }
    }
    return 0;
  }

  std::vector<int> head_, to_, next_, level_, iter_;
  std::vector<Amount> cap_;
};

// Chosen triples grouped per agent, triple indices ascending (so deadlines
// ascending and cumulative thresholds nondecreasing).
std::map<int, std::vector<int>> group_by_agent(const Instance& inst,
                                               const SatisfactionSet& s) {
  std::map<int, std::vector<int>> per_agent;
  for (const auto& [i, k] : s.chosen) {
    if (i < 0 || static_cast<std::size_t>(i) >= inst.agents.size())
      throw InputError("satisfaction set: agent index out of range");
    if (k < 0 || static_cast<std::size_t>(k) >= inst.agents[static_cast<std::size_t>(i)].triples.size())
      throw InputError("satisfaction set: triple index out of range");
    per_agent[i].push_back(k);
  }
  for (auto& [i, ks] : per_agent) {
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  }
  return per_agent;
}

bool all_unbounded(const Instance& inst,
                   const std::map<int, std::vector<int>>& per_agent) {
  for (const auto& [i, ks] : per_agent)
    if (inst.agents[static_cast<std::size_t>(i)].speed.kind !=
        SpeedConstraint::Kind::Unbounded)
      return false;
  return true;
}

// Earliest-deadline-first schedule for unbounded-speed sets: incremental
// demands sorted by deadline consume the earliest remaining supply.
std::optional<Allocation> edf_schedule(
    const Instance& inst, const std::map<int, std::vector<int>>& per_agent) {
  struct Job { Period deadline; int agent; Amount inc; };
  std::vector<Job> jobs;
  for (const auto& [i, ks] : per_agent) {
    const Agent& ag = inst.agents[static_cast<std::size_t>(i)];
    Amount prev = 0;
    for (int k : ks) {
      const Triple& tr = ag.triples[static_cast<std::size_t>(k)];
      const Amount inc = std::max<Amount>(0, tr.demand - prev);
      prev = std::max(prev, tr.demand);
      if (inc > 0) jobs.push_back({tr.deadline, i, inc});
    }
  }
  std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) {
    return a.deadline != b.deadline ? a.deadline < b.deadline : a.agent < b.agent;
  });

  std::vector<Amount> remaining = inst.supply;
  Allocation alloc = Allocation::zero(inst);
  for (const Job& job : jobs) {
    Amount need = job.inc;
    for (Period t = 1; t <= job.deadline && need > 0; ++t) {
      const Amount take = std::min(need, remaining[static_cast<std::size_t>(t - 1)]);
      remaining[static_cast<std::size_t>(t - 1)] -= take;
      alloc.amounts[static_cast<std::size_t>(job.agent)][static_cast<std::size_t>(t - 1)] += take;
      need -= take;
    }
    if (need > 0) return std::nullopt;
  }
  return alloc;
}

// Time-expanded circulation with lower bounds. Per agent, a chain of
// window nodes delimited by the chosen deadlines; the arc leaving window j
// carries all charge received by deadline d_j, so its lower bound is the
// cumulative threshold w_j.
std::optional<Allocation> flow_schedule(
    const Instance& inst, const std::map<int, std::vector<int>>& per_agent) {
  const int T = inst.periods;
  int node_count = 2 + T;  // src, periods, snk
  const int src = 0;
  for (const auto& [i, ks] : per_agent) {
    (void)i;
    node_count += static_cast<int>(ks.size());
  }
  const int snk = node_count - 1;
  const int super_src = node_count;
  const int super_snk = node_count + 1;
  MaxFlow net(node_count + 2);

  Amount lb_total = 0;
  auto add_arc = [&](int u, int v, Amount lb, Amount cap) -> int {
    const int id = net.add_edge(u, v, cap - lb);
    if (lb > 0) {
      net.add_edge(super_src, v, lb);
      net.add_edge(u, super_snk, lb);
      lb_total += lb;
    }
    return id;
  };

  Amount grand_total = 0;
  for (const auto& [i, ks] : per_agent) {
    const Agent& ag = inst.agents[static_cast<std::size_t>(i)];
    grand_total += ag.triples[static_cast<std::size_t>(ks.back())].demand;
  }

  for (Period t = 1; t <= T; ++t)
    add_arc(src, t, 0, inst.supply[static_cast<std::size_t>(t - 1)]);

  // Edge ids of period->window arcs for witness extraction.
  struct PeriodArc { int agent; Period t; int edge; };
  std::vector<PeriodArc> period_arcs;

  int next_node = 1 + T;
  for (const auto& [i, ks] : per_agent) {
    const Agent& ag = inst.agents[static_cast<std::size_t>(i)];
    const Amount total = ag.triples[static_cast<std::size_t>(ks.back())].demand;
    Period window_start = 1;
    int prev_window = -1;
    for (std::size_t j = 0; j < ks.size(); ++j) {
      const Triple& tr = ag.triples[static_cast<std::size_t>(ks[j])];
      const int w_node = next_node++;
      for (Period t = window_start; t <= tr.deadline; ++t) {
        const Amount cap = ag.speed.cap_at(t, total);
        if (cap > 0) {
          const int e = add_arc(t, w_node, 0, cap);
          period_arcs.push_back({i, t, e});
        }
      }
      if (prev_window != -1) {
        const Amount prev_threshold =
            ag.triples[static_cast<std::size_t>(ks[j - 1])].demand;
        add_arc(prev_window, w_node, prev_threshold, total);
      }
      prev_window = w_node;
      window_start = tr.deadline + 1;
    }
    add_arc(prev_window, snk, total, total);
  }
  add_arc(snk, src, 0, grand_total);

  if (net.run(super_src, super_snk) != lb_total) return std::nullopt;

  Allocation alloc = Allocation::zero(inst);
  for (const PeriodArc& pa : period_arcs)
    alloc.amounts[static_cast<std::size_t>(pa.agent)][static_cast<std::size_t>(pa.t - 1)] +=
        net.flow_on(pa.edge);
  return alloc;
}

}  // namespace

bool feasible_hall(const Instance& inst, const SatisfactionSet& s) {
  const auto per_agent = group_by_agent(inst, s);
  if (!all_unbounded(inst, per_agent))
    throw InternalError(
        "feasible_hall requires unbounded speeds; use feasible_flow");
  Amount cumulative_supply = 0;
  for (Period d = 1; d <= inst.periods; ++d) {
    cumulative_supply += inst.supply[static_cast<std::size_t>(d - 1)];
    Amount committed = 0;
    for (const auto& [i, ks] : per_agent) {
      const Agent& ag = inst.agents[static_cast<std::size_t>(i)];
      Amount w = 0;
      for (int k : ks)
        if (ag.triples[static_cast<std::size_t>(k)].deadline <= d)
          w = std::max(w, ag.triples[static_cast<std::size_t>(k)].demand);
      committed += w;
    }
    if (committed > cumulative_supply) return false;
  }
  return true;
}

bool feasible_flow(const Instance& inst, const SatisfactionSet& s) {
  return flow_schedule(inst, group_by_agent(inst, s)).has_value();
}

std::optional<Allocation> schedule_set(const Instance& inst,
                                       const SatisfactionSet& s) {
  const auto per_agent = group_by_agent(inst, s);
  if (all_unbounded(inst, per_agent)) return edf_schedule(inst, per_agent);
  return flow_schedule(inst, per_agent);
}

Solution oracle_solve(const Instance& inst, const OracleOptions& opts,
                      OracleStats* stats) {
  std::vector<std::pair<int, int>> ids;
  for (std::size_t i = 0; i < inst.agents.size(); ++i)
    for (std::size_t k = 0; k < inst.agents[i].triples.size(); ++k)
      ids.emplace_back(static_cast<int>(i), static_cast<int>(k));
  const int bits = static_cast<int>(ids.size());
  if (bits > opts.max_bits)
    throw GuardError("oracle_solve: " + std::to_string(bits) +
                     " triples exceed the enumeration guard of " +
                     std::to_string(opts.max_bits) + " bits");

  Value best_value = 0;
  SatisfactionSet best_set;
  const std::uint64_t limit = std::uint64_t{1} << bits;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    Value value = 0;
    SatisfactionSet s;
    for (int b = 0; b < bits; ++b)
      if (mask & (std::uint64_t{1} << b)) {
        const auto [i, k] = ids[static_cast<std::size_t>(b)];
        value += inst.agents[static_cast<std::size_t>(i)].triples[static_cast<std::size_t>(k)].value;
        s.chosen.push_back(ids[static_cast<std::size_t>(b)]);
      }
    if (stats) ++stats->sets_enumerated;
    if (value <= best_value) continue;
    const auto per_agent = group_by_agent(inst, s);
    const bool ok = all_unbounded(inst, per_agent) ? feasible_hall(inst, s)
                                                   : feasible_flow(inst, s);
    if (ok) {
      best_value = value;
      best_set = std::move(s);
    }
  }

  auto witness = schedule_set(inst, best_set);
  if (!witness)
    throw InternalError("oracle_solve: best set lost feasibility on replay");
  Solution sol = evaluate_welfare(inst, *witness);
  const Feasibility feas = check_feasible(inst, sol.allocation);
  if (!feas.ok)
    throw InternalError("oracle_solve: witness infeasible: " + feas.violation);
  return sol;
}

}  // namespace charge
