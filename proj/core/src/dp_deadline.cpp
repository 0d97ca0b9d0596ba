#include "charge/dp_deadline.hpp"

#include <algorithm>
#include <numeric>

#include "charge/errors.hpp"

namespace charge {

namespace {

void require_variant(const Instance& inst) {
  for (std::size_t i = 0; i < inst.agents.size(); ++i) {
    const Agent& ag = inst.agents[i];
    if (ag.triples.size() != 1)
      throw VariantError("dp-deadline handles single-deadline agents only; "
                         "agent " + std::to_string(i + 1) + " has " +
                         std::to_string(ag.triples.size()) +
                         " triples (use dp-exact)");
    if (ag.speed.kind != SpeedConstraint::Kind::Unbounded)
      throw VariantError("dp-deadline handles unbounded charging speeds only; "
                         "agent " + std::to_string(i + 1) +
                         " is speed-capped (use dp-exact)");
  }
}

}  // namespace

std::vector<int> sort_by_deadline(const Instance& inst) {
  require_variant(inst);
  std::vector<int> order(inst.agents.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return inst.agents[static_cast<std::size_t>(a)].triples[0].deadline <
           inst.agents[static_cast<std::size_t>(b)].triples[0].deadline;
  });
  return order;
}

Allocation recover_allocation(const Instance& inst,
                              const std::vector<int>& selected) {
  require_variant(inst);
  std::vector<int> order = selected;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return inst.agents[static_cast<std::size_t>(a)].triples[0].deadline <
           inst.agents[static_cast<std::size_t>(b)].triples[0].deadline;
  });

  std::vector<Amount> remaining = inst.supply;
  Allocation alloc = Allocation::zero(inst);
  for (int i : order) {
    const Triple& tr = inst.agents[static_cast<std::size_t>(i)].triples[0];
    Amount need = tr.demand;
    for (Period t = 1; t <= tr.deadline && need > 0; ++t) {
      const Amount take = std::min(need, remaining[static_cast<std::size_t>(t - 1)]);
      remaining[static_cast<std::size_t>(t - 1)] -= take;
      alloc.amounts[static_cast<std::size_t>(i)][static_cast<std::size_t>(t - 1)] = take;
      need -= take;
    }
    if (need > 0)
      throw InputError("recover_allocation: selected set infeasible; demand "
                       "through deadline " + std::to_string(tr.deadline) +
                       " exceeds cumulative supply by " + std::to_string(need));
  }
  return alloc;
}

Solution dp_deadline_solve(const Instance& inst, const DpDeadlineOptions& opts,
                           DpDeadlineStats* stats) {
  require_variant(inst);
  const int n = static_cast<int>(inst.agents.size());
  const std::vector<int> order = sort_by_deadline(inst);

  Amount total_demand = 0;
  for (const Agent& ag : inst.agents) total_demand += ag.triples[0].demand;

  // Cumulative supply at each sorted deadline; supply beyond the total
  // demand can never be used, so it is truncated up front.
  std::vector<Amount> prefix(static_cast<std::size_t>(inst.periods) + 1, 0);
  for (Period t = 1; t <= inst.periods; ++t)
    prefix[static_cast<std::size_t>(t)] =
        prefix[static_cast<std::size_t>(t - 1)] + inst.supply[static_cast<std::size_t>(t - 1)];
  std::vector<Amount> M(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    const Period d =
        inst.agents[static_cast<std::size_t>(order[static_cast<std::size_t>(i - 1)])].triples[0].deadline;
    M[static_cast<std::size_t>(i)] = std::min(prefix[static_cast<std::size_t>(d)], total_demand);
  }

  std::uint64_t cells = 0;
  for (int i = 1; i <= n; ++i)
    cells += static_cast<std::uint64_t>(M[static_cast<std::size_t>(i)]) + 1;
  if (cells > opts.max_cells)
    throw GuardError("dp_deadline_solve: memo would need " +
                     std::to_string(cells) + " cells, exceeding guard of " +
                     std::to_string(opts.max_cells));
  if (stats) {
    stats->memo_cells = cells;
    stats->cell_bound = static_cast<std::uint64_t>(n) *
                        (static_cast<std::uint64_t>(M[static_cast<std::size_t>(n)]) + 1);
    stats->cumulative_supply = M[static_cast<std::size_t>(n)];
  }

  // Level-by-level tables: level i holds OPT(m, i) for m in 0..M_i.
  std::vector<std::vector<Value>> table(static_cast<std::size_t>(n) + 1);
  table[0].assign(1, 0);
  for (int i = 1; i <= n; ++i) {
    const Triple& tr =
        inst.agents[static_cast<std::size_t>(order[static_cast<std::size_t>(i - 1)])].triples[0];
    const Amount Mi = M[static_cast<std::size_t>(i)];
    const Amount Mprev = M[static_cast<std::size_t>(i - 1)];
    auto& row = table[static_cast<std::size_t>(i)];
    const auto& prev = table[static_cast<std::size_t>(i - 1)];
    row.assign(static_cast<std::size_t>(Mi) + 1, 0);
    for (Amount m = 0; m <= Mi; ++m) {
      const Value skip = prev[static_cast<std::size_t>(std::min(m, Mprev))];
      if (tr.demand > m) {
        row[static_cast<std::size_t>(m)] = skip;
      } else {
        const Value take =
            tr.value + prev[static_cast<std::size_t>(std::min(m - tr.demand, Mprev))];
        row[static_cast<std::size_t>(m)] = std::max(skip, take);
      }
    }
  }

  // Backtrack the selected set; ties prefer skipping.
  std::vector<int> selected;
  Amount m = M[static_cast<std::size_t>(n)];
  for (int i = n; i >= 1; --i) {
    const Triple& tr =
        inst.agents[static_cast<std::size_t>(order[static_cast<std::size_t>(i - 1)])].triples[0];
    const Amount Mprev = M[static_cast<std::size_t>(i - 1)];
    const Value skip = table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(std::min(m, Mprev))];
    bool take = false;
    if (tr.demand <= m) {
      const Value take_v =
          tr.value +
          table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(std::min(m - tr.demand, Mprev))];
      take = take_v > skip;
    }
    if (take) {
      selected.push_back(order[static_cast<std::size_t>(i - 1)]);
      m = std::min(m - tr.demand, Mprev);
    } else {
      m = std::min(m, Mprev);
    }
  }
  std::sort(selected.begin(), selected.end());

  Allocation alloc = recover_allocation(inst, selected);
  Solution sol = evaluate_welfare(inst, alloc);
  const Feasibility feas = check_feasible(inst, alloc);
  if (!feas.ok)
    throw InternalError("dp_deadline_solve: recovered allocation infeasible: " +
                        feas.violation);
  return sol;
}

}  // namespace charge
