#include "charge/dp_exact.hpp"

#include <algorithm>
#include <unordered_map>

#include "charge/errors.hpp"

namespace charge {

namespace {

Value value_of(const Agent& ag, const std::vector<Amount>& a) {
  Value v = 0;
  Amount cum = 0;
  Period t = 0;
  for (const Triple& tr : ag.triples) {
    while (t < tr.deadline) cum += a[static_cast<std::size_t>(t++)];
    if (cum >= tr.demand) v += tr.value;
  }
  return v;
}

}  // namespace

std::vector<std::vector<Amount>> enumerate_agent_allocations(
    const Instance& inst, int agent, const std::vector<Amount>& residual) {
  const Agent& ag = inst.agents[static_cast<std::size_t>(agent)];
  const Period T = inst.periods;
  std::vector<Amount> caps(static_cast<std::size_t>(T));
  for (Period t = 1; t <= T; ++t)
    caps[static_cast<std::size_t>(t - 1)] =
        ag.speed.cap_at(t, residual[static_cast<std::size_t>(t - 1)]);

  std::vector<std::vector<Amount>> out;
  out.emplace_back(static_cast<std::size_t>(T), 0);  // reject everything

  const int K = static_cast<int>(ag.triples.size());
  std::vector<Amount> cur(static_cast<std::size_t>(T), 0);
  for (unsigned mask = 1; mask < (1u << K); ++mask) {
    std::vector<const Triple*> chosen;
    for (int k = 0; k < K; ++k)
      if (mask & (1u << k)) chosen.push_back(&ag.triples[static_cast<std::size_t>(k)]);

    // Free disposal makes a total of exactly the last chosen demand
    // sufficient: any heavier satisfying vector can shed trailing units
    // without dropping an earlier cumulative below its threshold. Each
    // chosen deadline still needs cumulative charge at or above its
    // demand, which may overshoot early thresholds when later capacity
    // is scarce.
    const Period d_last = chosen.back()->deadline;
    const Amount w_last = chosen.back()->demand;
    auto compose = [&](auto&& self, Period t, Amount rem, std::size_t j) -> void {
      if (t > d_last) {
        if (rem == 0) out.push_back(cur);
        return;
      }
      const Amount hi = std::min(caps[static_cast<std::size_t>(t - 1)], rem);
      for (Amount a = 0; a <= hi; ++a) {
        cur[static_cast<std::size_t>(t - 1)] = a;
        const Amount next_rem = rem - a;
        std::size_t next_j = j;
        bool ok = true;
        while (next_j < chosen.size() && chosen[next_j]->deadline == t) {
          if (w_last - next_rem < chosen[next_j]->demand) {
            ok = false;
            break;
          }
          ++next_j;
        }
        if (ok) self(self, t + 1, next_rem, next_j);
      }
      cur[static_cast<std::size_t>(t - 1)] = 0;
    };
    compose(compose, 1, w_last, 0);
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Solution dp_exact_solve(const Instance& inst, const DpExactOptions& opts,
                        DpExactStats* stats) {
  const Period T = inst.periods;
  const int n = static_cast<int>(inst.agents.size());

  std::uint64_t product = 1;
  for (Amount m : inst.supply) {
    const std::uint64_t factor = static_cast<std::uint64_t>(m) + 1;
    if (factor > opts.max_states || product > opts.max_states / factor) {
      product = opts.max_states + 1;
      break;
    }
    product *= factor;
  }
  if (product > opts.max_states)
    throw GuardError("dp_exact_solve: residual state space prod(m_t+1) "
                     "exceeds guard of " + std::to_string(opts.max_states) +
                     " states");

  // Mixed-radix code over (m_t + 1) for dense, collision-free keys.
  std::vector<std::uint64_t> radix(static_cast<std::size_t>(T));
  {
    std::uint64_t r = 1;
    for (Period t = 1; t <= T; ++t) {
      radix[static_cast<std::size_t>(t - 1)] = r;
      r *= static_cast<std::uint64_t>(inst.supply[static_cast<std::size_t>(t - 1)]) + 1;
    }
  }
  auto code_of = [&](const std::vector<Amount>& res) {
    std::uint64_t c = 0;
    for (Period t = 1; t <= T; ++t)
      c += static_cast<std::uint64_t>(res[static_cast<std::size_t>(t - 1)]) *
           radix[static_cast<std::size_t>(t - 1)];
    return c;
  };

  std::unordered_map<std::uint64_t, Value> memo;
  std::uint64_t candidates_tried = 0;

  auto opt = [&](auto&& self, std::vector<Amount>& res, int i) -> Value {
    if (i == 0) return 0;
    const std::uint64_t key =
        code_of(res) * static_cast<std::uint64_t>(n + 1) + static_cast<std::uint64_t>(i);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int agent = i - 1;
    // Reject branch: the zero vector still satisfies zero-demand triples.
    const std::vector<Amount> zero(static_cast<std::size_t>(T), 0);
    Value best = value_of(inst.agents[static_cast<std::size_t>(agent)], zero) +
                 self(self, res, i - 1);
    for (const auto& cand : enumerate_agent_allocations(inst, agent, res)) {
      bool zero = true;
      for (Amount a : cand)
        if (a != 0) { zero = false; break; }
      if (zero) continue;
      ++candidates_tried;
      for (Period t = 0; t < T; ++t)
        res[static_cast<std::size_t>(t)] -= cand[static_cast<std::size_t>(t)];
      const Value v = value_of(inst.agents[static_cast<std::size_t>(agent)], cand) +
                      self(self, res, i - 1);
      for (Period t = 0; t < T; ++t)
        res[static_cast<std::size_t>(t)] += cand[static_cast<std::size_t>(t)];
      best = std::max(best, v);
    }
    memo.emplace(key, best);
    return best;
  };

  std::vector<Amount> res = inst.supply;
  const Value optimum = opt(opt, res, n);

  if (memo.size() > static_cast<std::uint64_t>(n) * product)
    throw InternalError("dp_exact_solve: memo table exceeded n * prod(m_t+1)");

  // Replay the argmax choices from the memo: prefer rejecting the agent on
  // ties, then the lexicographically smallest candidate vector.
  Allocation alloc = Allocation::zero(inst);
  for (int i = n; i >= 1; --i) {
    const int agent = i - 1;
    const Value target = opt(opt, res, i);
    const std::vector<Amount> zero(static_cast<std::size_t>(T), 0);
    const Value reject =
        value_of(inst.agents[static_cast<std::size_t>(agent)], zero) +
        opt(opt, res, i - 1);
    if (reject == target) continue;
    bool found = false;
    for (const auto& cand : enumerate_agent_allocations(inst, agent, res)) {
      for (Period t = 0; t < T; ++t)
        res[static_cast<std::size_t>(t)] -= cand[static_cast<std::size_t>(t)];
      const Value v = value_of(inst.agents[static_cast<std::size_t>(agent)], cand) +
                      opt(opt, res, i - 1);
      if (v == target) {
        alloc.amounts[static_cast<std::size_t>(agent)] = cand;
        found = true;
        break;  // residual stays reduced
      }
      for (Period t = 0; t < T; ++t)
        res[static_cast<std::size_t>(t)] += cand[static_cast<std::size_t>(t)];
    }
    if (!found)
      throw InternalError("dp_exact_solve: argmax replay found no candidate");
  }

  if (stats) {
    stats->memo_states = memo.size();
    stats->state_space = static_cast<std::uint64_t>(n) * product;
    stats->candidates_tried = candidates_tried;
  }

  Solution sol = evaluate_welfare(inst, alloc);
  const Feasibility feas = check_feasible(inst, alloc);
  if (!feas.ok)
    throw InternalError("dp_exact_solve: reconstructed allocation infeasible: " +
                        feas.violation);
  if (sol.welfare < optimum)
    throw InternalError("dp_exact_solve: replayed welfare fell short of the DP optimum");
  return sol;
}

}  // namespace charge
