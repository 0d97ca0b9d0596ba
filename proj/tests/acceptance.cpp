// Acceptance suite: end-to-end checks of the solvers against independent
// oracles and the certified reduction gadgets. Prints one line per
// criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "charge/dispatch.hpp"
#include "charge/dp_deadline.hpp"
#include "charge/dp_exact.hpp"
#include "charge/generators.hpp"
#include "charge/online.hpp"
#include "charge/oracle.hpp"
#include "charge/vcg.hpp"
#include "test_support.hpp"

using namespace charge;
using charge::testing::brute_knapsack;
using charge::testing::has_exact_cover;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::function<bool(std::string&)> run;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

// --- 1: knapsack equivalence --------------------------------------------

bool knapsack_equivalence(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    KnapsackInput k;
    k.capacity = 1 + static_cast<Amount>(rng() % 50);
    const int n = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < n; ++i)
      k.items.emplace_back(static_cast<Value>(rng() % 100),
                           1 + static_cast<Amount>(rng() % 50));
    const Value dp = dp_deadline_solve(gen_knapsack(k)).welfare;
    const Value brute = brute_knapsack(k);
    if (dp != brute) {
      detail = "trial " + std::to_string(trial) + ": dp " + std::to_string(dp) +
               " != brute " + std::to_string(brute);
      return false;
    }
  }
  detail = "200 inputs, " + std::to_string(seconds_since(start)) + " s";
  return true;
}

// --- 2: three-deadline gadget formula -----------------------------------

bool multi_gadget_formula(std::string& detail) {
  struct Case {
    int q;
    std::vector<std::array<int, 3>> collection;
    bool is_cover;
  };
  const std::vector<Case> cases = {
      {1, {{{1, 2, 3}}}, true},
      {2, {{{1, 2, 3}}, {{4, 5, 6}}, {{1, 4, 5}}}, true},
      {3, {{{1, 2, 3}}, {{4, 5, 6}}, {{7, 8, 9}}}, true},
      {1, {}, false},
      {2, {{{1, 2, 3}}, {{1, 4, 5}}, {{2, 4, 6}}}, false},
      {3, {{{1, 2, 3}}, {{4, 5, 6}}, {{1, 7, 8}}}, false},
  };
  double q3_seconds = 0;
  for (const Case& c : cases) {
    const X3CInput x{c.q, c.collection};
    if (has_exact_cover(x) != c.is_cover) {
      detail = "corpus label wrong for q=" + std::to_string(c.q);
      return false;
    }
    const Value target = 4.5 * c.q * c.q + 4.5 * c.q;
    const auto start = std::chrono::steady_clock::now();
    const Value opt = dp_exact_solve(gen_x3c_multi(x)).welfare;
    if (c.q == 3) q3_seconds += seconds_since(start);
    if (c.is_cover ? opt != target : opt >= target) {
      detail = "q=" + std::to_string(c.q) + ": dp-exact optimum " +
               std::to_string(opt) + " vs formula " + std::to_string(target);
      return false;
    }
    if (c.q <= 2) {
      const Value oracle = oracle_solve(gen_x3c_multi(x)).welfare;
      if (oracle != opt) {
        detail = "q=" + std::to_string(c.q) + ": oracle disagrees";
        return false;
      }
    }
  }
  if (q3_seconds >= 60) {
    detail = "q=3 dp-exact took " + std::to_string(q3_seconds) + " s (>= 60)";
    return false;
  }
  detail = "optima 9/27/54 confirmed; q=3 runs took " +
           std::to_string(q3_seconds) + " s";
  return true;
}

// --- 3: gaps gadget iff-property ----------------------------------------

bool gaps_gadget_iff(std::string& detail) {
  // q = 1: the only 3-subset of {1,2,3}; collections of size 0 and 1.
  for (int use : {0, 1}) {
    X3CInput x{1, {}};
    if (use) x.collection.push_back({1, 2, 3});
    const Value opt = oracle_solve(gen_x3c_gaps(x)).welfare;
    if ((opt == 1) != has_exact_cover(x)) {
      detail = "q=1 collection size " + std::to_string(use);
      return false;
    }
  }

  // q = 2: every collection of at most 4 of the 20 possible subsets.
  std::vector<std::array<int, 3>> all;
  for (int a = 1; a <= 6; ++a)
    for (int b = a + 1; b <= 6; ++b)
      for (int c = b + 1; c <= 6; ++c) all.push_back({a, b, c});

  long checked = 0;
  std::vector<int> pick;
  auto enumerate = [&](auto&& self, std::size_t from, int left) -> bool {
    {
      X3CInput x{2, {}};
      for (int idx : pick) x.collection.push_back(all[static_cast<std::size_t>(idx)]);
      const Value opt = oracle_solve(gen_x3c_gaps(x)).welfare;
      ++checked;
      if ((opt == 2) != has_exact_cover(x)) {
        detail = "q=2 failed on a collection of size " +
                 std::to_string(pick.size());
        return false;
      }
    }
    if (left == 0) return true;
    for (std::size_t i = from; i < all.size(); ++i) {
      pick.push_back(static_cast<int>(i));
      if (!self(self, i + 1, left - 1)) return false;
      pick.pop_back();
    }
    return true;
  };
  if (!enumerate(enumerate, 0, 4)) return false;
  detail = std::to_string(checked) + " collections checked exhaustively";
  return true;
}

// --- 4: oracle equivalence ----------------------------------------------

bool oracle_equivalence(std::string& detail) {
  const auto start = std::chrono::steady_clock::now();
  const RandomSpeedKind kinds[] = {RandomSpeedKind::Unbounded,
                                   RandomSpeedKind::Fixed,
                                   RandomSpeedKind::Gaps,
                                   RandomSpeedKind::Mixed};
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const Instance inst = gen_random({.seed = seed,
                                      .agents = static_cast<int>(1 + seed % 5),
                                      .periods = static_cast<Period>(1 + seed % 4),
                                      .max_supply = 3,
                                      .max_demand = 4,
                                      .speed_kind = kinds[seed % 4],
                                      .max_triples = 2});
    const Value dp = dp_exact_solve(inst).welfare;
    const Value oracle = oracle_solve(inst).welfare;
    if (dp != oracle) {
      detail = "seed " + std::to_string(seed) + ": dp-exact " +
               std::to_string(dp) + " != oracle " + std::to_string(oracle);
      return false;
    }
  }
  detail = "500 instances, " + std::to_string(seconds_since(start)) + " s";
  return true;
}

// --- 5: cross-solver agreement ------------------------------------------

bool cross_solver_agreement(std::string& detail) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Instance inst = gen_random({.seed = seed * 7 + 1,
                                      .agents = static_cast<int>(1 + seed % 5),
                                      .periods = static_cast<Period>(1 + seed % 4),
                                      .max_supply = 3,
                                      .max_demand = 4});
    const Value a = dp_deadline_solve(inst).welfare;
    const Value b = dp_exact_solve(inst).welfare;
    const Value c = oracle_solve(inst).welfare;
    if (a != b || b != c) {
      detail = "seed " + std::to_string(seed) + ": " + std::to_string(a) +
               " / " + std::to_string(b) + " / " + std::to_string(c);
      return false;
    }
  }
  detail = "300 single-deadline instances agree across all three solvers";
  return true;
}

// --- 6: complexity-bound accounting -------------------------------------

bool complexity_bounds(std::string& detail) {
  long bench_instances = 0;

  // dp-deadline over knapsack sweeps
  std::mt19937_64 rng(606);
  for (int n : {5, 10, 15}) {
    for (int rep = 0; rep < 5; ++rep) {
      KnapsackInput k;
      k.capacity = 1 + static_cast<Amount>(rng() % 40);
      for (int i = 0; i < n; ++i)
        k.items.emplace_back(static_cast<Value>(rng() % 30),
                             1 + static_cast<Amount>(rng() % 20));
      DpDeadlineStats stats;
      dp_deadline_solve(gen_knapsack(k), {}, &stats);
      ++bench_instances;
      if (stats.memo_cells > stats.cell_bound) {
        detail = "dp-deadline cells " + std::to_string(stats.memo_cells) +
                 " exceed n*(M_n+1) = " + std::to_string(stats.cell_bound);
        return false;
      }
    }
  }

  // dp-deadline over random single-deadline families
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Instance inst = gen_random({.seed = seed, .agents = 8, .periods = 5,
                                      .max_supply = 6, .max_demand = 8});
    DpDeadlineStats stats;
    dp_deadline_solve(inst, {}, &stats);
    ++bench_instances;
    if (stats.memo_cells > stats.cell_bound) {
      detail = "dp-deadline cell bound violated at seed " + std::to_string(seed);
      return false;
    }
  }

  // dp-exact over x3c gadgets and random mixed instances
  std::vector<Instance> exact_bench = {
      gen_x3c_multi({1, {{{1, 2, 3}}}}),
      gen_x3c_multi({2, {{{1, 2, 3}}, {{4, 5, 6}}}}),
      gen_x3c_gaps({2, {{{1, 2, 3}}, {{4, 5, 6}}, {{1, 4, 5}}}}),
  };
  for (std::uint64_t seed = 1; seed <= 20; ++seed)
    exact_bench.push_back(gen_random({.seed = seed, .agents = 5, .periods = 3,
                                      .max_supply = 3, .max_demand = 4,
                                      .speed_kind = RandomSpeedKind::Mixed,
                                      .max_triples = 2}));
  for (const Instance& inst : exact_bench) {
    DpExactStats stats;
    dp_exact_solve(inst, {}, &stats);
    ++bench_instances;
    if (stats.memo_states > stats.state_space) {
      detail = "dp-exact states " + std::to_string(stats.memo_states) +
               " exceed n*prod(m_t+1) = " + std::to_string(stats.state_space);
      return false;
    }
  }

  detail = std::to_string(bench_instances) + " bench instances within bounds";
  return true;
}

// --- 7: VCG properties ---------------------------------------------------

bool vcg_properties(std::string& detail) {
  const ExactSolver solver = [](const Instance& i) { return dp_exact_solve(i); };
  long misreports = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Instance inst = gen_random({.seed = seed * 13 + 5,
                                      .agents = static_cast<int>(2 + seed % 2),
                                      .periods = 2,
                                      .max_supply = 3,
                                      .max_demand = 3,
                                      .max_value = 10,
                                      .max_triples = seed % 3 == 0 ? 2 : 1});
    const VcgOutcome truth = vcg_solve(inst, solver);

    for (std::size_t i = 0; i < inst.agents.size(); ++i) {
      Value realized = 0;
      for (std::size_t k = 0; k < inst.agents[i].triples.size(); ++k)
        if (truth.solution.satisfied[i][k]) realized += inst.agents[i].triples[k].value;

      if (truth.payments[i] < 0) {
        detail = "negative payment at seed " + std::to_string(seed);
        return false;
      }
      if (realized - truth.payments[i] < 0) {
        detail = "individual rationality violated at seed " + std::to_string(seed);
        return false;
      }

      // Misreport grid on the agent's first triple.
      Instance without = inst;
      without.agents.erase(without.agents.begin() + static_cast<std::ptrdiff_t>(i));
      const Value w_without = solver(without).welfare;
      const Value true_v = inst.agents[i].triples[0].value;
      const Value truthful_utility = realized - truth.payments[i];

      for (Value lie : {Value(0), Value(1), true_v / 2, true_v + 1, 2 * true_v,
                        true_v + 9}) {
        Instance mis = inst;
        mis.agents[i].triples[0].value = lie;
        const Solution sol = solver(mis);
        Value realized_true = 0, realized_reported = 0;
        for (std::size_t k = 0; k < mis.agents[i].triples.size(); ++k)
          if (sol.satisfied[i][k]) {
            realized_true += inst.agents[i].triples[k].value;
            realized_reported += mis.agents[i].triples[k].value;
          }
        const Value payment = w_without - (sol.welfare - realized_reported);
        const Value utility = realized_true - payment;
        ++misreports;
        if (utility > truthful_utility) {
          detail = "profitable misreport at seed " + std::to_string(seed) +
                   ", agent " + std::to_string(i + 1) + ", reported value " +
                   std::to_string(lie);
          return false;
        }
      }
    }
  }
  detail = "100 instances; " + std::to_string(misreports) +
           " misreports, none profitable";
  return true;
}

// --- 8: online sanity ----------------------------------------------------

bool online_sanity(std::string& detail) {
  double min_ratio = 1.0;
  long batches = 0;
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const Instance inst = gen_random({.seed = seed * 3 + 2,
                                      .agents = 4,
                                      .periods = 4,
                                      .max_supply = 3,
                                      .max_demand = 4});
    const Solution offline = dp_exact_solve(inst);
    if (offline.welfare == 0) continue;

    std::mt19937_64 rng(seed);
    OnlineInstance oi;
    oi.base = inst;
    for (const Agent& ag : inst.agents)
      oi.releases.push_back(1 + static_cast<Period>(
          rng() % static_cast<std::uint64_t>(ag.triples[0].deadline)));

    // Full-information replay must achieve exactly 1.
    OnlineInstance full = oi;
    full.releases.assign(inst.agents.size(), 1);
    const double replay =
        competitive_ratio(full, make_replay_policy(offline.allocation));
    if (replay != 1.0) {
      detail = "replay ratio " + std::to_string(replay) + " != 1 at seed " +
               std::to_string(seed);
      return false;
    }

    const double r = competitive_ratio(oi, greedy_policy);
    if (r < 0.0 || r > 1.0) {
      detail = "ratio " + std::to_string(r) + " outside [0,1] at seed " +
               std::to_string(seed);
      return false;
    }
    min_ratio = std::min(min_ratio, r);
    ++batches;
  }
  detail = std::to_string(batches) + " simulations; greedy batch-minimum "
           "ratio " + std::to_string(min_ratio) + " (reported, not asserted)";
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "knapsack equivalence (dp-deadline vs brute force)", knapsack_equivalence},
      {2, "three-deadline gadget optima 9/27/54", multi_gadget_formula},
      {3, "gaps gadget iff-property, exhaustive q <= 2", gaps_gadget_iff},
      {4, "oracle equivalence on 500 random instances", oracle_equivalence},
      {5, "cross-solver agreement on 300 single-deadline instances",
       cross_solver_agreement},
      {6, "memo accounting within stated space bounds", complexity_bounds},
      {7, "VCG payments, rationality, and misreport grid", vcg_properties},
      {8, "online simulation sanity and replay ratio", online_sanity},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %d: %s: %s\n", ok ? "PASS" : "FAIL", c.number,
                c.title.c_str(), detail.c_str());
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
