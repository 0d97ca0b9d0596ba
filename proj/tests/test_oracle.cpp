#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "charge/errors.hpp"
#include "charge/generators.hpp"
#include "charge/oracle.hpp"
#include "test_support.hpp"

using namespace charge;
using charge::testing::agent1;

TEST_CASE("feasible_hall basics") {
  Instance inst;
  inst.periods = 3;
  inst.supply = {1, 1, 1};
  inst.agents = {agent1(1, 3, 3)};
  CHECK(feasible_hall(inst, {{{0, 0}}}));

  Instance tight;
  tight.periods = 2;
  tight.supply = {1, 1};
  tight.agents = {agent1(1, 2, 2), agent1(1, 2, 2)};
  CHECK_FALSE(feasible_hall(tight, {{{0, 0}, {1, 0}}}));
}

TEST_CASE("feasible_hall refuses speed-capped agents") {
  Instance inst;
  inst.periods = 1;
  inst.supply = {2};
  inst.agents = {agent1(1, 1, 1)};
  inst.agents[0].speed = SpeedConstraint::fixed_cap(1);
  CHECK_THROWS_AS(feasible_hall(inst, {{{0, 0}}}), InternalError);
}

TEST_CASE("hall agrees with flow on knapsack-style sets") {
  Instance inst;
  inst.periods = 1;
  inst.supply = {5};
  inst.agents = {agent1(6, 1, 4), agent1(5, 1, 3), agent1(4, 1, 2)};

  const SatisfactionSet heavy{{{0, 0}, {1, 0}}};  // weights 4 + 3 > 5
  const SatisfactionSet fits{{{1, 0}, {2, 0}}};   // weights 3 + 2 <= 5
  CHECK_FALSE(feasible_hall(inst, heavy));
  CHECK(feasible_hall(inst, fits));
  CHECK(feasible_flow(inst, heavy) == feasible_hall(inst, heavy));
  CHECK(feasible_flow(inst, fits) == feasible_hall(inst, fits));
}

TEST_CASE("feasible_flow handles gaps and speed caps") {
  // One agent restricted to exactly its three slots, unit supply.
  const Instance gadget = gen_x3c_gaps({1, {{{1, 2, 3}}}});
  CHECK(feasible_flow(gadget, {{{0, 0}}}));

  Instance capped;
  capped.periods = 2;
  capped.supply = {5, 5};
  capped.agents = {agent1(1, 2, 3)};
  capped.agents[0].speed = SpeedConstraint::fixed_cap(1);
  CHECK_FALSE(feasible_flow(capped, {{{0, 0}}}));
}

TEST_CASE("hall == flow on random unbounded instances") {
  std::mt19937_64 rng(2024);
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Instance inst = gen_random({.seed = seed, .agents = 4, .periods = 4,
                                      .max_supply = 3, .max_demand = 4,
                                      .max_triples = 2});
    std::vector<std::pair<int, int>> ids;
    for (std::size_t i = 0; i < inst.agents.size(); ++i)
      for (std::size_t k = 0; k < inst.agents[i].triples.size(); ++k)
        ids.emplace_back(static_cast<int>(i), static_cast<int>(k));
    for (int trial = 0; trial < 10; ++trial) {
      SatisfactionSet s;
      for (const auto& id : ids)
        if (rng() & 1) s.chosen.push_back(id);
      CHECK(feasible_hall(inst, s) == feasible_flow(inst, s));
    }
  }
}

TEST_CASE("feasibility is monotone under subset") {
  std::mt19937_64 rng(99);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Instance inst = gen_random({.seed = seed, .agents = 4, .periods = 3,
                                      .max_supply = 2, .max_demand = 3,
                                      .speed_kind = RandomSpeedKind::Mixed,
                                      .max_triples = 2});
    std::vector<std::pair<int, int>> ids;
    for (std::size_t i = 0; i < inst.agents.size(); ++i)
      for (std::size_t k = 0; k < inst.agents[i].triples.size(); ++k)
        ids.emplace_back(static_cast<int>(i), static_cast<int>(k));
    SatisfactionSet big;
    for (const auto& id : ids)
      if (rng() & 1) big.chosen.push_back(id);
    if (!feasible_flow(inst, big)) continue;
    SatisfactionSet sub;
    for (const auto& id : big.chosen)
      if (rng() & 1) sub.chosen.push_back(id);
    CHECK(feasible_flow(inst, sub));
  }
}

TEST_CASE("oracle_solve on the empty instance") {
  Instance inst;
  inst.periods = 1;
  inst.supply = {3};
  const Solution sol = oracle_solve(inst);
  CHECK(sol.welfare == 0);
}

TEST_CASE("oracle_solve matches brute-force knapsack") {
  const KnapsackInput k{5, {{6, 4}, {5, 3}, {4, 2}}};
  const Solution sol = oracle_solve(gen_knapsack(k));
  CHECK(sol.welfare == charge::testing::brute_knapsack(k));
  CHECK(sol.welfare == 9);
}

TEST_CASE("oracle_solve on the three-deadline gadget, q=1") {
  const Solution sol = oracle_solve(gen_x3c_multi({1, {{{1, 2, 3}}}}));
  CHECK(sol.welfare == 9);
}

TEST_CASE("oracle witness validates and never charges past the horizon of "
          "its chosen deadlines") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Instance inst = gen_random({.seed = seed, .agents = 4, .periods = 4,
                                      .max_supply = 2, .max_demand = 3,
                                      .speed_kind = RandomSpeedKind::Mixed,
                                      .max_triples = 2});
    const Solution sol = oracle_solve(inst);
    CHECK(check_feasible(inst, sol.allocation).ok);
    CHECK(evaluate_welfare(inst, sol.allocation).welfare == sol.welfare);
    for (std::size_t i = 0; i < inst.agents.size(); ++i) {
      const Period last = inst.agents[i].triples.back().deadline;
      for (Period t = last + 1; t <= inst.periods; ++t)
        CHECK(sol.allocation.amounts[i][static_cast<std::size_t>(t - 1)] == 0);
    }
  }
}

TEST_CASE("oracle welfare equals independent re-enumeration") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Instance inst = gen_random({.seed = seed, .agents = 3, .periods = 3,
                                      .max_supply = 2, .max_demand = 3,
                                      .speed_kind = RandomSpeedKind::Mixed,
                                      .max_triples = 2});
    std::vector<std::pair<int, int>> ids;
    for (std::size_t i = 0; i < inst.agents.size(); ++i)
      for (std::size_t k = 0; k < inst.agents[i].triples.size(); ++k)
        ids.emplace_back(static_cast<int>(i), static_cast<int>(k));
    Value best = 0;
    for (std::uint32_t mask = 0; mask < (1u << ids.size()); ++mask) {
      SatisfactionSet s;
      Value v = 0;
      for (std::size_t b = 0; b < ids.size(); ++b)
        if (mask & (1u << b)) {
          s.chosen.push_back(ids[b]);
          v += inst.agents[static_cast<std::size_t>(ids[b].first)]
                   .triples[static_cast<std::size_t>(ids[b].second)].value;
        }
      if (feasible_flow(inst, s)) best = std::max(best, v);
    }
    CHECK(oracle_solve(inst).welfare == best);
  }
}

TEST_CASE("oracle refuses oversized instances") {
  Instance inst;
  inst.periods = 1;
  inst.supply = {1};
  for (int i = 0; i < 21; ++i) inst.agents.push_back(agent1(1, 1, 1));
  CHECK_THROWS_AS(oracle_solve(inst), GuardError);
  OracleOptions wide;
  wide.max_bits = 21;
  CHECK_NOTHROW(oracle_solve(inst, wide));
}
