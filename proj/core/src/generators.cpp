#include "charge/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "charge/errors.hpp"

namespace charge {

namespace {

void validate_x3c(const X3CInput& x, bool require_sorted) {
  if (x.q < 1) throw InputError("x3c: q must be positive");
  const int hi = 3 * x.q;
  for (const auto& c : x.collection) {
    if (c[0] < 1 || c[2] > hi || c[0] == c[1] || c[1] == c[2] || c[0] == c[2] ||
        c[1] < 1 || c[1] > hi || c[0] > hi || c[2] < 1)
      throw InputError("x3c: subset elements must be 3 distinct values in 1.." +
                       std::to_string(hi));
    if (require_sorted && !(c[0] < c[1] && c[1] < c[2]))
      throw InputError("x3c: subset elements must be listed in increasing order");
  }
}

}  // namespace

Instance gen_knapsack(const KnapsackInput& k) {
  if (k.capacity < 1) throw InputError("knapsack: capacity must be positive");
  Instance inst;
  inst.periods = 1;
  inst.supply = {k.capacity};
  for (const auto& [v, w] : k.items) {
    if (w < 1) throw InputError("knapsack: item weights must be positive");
    Agent ag;
    ag.triples.push_back({v, 1, w});
    inst.agents.push_back(std::move(ag));
  }
  return inst;
}

Instance gen_x3c_gaps(const X3CInput& x) {
  validate_x3c(x, /*require_sorted=*/false);
  const Period T = 3 * x.q;
  Instance inst;
  inst.periods = T;
  inst.supply.assign(static_cast<std::size_t>(T), 1);
  for (const auto& c : x.collection) {
    std::vector<bool> avail(static_cast<std::size_t>(T), false);
    for (int e : c) avail[static_cast<std::size_t>(e - 1)] = true;
    Agent ag;
    ag.speed = SpeedConstraint::gaps(std::move(avail));
    ag.triples.push_back({1, T, 3});
    inst.agents.push_back(std::move(ag));
  }
  return inst;
}

Instance gen_x3c_multi(const X3CInput& x) {
  validate_x3c(x, /*require_sorted=*/true);
  const Period T = 3 * x.q;
  Instance inst;
  inst.periods = T;
  inst.supply.assign(static_cast<std::size_t>(T), 1);
  for (const auto& c : x.collection) {
    Agent ag;
    for (int k = 0; k < 3; ++k)
      ag.triples.push_back({static_cast<Value>(T - c[static_cast<std::size_t>(k)] + k + 1),
                            c[static_cast<std::size_t>(k)], k + 1});
    inst.agents.push_back(std::move(ag));
  }
  return inst;
}

Instance gen_random(const RandomParams& p) {
  if (p.agents < 0 || p.periods < 1 || p.max_supply < 0 || p.max_demand < 0 ||
      p.max_value < 0 || p.max_triples < 1)
    throw InputError("gen_random: bounds must be positive");
  std::mt19937_64 rng(p.seed);
  auto draw = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };

  Instance inst;
  inst.periods = p.periods;
  inst.supply.resize(static_cast<std::size_t>(p.periods));
  for (auto& m : inst.supply) m = draw(0, p.max_supply);

  for (int i = 0; i < p.agents; ++i) {
    Agent ag;
    RandomSpeedKind kind = p.speed_kind;
    if (kind == RandomSpeedKind::Mixed)
      kind = static_cast<RandomSpeedKind>(draw(0, 2));
    switch (kind) {
      case RandomSpeedKind::Unbounded:
        break;
      case RandomSpeedKind::Fixed:
        ag.speed = SpeedConstraint::fixed_cap(draw(1, std::max<Amount>(1, p.max_demand)));
        break;
      case RandomSpeedKind::Gaps: {
        std::vector<bool> avail(static_cast<std::size_t>(p.periods));
        for (std::size_t t = 0; t < avail.size(); ++t) avail[t] = draw(0, 1) == 1;
        ag.speed = SpeedConstraint::gaps(std::move(avail));
        break;
      }
      case RandomSpeedKind::Mixed:
        break;
    }

    const int k = static_cast<int>(draw(1, std::min<std::int64_t>(p.max_triples, p.periods)));
    std::set<Period> deadlines;
    while (static_cast<int>(deadlines.size()) < k)
      deadlines.insert(static_cast<Period>(draw(1, p.periods)));
    std::vector<Amount> demands(static_cast<std::size_t>(k));
    for (auto& w : demands) w = draw(0, p.max_demand);
    std::sort(demands.begin(), demands.end());  // cumulative by construction
    std::size_t j = 0;
    for (Period d : deadlines) {
      ag.triples.push_back({static_cast<Value>(draw(0, p.max_value)), d, demands[j]});
      ++j;
    }
    inst.agents.push_back(std::move(ag));
  }
  return inst;
}

}  // namespace charge
