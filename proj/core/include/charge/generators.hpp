#ifndef CHARGE_GENERATORS_HPP
#define CHARGE_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "charge/model.hpp"

namespace charge {

// Exact-cover-by-3-sets input: ground set {1..3q} and a collection of
// 3-element subsets, each listed in increasing order.
struct X3CInput {
  int q = 1;
  std::vector<std::array<int, 3>> collection;
};

struct KnapsackInput {
  Amount capacity = 1;
  std::vector<std::pair<Value, Amount>> items;  // (value, weight)
};

enum class RandomSpeedKind { Unbounded, Fixed, Gaps, Mixed };

struct RandomParams {
  std::uint64_t seed = 1;
  int agents = 3;
  Period periods = 3;
  Amount max_supply = 3;
  Amount max_demand = 4;
  Amount max_value = 10;   // values drawn as integers for exact arithmetic
  RandomSpeedKind speed_kind = RandomSpeedKind::Unbounded;
  int max_triples = 1;
};

// One period of capacity W, one unbounded agent per item; the scheduling
// optimum equals the knapsack optimum.
Instance gen_knapsack(const KnapsackInput& k);

// 3q unit-supply periods; per subset an agent with demand 3 at the
// horizon who can only charge in its three slots. Optimum q iff an exact
// cover exists.
Instance gen_x3c_gaps(const X3CInput& x);

// 3q unit-supply periods; per subset {x1,x2,x3} an unbounded agent with
// cumulative triples (3q-x1+1, x1, 1), (3q-x2+2, x2, 2), (3q-x3+3, x3, 3).
// Optimum 9q^2/2 + 9q/2 iff an exact cover exists.
Instance gen_x3c_multi(const X3CInput& x);

// Deterministic seeded random instances satisfying all model invariants.
Instance gen_random(const RandomParams& p);

}  // namespace charge

#endif  // CHARGE_GENERATORS_HPP
