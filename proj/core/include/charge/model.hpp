#ifndef CHARGE_MODEL_HPP
#define CHARGE_MODEL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace charge {

using Amount = std::int64_t;  // supply, demand, allocated charge (integers)
using Value = double;         // agent values; welfare sums

// Periods are 1-based, matching deadlines d in 1..|T|. Per-period vectors
// are stored 0-indexed (entry t-1 holds period t).
using Period = int;

struct SpeedConstraint {
  enum class Kind { Unbounded, Fixed, Gaps };

  Kind kind = Kind::Unbounded;
  Amount fixed = 0;                  // cap per period, Kind::Fixed only
  std::vector<bool> available;       // per period, Kind::Gaps only

  static SpeedConstraint unbounded() { return {}; }
  static SpeedConstraint fixed_cap(Amount s) {
    return {Kind::Fixed, s, {}};
  }
  static SpeedConstraint gaps(std::vector<bool> avail) {
    return {Kind::Gaps, 0, std::move(avail)};
  }

  // Cap on a single period's charge, with `ceiling` standing in for
  // "unlimited" (callers pass residual supply or remaining demand; no
  // infinities in arithmetic).
  Amount cap_at(Period t, Amount ceiling) const;

  bool operator==(const SpeedConstraint&) const = default;
};

struct Triple {
  Value value = 0;     // v_{i,k}, granted iff cumulative charge at the
  Period deadline = 1; // deadline d_{i,k} reaches the
  Amount demand = 0;   // cumulative threshold w_{i,k}

  bool operator==(const Triple&) const = default;
};

struct Agent {
  SpeedConstraint speed;
  std::vector<Triple> triples;  // deadlines strictly increasing,
                                // demands nondecreasing (cumulative)

  bool operator==(const Agent&) const = default;
};

struct Instance {
  Period periods = 0;
  std::vector<Amount> supply;   // m_t, one per period
  std::vector<Agent> agents;

  bool operator==(const Instance&) const = default;
};

// Per-agent, per-period charge amounts a_i(t).
struct Allocation {
  std::vector<std::vector<Amount>> amounts;  // [agent][period-1]

  static Allocation zero(const Instance& inst);

  bool operator==(const Allocation&) const = default;
};

struct Solution {
  Allocation allocation;
  Value welfare = 0;
  std::vector<std::vector<bool>> satisfied;  // [agent][triple]
};

enum class SpeedKind { Unbounded, Fixed, Gaps };

struct VariantTag {
  SpeedKind speed = SpeedKind::Unbounded;  // gaps > fixed > unbounded
  bool single_deadline = true;
  Amount max_demand = 0;
  Amount max_supply = 0;
  Period periods = 0;
};

struct Feasibility {
  bool ok = true;
  std::string violation;  // first violation found, empty when ok
};

// Validates all model invariants; returns a description of the first
// violation, or nullopt when the instance is well-formed.
std::optional<std::string> validate_instance(const Instance& inst);

// ā_i(t): total charge to `agent` up to and including period t.
Amount cumulative_alloc(const Allocation& alloc, int agent, Period t);

// Marks each triple satisfied iff its cumulative threshold is met by its
// deadline and sums the satisfied values. Does not check feasibility.
Solution evaluate_welfare(const Instance& inst, const Allocation& alloc);

// Checks the supply constraint at every period and every agent's speed cap.
Feasibility check_feasible(const Instance& inst, const Allocation& alloc);

VariantTag classify(const Instance& inst);

}  // namespace charge

#endif  // CHARGE_MODEL_HPP
