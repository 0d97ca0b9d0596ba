#ifndef CHARGE_DISPATCH_HPP
#define CHARGE_DISPATCH_HPP

#include <cstdint>
#include <string>

#include "charge/model.hpp"

namespace charge {

enum class Method { Auto, Oracle, DpExact, DpDeadline };

Method method_from_name(const std::string& name);
std::string method_name(Method m);

struct SolveGuards {
  std::uint64_t dp_exact_states = 10'000'000;
  std::uint64_t dp_deadline_cells = 100'000'000;
  int oracle_bits = 20;
};

struct RunReport {
  std::string method;        // solver that actually ran
  std::string rule;          // why it was picked (auto) or "requested"
  Value welfare = 0;
  double wall_ms = 0;
  std::uint64_t memo_cells = 0;   // dp-deadline cells / dp-exact states /
                                  // oracle sets enumerated
  std::uint64_t cell_bound = 0;   // structural bound for the method, 0 if n/a
  std::string digest;             // instance content hash
};

// Picks a solver per the variant classification: single-deadline,
// unbounded-speed instances go to dp-deadline, everything else to
// dp-exact; when guards refuse and the oracle's guard admits the
// instance, falls back to the oracle. Explicit methods run as asked and
// let guard refusals propagate.
Solution dispatch(const Instance& inst, Method method, const SolveGuards& guards,
                  RunReport* report = nullptr);

}  // namespace charge

#endif  // CHARGE_DISPATCH_HPP
