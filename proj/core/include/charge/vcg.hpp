#ifndef CHARGE_VCG_HPP
#define CHARGE_VCG_HPP

#include <functional>
#include <vector>

#include "charge/model.hpp"

namespace charge {

struct VcgOutcome {
  Solution solution;            // efficient allocation for the full instance
  std::vector<Value> payments;  // per agent; the externality each imposes
};

// Must return an exact optimum for every instance it is given; an
// approximate solver here would break truthfulness.
using ExactSolver = std::function<Solution(const Instance&)>;

// Runs the solver on the full instance and once more per agent with that
// agent removed; charges payment_i = W_without_i - (W - v_i).
VcgOutcome vcg_solve(const Instance& inst, const ExactSolver& solver);

}  // namespace charge

#endif  // CHARGE_VCG_HPP
