#include "charge/vcg.hpp"

#include "charge/errors.hpp"

namespace charge {

VcgOutcome vcg_solve(const Instance& inst, const ExactSolver& solver) {
  VcgOutcome out;
  out.solution = solver(inst);
  out.payments.assign(inst.agents.size(), 0);

  for (std::size_t i = 0; i < inst.agents.size(); ++i) {
    // Realized value of agent i in the efficient allocation.
    Value realized = 0;
    for (std::size_t k = 0; k < inst.agents[i].triples.size(); ++k)
      if (out.solution.satisfied[i][k]) realized += inst.agents[i].triples[k].value;

    Instance without = inst;
    without.agents.erase(without.agents.begin() + static_cast<std::ptrdiff_t>(i));
    const Value welfare_without = solver(without).welfare;

    const Value others_with = out.solution.welfare - realized;
    out.payments[i] = welfare_without - others_with;
    if (out.payments[i] < 0)
      throw InternalError("vcg_solve: negative payment for agent " +
                          std::to_string(i + 1) +
                          "; the supplied solver is not exact");
  }
  return out;
}

}  // namespace charge
