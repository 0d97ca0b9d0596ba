#include "charge/dispatch.hpp"

#include <chrono>

#include "charge/dp_deadline.hpp"
#include "charge/dp_exact.hpp"
#include "charge/errors.hpp"
#include "charge/json_io.hpp"
#include "charge/oracle.hpp"

namespace charge {

Method method_from_name(const std::string& name) {
  if (name == "auto") return Method::Auto;
  if (name == "oracle") return Method::Oracle;
  if (name == "dp-exact") return Method::DpExact;
  if (name == "dp-deadline") return Method::DpDeadline;
  throw InputError("unknown method '" + name +
                   "' (expected auto|oracle|dp-exact|dp-deadline)");
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Auto: return "auto";
    case Method::Oracle: return "oracle";
    case Method::DpExact: return "dp-exact";
    case Method::DpDeadline: return "dp-deadline";
  }
  return "?";
}

namespace {

Solution run_method(const Instance& inst, Method m, const SolveGuards& guards,
                    RunReport* report) {
  switch (m) {
    case Method::DpDeadline: {
      DpDeadlineStats stats;
      Solution sol = dp_deadline_solve(inst, {guards.dp_deadline_cells}, &stats);
      if (report) {
        report->memo_cells = stats.memo_cells;
        report->cell_bound = stats.cell_bound;
      }
      return sol;
    }
    case Method::DpExact: {
      DpExactStats stats;
      Solution sol = dp_exact_solve(inst, {guards.dp_exact_states}, &stats);
      if (report) {
        report->memo_cells = stats.memo_states;
        report->cell_bound = stats.state_space;
      }
      return sol;
    }
    case Method::Oracle: {
      OracleStats stats;
      Solution sol = oracle_solve(inst, {guards.oracle_bits}, &stats);
      if (report) report->memo_cells = stats.sets_enumerated;
      return sol;
    }
    case Method::Auto:
      break;
  }
  throw InternalError("run_method: unreachable");
}

}  // namespace

Solution dispatch(const Instance& inst, Method method, const SolveGuards& guards,
                  RunReport* report) {
  const auto start = std::chrono::steady_clock::now();
  Solution sol;
  Method chosen = method;
  std::string rule = "requested";

  if (method == Method::Auto) {
    const VariantTag tag = classify(inst);
    if (tag.single_deadline && tag.speed == SpeedKind::Unbounded) {
      chosen = Method::DpDeadline;
      rule = "single-deadline, unbounded speed";
    } else {
      chosen = Method::DpExact;
      rule = tag.single_deadline ? "speed-constrained variant"
                                 : "multiple deadlines";
    }
    try {
      sol = run_method(inst, chosen, guards, report);
    } catch (const GuardError& primary) {
      try {
        chosen = Method::Oracle;
        rule = "guard refusal, oracle fallback";
        sol = run_method(inst, chosen, guards, report);
      } catch (const GuardError& fallback) {
        throw GuardError(std::string("all methods refused: [") + primary.what() +
                         "] [" + fallback.what() + "]");
      }
    }
  } else {
    sol = run_method(inst, chosen, guards, report);
  }

  if (report) {
    report->method = method_name(chosen);
    report->rule = rule;
    report->welfare = sol.welfare;
    report->digest = instance_digest(inst);
    report->wall_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  }
  return sol;
}

}  // namespace charge
