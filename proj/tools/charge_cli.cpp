// charge: instance I/O, solver dispatch, generators, benchmarking, online
// simulation, and VCG payments behind one executable.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "charge/dispatch.hpp"
#include "charge/dp_deadline.hpp"
#include "charge/dp_exact.hpp"
#include "charge/errors.hpp"
#include "charge/generators.hpp"
#include "charge/json_io.hpp"
#include "charge/online.hpp"
#include "charge/oracle.hpp"
#include "charge/vcg.hpp"

namespace {

using namespace charge;
using nlohmann::json;

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// JSON goes to --out when given, otherwise to stdout; the human summary
// always goes to stdout (stderr when stdout carries the JSON).
void emit(const json& doc, const std::string& out_path,
          const std::string& summary) {
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw InputError("cannot open output file: " + out_path);
    out << doc.dump(2) << '\n';
    std::cout << summary;
  } else {
    std::cerr << summary;
    std::cout << doc.dump(2) << '\n';
  }
}

json report_to_json(const RunReport& r) {
  return json{{"method", r.method},     {"rule", r.rule},
              {"welfare", r.welfare},   {"wall_ms", r.wall_ms},
              {"memo_cells", r.memo_cells}, {"cell_bound", r.cell_bound},
              {"digest", r.digest}};
}

struct GuardFlags {
  SolveGuards guards;
  void attach(CLI::App* cmd) {
    cmd->add_option("--guard-states", guards.dp_exact_states,
                    "dp-exact state-space guard");
    cmd->add_option("--guard-cells", guards.dp_deadline_cells,
                    "dp-deadline memo-cell guard");
    cmd->add_option("--guard-bits", guards.oracle_bits,
                    "oracle enumeration guard (triple count)");
  }
};

RandomSpeedKind speed_from_name(const std::string& name) {
  if (name == "unbounded") return RandomSpeedKind::Unbounded;
  if (name == "fixed") return RandomSpeedKind::Fixed;
  if (name == "gaps") return RandomSpeedKind::Gaps;
  if (name == "mixed") return RandomSpeedKind::Mixed;
  throw InputError("unknown speed kind: " + name +
                   " (expected unbounded|fixed|gaps|mixed)");
}

// Seeded collection of sorted 3-subsets of {1..3q}; seed 0 yields the
// canonical exact cover {1,2,3},{4,5,6},...
std::vector<std::array<int, 3>> draw_collection(int q, int subsets,
                                                std::uint64_t seed) {
  std::vector<std::array<int, 3>> out;
  if (seed == 0) {
    for (int j = 0; j < q; ++j) out.push_back({3 * j + 1, 3 * j + 2, 3 * j + 3});
    return out;
  }
  std::mt19937_64 rng(seed);
  const int ground = 3 * q;
  std::set<std::array<int, 3>> seen;
  while (static_cast<int>(out.size()) < subsets) {
    std::set<int> pick;
    while (pick.size() < 3)
      pick.insert(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(ground)));
    std::array<int, 3> s{};
    int j = 0;
    for (int e : pick) s[static_cast<std::size_t>(j++)] = e;
    if (seen.insert(s).second) out.push_back(s);
  }
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"exact solvers for deadline-constrained charge scheduling"};
  app.require_subcommand(1);

  // ---- solve ----
  auto* solve = app.add_subcommand("solve", "solve an instance from JSON");
  std::string solve_input, solve_method = "auto", solve_out;
  GuardFlags solve_guards;
  solve->add_option("input", solve_input, "instance file ('-' for stdin)");
  solve->add_option("--method", solve_method,
                    "auto|oracle|dp-exact|dp-deadline");
  solve->add_option("--out", solve_out, "write result JSON here");
  solve_guards.attach(solve);

  // ---- generate ----
  auto* generate = app.add_subcommand("generate", "emit a generated instance");
  std::string gen_family, gen_out, gen_speed = "unbounded";
  std::uint64_t gen_seed = 1;
  int gen_q = 2, gen_subsets = 3, gen_items = 8, gen_agents = 4,
      gen_max_triples = 1;
  Period gen_periods = 3;
  Amount gen_capacity = 20, gen_max_supply = 3, gen_max_demand = 4,
         gen_max_value = 10;
  generate->add_option("--family", gen_family,
                       "knapsack|x3c-gaps|x3c-multi|random")->required();
  generate->add_option("--seed", gen_seed, "generator seed (0 = canonical)");
  generate->add_option("--out", gen_out, "write instance JSON here");
  generate->add_option("--q", gen_q, "x3c ground-set size parameter");
  generate->add_option("--subsets", gen_subsets, "x3c collection size");
  generate->add_option("--items", gen_items, "knapsack item count");
  generate->add_option("--capacity", gen_capacity, "knapsack capacity");
  generate->add_option("--agents", gen_agents, "random: agent count");
  generate->add_option("--periods", gen_periods, "random: period count");
  generate->add_option("--max-supply", gen_max_supply, "random: supply cap");
  generate->add_option("--max-demand", gen_max_demand, "random: demand cap");
  generate->add_option("--max-value", gen_max_value, "random: value cap");
  generate->add_option("--speed", gen_speed, "random: unbounded|fixed|gaps|mixed");
  generate->add_option("--max-triples", gen_max_triples,
                       "random: triples per agent cap");

  // ---- bench ----
  auto* bench = app.add_subcommand("bench", "sweep a family and report rows");
  std::string bench_family = "knapsack", bench_method = "auto", bench_out;
  std::vector<int> bench_sizes = {5, 10, 15};
  int bench_seeds = 3;
  GuardFlags bench_guards;
  bench->add_option("--family", bench_family,
                    "knapsack|x3c-gaps|x3c-multi|random");
  bench->add_option("--sizes", bench_sizes, "size sweep (items / q / agents)");
  bench->add_option("--seeds", bench_seeds, "seeds per size");
  bench->add_option("--method", bench_method, "auto|oracle|dp-exact|dp-deadline");
  bench->add_option("--out", bench_out, "write rows JSON here");
  bench_guards.attach(bench);

  // ---- online ----
  auto* online = app.add_subcommand("online", "simulate online policies");
  std::string online_policy = "greedy", online_out;
  int online_seeds = 20, online_agents = 4;
  Period online_periods = 4;
  online->add_option("--policy", online_policy, "greedy|replay");
  online->add_option("--seeds", online_seeds, "number of seeded instances");
  online->add_option("--agents", online_agents, "agents per instance");
  online->add_option("--periods", online_periods, "periods per instance");
  online->add_option("--out", online_out, "write ratio rows here");

  // ---- vcg ----
  auto* vcg = app.add_subcommand("vcg", "allocation plus VCG payments");
  std::string vcg_input, vcg_method = "dp-exact", vcg_out;
  vcg->add_option("input", vcg_input, "instance file ('-' for stdin)");
  vcg->add_option("--method", vcg_method, "dp-exact|dp-deadline");
  vcg->add_option("--out", vcg_out, "write outcome JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (solve->parsed()) {
    const Instance inst = parse_instance(slurp(solve_input));
    RunReport report;
    const Solution sol =
        dispatch(inst, method_from_name(solve_method), solve_guards.guards,
                 &report);
    json doc = solution_to_json(inst, sol);
    doc["report"] = report_to_json(report);
    std::ostringstream summary;
    summary << "method " << report.method << " (" << report.rule << "), welfare "
            << sol.welfare << ", " << report.wall_ms << " ms, "
            << report.memo_cells << " memo cells, digest " << report.digest
            << "\n";
    emit(doc, solve_out, summary.str());
    return 0;
  }

  if (generate->parsed()) {
    Instance inst;
    if (gen_family == "knapsack") {
      KnapsackInput k;
      k.capacity = gen_capacity;
      std::mt19937_64 rng(gen_seed);
      for (int i = 0; i < gen_items; ++i)
        k.items.emplace_back(static_cast<Value>(1 + rng() % 30),
                             1 + static_cast<Amount>(rng() % 15));
      inst = gen_knapsack(k);
    } else if (gen_family == "x3c-gaps" || gen_family == "x3c-multi") {
      const X3CInput x{gen_q, draw_collection(gen_q, gen_subsets, gen_seed)};
      inst = gen_family == "x3c-gaps" ? gen_x3c_gaps(x) : gen_x3c_multi(x);
    } else if (gen_family == "random") {
      inst = gen_random({.seed = gen_seed,
                         .agents = gen_agents,
                         .periods = gen_periods,
                         .max_supply = gen_max_supply,
                         .max_demand = gen_max_demand,
                         .max_value = gen_max_value,
                         .speed_kind = speed_from_name(gen_speed),
                         .max_triples = gen_max_triples});
    } else {
      throw InputError("unknown family: " + gen_family);
    }
    std::ostringstream summary;
    summary << gen_family << ": " << inst.agents.size() << " agents, "
            << inst.periods << " periods, digest " << instance_digest(inst)
            << "\n";
    emit(instance_to_json(inst), gen_out, summary.str());
    return 0;
  }

  if (bench->parsed()) {
    const Method method = method_from_name(bench_method);
    json rows = json::array();
    std::cout << "family     size seed method       wall_ms   memo_cells  bound ok\n";
    for (int size : bench_sizes) {
      for (int s = 1; s <= bench_seeds; ++s) {
        const std::uint64_t seed = static_cast<std::uint64_t>(s);
        Instance inst;
        if (bench_family == "knapsack") {
          KnapsackInput k;
          std::mt19937_64 rng(seed);
          k.capacity = 1 + static_cast<Amount>(rng() % 40);
          for (int i = 0; i < size; ++i)
            k.items.emplace_back(static_cast<Value>(1 + rng() % 30),
                                 1 + static_cast<Amount>(rng() % 15));
          inst = gen_knapsack(k);
        } else if (bench_family == "x3c-gaps" || bench_family == "x3c-multi") {
          const X3CInput x{size, draw_collection(size, size + 1,
                                                 s == 1 ? 0 : seed)};
          inst = bench_family == "x3c-gaps" ? gen_x3c_gaps(x) : gen_x3c_multi(x);
        } else if (bench_family == "random") {
          inst = gen_random({.seed = seed, .agents = size, .periods = 3,
                             .max_supply = 3, .max_demand = 4});
        } else {
          throw InputError("unknown family: " + bench_family);
        }

        RunReport report;
        dispatch(inst, method, bench_guards.guards, &report);
        const bool within =
            report.cell_bound == 0 || report.memo_cells <= report.cell_bound;
        if (!within)
          throw InternalError("memo accounting exceeded the stated bound");
        std::printf("%-10s %4d %4d %-12s %9.3f %12llu %6s %s\n",
                    bench_family.c_str(), size, s, report.method.c_str(),
                    report.wall_ms,
                    static_cast<unsigned long long>(report.memo_cells),
                    report.cell_bound ? std::to_string(report.cell_bound).c_str()
                                      : "n/a",
                    within ? "yes" : "NO");
        json row = report_to_json(report);
        row["family"] = bench_family;
        row["size"] = size;
        row["seed"] = s;
        rows.push_back(row);
      }
    }
    if (!bench_out.empty()) emit(rows, bench_out, "");
    return 0;
  }

  if (online->parsed()) {
    if (online_policy != "greedy" && online_policy != "replay")
      throw InputError("unknown policy: " + online_policy);
    json rows = json::array();
    double min_ratio = 1.0, sum_ratio = 0.0;
    int counted = 0;
    std::cout << "seed  online  offline  ratio\n";
    for (int s = 1; s <= online_seeds; ++s) {
      const std::uint64_t seed = static_cast<std::uint64_t>(s);
      const Instance inst = gen_random({.seed = seed, .agents = online_agents,
                                        .periods = online_periods,
                                        .max_supply = 3, .max_demand = 4});
      const Solution offline = dp_deadline_solve(inst);
      if (offline.welfare == 0) continue;
      OnlineInstance oi;
      oi.base = inst;
      std::mt19937_64 rng(seed);
      for (const Agent& ag : inst.agents)
        oi.releases.push_back(1 + static_cast<Period>(
            rng() % static_cast<std::uint64_t>(ag.triples[0].deadline)));
      if (online_policy == "replay") oi.releases.assign(inst.agents.size(), 1);

      const Policy policy = online_policy == "greedy"
                                ? Policy(greedy_policy)
                                : make_replay_policy(offline.allocation);
      const Solution got = simulate(oi, policy);
      const double ratio = static_cast<double>(got.welfare) /
                           static_cast<double>(offline.welfare);
      min_ratio = std::min(min_ratio, ratio);
      sum_ratio += ratio;
      ++counted;
      std::printf("%4d %7g %8g %6.3f\n", s, got.welfare, offline.welfare, ratio);
      rows.push_back(json{{"seed", s},
                          {"online_welfare", got.welfare},
                          {"offline_welfare", offline.welfare},
                          {"ratio", ratio}});
    }
    if (counted == 0) throw InputError("no instance had a positive optimum");
    std::printf("policy %s: %d runs, min ratio %.3f, mean ratio %.3f\n",
                online_policy.c_str(), counted, min_ratio,
                sum_ratio / counted);
    if (!online_out.empty()) emit(rows, online_out, "");
    return 0;
  }

  if (vcg->parsed()) {
    const Instance inst = parse_instance(slurp(vcg_input));
    ExactSolver solver;
    if (vcg_method == "dp-exact")
      solver = [](const Instance& i) { return dp_exact_solve(i); };
    else if (vcg_method == "dp-deadline")
      solver = [](const Instance& i) { return dp_deadline_solve(i); };
    else
      throw InputError("vcg method must be dp-exact or dp-deadline");
    const VcgOutcome out = vcg_solve(inst, solver);

    json doc = solution_to_json(inst, out.solution);
    doc["payments"] = out.payments;
    std::ostringstream summary;
    summary << "welfare " << out.solution.welfare << "\n";
    summary << "agent  payment  realized\n";
    for (std::size_t i = 0; i < inst.agents.size(); ++i) {
      Value realized = 0;
      for (std::size_t k = 0; k < inst.agents[i].triples.size(); ++k)
        if (out.solution.satisfied[i][k])
          realized += inst.agents[i].triples[k].value;
      summary << "  " << i + 1 << "    " << out.payments[i] << "    "
              << realized << "\n";
    }
    emit(doc, vcg_out, summary.str());
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const GuardError& e) {
    std::cerr << "guard refusal: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
