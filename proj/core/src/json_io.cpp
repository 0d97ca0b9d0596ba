#include "charge/json_io.hpp"

#include <cstdint>

#include <nlohmann/json.hpp>

#include "charge/errors.hpp"

namespace charge {

using nlohmann::json;

namespace {

std::int64_t require_int(const json& j, const std::string& field) {
  if (!j.is_number_integer())
    throw InputError("field '" + field + "' must be an integer");
  return j.get<std::int64_t>();
}

const json& require_field(const json& j, const std::string& field,
                          const std::string& where) {
  auto it = j.find(field);
  if (it == j.end())
    throw InputError(where + ": missing field '" + field + "'");
  return *it;
}

}  // namespace

json instance_to_json(const Instance& inst) {
  json agents = json::array();
  for (const Agent& ag : inst.agents) {
    json speed;
    switch (ag.speed.kind) {
      case SpeedConstraint::Kind::Unbounded:
        speed = "unbounded";
        break;
      case SpeedConstraint::Kind::Fixed:
        speed = json{{"fixed", ag.speed.fixed}};
        break;
      case SpeedConstraint::Kind::Gaps:
        speed = json{{"gaps", ag.speed.available}};
        break;
    }
    json triples = json::array();
    for (const Triple& tr : ag.triples)
      triples.push_back({{"value", tr.value},
                         {"deadline", tr.deadline},
                         {"demand", tr.demand}});
    agents.push_back({{"speed", speed}, {"triples", triples}});
  }
  return json{{"periods", inst.periods}, {"supply", inst.supply},
              {"agents", agents}};
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw InputError("instance document must be an object");
  Instance inst;
  inst.periods =
      static_cast<Period>(require_int(require_field(j, "periods", "instance"), "periods"));

  const json& supply = require_field(j, "supply", "instance");
  if (!supply.is_array()) throw InputError("field 'supply' must be an array");
  for (const json& m : supply) inst.supply.push_back(require_int(m, "supply"));

  const json& agents = require_field(j, "agents", "instance");
  if (!agents.is_array()) throw InputError("field 'agents' must be an array");
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const std::string who = "agent " + std::to_string(i + 1);
    const json& ja = agents[i];
    Agent ag;
    const json& speed = require_field(ja, "speed", who);
    if (speed.is_string() && speed.get<std::string>() == "unbounded") {
      ag.speed = SpeedConstraint::unbounded();
    } else if (speed.is_object() && speed.contains("fixed")) {
      ag.speed = SpeedConstraint::fixed_cap(require_int(speed["fixed"], who + ".speed.fixed"));
    } else if (speed.is_object() && speed.contains("gaps")) {
      const json& gaps = speed["gaps"];
      if (!gaps.is_array())
        throw InputError(who + ": 'gaps' must be an array of booleans");
      std::vector<bool> avail;
      for (const json& g : gaps) {
        if (!g.is_boolean())
          throw InputError(who + ": 'gaps' must be an array of booleans");
        avail.push_back(g.get<bool>());
      }
      ag.speed = SpeedConstraint::gaps(std::move(avail));
    } else {
      throw InputError(who + ": 'speed' must be \"unbounded\", {\"fixed\": int}"
                       " or {\"gaps\": [bool]}");
    }
    const json& triples = require_field(ja, "triples", who);
    if (!triples.is_array() || triples.empty())
      throw InputError(who + ": 'triples' must be a nonempty array");
    for (std::size_t k = 0; k < triples.size(); ++k) {
      const std::string where = who + " triple " + std::to_string(k + 1);
      const json& jt = triples[k];
      Triple tr;
      const json& value = require_field(jt, "value", where);
      if (!value.is_number()) throw InputError(where + ": 'value' must be a number");
      tr.value = value.get<double>();
      tr.deadline = static_cast<Period>(
          require_int(require_field(jt, "deadline", where), where + ".deadline"));
      tr.demand = require_int(require_field(jt, "demand", where), where + ".demand");
      ag.triples.push_back(tr);
    }
    inst.agents.push_back(std::move(ag));
  }

  if (auto err = validate_instance(inst)) throw InputError(*err);
  return inst;
}

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("instance is not valid JSON: ") + e.what());
  }
  return instance_from_json(j);
}

std::string emit_instance(const Instance& inst) {
  return instance_to_json(inst).dump(2);
}

json solution_to_json(const Instance& inst, const Solution& sol) {
  json satisfied = json::array();
  for (const auto& row : sol.satisfied) satisfied.push_back(row);
  json amounts = json::array();
  for (const auto& row : sol.allocation.amounts) amounts.push_back(row);
  (void)inst;
  return json{{"welfare", sol.welfare}, {"allocation", amounts},
              {"satisfied", satisfied}};
}

std::string instance_digest(const Instance& inst) {
  const std::string canon = instance_to_json(inst).dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace charge
