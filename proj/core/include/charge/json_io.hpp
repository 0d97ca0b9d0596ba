#ifndef CHARGE_JSON_IO_HPP
#define CHARGE_JSON_IO_HPP

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "charge/model.hpp"

namespace charge {

// Instance schema:
//   {"periods": int, "supply": [int],
//    "agents": [{"speed": "unbounded" | {"fixed": int} | {"gaps": [bool]},
//                "triples": [{"value": number, "deadline": int,
//                             "demand": int}]}]}
nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

// Parses and fully validates; throws InputError with a field-precise
// message on any schema or invariant violation.
Instance parse_instance(const std::string& text);
std::string emit_instance(const Instance& inst);

nlohmann::json solution_to_json(const Instance& inst, const Solution& sol);

// FNV-1a over the canonical JSON serialization; used to tag run reports.
std::string instance_digest(const Instance& inst);

}  // namespace charge

#endif  // CHARGE_JSON_IO_HPP
