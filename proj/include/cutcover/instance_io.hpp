#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cutcover/graph.hpp"

namespace cutcover {

// Instance file format:
//   { "n": 4,
//     "edges":  [[0, 1, "1/1"], ...],
//     "lambda": "3/1",
//     "links":  [[0, 2, "5/2"], ...] }
// Rationals are "p/q" strings; bare integers ("3" or 3) are accepted on input.

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json instance_to_json(const Instance& inst);
/// Throws ParseError on a malformed document or an invalid instance.
Instance instance_from_json(const nlohmann::json& j);

/// One-line JSON.
std::string serialize_instance(const Instance& inst);
Instance parse_instance(std::string_view text);

/// Reads a single instance object, a JSON array of instances, or JSON lines.
std::vector<Instance> read_instances(std::istream& in);

}  // namespace cutcover
