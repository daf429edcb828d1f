#include "cutcover/instance_io.hpp"

#include <sstream>

#include "cutcover/errors.hpp"

namespace cutcover {

using nlohmann::json;

json rational_to_json(const Rational& r) { return format_rational(r); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("expected a rational string or an integer, got " + j.dump());
}

namespace {

std::size_t vertex_from_json(const json& j) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw ParseError("expected a vertex id, got " + j.dump());
  return j.get<std::size_t>();
}

const json& field(const json& j, const char* name) {
  if (!j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

const json& triple(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 3) throw ParseError(std::string(what) + " must be [a, b, value], got " + j.dump());
  return j;
}

}  // namespace

json instance_to_json(const Instance& inst) {
  json edges = json::array();
  for (const auto& e : inst.graph().edges()) edges.push_back(json::array({e.u, e.v, rational_to_json(e.cap)}));
  json links = json::array();
  for (const auto& l : inst.links()) links.push_back(json::array({l.a, l.b, rational_to_json(l.cost)}));
  json out = json::object();
  out["n"] = inst.n();
  out["edges"] = std::move(edges);
  out["lambda"] = rational_to_json(inst.lambda());
  out["links"] = std::move(links);
  return out;
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  const json& jn = field(j, "n");
  if (!jn.is_number_integer() || jn.get<std::int64_t>() < 0) throw ParseError("'n' must be a non-negative integer");
  const auto n = jn.get<std::size_t>();

  std::vector<Edge> edges;
  for (const auto& e : field(j, "edges")) {
    triple(e, "edge");
    edges.push_back(Edge{vertex_from_json(e[0]), vertex_from_json(e[1]), rational_from_json(e[2])});
  }
  std::vector<Link> links;
  for (const auto& l : field(j, "links")) {
    triple(l, "link");
    links.push_back(Link{vertex_from_json(l[0]), vertex_from_json(l[1]), rational_from_json(l[2]), links.size()});
  }
  const Rational lambda = rational_from_json(field(j, "lambda"));
  try {
    return Instance(CapGraph(n, std::move(edges)), lambda, std::move(links));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_instance(const Instance& inst) { return instance_to_json(inst).dump(); }

Instance parse_instance(std::string_view text) {
  try {
    return instance_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

std::vector<Instance> read_instances(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::vector<Instance> out;
  try {
    const json whole = json::parse(text);
    if (whole.is_array()) {
      for (const auto& item : whole) out.push_back(instance_from_json(item));
    } else {
      out.push_back(instance_from_json(whole));
    }
    return out;
  } catch (const json::parse_error&) {
    // fall through to JSON lines
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_instance(line));
  }
  return out;
}

}  // namespace cutcover
