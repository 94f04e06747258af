#include "parity/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace parity {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

const json& member(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw FormatError(std::string("missing \"") + key + "\" array");
  }
  const json& v = doc.at(key);
  if (!v.is_array()) throw FormatError(std::string("\"") + key + "\" must be an array");
  return v;
}

std::int64_t as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) throw FormatError(std::string(what) + " must be an integer");
  return v.get<std::int64_t>();
}

std::pair<std::int64_t, std::int64_t> as_pair(const json& v, const char* what) {
  if (!v.is_array() || v.size() != 2) throw FormatError(std::string(what) + " must be a pair");
  return {as_int(v[0], what), as_int(v[1], what)};
}

ordered_json edges_json(const EdgeSet& edges) {
  ordered_json out = ordered_json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

}  // namespace

RawInstance parse_instance(const std::string& text) {
  const json doc = parse_json(text);
  RawInstance raw;
  for (const json& p : member(doc, "points")) {
    const auto [x, y] = as_pair(p, "point");
    raw.points.push_back({x, y});
  }
  for (const json& e : member(doc, "edges")) raw.edges.push_back(as_pair(e, "edge"));
  if (doc.contains("unhappy")) {
    for (const json& r : member(doc, "unhappy")) raw.unhappy.push_back(as_int(r, "unhappy vertex"));
  }
  return raw;
}

Instance load_instance(const std::filesystem::path& file, const ValidationOptions& options) {
  RawInstance raw = parse_instance(read_file(file));
  return validate_instance(raw.points, raw.edges, raw.unhappy, options);
}

std::string instance_to_json(const Instance& inst) {
  ordered_json doc;
  ordered_json pts = ordered_json::array();
  for (const Point& p : inst.graph.points) pts.push_back({p.x, p.y});
  doc["points"] = std::move(pts);
  doc["edges"] = edges_json(inst.graph.edges);
  doc["unhappy"] = inst.unhappy;
  return doc.dump() + "\n";
}

EdgeSet parse_happy_set(const std::string& text) {
  const json doc = parse_json(text);
  std::vector<Edge> edges;
  for (const json& e : member(doc, "edges")) {
    const auto [a, b] = as_pair(e, "edge");
    if (a < 0 || b < 0) throw FormatError("negative vertex index in happy set");
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  return EdgeSet(std::move(edges));
}

std::string happy_set_to_json(const EdgeSet& h) {
  ordered_json doc;
  doc["edges"] = edges_json(h);
  return doc.dump() + "\n";
}

std::vector<Vertex> parse_cycle(const std::string& text) {
  const json doc = parse_json(text);
  std::vector<Vertex> order;
  for (const json& v : member(doc, "cycle")) {
    const std::int64_t x = as_int(v, "cycle vertex");
    if (x < 0) throw FormatError("negative vertex index in cycle");
    order.push_back(static_cast<Vertex>(x));
  }
  return order;
}

std::string cycle_to_json(const std::vector<Vertex>& order) {
  ordered_json doc;
  doc["cycle"] = order;
  return doc.dump() + "\n";
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw FormatError("cannot read " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw FormatError("cannot write " + file.string());
  out << text;
  if (!out) throw FormatError("write failed for " + file.string());
}

std::uint64_t instance_digest(const Instance& inst) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : instance_to_json(inst)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace parity
