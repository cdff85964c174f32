#include "multidesign/design_io.hpp"

#include <algorithm>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <type_traits>

#include "json.hpp"
#include "multidesign/errors.hpp"

namespace multidesign {

namespace {

using nlohmann::json;

std::string vertex_list_text(const std::vector<Vertex>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "]";
}

std::string edge_list_text(const EdgeList& edges) {
  std::string out = "[";
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out += (i ? ", [" : "[") + std::to_string(edges[i].lo) + ", " + std::to_string(edges[i].hi) + "]";
  }
  return out + "]";
}

std::string host_text(const Host& host) {
  return std::visit(
      [](const auto& h) -> std::string {
        using T = std::decay_t<decltype(h)>;
        if constexpr (std::is_same_v<T, Complete>) {
          return "{\"type\": \"complete\", \"n\": " + std::to_string(h.n) + "}";
        } else if constexpr (std::is_same_v<T, CompleteBipartite>) {
          return "{\"type\": \"bipartite\", \"left\": " + vertex_list_text(h.left) +
                 ", \"right\": " + vertex_list_text(h.right) + "}";
        } else {
          return "{\"type\": \"explicit\", \"edges\": " + edge_list_text(h.edges) + "}";
        }
      },
      host.shape);
}

std::string block_json(const Block& b) {
  const auto& v = b.vertices();
  std::ostringstream os;
  if (b.is_hexagon()) {
    os << "{\"type\": \"hexagon\", \"vertices\": [" << v[0] << ", " << v[1] << ", " << v[2] << ", " << v[3] << ", "
       << v[4] << ", " << v[5] << "]}";
  } else {
    os << "{\"type\": \"prism\", \"triangles\": [[" << v[0] << ", " << v[1] << ", " << v[2] << "], [" << v[3] << ", "
       << v[4] << ", " << v[5] << "]]}";
  }
  return os.str();
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing \"") + key + "\"");
  return *it;
}

void only_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; })) {
      fail(where, "unexpected key \"" + it.key() + "\"");
    }
  }
}

Vertex vertex_of(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "vertex label must be an integer, got " + j.dump());
  const auto value = j.get<std::int64_t>();
  if (value < 0 || value > std::numeric_limits<Vertex>::max()) fail(where, "vertex label out of range: " + j.dump());
  return static_cast<Vertex>(value);
}

std::vector<Vertex> vertex_array(const json& j, std::size_t arity, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  if (arity != 0 && j.size() != arity) {
    fail(where, "expected " + std::to_string(arity) + " vertices, got " + std::to_string(j.size()));
  }
  std::vector<Vertex> out;
  for (const json& v : j) out.push_back(vertex_of(v, where));
  return out;
}

Edge edge_of(const json& j, const std::string& where) {
  const auto v = vertex_array(j, 2, where);
  if (v[0] == v[1]) fail(where, "loop edge " + j.dump());
  return Edge(v[0], v[1]);
}

EdgeList edge_array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of edges");
  EdgeList out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(edge_of(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

Host parse_host(const json& j) {
  if (!j.is_object()) fail("host", "expected an object");
  const json& type = field(j, "type", "host");
  if (type == "complete") {
    only_keys(j, {"type", "n"}, "host");
    const json& n = field(j, "n", "host");
    if (!n.is_number_unsigned() || n.get<std::uint64_t>() > std::numeric_limits<std::uint32_t>::max()) {
      fail("host.n", "expected a non-negative integer");
    }
    return Host::complete(n.get<std::uint32_t>());
  }
  if (type == "bipartite") {
    only_keys(j, {"type", "left", "right"}, "host");
    auto left = vertex_array(field(j, "left", "host"), 0, "host.left");
    auto right = vertex_array(field(j, "right", "host"), 0, "host.right");
    try {
      return Host::bipartite(std::move(left), std::move(right));
    } catch (const Error& e) {
      fail("host", e.what());
    }
  }
  if (type == "explicit") {
    only_keys(j, {"type", "edges"}, "host");
    return Host::explicit_edges(edge_array(field(j, "edges", "host"), "host.edges"));
  }
  fail("host.type", "unknown host type " + type.dump());
}

Block parse_block(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  const json& type = field(j, "type", where);
  if (type == "hexagon") {
    only_keys(j, {"type", "vertices"}, where);
    const auto v = vertex_array(field(j, "vertices", where), 6, where + ".vertices");
    return Block::hexagon({v[0], v[1], v[2], v[3], v[4], v[5]});
  }
  if (type == "prism") {
    only_keys(j, {"type", "triangles"}, where);
    const json& tri = field(j, "triangles", where);
    if (!tri.is_array() || tri.size() != 2) fail(where + ".triangles", "expected two triangles");
    const auto a = vertex_array(tri[0], 3, where + ".triangles[0]");
    const auto b = vertex_array(tri[1], 3, where + ".triangles[1]");
    return Block::prism({a[0], a[1], a[2]}, {b[0], b[1], b[2]});
  }
  fail(where + ".type", "unknown block type " + type.dump());
}

}  // namespace

std::string emit_design_json(const Design& d) {
  std::string out = "{\n";
  out += "  \"host\": " + host_text(d.host) + ",\n";
  out += "  \"kind\": \"" + to_string(d.kind) + "\",\n";
  if (d.blocks.empty()) {
    out += "  \"blocks\": [],\n";
  } else {
    out += "  \"blocks\": [\n";
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
      out += "    " + block_json(d.blocks[i]) + (i + 1 < d.blocks.size() ? ",\n" : "\n");
    }
    out += "  ],\n";
  }
  out += "  \"leave\": " + edge_list_text(d.leave) + ",\n";
  out += "  \"padding\": " + edge_list_text(d.padding) + "\n";
  out += "}\n";
  return out;
}

Design parse_design_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("design", "expected an object");
  only_keys(j, {"host", "kind", "blocks", "leave", "padding"}, "design");

  Design d;
  d.host = parse_host(field(j, "host", "design"));
  const json& kind = field(j, "kind", "design");
  if (!kind.is_string()) fail("kind", "expected a string");
  const auto k = parse_design_kind(kind.get<std::string>());
  if (!k) fail("kind", "unknown kind " + kind.dump());
  d.kind = *k;

  const json& blocks = field(j, "blocks", "design");
  if (!blocks.is_array()) fail("blocks", "expected an array");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    d.blocks.push_back(parse_block(blocks[i], "blocks[" + std::to_string(i) + "]"));
  }
  if (j.contains("leave")) d.leave = edge_array(j["leave"], "leave");
  if (j.contains("padding")) d.padding = edge_array(j["padding"], "padding");
  return d;
}

std::string design_text(const Design& d) {
  std::ostringstream os;
  os << to_string(d.kind) << " of " << to_string(d.host) << ": " << d.hexagon_count() << " hexagon(s), "
     << d.prism_count() << " prism(s)\n";
  for (const Block& b : d.blocks) os << "  " << to_string(b) << "\n";
  auto edges = [&](const char* label, const EdgeList& list) {
    if (list.empty()) return;
    os << label << ":";
    for (const Edge& e : list) os << " " << to_string(e);
    os << "\n";
  };
  edges("leave", d.leave);
  edges("padding", d.padding);
  return os.str();
}

}  // namespace multidesign
