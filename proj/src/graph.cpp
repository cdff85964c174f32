#include "multidesign/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "multidesign/errors.hpp"

namespace multidesign {

Edge::Edge(Vertex a, Vertex b) : lo(std::min(a, b)), hi(std::max(a, b)) {
  if (a == b) {
    throw InvalidEdge("loop edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
  }
}

Edge Edge::from_index(std::size_t index) {
  auto hi = static_cast<std::size_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(index))) / 2.0);
  while (hi * (hi - 1) / 2 > index) --hi;
  while ((hi + 1) * hi / 2 <= index) ++hi;
  const std::size_t lo = index - hi * (hi - 1) / 2;
  return Edge(static_cast<Vertex>(lo), static_cast<Vertex>(hi));
}

std::string to_string(const Edge& e) {
  return "{" + std::to_string(e.lo) + "," + std::to_string(e.hi) + "}";
}

Host Host::bipartite(std::vector<Vertex> left, std::vector<Vertex> right) {
  std::vector<Vertex> all = left;
  all.insert(all.end(), right.begin(), right.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw InfeasibleParameters("bipartite sides must be disjoint sets of distinct vertices");
  }
  return Host{CompleteBipartite{std::move(left), std::move(right)}};
}

Host Host::explicit_edges(EdgeList edges) {
  std::sort(edges.begin(), edges.end());
  return Host{Explicit{std::move(edges)}};
}

std::vector<Vertex> Host::vertices() const {
  std::vector<Vertex> out;
  if (const auto* c = std::get_if<Complete>(&shape)) {
    out.resize(c->n);
    std::iota(out.begin(), out.end(), Vertex{0});
    return out;
  }
  if (const auto* b = std::get_if<CompleteBipartite>(&shape)) {
    out = b->left;
    out.insert(out.end(), b->right.begin(), b->right.end());
  } else {
    for (const Edge& e : std::get<Explicit>(shape).edges) {
      out.push_back(e.lo);
      out.push_back(e.hi);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_string(const Host& host) {
  std::ostringstream os;
  if (const auto* c = std::get_if<Complete>(&host.shape)) {
    os << "K_" << c->n;
  } else if (const auto* b = std::get_if<CompleteBipartite>(&host.shape)) {
    os << "K_{" << b->left.size() << "," << b->right.size() << "}";
  } else {
    os << "explicit(" << std::get<Explicit>(host.shape).edges.size() << " edges)";
  }
  return os.str();
}

EdgeList host_edges(const Host& host) {
  EdgeList out;
  if (const auto* c = std::get_if<Complete>(&host.shape)) {
    out.reserve(pair_count(c->n));
    for (Vertex u = 0; u < c->n; ++u) {
      for (Vertex v = u + 1; v < c->n; ++v) out.emplace_back(u, v);
    }
  } else if (const auto* b = std::get_if<CompleteBipartite>(&host.shape)) {
    out.reserve(b->left.size() * b->right.size());
    for (Vertex u : b->left) {
      for (Vertex v : b->right) out.emplace_back(u, v);
    }
  } else {
    out = std::get<Explicit>(host.shape).edges;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Block Block::hexagon(const std::array<Vertex, 6>& cycle) { return Block(BlockType::Hexagon, cycle); }

Block Block::prism(const std::array<Vertex, 3>& first, const std::array<Vertex, 3>& second) {
  return Block(BlockType::Prism, {first[0], first[1], first[2], second[0], second[1], second[2]});
}

bool Block::has_distinct_vertices() const {
  std::array<Vertex, 6> s = v_;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

std::string to_string(const Block& b) {
  const auto& v = b.vertices();
  std::ostringstream os;
  if (b.is_hexagon()) {
    os << "(" << v[0] << "," << v[1] << "," << v[2] << "," << v[3] << "," << v[4] << "," << v[5] << ")";
  } else {
    os << "[" << v[0] << "," << v[1] << "," << v[2] << ";" << v[3] << "," << v[4] << "," << v[5] << "]";
  }
  return os.str();
}

EdgeList block_edges(const Block& b) {
  if (!b.has_distinct_vertices()) throw InvalidBlock("repeated vertex in block " + to_string(b));
  const auto& v = b.vertices();
  EdgeList out;
  if (b.is_hexagon()) {
    for (int i = 0; i < 6; ++i) out.emplace_back(v[i], v[(i + 1) % 6]);
  } else {
    for (int t = 0; t < 2; ++t) {
      const Vertex a = v[3 * t], c = v[3 * t + 1], d = v[3 * t + 2];
      out.emplace_back(a, c);
      out.emplace_back(c, d);
      out.emplace_back(a, d);
    }
    for (int i = 0; i < 3; ++i) out.emplace_back(v[i], v[i + 3]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Block canonical_hexagon(const std::array<Vertex, 6>& v) {
  std::array<Vertex, 6> best = v;
  for (int start = 0; start < 6; ++start) {
    for (int dir : {1, -1}) {
      std::array<Vertex, 6> cand{};
      for (int i = 0; i < 6; ++i) cand[i] = v[((start + dir * i) % 6 + 6) % 6];
      best = std::min(best, cand);
    }
  }
  return Block::hexagon(best);
}

Block canonical_prism(const std::array<Vertex, 6>& v) {
  // partner[i] is the vertex matched to v[i] by a rung.
  std::array<Vertex, 6> partner{v[3], v[4], v[5], v[0], v[1], v[2]};
  const bool first_holds_min =
      std::min({v[0], v[1], v[2]}) < std::min({v[3], v[4], v[5]});
  const int base = first_holds_min ? 0 : 3;
  std::array<int, 3> pos{base, base + 1, base + 2};
  std::sort(pos.begin(), pos.end(), [&](int a, int b) { return v[a] < v[b]; });
  return Block::prism({v[pos[0]], v[pos[1]], v[pos[2]]},
                      {partner[pos[0]], partner[pos[1]], partner[pos[2]]});
}

}  // namespace

Block canonical_form(const Block& b) {
  if (!b.has_distinct_vertices()) throw InvalidBlock("repeated vertex in block " + to_string(b));
  return b.is_hexagon() ? canonical_hexagon(b.vertices()) : canonical_prism(b.vertices());
}

std::optional<Block> recognize(std::span<const Edge> edges) {
  EdgeList sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;

  std::vector<Vertex> verts;
  for (const Edge& e : sorted) {
    verts.push_back(e.lo);
    verts.push_back(e.hi);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  if (verts.size() != 6) return std::nullopt;

  auto local = [&](Vertex x) {
    return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin());
  };
  std::array<std::array<bool, 6>, 6> adj{};
  std::array<int, 6> deg{};
  for (const Edge& e : sorted) {
    const int a = local(e.lo), b = local(e.hi);
    adj[a][b] = adj[b][a] = true;
    ++deg[a];
    ++deg[b];
  }

  if (sorted.size() == 6) {
    if (std::any_of(deg.begin(), deg.end(), [](int d) { return d != 2; })) return std::nullopt;
    std::array<Vertex, 6> cycle{};
    int prev = -1, cur = 0;
    for (int step = 0; step < 6; ++step) {
      cycle[step] = verts[cur];
      int next = -1;
      for (int w = 0; w < 6; ++w) {
        if (adj[cur][w] && w != prev) {
          next = w;
          break;
        }
      }
      prev = cur;
      cur = next;
      if (cur == 0 && step < 5) return std::nullopt;  // closed early: two triangles
    }
    if (cur != 0) return std::nullopt;
    return canonical_form(Block::hexagon(cycle));
  }

  if (sorted.size() == 9) {
    if (std::any_of(deg.begin(), deg.end(), [](int d) { return d != 3; })) return std::nullopt;
    std::vector<std::array<int, 3>> triangles;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b)
        for (int c = b + 1; c < 6; ++c)
          if (adj[a][b] && adj[b][c] && adj[a][c]) triangles.push_back({a, b, c});
    if (triangles.size() != 2) return std::nullopt;
    const auto& t1 = triangles[0];
    const auto& t2 = triangles[1];
    std::array<Vertex, 3> first{}, second{};
    for (int i = 0; i < 3; ++i) {
      first[i] = verts[t1[i]];
      int matched = -1;
      for (int j = 0; j < 3; ++j) {
        if (adj[t1[i]][t2[j]]) {
          if (matched != -1) return std::nullopt;
          matched = t2[j];
        }
      }
      if (matched == -1) return std::nullopt;
      second[i] = verts[matched];
    }
    return canonical_form(Block::prism(first, second));
  }
  return std::nullopt;
}

Edge relabel(const Edge& e, std::span<const Vertex> map) { return Edge(map[e.lo], map[e.hi]); }

Block relabel(const Block& b, std::span<const Vertex> map) {
  const auto& v = b.vertices();
  if (b.is_hexagon()) {
    return Block::hexagon({map[v[0]], map[v[1]], map[v[2]], map[v[3]], map[v[4]], map[v[5]]});
  }
  return Block::prism({map[v[0]], map[v[1]], map[v[2]]}, {map[v[3]], map[v[4]], map[v[5]]});
}

std::string to_string(DesignKind kind) {
  switch (kind) {
    case DesignKind::Decomposition:
      return "decomposition";
    case DesignKind::Packing:
      return "packing";
    case DesignKind::Covering:
      return "covering";
  }
  return "?";
}

std::optional<DesignKind> parse_design_kind(std::string_view text) {
  if (text == "decomposition") return DesignKind::Decomposition;
  if (text == "packing") return DesignKind::Packing;
  if (text == "covering") return DesignKind::Covering;
  return std::nullopt;
}

std::size_t Design::hexagon_count() const {
  return static_cast<std::size_t>(
      std::count_if(blocks.begin(), blocks.end(), [](const Block& b) { return b.is_hexagon(); }));
}

std::size_t Design::prism_count() const { return blocks.size() - hexagon_count(); }

std::vector<Vertex> identity_map(std::size_t size) {
  std::vector<Vertex> map(size);
  std::iota(map.begin(), map.end(), Vertex{0});
  return map;
}

Design relabel_design(const Design& d, std::span<const Vertex> map) {
  const std::vector<Vertex> verts = d.host.vertices();
  std::vector<Vertex> image;
  image.reserve(verts.size());
  for (Vertex v : verts) {
    if (v >= map.size()) throw InvalidMap("map does not cover vertex " + std::to_string(v));
    image.push_back(map[v]);
  }
  std::sort(image.begin(), image.end());
  if (image != verts) throw InvalidMap("map is not a bijection on the host vertex set");

  auto in_map = [&](Vertex v) {
    if (v >= map.size()) throw InvalidMap("design references vertex " + std::to_string(v) + " outside the map");
    return map[v];
  };
  auto edge_map = [&](const Edge& e) { return Edge(in_map(e.lo), in_map(e.hi)); };
  auto map_list = [&](const EdgeList& edges) {
    EdgeList out;
    out.reserve(edges.size());
    for (const Edge& e : edges) out.push_back(edge_map(e));
    std::sort(out.begin(), out.end());
    return out;
  };

  Design out;
  out.kind = d.kind;
  if (const auto* b = std::get_if<CompleteBipartite>(&d.host.shape)) {
    CompleteBipartite mapped;
    for (Vertex v : b->left) mapped.left.push_back(map[v]);
    for (Vertex v : b->right) mapped.right.push_back(map[v]);
    out.host = Host{std::move(mapped)};
  } else if (const auto* x = std::get_if<Explicit>(&d.host.shape)) {
    out.host = Host{Explicit{map_list(x->edges)}};
  } else {
    out.host = d.host;
  }
  out.blocks.reserve(d.blocks.size());
  for (const Block& b : d.blocks) {
    for (Vertex v : b.vertices()) in_map(v);
    out.blocks.push_back(relabel(b, map));
  }
  out.leave = map_list(d.leave);
  out.padding = map_list(d.padding);
  return out;
}

}  // namespace multidesign
