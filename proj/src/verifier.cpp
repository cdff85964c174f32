#include "multidesign/verifier.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace multidesign {

std::string to_string(FindingCode code) {
  switch (code) {
    case FindingCode::MalformedBlock: return "malformed-block";
    case FindingCode::UnrecognizedBlock: return "unrecognized-block";
    case FindingCode::VertexOutsideHost: return "vertex-outside-host";
    case FindingCode::EdgeOutsideHost: return "edge-outside-host";
    case FindingCode::OverlappingBlocks: return "overlapping-blocks";
    case FindingCode::UncoveredEdges: return "uncovered-edges";
    case FindingCode::LeaveMismatch: return "leave-mismatch";
    case FindingCode::LeaveOverlapsBlock: return "leave-overlaps-block";
    case FindingCode::PaddingMismatch: return "padding-mismatch";
    case FindingCode::UnexpectedLeave: return "unexpected-leave";
    case FindingCode::UnexpectedPadding: return "unexpected-padding";
    case FindingCode::MissingHexagon: return "missing-hexagon";
    case FindingCode::MissingPrism: return "missing-prism";
  }
  return "?";
}

namespace {

// Edge pairs straight from the tuple; loops are impossible once the block
// has passed the distinctness check.
std::vector<std::pair<Vertex, Vertex>> raw_pairs(const Block& b) {
  const auto& v = b.vertices();
  if (b.is_hexagon()) {
    return {{v[0], v[1]}, {v[1], v[2]}, {v[2], v[3]}, {v[3], v[4]}, {v[4], v[5]}, {v[5], v[0]}};
  }
  return {{v[0], v[1]}, {v[1], v[2]}, {v[0], v[2]}, {v[3], v[4]}, {v[4], v[5]},
          {v[3], v[5]}, {v[0], v[3]}, {v[1], v[4]}, {v[2], v[5]}};
}

bool distinct(const Block& b) {
  auto s = b.vertices();
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

EdgeList sorted(EdgeList edges) {
  std::sort(edges.begin(), edges.end());
  return edges;
}

// First block that uses some edge more often than the host provides.
std::optional<std::size_t> first_overuse(const Design& d, const EdgeList& host) {
  std::map<Edge, std::size_t> left;
  for (const Edge& e : host) ++left[e];
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    if (!distinct(d.blocks[i])) continue;
    for (const auto& [a, c] : raw_pairs(d.blocks[i])) {
      std::size_t& n = left[Edge(a, c)];
      if (n == 0) return i;
      --n;
    }
  }
  return std::nullopt;
}

std::string describe(const EdgeList& edges, std::size_t limit = 12) {
  std::ostringstream os;
  for (std::size_t i = 0; i < edges.size() && i < limit; ++i) os << (i ? " " : "") << to_string(edges[i]);
  if (edges.size() > limit) os << " ...";
  return os.str();
}

}  // namespace

std::vector<VertexIncidence> incidence_table(const Design& d) {
  std::map<Vertex, VertexIncidence> table;
  for (Vertex v : d.host.vertices()) table[v] = {v, 0, 0};
  for (const Block& b : d.blocks) {
    for (Vertex v : b.vertices()) {
      auto it = table.find(v);
      if (it == table.end()) continue;
      if (b.is_hexagon()) {
        ++it->second.hexagons;
      } else {
        ++it->second.prisms;
      }
    }
  }
  std::vector<VertexIncidence> out;
  out.reserve(table.size());
  for (const auto& [v, inc] : table) out.push_back(inc);
  return out;
}

VerificationReport verify_design(const Design& d, VerifyOptions options) {
  VerificationReport r;
  auto fail = [&](FindingCode code, std::string message, EdgeList edges = {},
                  std::optional<std::size_t> block = std::nullopt) {
    r.failures.push_back({code, std::move(message), std::move(edges), block});
  };

  const std::vector<Vertex> host_vertices = d.host.vertices();
  const EdgeList host = host_edges(d.host);

  EdgeList cover;
  cover.reserve(d.blocks.size() * 9);
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    const Block& b = d.blocks[i];
    if (b.is_hexagon()) {
      ++r.hexagon_count;
    } else {
      ++r.prism_count;
    }
    if (!distinct(b)) {
      fail(FindingCode::MalformedBlock, "block " + std::to_string(i) + " " + to_string(b) + " repeats a vertex", {}, i);
      continue;
    }
    for (Vertex v : b.vertices()) {
      if (!std::binary_search(host_vertices.begin(), host_vertices.end(), v)) {
        fail(FindingCode::VertexOutsideHost,
             "block " + std::to_string(i) + " " + to_string(b) + " uses vertex " + std::to_string(v), {}, i);
      }
    }
    EdgeList edges;
    for (const auto& [a, c] : raw_pairs(b)) edges.emplace_back(a, c);
    const auto shape = recognize(edges);
    if (!shape || shape->type() != b.type()) {
      fail(FindingCode::UnrecognizedBlock, "block " + std::to_string(i) + " " + to_string(b) +
                                               " does not have the declared shape", edges, i);
    }
    cover.insert(cover.end(), edges.begin(), edges.end());
  }
  std::sort(cover.begin(), cover.end());

  // Merge host and cover multisets.
  EdgeList outside, uncovered, overlapping;
  std::size_t hi = 0, ci = 0;
  while (hi < host.size() || ci < cover.size()) {
    Edge e;
    if (ci >= cover.size() || (hi < host.size() && host[hi] < cover[ci])) {
      e = host[hi];
    } else {
      e = cover[ci];
    }
    std::size_t h = 0, c = 0;
    while (hi < host.size() && host[hi] == e) ++h, ++hi;
    while (ci < cover.size() && cover[ci] == e) ++c, ++ci;
    if (h == 0) {
      outside.push_back(e);
      continue;
    }
    for (std::size_t k = c; k < h; ++k) r.leave.push_back(e);
    for (std::size_t k = h; k < c; ++k) r.padding.push_back(e);
  }
  if (!outside.empty()) {
    fail(FindingCode::EdgeOutsideHost, "blocks use edges missing from the host: " + describe(outside), outside);
  }

  const EdgeList declared_leave = sorted(d.leave);
  const EdgeList declared_padding = sorted(d.padding);

  switch (d.kind) {
    case DesignKind::Decomposition:
      if (!r.leave.empty()) {
        fail(FindingCode::UncoveredEdges, std::to_string(r.leave.size()) + " host edges uncovered: " + describe(r.leave),
             r.leave);
      }
      if (!r.padding.empty()) {
        const auto block = first_overuse(d, host);
        fail(FindingCode::OverlappingBlocks,
             std::to_string(r.padding.size()) + " edges used more than once: " + describe(r.padding) +
                 (block ? ", first repeated by block " + std::to_string(*block) : ""),
             r.padding, block);
      }
      if (!declared_leave.empty()) fail(FindingCode::UnexpectedLeave, "a decomposition has no leave", declared_leave);
      if (!declared_padding.empty()) {
        fail(FindingCode::UnexpectedPadding, "a decomposition has no padding", declared_padding);
      }
      break;

    case DesignKind::Packing: {
      if (!r.padding.empty()) {
        const auto block = first_overuse(d, host);
        fail(FindingCode::OverlappingBlocks,
             std::to_string(r.padding.size()) + " edges used more than once: " + describe(r.padding) +
                 (block ? ", first repeated by block " + std::to_string(*block) : ""),
             r.padding, block);
      }
      EdgeList clash;
      for (const Edge& e : declared_leave) {
        if (std::binary_search(cover.begin(), cover.end(), e)) clash.push_back(e);
      }
      if (!clash.empty()) fail(FindingCode::LeaveOverlapsBlock, "leave edges used by blocks: " + describe(clash), clash);
      if (declared_leave != r.leave) {
        fail(FindingCode::LeaveMismatch,
             "declared leave [" + describe(declared_leave) + "] differs from unused edges [" + describe(r.leave) + "]",
             r.leave);
      }
      if (!declared_padding.empty()) fail(FindingCode::UnexpectedPadding, "a packing has no padding", declared_padding);
      break;
    }

    case DesignKind::Covering: {
      if (!r.leave.empty()) {
        fail(FindingCode::UncoveredEdges, std::to_string(r.leave.size()) + " host edges uncovered: " + describe(r.leave),
             r.leave);
      }
      EdgeList foreign;
      for (const Edge& e : declared_padding) {
        if (!std::binary_search(host.begin(), host.end(), e)) foreign.push_back(e);
      }
      if (!foreign.empty()) {
        fail(FindingCode::EdgeOutsideHost, "padding edges missing from the host: " + describe(foreign), foreign);
      }
      if (declared_padding != r.padding) {
        fail(FindingCode::PaddingMismatch,
             "declared padding [" + describe(declared_padding) + "] differs from repeated edges [" +
                 describe(r.padding) + "]",
             r.padding);
      }
      if (!declared_leave.empty()) fail(FindingCode::UnexpectedLeave, "a covering has no leave", declared_leave);
      break;
    }
  }

  if (options.require_both_types) {
    if (r.hexagon_count == 0) fail(FindingCode::MissingHexagon, "no hexagon present");
    if (r.prism_count == 0) fail(FindingCode::MissingPrism, "no prism present");
  }

  r.incidence = incidence_table(d);
  r.valid = r.failures.empty();
  return r;
}

}  // namespace multidesign
