#pragma once

// Core value types: vertices, edges, hosts, the two block shapes (hexagon =
// 6-cycle, prism = complement of a 6-cycle) and designs built from them.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace multidesign {

using Vertex = std::uint32_t;

// Unordered pair of distinct vertices, stored as (lo, hi).
struct Edge {
  Vertex lo = 0;
  Vertex hi = 1;

  Edge() = default;
  Edge(Vertex a, Vertex b);  // throws InvalidEdge when a == b

  // Position in the colex pairing {0,1} -> 0, {0,2} -> 1, {1,2} -> 2, ...
  // Independent of the host order, so it can index bitsets of any size.
  [[nodiscard]] std::size_t index() const {
    return static_cast<std::size_t>(hi) * (hi - 1) / 2 + lo;
  }
  static Edge from_index(std::size_t index);

  [[nodiscard]] bool touches(Vertex v) const { return lo == v || hi == v; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Number of pair indices below the first pair involving vertex `order`,
// i.e. the bitset size needed for edges on {0, ..., order-1}.
inline std::size_t pair_count(std::size_t order) { return order * (order - 1) / 2; }

// Edge multiset, kept sorted wherever the library produces one.
using EdgeList = std::vector<Edge>;

std::string to_string(const Edge& e);

struct Complete {
  std::uint32_t n = 0;
  friend bool operator==(const Complete&, const Complete&) = default;
};

struct CompleteBipartite {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
  friend bool operator==(const CompleteBipartite&, const CompleteBipartite&) = default;
};

struct Explicit {
  EdgeList edges;  // multiset; multiplicity = number of occurrences
  friend bool operator==(const Explicit&, const Explicit&) = default;
};

struct Host {
  std::variant<Complete, CompleteBipartite, Explicit> shape;

  static Host complete(std::uint32_t n) { return Host{Complete{n}}; }
  static Host bipartite(std::vector<Vertex> left, std::vector<Vertex> right);
  static Host explicit_edges(EdgeList edges);

  [[nodiscard]] bool is_complete() const { return std::holds_alternative<Complete>(shape); }
  [[nodiscard]] std::vector<Vertex> vertices() const;  // sorted

  friend bool operator==(const Host&, const Host&) = default;
};

std::string to_string(const Host& host);

// Host::bipartite throws InfeasibleParameters when the sides overlap.

// Complete(n): all pairs; CompleteBipartite: all cross pairs; Explicit: its
// multiset. Result is sorted.
EdgeList host_edges(const Host& host);

enum class BlockType : std::uint8_t { Hexagon, Prism };

// Hexagon(a,b,c,d,e,f) is the cycle a-b-c-d-e-f-a.
// Prism[a,b,c;d,e,f] has triangles abc and def and rungs ad, be, cf.
//
// Construction does not validate; block_edges() and the verifier do, so that
// malformed input can be represented and reported on.
class Block {
 public:
  static Block hexagon(const std::array<Vertex, 6>& cycle);
  static Block prism(const std::array<Vertex, 3>& first, const std::array<Vertex, 3>& second);

  [[nodiscard]] BlockType type() const { return type_; }
  [[nodiscard]] bool is_hexagon() const { return type_ == BlockType::Hexagon; }
  [[nodiscard]] bool is_prism() const { return type_ == BlockType::Prism; }
  [[nodiscard]] const std::array<Vertex, 6>& vertices() const { return v_; }
  [[nodiscard]] bool has_distinct_vertices() const;

  // Hexagons order before prisms, then lexicographic on the vertex tuple.
  friend auto operator<=>(const Block&, const Block&) = default;

 private:
  Block(BlockType type, const std::array<Vertex, 6>& v) : type_(type), v_(v) {}

  BlockType type_;
  std::array<Vertex, 6> v_;
};

// "(a,b,c,d,e,f)" or "[a,b,c;d,e,f]".
std::string to_string(const Block& b);

// 6 edges for a hexagon, 9 for a prism, sorted. Throws InvalidBlock on a
// repeated vertex.
EdgeList block_edges(const Block& b);

// Hexagon for a connected 2-regular edge set on 6 vertices, prism for a
// 3-regular one with exactly two triangles; nullopt otherwise (including the
// triangle-free cubic graph K_{3,3} and any set with repeated edges).
std::optional<Block> recognize(std::span<const Edge> edges);

// Unique representative of the block's edge set. Hexagons: least of the 12
// rotations/reflections. Prisms: triangle holding the least vertex first,
// sorted, with the second triple listing the matched partners in order.
Block canonical_form(const Block& b);

// Relabels through a dense map indexed by vertex label.
Edge relabel(const Edge& e, std::span<const Vertex> map);
Block relabel(const Block& b, std::span<const Vertex> map);

enum class DesignKind : std::uint8_t { Decomposition, Packing, Covering };

std::string to_string(DesignKind kind);
std::optional<DesignKind> parse_design_kind(std::string_view text);

struct Design {
  Host host;
  DesignKind kind = DesignKind::Decomposition;
  std::vector<Block> blocks;
  EdgeList leave;    // packings only
  EdgeList padding;  // coverings only

  [[nodiscard]] std::size_t hexagon_count() const;
  [[nodiscard]] std::size_t prism_count() const;

  friend bool operator==(const Design&, const Design&) = default;
};

// Applies `map` (indexed by vertex label) to every block, leave and padding
// edge and to the host. The map must restrict to a bijection on the host's
// vertex set; throws InvalidMap otherwise.
Design relabel_design(const Design& d, std::span<const Vertex> map);

// Identity relabeling map on {0, ..., size-1}.
std::vector<Vertex> identity_map(std::size_t size);

}  // namespace multidesign
