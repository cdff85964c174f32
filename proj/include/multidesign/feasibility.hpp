#pragma once

// Counting arguments for hexagon/prism designs on K_n: which block counts
// (x hexagons, y prisms) fit the edge count, which per-vertex incidences
// (p hexagons, q prisms) fit a vertex degree, and the resulting
// classification of decomposition / packing / covering orders.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace multidesign {

struct BlockCounts {
  std::uint64_t hexagons = 0;
  std::uint64_t prisms = 0;
  friend auto operator<=>(const BlockCounts&, const BlockCounts&) = default;
};

struct Incidence {
  std::uint64_t hexagons = 0;
  std::uint64_t prisms = 0;
  friend auto operator<=>(const Incidence&, const Incidence&) = default;
};

// All (x, y) >= 0 with 6x + 9y = edge_count, ordered by increasing y.
// With require_both, only x >= 1 and y >= 1 are kept.
std::vector<BlockCounts> block_count_solutions(std::uint64_t edge_count, bool require_both);

// All (p, q) >= 0 with 2p + 3q = degree, ordered by increasing q.
std::vector<Incidence> degree_solutions(std::uint64_t degree);

struct FeasibilityReport {
  std::uint32_t n = 0;
  bool decomposition_exists = false;
  std::uint64_t min_leave = 0;
  std::uint64_t min_padding = 0;
  std::vector<BlockCounts> block_solutions;  // for n(n-1)/2, both types required
  std::vector<Incidence> degree_solutions;   // for degree n-1
  std::vector<std::string> notes;
};

// Throws UnsupportedOrder for n < 6.
FeasibilityReport classify(std::uint32_t n);

// Smallest leave (padding) size allowed by the block-count equation alone,
// with 0 excluded when no decomposition of K_n exists.
std::uint64_t leave_lower_bound(std::uint32_t n);
std::uint64_t padding_lower_bound(std::uint32_t n);

std::uint64_t complete_edge_count(std::uint32_t n);

}  // namespace multidesign
