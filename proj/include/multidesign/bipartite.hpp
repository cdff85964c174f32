#pragma once

// Hexagon decompositions of complete bipartite graphs K_{m,n} (m, n even,
// 6 | mn), tiled from the K_{6,4} and K_{6,6} ingredients.

#include <cstdint>
#include <vector>

#include "multidesign/graph.hpp"

namespace multidesign {

struct BipartiteSpec {
  std::vector<Vertex> left;
  std::vector<Vertex> right;
};

// mn/6 hexagons, each with even positions on one side and odd positions on
// the other. The side whose size is a multiple of 6 (left on a tie) is cut
// into groups of 6 in the given vertex order, the other side by
// side_partition. Throws InfeasibleParameters naming the failed condition.
Design c6_decompose_bipartite(const BipartiteSpec& spec);

// Parts from {4, 6} summing to n: all 6s when 6 | n, otherwise one or two
// leading 4s. Throws InfeasibleParameters for odd n or n < 4.
std::vector<std::uint32_t> side_partition(std::uint32_t n);

}  // namespace multidesign
