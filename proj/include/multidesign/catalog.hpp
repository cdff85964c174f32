#pragma once

// Bundled designs: the explicit designs for small orders (decompositions of
// K_6, K_13, K_15, K_19; packings of K_7, K_8, K_9, K_11, K_17; coverings of
// K_7, K_8, K_11, K_17) and four frozen single-type ingredients (hexagon
// decomposition of K_9, prism decomposition of K_10, hexagon decompositions
// of K_{6,4} and K_{6,6}). Labels are 0-based.
//
// Everything is parsed and verified once, on first access. A failure there
// is a data error and throws std::logic_error.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "multidesign/graph.hpp"

namespace multidesign::catalog {

enum class CatalogKind : std::uint8_t {
  Decomposition,
  Packing,
  Covering,
  PureHexagonDecomposition,
  PurePrismDecomposition,
  BipartiteHexagonDecomposition,
};

struct CatalogKey {
  CatalogKind kind = CatalogKind::Decomposition;
  std::uint32_t m = 0;  // order of K_m, or left side of K_{m,n}
  std::uint32_t n = 0;  // right side, bipartite keys only

  friend auto operator<=>(const CatalogKey&, const CatalogKey&) = default;
};

// "decomposition-13", "packing-17", "hexagon-9", "prism-10", "bipartite-6x4".
std::string to_string(const CatalogKey& key);
std::optional<CatalogKey> parse_key(std::string_view text);

// Throws UnknownCatalogKey.
Design get(const CatalogKey& key);

// Hexagon(0,1,2,3,4,5) + Prism[0,2,4;3,5,1].
Design k6_multidecomposition();

// One of the four single-type ingredients; throws UnknownCatalogKey for
// anything else.
Design derived_base(const CatalogKey& key);

// Every key, sorted.
std::vector<CatalogKey> keys();

}  // namespace multidesign::catalog
