#include "multidesign/bipartite.hpp"

#include <stdexcept>
#include <string>

#include "multidesign/catalog.hpp"
#include "multidesign/errors.hpp"

namespace multidesign {

std::vector<std::uint32_t> side_partition(std::uint32_t n) {
  if (n % 2 != 0) throw InfeasibleParameters("side of size " + std::to_string(n) + " is odd");
  if (n < 4) throw InfeasibleParameters("side of size " + std::to_string(n) + " is below 4");
  std::vector<std::uint32_t> parts;
  std::uint32_t rest = n;
  if (n % 6 == 2) {
    parts = {4, 4};
    rest -= 8;
  } else if (n % 6 == 4) {
    parts = {4};
    rest -= 4;
  }
  parts.insert(parts.end(), rest / 6, 6);
  return parts;
}

Design c6_decompose_bipartite(const BipartiteSpec& spec) {
  const std::size_t m = spec.left.size();
  const std::size_t n = spec.right.size();
  const std::string dims = "K_{" + std::to_string(m) + "," + std::to_string(n) + "}";
  if (m % 2 != 0 || n % 2 != 0) throw InfeasibleParameters(dims + ": both sides must be even");
  if (m < 4 || n < 4) throw InfeasibleParameters(dims + ": both sides must have at least 4 vertices");
  if ((m * n) % 6 != 0) throw InfeasibleParameters(dims + ": 6 must divide mn");
  Host host = Host::bipartite(spec.left, spec.right);  // throws on overlapping sides

  // Both even and 3 | mn, so one side is a multiple of 6.
  const bool left_axis = m % 6 == 0;
  if (!left_axis && n % 6 != 0) throw std::logic_error(dims + ": neither side is a multiple of 6");
  const std::vector<Vertex>& axis = left_axis ? spec.left : spec.right;
  const std::vector<Vertex>& other = left_axis ? spec.right : spec.left;
  const std::vector<std::uint32_t> parts = side_partition(static_cast<std::uint32_t>(other.size()));

  const Design seed4 = catalog::derived_base({catalog::CatalogKind::BipartiteHexagonDecomposition, 6, 4});
  const Design seed6 = catalog::derived_base({catalog::CatalogKind::BipartiteHexagonDecomposition, 6, 6});

  Design d;
  d.host = std::move(host);
  d.kind = DesignKind::Decomposition;
  d.blocks.reserve(m * n / 6);
  std::vector<Vertex> map(12);
  for (std::size_t g = 0; g < axis.size(); g += 6) {
    std::size_t offset = 0;
    for (std::uint32_t part : parts) {
      // Seed labels: 0..5 on the 6-side, 6.. on the part.
      for (std::size_t i = 0; i < 6; ++i) map[i] = axis[g + i];
      for (std::size_t i = 0; i < part; ++i) map[6 + i] = other[offset + i];
      for (const Block& b : (part == 4 ? seed4 : seed6).blocks) d.blocks.push_back(relabel(b, map));
      offset += part;
    }
  }
  return d;
}

}  // namespace multidesign
