#pragma once

// Designs on K_n for every n >= 6 built as joins of cliques: K_n is cut into
// consecutive vertex intervals (parts), a few parts at a time are covered by
// a bundled base design, and every remaining pair of parts is filled with a
// hexagon decomposition of the complete bipartite graph between them.
//
// Layouts (n = 6x + r, parts in order):
//   decomposition  6x        K6 * x
//                  12k + 1   K1, K12 * k            bases K1+K12 = K13
//                  12k + 7   K1, K6, K12 * k        K1+K6+K12 = K19, then K13s
//                  12k + 3   K1, K14, K12 * (k-1)   K1+K14 = K15, then K13s
//                  12k + 9   K1, K8, K12 * k        K1+K8 = K9 (hexagons), K13s
//                  6x + 4    K10, K6 * (x-1)        K10 (prisms), K6s
//   packing        6x + 2    K2, K6 * x             K2+K6 = K8 packings, leave {0,1}
//                  12k + 5   K1, K16, K12 * (k-1)   K1+K16 = K17 packing, K13s
//                  12k + 11  K1, K10, K12 * k       K1+K10 = K11 packing, K13s
//   covering       6x + 2    K8, K6 * (x-1)         K8 covering, K6s
//                  12k + 5   K1, K4, K12 * k        K1+K4+K12 = K17 covering, K13s
//                  12k + 11  K1, K4, K6, K12 * k    K1+K4+K6 = K11 covering, K13s
// K1 and K2 parts belong to every base. Orders 7 to 11 and the smallest
// member of each class use the bundled designs directly; packings and
// coverings of K_9 and K_10 come from the transformations below.

#include <cstdint>
#include <utility>
#include <vector>

#include "multidesign/errors.hpp"
#include "multidesign/feasibility.hpp"
#include "multidesign/graph.hpp"

namespace multidesign {

struct JoinPart {
  std::uint32_t size = 0;  // the part is K_size
  Vertex first = 0;        // vertices first .. first + size - 1

  friend bool operator==(const JoinPart&, const JoinPart&) = default;
};

struct JoinLayout {
  std::vector<JoinPart> parts;
  std::vector<std::pair<std::size_t, std::size_t>> cross_pairs;  // every i < j
};

// Throws UnsupportedOrder for n < 6 and InfeasibleOrder when `kind` is a
// decomposition and K_n has none.
JoinLayout join_layout(std::uint32_t n, DesignKind kind);

// Raised when no decomposition of K_n exists; carries the classification.
class InfeasibleOrder : public Error {
 public:
  explicit InfeasibleOrder(FeasibilityReport report);
  [[nodiscard]] const FeasibilityReport& report() const { return report_; }

 private:
  FeasibilityReport report_;
};

Design multidecompose(std::uint32_t n);

// A decomposable order gives its decomposition with an empty leave/padding.
Design max_multipack(std::uint32_t n);
Design min_multicover(std::uint32_t n);

// Dispatches on kind.
Design construct(std::uint32_t n, DesignKind kind);

struct PrismMinusMatching {
  Block hexagon;
  EdgeList matching;  // sorted
};

struct HexagonPlusFactor {
  Block prism;
  EdgeList matching;  // sorted
};

struct PrismAsTwoHexagons {
  Block first;
  Block second;
  EdgeList padding;  // sorted; each edge is a prism edge used twice
};

// [a,b,c;d,e,f] -> hexagon (b,c,a,d,f,e) and matching {ab, cf, de}.
PrismMinusMatching prism_minus_matching(const Block& prism);

// (a,b,c,d,e,f) -> Prism[a,b,c;f,e,d] and matching {ac, df, be}.
HexagonPlusFactor hexagon_plus_factor(const Block& hexagon);

// [a,b,c;d,e,f] -> hexagons (a,b,c,f,e,d), (a,c,b,e,f,d) and padding {bc, ef, ad}.
PrismAsTwoHexagons prism_to_two_hexagons(const Block& prism);

}  // namespace multidesign
