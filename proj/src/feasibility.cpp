#include "multidesign/feasibility.hpp"

#include "multidesign/errors.hpp"

namespace multidesign {

std::uint64_t complete_edge_count(std::uint32_t n) {
  return static_cast<std::uint64_t>(n) * (n == 0 ? 0 : n - 1) / 2;
}

std::vector<BlockCounts> block_count_solutions(std::uint64_t edge_count, bool require_both) {
  std::vector<BlockCounts> out;
  for (std::uint64_t y = 0; 9 * y <= edge_count; ++y) {
    const std::uint64_t rest = edge_count - 9 * y;
    if (rest % 6 != 0) continue;
    const BlockCounts sol{rest / 6, y};
    if (require_both && (sol.hexagons == 0 || sol.prisms == 0)) continue;
    out.push_back(sol);
  }
  return out;
}

std::vector<Incidence> degree_solutions(std::uint64_t degree) {
  std::vector<Incidence> out;
  for (std::uint64_t q = 0; 3 * q <= degree; ++q) {
    const std::uint64_t rest = degree - 3 * q;
    if (rest % 2 == 0) out.push_back({rest / 2, q});
  }
  return out;
}

namespace {

void require_order(std::uint32_t n) {
  if (n < 6) throw UnsupportedOrder("order " + std::to_string(n) + " is below 6");
}

bool exceptional(std::uint32_t n) { return n == 7 || n == 9 || n == 10; }

bool decomposable(std::uint32_t n) { return n >= 6 && n % 3 != 2 && !exceptional(n); }

}  // namespace

FeasibilityReport classify(std::uint32_t n) {
  require_order(n);
  FeasibilityReport r;
  r.n = n;
  const std::uint64_t edges = complete_edge_count(n);
  r.block_solutions = block_count_solutions(edges, true);
  r.degree_solutions = degree_solutions(n - 1);
  r.decomposition_exists = decomposable(n);

  if (r.decomposition_exists) {
    r.min_leave = 0;
    r.min_padding = 0;
  } else if (n == 7) {
    r.min_leave = 6;
    r.min_padding = 6;
    r.notes.push_back("K_7 has no decomposition: 21 = 6x + 9y forces y = 1, but a prism vertex would need 6 = 2p + 3");
    r.notes.push_back("padding 3 is excluded structurally: 24 = 6 + 2*9 leaves one vertex outside a prism that cannot be covered");
  } else if (n == 9 || n == 10) {
    r.min_leave = 3;
    r.min_padding = 3;
    r.notes.push_back("K_" + std::to_string(n) + " has no decomposition although " + std::to_string(edges) +
                      " = 6x + 9y is solvable");
    r.notes.push_back("a padding of 2 is sometimes quoted for this order, but " + std::to_string(edges) +
                      " + 2 is not divisible by 3; the minimum padding is 3");
  } else {
    r.min_leave = 1;
    r.min_padding = 2;
    r.notes.push_back(std::to_string(edges) + " is 1 mod 3, so no decomposition exists");
  }
  return r;
}

std::uint64_t leave_lower_bound(std::uint32_t n) {
  require_order(n);
  const std::uint64_t edges = complete_edge_count(n);
  const bool allow_zero = decomposable(n);
  for (std::uint64_t l = allow_zero ? 0 : 1; l <= edges; ++l) {
    if (!block_count_solutions(edges - l, true).empty()) return l;
  }
  return edges;
}

std::uint64_t padding_lower_bound(std::uint32_t n) {
  require_order(n);
  const std::uint64_t edges = complete_edge_count(n);
  const bool allow_zero = decomposable(n);
  for (std::uint64_t p = allow_zero ? 0 : 1;; ++p) {
    if (!block_count_solutions(edges + p, true).empty()) return p;
  }
}

}  // namespace multidesign
