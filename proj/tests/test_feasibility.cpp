#include <algorithm>

#include "doctest.h"
#include "multidesign/errors.hpp"
#include "multidesign/feasibility.hpp"

using namespace multidesign;

namespace {

// Brute force over every (x, y) box point.
bool splits(std::uint64_t edges) {
  for (std::uint64_t x = 1; 6 * x <= edges; ++x) {
    for (std::uint64_t y = 1; 6 * x + 9 * y <= edges; ++y) {
      if (6 * x + 9 * y == edges) return true;
    }
  }
  return false;
}

std::uint64_t oracle_leave(std::uint32_t n, bool exists) {
  const std::uint64_t e = std::uint64_t{n} * (n - 1) / 2;
  for (std::uint64_t l = exists ? 0 : 1;; ++l) {
    if (splits(e - l)) return l;
  }
}

std::uint64_t oracle_padding(std::uint32_t n, bool exists) {
  const std::uint64_t e = std::uint64_t{n} * (n - 1) / 2;
  for (std::uint64_t r = exists ? 0 : 1;; ++r) {
    if (splits(e + r)) return r;
  }
}

bool exceptional(std::uint32_t n) { return n == 7 || n == 9 || n == 10; }

}  // namespace

TEST_CASE("block count solutions") {
  CHECK(block_count_solutions(21, true) == std::vector<BlockCounts>{{2, 1}});
  CHECK(block_count_solutions(45, true) == std::vector<BlockCounts>{{6, 1}, {3, 3}});
  CHECK(block_count_solutions(18, true).empty());
  CHECK(block_count_solutions(18, false) == std::vector<BlockCounts>{{3, 0}, {0, 2}});
  CHECK(block_count_solutions(0, false) == std::vector<BlockCounts>{{0, 0}});
  CHECK(block_count_solutions(20, false).empty());
}

TEST_CASE("degree solutions") {
  CHECK(degree_solutions(8) == std::vector<Incidence>{{4, 0}, {1, 2}});
  CHECK(degree_solutions(9) == std::vector<Incidence>{{3, 1}, {0, 3}});
  CHECK(degree_solutions(6) == std::vector<Incidence>{{3, 0}, {0, 2}});
  CHECK(degree_solutions(1).empty());
}

TEST_CASE("classify examples") {
  const FeasibilityReport r13 = classify(13);
  CHECK(r13.decomposition_exists);
  CHECK(r13.min_leave == 0);
  CHECK(r13.min_padding == 0);

  const FeasibilityReport r8 = classify(8);
  CHECK_FALSE(r8.decomposition_exists);
  CHECK(r8.min_leave == 1);
  CHECK(r8.min_padding == 2);

  const FeasibilityReport r9 = classify(9);
  CHECK_FALSE(r9.decomposition_exists);
  CHECK(r9.min_leave == 3);
  CHECK(r9.min_padding == 3);
  CHECK_FALSE(r9.notes.empty());
  CHECK_FALSE(classify(10).notes.empty());

  const FeasibilityReport r7 = classify(7);
  CHECK(r7.min_leave == 6);
  CHECK(r7.min_padding == 6);
  CHECK(r7.block_solutions == std::vector<BlockCounts>{{2, 1}});

  CHECK_THROWS_AS(classify(5), UnsupportedOrder);
  CHECK_THROWS_AS(classify(0), UnsupportedOrder);
}

TEST_CASE("lower bounds") {
  CHECK(leave_lower_bound(7) == 6);
  CHECK(padding_lower_bound(9) == 3);
  CHECK(leave_lower_bound(8) == 1);
}

TEST_CASE("classification agrees with brute force for 6..200") {
  for (std::uint32_t n = 6; n <= 200; ++n) {
    CAPTURE(n);
    const FeasibilityReport r = classify(n);
    const bool exists = n % 3 != 2 && !exceptional(n);
    CHECK(r.decomposition_exists == exists);
    CHECK((r.min_leave == 0) == r.decomposition_exists);
    CHECK((r.min_padding == 0) == r.decomposition_exists);

    const std::uint64_t e = complete_edge_count(n);
    for (const auto& c : r.block_solutions) {
      CHECK(6 * c.hexagons + 9 * c.prisms == e);
      CHECK(c.hexagons >= 1);
      CHECK(c.prisms >= 1);
    }
    for (const auto& s : r.degree_solutions) CHECK(2 * s.hexagons + 3 * s.prisms == n - 1);
    if (exists) CHECK_FALSE(r.block_solutions.empty());

    CHECK(leave_lower_bound(n) == oracle_leave(n, exists));
    CHECK(padding_lower_bound(n) == oracle_padding(n, exists));

    if (exists) {
      CHECK(r.min_leave == 0);
    } else if (n == 7) {
      CHECK(r.min_leave == 6);
      CHECK(r.min_padding == 6);
    } else if (exceptional(n)) {
      CHECK(r.min_leave == 3);
      CHECK(r.min_padding == 3);
    } else {
      CHECK(r.min_leave == 1);
      CHECK(r.min_padding == 2);
    }
    CHECK(r.min_leave >= leave_lower_bound(n));
    CHECK(r.min_padding >= padding_lower_bound(n));
  }
}
