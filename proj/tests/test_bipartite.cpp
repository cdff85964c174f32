#include <algorithm>
#include <set>

#include "doctest.h"
#include "multidesign/bipartite.hpp"
#include "multidesign/errors.hpp"
#include "multidesign/verifier.hpp"

using namespace multidesign;

namespace {

BipartiteSpec spec(std::uint32_t m, std::uint32_t n) {
  BipartiteSpec s;
  for (Vertex v = 0; v < m; ++v) s.left.push_back(v);
  for (Vertex v = 0; v < n; ++v) s.right.push_back(m + v);
  return s;
}

// Hexagon count, edge partition and side alternation.
void check_decomposition(const BipartiteSpec& s) {
  const Design d = c6_decompose_bipartite(s);
  CHECK(d.host == Host::bipartite(s.left, s.right));
  CHECK(d.blocks.size() == s.left.size() * s.right.size() / 6);
  CHECK(d.prism_count() == 0);
  CHECK(verify_design(d, {false}).valid);
  const std::set<Vertex> left(s.left.begin(), s.left.end());
  for (const Block& b : d.blocks) {
    const auto& v = b.vertices();
    const bool first_left = left.contains(v[0]);
    for (std::size_t i = 0; i < 6; ++i) CHECK(left.contains(v[i]) == (first_left == (i % 2 == 0)));
  }
}

}  // namespace

TEST_CASE("side partitions") {
  CHECK(side_partition(14) == std::vector<std::uint32_t>{4, 4, 6});
  CHECK(side_partition(12) == std::vector<std::uint32_t>{6, 6});
  CHECK(side_partition(16) == std::vector<std::uint32_t>{4, 6, 6});
  CHECK(side_partition(4) == std::vector<std::uint32_t>{4});
  CHECK(side_partition(8) == std::vector<std::uint32_t>{4, 4});
  CHECK_THROWS_AS(side_partition(7), InfeasibleParameters);
  CHECK_THROWS_AS(side_partition(2), InfeasibleParameters);
}

TEST_CASE("examples") {
  CHECK(c6_decompose_bipartite(spec(6, 6)).blocks.size() == 6);
  CHECK(c6_decompose_bipartite(spec(12, 14)).blocks.size() == 28);
  CHECK_THROWS_AS(c6_decompose_bipartite(spec(5, 6)), InfeasibleParameters);
  CHECK_THROWS_AS(c6_decompose_bipartite(spec(4, 4)), InfeasibleParameters);
  CHECK_THROWS_AS(c6_decompose_bipartite(spec(2, 6)), InfeasibleParameters);
}

TEST_CASE("error messages name the failed condition") {
  try {
    c6_decompose_bipartite(spec(5, 6));
    FAIL("expected an exception");
  } catch (const InfeasibleParameters& e) {
    CHECK(std::string(e.what()).find("even") != std::string::npos);
  }
  try {
    c6_decompose_bipartite(spec(4, 8));
    FAIL("expected an exception");
  } catch (const InfeasibleParameters& e) {
    CHECK(std::string(e.what()).find('6') != std::string::npos);
  }
}

TEST_CASE("every admissible pair with one side in {6, 12, 18}") {
  for (std::uint32_t m : {6u, 12u, 18u}) {
    for (std::uint32_t n = 4; n <= 20; n += 2) {
      CAPTURE(m);
      CAPTURE(n);
      check_decomposition(spec(m, n));
      check_decomposition(spec(n, m));
    }
  }
}

TEST_CASE("arbitrary vertex labels") {
  BipartiteSpec s;
  s.left = {40, 3, 17, 8, 22, 9, 31, 5};
  s.right = {1, 12, 30, 2, 25, 14};
  check_decomposition(s);
}

TEST_CASE("output is deterministic") {
  CHECK(c6_decompose_bipartite(spec(12, 16)) == c6_decompose_bipartite(spec(12, 16)));
}
