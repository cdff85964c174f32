#include "doctest.h"
#include "multidesign/catalog.hpp"
#include "multidesign/constructions.hpp"
#include "multidesign/errors.hpp"
#include "multidesign/search.hpp"
#include "multidesign/verifier.hpp"

using namespace multidesign;
namespace cat = multidesign::catalog;

namespace {

SearchOutcome pure(const Host& host, BlockTypes types, std::optional<std::uint64_t> budget = std::nullopt) {
  SearchConfig cfg = SearchConfig::only(types);
  cfg.node_budget = budget;
  return search_multidecomposition(host, cfg);
}

SearchOutcome both(std::uint32_t n, std::optional<std::uint64_t> budget = std::nullopt) {
  SearchConfig cfg;
  cfg.node_budget = budget;
  return search_multidecomposition(Host::complete(n), cfg);
}

void check_found(const SearchOutcome& out, bool require_both) {
  REQUIRE(out.status == SearchStatus::Found);
  REQUIRE(out.design);
  CHECK(verify_design(*out.design, {require_both}).valid);
}

}  // namespace

TEST_CASE("K6 with both types") {
  const SearchOutcome out = both(6);
  check_found(out, true);
  CHECK(out.design->hexagon_count() == 1);
  CHECK(out.design->prism_count() == 1);
}

TEST_CASE("K7 with both types is exhausted") {
  const SearchOutcome out = both(7);
  CHECK(out.status == SearchStatus::ExhaustedNone);
  CHECK_FALSE(out.design);
}

TEST_CASE("K9 hexagons only with target (6,0)") {
  SearchConfig cfg = SearchConfig::only(BlockTypes::HexagonsOnly);
  cfg.target = BlockCounts{6, 0};
  const SearchOutcome out = search_multidecomposition(Host::complete(9), cfg);
  check_found(out, false);
  CHECK(out.design->hexagon_count() == 6);
}

TEST_CASE("K10 prisms only") {
  const SearchOutcome out = pure(Host::complete(10), BlockTypes::PrismsOnly);
  check_found(out, false);
  CHECK(out.design->prism_count() == 5);
}

TEST_CASE("complete hosts that decompose are found and agree with the constructions") {
  for (std::uint32_t n : {6u, 12u, 13u}) {
    CAPTURE(n);
    const SearchOutcome out = both(n, 10'000'000);
    check_found(out, true);
    CHECK(verify_design(multidecompose(n)).valid);
  }
}

TEST_CASE("bipartite hosts") {
  const SearchOutcome out = pure(Host::bipartite({0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10, 11}), BlockTypes::HexagonsOnly,
                                 1'000'000);
  check_found(out, false);
  CHECK(out.design->hexagon_count() == 6);
}

TEST_CASE("search is deterministic") {
  const SearchOutcome a = both(13, 10'000'000);
  const SearchOutcome b = both(13, 10'000'000);
  CHECK(a.status == b.status);
  CHECK(a.stats == b.stats);
  CHECK(a.design == b.design);

  const SearchOutcome c = both(7);
  const SearchOutcome d = both(7);
  CHECK(c.stats == d.stats);
}

TEST_CASE("no block is proposed twice at one node") {
  for (Pruning pruning : {Pruning::Degree, Pruning::None}) {
    SearchConfig cfg;
    cfg.instrument = true;
    cfg.pruning = pruning;
    cfg.restarts = false;
    const SearchOutcome out = search_multidecomposition(Host::complete(7), cfg);
    CHECK(out.status == SearchStatus::ExhaustedNone);
    if (pruning == Pruning::None) CHECK(out.stats.placements > 0);
    CHECK(out.stats.duplicate_proposals == 0);
  }
}

TEST_CASE("malformed requests are rejected") {
  CHECK_THROWS_AS(search_multidecomposition(Host::explicit_edges({{0, 1}, {0, 1}}), SearchConfig{}),
                  SearchRequestError);
  CHECK_THROWS_AS(both(11), SearchRequestError);
  SearchConfig zero;
  zero.node_budget = 0;
  CHECK_THROWS_AS(search_multidecomposition(Host::complete(6), zero), SearchRequestError);
}

TEST_CASE("a tiny budget is inconclusive") {
  const SearchOutcome out = both(13, 1);
  CHECK(out.status == SearchStatus::BudgetExceeded);
  CHECK_FALSE(out.design);
}

TEST_CASE("extremal searches") {
  CHECK_THROWS_AS(find_extremal(Host::complete(7), ExtremalKind::Packing, 3), SearchRequestError);

  const SearchOutcome cover = find_extremal(Host::complete(7), ExtremalKind::Covering, 3);
  CHECK(cover.status == SearchStatus::ExhaustedNone);

  const SearchOutcome pack = find_extremal(Host::complete(8), ExtremalKind::Packing, 1);
  check_found(pack, true);
  CHECK(pack.design->leave.size() == 1);

  const SearchOutcome pack7 = find_extremal(Host::complete(7), ExtremalKind::Packing, 6);
  check_found(pack7, true);
  CHECK(pack7.design->leave.size() == 6);
}

TEST_CASE("nonexistence certificates for 7 and 9") {
  for (std::uint32_t n : {7u, 9u}) {
    CAPTURE(n);
    const NonexistenceReport r = confirm_nonexistence(n);
    CHECK(r.analytic_nonexistence);
    CHECK(r.enumerative_nonexistence);
    CHECK(r.agree());
    CHECK_FALSE(r.analytic_trace.empty());
    for (const EnumerationBranch& b : r.branches) CHECK(b.completions == 0);
  }
  CHECK_THROWS_AS(confirm_nonexistence(8), UnsupportedOrder);
}

TEST_CASE("search re-derives the frozen ingredients") {
  struct Case {
    const char* key;
    Host host;
    BlockTypes types;
  };
  const Case cases[] = {
      {"hexagon-9", Host::complete(9), BlockTypes::HexagonsOnly},
      {"prism-10", Host::complete(10), BlockTypes::PrismsOnly},
      {"bipartite-6x4", Host::bipartite({0, 1, 2, 3, 4, 5}, {6, 7, 8, 9}), BlockTypes::HexagonsOnly},
      {"bipartite-6x6", Host::bipartite({0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10, 11}), BlockTypes::HexagonsOnly},
  };
  for (const Case& c : cases) {
    CAPTURE(c.key);
    const SearchOutcome out = pure(c.host, c.types, 1'000'000);
    check_found(out, false);
    CHECK(*out.design == cat::derived_base(*cat::parse_key(c.key)));
  }
}
