#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

#include "multidesign/errors.hpp"
#include "multidesign/search.hpp"

namespace multidesign {

namespace {

bool has_prism_incidence(const std::vector<Incidence>& sols, std::uint64_t q) {
  return std::any_of(sols.begin(), sols.end(), [&](const Incidence& s) { return s.prisms == q; });
}

std::string incidence_list(const std::vector<Incidence>& sols) {
  std::ostringstream os;
  for (std::size_t i = 0; i < sols.size(); ++i) {
    os << (i ? ", " : "") << "(" << sols[i].hexagons << "," << sols[i].prisms << ")";
  }
  return os.str();
}

// Fewest edges a prism induces on any t of its vertices.
std::uint64_t min_induced_prism_edges(std::size_t t) {
  const EdgeList edges = block_edges(Block::prism({0, 1, 2}, {3, 4, 5}));
  std::uint64_t best = edges.size();
  for (unsigned mask = 0; mask < 64; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != t) continue;
    std::uint64_t inside = 0;
    for (const Edge& e : edges) {
      if (((mask >> e.lo) & 1U) && ((mask >> e.hi) & 1U)) ++inside;
    }
    best = std::min(best, inside);
  }
  return best;
}

// Excludes one (x, y) case from degree counting alone. Returns true when the
// case is ruled out, appending the reasoning to `trace`.
bool exclude_case(std::uint32_t n, const BlockCounts& c, const std::vector<Incidence>& sols,
                  std::vector<std::string>& trace) {
  const std::string tag = "(x,y)=(" + std::to_string(c.hexagons) + "," + std::to_string(c.prisms) + "): ";
  const std::uint64_t degree = n - 1;

  if (c.prisms == 1) {
    if (!has_prism_incidence(sols, 1)) {
      trace.push_back(tag + "each vertex of the single prism needs " + std::to_string(degree) +
                      " = 2p + 3, which has no solution");
      return true;
    }
    if (n > 6 && !has_prism_incidence(sols, 0)) {
      trace.push_back(tag + "vertices outside the single prism keep degree " + std::to_string(degree) +
                      ", which is odd and cannot be split into hexagons");
      return true;
    }
  }

  if (c.prisms == 2 && !has_prism_incidence(sols, 1)) {
    trace.push_back(tag + "no vertex may lie in exactly one prism, so both prisms share one 6-set; "
                          "two edge-disjoint prisms need 18 edges but K_6 has 15");
    return true;
  }

  if (c.prisms == 3 && !has_prism_incidence(sols, 0) && !has_prism_incidence(sols, 2) && 6 * c.prisms >= n) {
    // Every vertex lies in 1 or 3 prisms: t vertices in all three, n - t in one.
    const std::uint64_t excess = 6 * c.prisms - n;
    if (excess % 2 == 0) {
      const std::uint64_t t = excess / 2;
      const std::uint64_t per_prism = min_induced_prism_edges(t);
      const std::uint64_t available = t * (t - 1) / 2;
      if (t <= 6 && c.prisms * per_prism > available) {
        trace.push_back(tag + "every vertex lies in 1 or 3 prisms, so 3t + (" + std::to_string(n) + " - t) = " +
                        std::to_string(6 * c.prisms) + " gives t = " + std::to_string(t) +
                        " vertices common to all three prisms; each prism induces at least " +
                        std::to_string(per_prism) + " edges on them, " + std::to_string(c.prisms * per_prism) +
                        " > " + std::to_string(available));
        return true;
      }
    }
  }
  trace.push_back(tag + "not excluded by degree counting");
  return false;
}

struct PrismMask {
  std::uint64_t edges = 0;
  std::uint32_t vertices = 0;
};

// Every labelled prism of K_n (n <= 11), those containing vertex 0 first.
std::vector<PrismMask> all_prisms(std::uint32_t n) {
  std::vector<PrismMask> with_zero, without_zero;
  for (std::uint32_t set = 0; set < (1U << n); ++set) {
    if (std::popcount(set) != 6) continue;
    std::array<Vertex, 6> s{};
    int k = 0;
    for (Vertex v = 0; v < n; ++v) {
      if ((set >> v) & 1U) s[k++] = v;
    }
    // First triangle holds s[0]; the other two members are chosen from s[1..5].
    for (int i = 1; i < 6; ++i) {
      for (int j = i + 1; j < 6; ++j) {
        std::array<Vertex, 3> rest{};
        int r = 0;
        for (int m = 1; m < 6; ++m) {
          if (m != i && m != j) rest[r++] = s[m];
        }
        do {
          PrismMask p;
          for (const Edge& e : block_edges(Block::prism({s[0], s[i], s[j]}, rest))) {
            p.edges |= std::uint64_t{1} << e.index();
          }
          p.vertices = set;
          (s[0] == 0 ? with_zero : without_zero).push_back(p);
        } while (std::next_permutation(rest.begin(), rest.end()));
      }
    }
  }
  with_zero.insert(with_zero.end(), without_zero.begin(), without_zero.end());
  return with_zero;
}

// Enumerates every set of `count` pairwise edge-disjoint prisms in which the
// lowest-indexed prism contains vertex 0, and tests whether the remaining
// edges split into hexagons.
EnumerationBranch enumerate_prism_tuples(std::uint32_t n, const BlockCounts& counts) {
  const std::vector<PrismMask> prisms = all_prisms(n);
  const std::size_t with_zero = static_cast<std::size_t>(
      std::count_if(prisms.begin(), prisms.end(), [](const PrismMask& p) { return p.vertices & 1U; }));
  const std::uint64_t full = (std::uint64_t{1} << pair_count(n)) - 1;
  std::array<std::uint64_t, 16> star{};
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w = 0; w < n; ++w) {
      if (w != v) star[v] |= std::uint64_t{1} << Edge(v, w).index();
    }
  }

  EnumerationBranch br{counts, 0, 0, 0, {}};
  auto test_remainder = [&](std::uint64_t used) {
    ++br.prism_placements;
    const std::uint64_t rest = full & ~used;
    for (Vertex v = 0; v < n; ++v) {
      if (std::popcount(rest & star[v]) % 2 != 0) return;  // a hexagon-only remainder needs even degrees
    }
    ++br.remainders_tested;
    EdgeList edges;
    for (std::uint64_t m = rest; m; m &= m - 1) edges.push_back(Edge::from_index(std::countr_zero(m)));
    SearchConfig cfg = SearchConfig::only(BlockTypes::HexagonsOnly);
    cfg.target = BlockCounts{counts.hexagons, 0};
    cfg.restarts = false;
    const SearchOutcome out = search_multidecomposition(Host::explicit_edges(edges), cfg);
    br.stats += out.stats;
    if (out.status == SearchStatus::Found) ++br.completions;
  };

  const std::size_t total = prisms.size();
  if (counts.prisms == 1) {
    for (std::size_t i = 0; i < with_zero; ++i) test_remainder(prisms[i].edges);
  } else if (counts.prisms == 2) {
    for (std::size_t i = 0; i < with_zero; ++i) {
      for (std::size_t j = i + 1; j < total; ++j) {
        if ((prisms[i].edges & prisms[j].edges) == 0) test_remainder(prisms[i].edges | prisms[j].edges);
      }
    }
  } else if (counts.prisms == 3) {
    std::vector<std::size_t> later;
    for (std::size_t i = 0; i < with_zero; ++i) {
      later.clear();
      for (std::size_t j = i + 1; j < total; ++j) {
        if ((prisms[i].edges & prisms[j].edges) == 0) later.push_back(j);
      }
      for (std::size_t a = 0; a < later.size(); ++a) {
        const std::uint64_t ij = prisms[i].edges | prisms[later[a]].edges;
        for (std::size_t b = a + 1; b < later.size(); ++b) {
          if ((ij & prisms[later[b]].edges) == 0) test_remainder(ij | prisms[later[b]].edges);
        }
      }
    }
  } else {
    throw UnsupportedOrder("prism tuple enumeration supports 1 to 3 prisms");
  }
  return br;
}

}  // namespace

NonexistenceReport confirm_nonexistence(std::uint32_t n) {
  if (n != 7 && n != 9 && n != 10) {
    throw UnsupportedOrder("nonexistence certificates exist only for n in {7, 9, 10}, got " + std::to_string(n));
  }
  NonexistenceReport rep;
  rep.n = n;

  const std::uint64_t edges = complete_edge_count(n);
  const auto cases = block_count_solutions(edges, true);
  const auto sols = degree_solutions(n - 1);
  std::ostringstream head;
  head << edges << " = 6x + 9y with x, y >= 1 admits " << cases.size() << " case(s); " << (n - 1)
       << " = 2p + 3q admits (p,q) in {" << incidence_list(sols) << "}";
  rep.analytic_trace.push_back(head.str());
  rep.analytic_nonexistence = true;
  for (const BlockCounts& c : cases) {
    if (!exclude_case(n, c, sols, rep.analytic_trace)) rep.analytic_nonexistence = false;
  }

  if (n == 7) {
    rep.enumerative_method = "unpruned backtracking search over K_7 with both block types required";
    SearchConfig cfg;
    cfg.pruning = Pruning::None;
    cfg.restarts = false;
    const SearchOutcome out = search_multidecomposition(Host::complete(7), cfg);
    EnumerationBranch br{{0, 0}, out.stats.placements, 1, out.status == SearchStatus::Found ? 1U : 0U, out.stats};
    rep.branches.push_back(br);
    rep.enumerative_nonexistence = out.status == SearchStatus::ExhaustedNone;
    return rep;
  }

  rep.enumerative_method =
      "for each (x,y) case: every edge-disjoint y-tuple of prisms with vertex 0 in the first, "
      "remainder tested for a hexagon decomposition";
  rep.enumerative_nonexistence = true;
  for (const BlockCounts& c : cases) {
    EnumerationBranch br = enumerate_prism_tuples(n, c);
    if (br.completions != 0) rep.enumerative_nonexistence = false;
    rep.branches.push_back(br);
  }
  return rep;
}

}  // namespace multidesign
