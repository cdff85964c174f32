#include "multidesign/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <random>

#include "multidesign/errors.hpp"

namespace multidesign {

std::string to_string(BlockTypes types) {
  switch (types) {
    case BlockTypes::HexagonsOnly: return "hexagon";
    case BlockTypes::PrismsOnly: return "prism";
    case BlockTypes::Both: return "both";
  }
  return "?";
}

std::optional<BlockTypes> parse_block_types(std::string_view text) {
  if (text == "hexagon" || text == "hexagons") return BlockTypes::HexagonsOnly;
  if (text == "prism" || text == "prisms") return BlockTypes::PrismsOnly;
  if (text == "both") return BlockTypes::Both;
  return std::nullopt;
}

std::string to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::ExhaustedNone: return "exhausted-none";
    case SearchStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

SearchConfig SearchConfig::only(BlockTypes types) {
  SearchConfig cfg;
  cfg.allowed = types;
  cfg.min_hexagons = 0;
  cfg.min_prisms = 0;
  return cfg;
}

SearchStats& SearchStats::operator+=(const SearchStats& other) {
  nodes += other.nodes;
  max_depth = std::max(max_depth, other.max_depth);
  placements += other.placements;
  duplicate_proposals += other.duplicate_proposals;
  return *this;
}

namespace detail {

namespace {

constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max() / 4;
constexpr std::uint64_t kFirstSlice = 1000;

inline std::size_t local_index(int a, int b) {
  if (a > b) std::swap(a, b);
  return static_cast<std::size_t>(b) * (b - 1) / 2 + a;
}

struct Candidate {
  Block block;  // canonical, local labels
  std::array<std::pair<std::uint8_t, std::uint8_t>, 9> edges{};
  std::uint8_t edge_count = 0;

  friend bool operator<(const Candidate& x, const Candidate& y) { return x.block < y.block; }
};

Candidate make_candidate(const Block& b) {
  Candidate c{canonical_form(b), {}, 0};
  const auto& v = c.block.vertices();
  auto add = [&](Vertex a, Vertex d) {
    c.edges[c.edge_count++] = {static_cast<std::uint8_t>(std::min(a, d)), static_cast<std::uint8_t>(std::max(a, d))};
  };
  if (c.block.is_hexagon()) {
    for (int i = 0; i < 6; ++i) add(v[i], v[(i + 1) % 6]);
  } else {
    add(v[0], v[1]);
    add(v[1], v[2]);
    add(v[0], v[2]);
    add(v[3], v[4]);
    add(v[4], v[5]);
    add(v[3], v[5]);
    add(v[0], v[3]);
    add(v[1], v[4]);
    add(v[2], v[5]);
  }
  return c;
}

// Backtracking engine over an edge multiset on local vertices 0..n-1.
class Engine {
 public:
  Engine(int n, const std::vector<std::pair<int, int>>& edges, const SearchConfig& cfg, bool symmetric)
      : n_(n), cfg_(cfg), symmetric_(symmetric), count_(pair_count(n), 0) {
    for (auto [a, b] : edges) {
      auto& c = count_[local_index(a, b)];
      if (c == 255) throw SearchRequestError("edge multiplicity above 255");
      ++c;
      adj_[a] |= std::uint64_t{1} << b;
      adj_[b] |= std::uint64_t{1} << a;
      ++deg_[a];
      ++deg_[b];
      ++remaining_;
    }
    const bool hex_ok = cfg_.allowed != BlockTypes::PrismsOnly;
    const bool prism_ok = cfg_.allowed != BlockTypes::HexagonsOnly;
    hex_limit_ = cfg_.target ? cfg_.target->hexagons : (hex_ok ? kUnlimited : 0);
    prism_limit_ = cfg_.target ? cfg_.target->prisms : (prism_ok ? kUnlimited : 0);
    if (symmetric_ && n_ >= 6) {
      root_reps_ = {canonical_form(Block::hexagon({0, 1, 2, 3, 4, 5})),
                    canonical_form(Block::prism({0, 1, 2}, {3, 4, 5})),
                    canonical_form(Block::prism({0, 2, 3}, {1, 4, 5}))};
    }
  }

  // One pass with node cap `slice`; seed 0 keeps the deterministic order.
  SearchStatus run(std::uint64_t slice, std::uint64_t seed) {
    budget_ = stats_.nodes + slice;
    budget_hit_ = false;
    shuffle_ = seed != 0;
    rng_.seed(seed);
    if (!feasible()) return SearchStatus::ExhaustedNone;
    if (dfs(0)) return SearchStatus::Found;
    return budget_hit_ ? SearchStatus::BudgetExceeded : SearchStatus::ExhaustedNone;
  }

  [[nodiscard]] const std::vector<Block>& solution() const { return stack_; }
  [[nodiscard]] const SearchStats& stats() const { return stats_; }

 private:
  [[nodiscard]] std::uint64_t hex_cap() const { return hex_limit_ - placed_hex_; }
  [[nodiscard]] std::uint64_t prism_cap() const { return prism_limit_ - placed_prism_; }

  // Whether the remaining edges can still be split into exactly `a`
  // hexagons and `b` prisms as far as vertex degrees can tell: each vertex
  // needs q prisms with q = r (mod 2), 3q <= r, q <= b and (r - 3q) / 2 <= a,
  // and the chosen q must add up to 6b.
  [[nodiscard]] bool split_ok(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t lo_sum = 0, hi_sum = 0;
    for (int v = 0; v < n_; ++v) {
      const std::uint64_t r = deg_[v];
      if (r == 0) continue;
      std::uint64_t lo = r % 2;
      if (r > 2 * a) lo = std::max(lo, (r - 2 * a + 2) / 3);
      if (lo % 2 != r % 2) ++lo;
      std::uint64_t hi = std::min(b, r / 3);
      if (hi % 2 != r % 2) {
        if (hi == 0) return false;
        --hi;
      }
      if (lo > hi) return false;
      lo_sum += lo;
      hi_sum += hi;
    }
    return lo_sum <= 6 * b && 6 * b <= hi_sum;
  }

  [[nodiscard]] bool feasible() const {
    const std::uint64_t hc = hex_cap(), pc = prism_cap();
    if (cfg_.pruning == Pruning::None) {
      if (remaining_ != 0) return true;
      return placed_hex_ >= cfg_.min_hexagons && placed_prism_ >= cfg_.min_prisms && (!cfg_.target || (hc == 0 && pc == 0));
    }
    if (cfg_.target) return 6 * hc + 9 * pc == remaining_ && split_ok(hc, pc);
    const std::uint64_t need_h = placed_hex_ >= cfg_.min_hexagons ? 0 : cfg_.min_hexagons - placed_hex_;
    const std::uint64_t need_p = placed_prism_ >= cfg_.min_prisms ? 0 : cfg_.min_prisms - placed_prism_;
    for (std::uint64_t b = need_p; b <= pc && 9 * b <= remaining_; ++b) {
      const std::uint64_t rest = remaining_ - 9 * b;
      if (rest % 6 == 0 && rest / 6 >= need_h && rest / 6 <= hc && split_ok(rest / 6, b)) return true;
    }
    return false;
  }

  void place(const Candidate& c, int delta) {
    for (int i = 0; i < c.edge_count; ++i) {
      const int a = c.edges[i].first, b = c.edges[i].second;
      const std::size_t idx = local_index(a, b);
      if (delta < 0) {
        if (--count_[idx] == 0) {
          adj_[a] &= ~(std::uint64_t{1} << b);
          adj_[b] &= ~(std::uint64_t{1} << a);
        }
        --deg_[a];
        --deg_[b];
        --remaining_;
      } else {
        if (count_[idx]++ == 0) {
          adj_[a] |= std::uint64_t{1} << b;
          adj_[b] |= std::uint64_t{1} << a;
        }
        ++deg_[a];
        ++deg_[b];
        ++remaining_;
      }
    }
    std::uint64_t& placed = c.block.is_hexagon() ? placed_hex_ : placed_prism_;
    if (delta < 0) {
      ++placed;
    } else {
      --placed;
    }
  }

  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  void hexagons_through(int u, int v, std::vector<Candidate>& out) const {
    std::uint64_t as = adj_[v] & ~bit(u);
    while (as) {
      const int a = std::countr_zero(as);
      as &= as - 1;
      std::uint64_t bs = adj_[a] & ~(bit(u) | bit(v));
      while (bs) {
        const int b = std::countr_zero(bs);
        bs &= bs - 1;
        std::uint64_t cs = adj_[b] & ~(bit(u) | bit(v) | bit(a));
        while (cs) {
          const int c = std::countr_zero(cs);
          cs &= cs - 1;
          std::uint64_t ds = adj_[c] & adj_[u] & ~(bit(v) | bit(a) | bit(b));
          while (ds) {
            const int d = std::countr_zero(ds);
            ds &= ds - 1;
            out.push_back(make_candidate(Block::hexagon(
                {Vertex(u), Vertex(v), Vertex(a), Vertex(b), Vertex(c), Vertex(d)})));
          }
        }
      }
    }
  }

  [[nodiscard]] bool has(int a, int b) const { return (adj_[a] >> b) & 1U; }

  void prisms_through(int u, int v, std::vector<Candidate>& out) const {
    // {u,v} inside a triangle {u,v,w}.
    std::uint64_t ws = adj_[u] & adj_[v];
    while (ws) {
      const int w = std::countr_zero(ws);
      ws &= ws - 1;
      const std::uint64_t used = bit(u) | bit(v) | bit(w);
      const std::uint64_t reach = (adj_[u] | adj_[v] | adj_[w]) & ~used;
      std::uint64_t as = reach;
      while (as) {
        const int a = std::countr_zero(as);
        as &= as - 1;
        std::uint64_t bs = adj_[a] & ~used & ~((bit(a) << 1) - 1);
        while (bs) {
          const int b = std::countr_zero(bs);
          bs &= bs - 1;
          std::uint64_t cs = adj_[a] & adj_[b] & ~used & ~((bit(b) << 1) - 1);
          while (cs) {
            const int c = std::countr_zero(cs);
            cs &= cs - 1;
            std::array<int, 3> t{a, b, c};
            do {
              if (has(u, t[0]) && has(v, t[1]) && has(w, t[2])) {
                out.push_back(make_candidate(Block::prism({Vertex(u), Vertex(v), Vertex(w)},
                                                          {Vertex(t[0]), Vertex(t[1]), Vertex(t[2])})));
              }
            } while (std::next_permutation(t.begin(), t.end()));
          }
        }
      }
    }
    // {u,v} as a rung: triangles {u,a,b} and {v,c,d}.
    std::uint64_t as = adj_[u] & ~bit(v);
    while (as) {
      const int a = std::countr_zero(as);
      as &= as - 1;
      std::uint64_t bs = adj_[u] & adj_[a] & ~bit(v) & ~((bit(a) << 1) - 1);
      while (bs) {
        const int b = std::countr_zero(bs);
        bs &= bs - 1;
        const std::uint64_t used = bit(u) | bit(a) | bit(b);
        std::uint64_t cs = adj_[v] & ~used;
        while (cs) {
          const int c = std::countr_zero(cs);
          cs &= cs - 1;
          std::uint64_t ds = adj_[v] & adj_[c] & ~used & ~((bit(c) << 1) - 1);
          while (ds) {
            const int d = std::countr_zero(ds);
            ds &= ds - 1;
            if (has(a, c) && has(b, d)) {
              out.push_back(make_candidate(Block::prism({Vertex(u), Vertex(a), Vertex(b)},
                                                        {Vertex(v), Vertex(c), Vertex(d)})));
            }
            if (has(a, d) && has(b, c)) {
              out.push_back(make_candidate(Block::prism({Vertex(u), Vertex(a), Vertex(b)},
                                                        {Vertex(v), Vertex(d), Vertex(c)})));
            }
          }
        }
      }
    }
  }

  bool dfs(std::uint64_t depth) {
    if (stats_.nodes >= budget_) {
      budget_hit_ = true;
      return false;
    }
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    if (remaining_ == 0) return true;  // feasible() already enforced the minimums

    // Most constrained edge: least remaining degree, then least neighbour
    // degree, ties to the lower label.
    int u = 0;
    while (adj_[u] == 0) ++u;
    for (int x = u + 1; x < n_; ++x) {
      if (adj_[x] != 0 && deg_[x] < deg_[u]) u = x;
    }
    int v = std::countr_zero(adj_[u]);
    for (std::uint64_t ns = adj_[u]; ns; ns &= ns - 1) {
      const int y = std::countr_zero(ns);
      if (deg_[y] < deg_[v]) v = y;
    }

    std::vector<Candidate> cands;
    if (hex_cap() > 0) hexagons_through(u, v, cands);
    if (prism_cap() > 0) prisms_through(u, v, cands);
    std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
      if (x.block.is_prism() != y.block.is_prism()) return x.block.is_prism();
      return x.block < y.block;
    });
    if (cfg_.instrument) {
      for (std::size_t i = 1; i < cands.size(); ++i) {
        if (cands[i].block == cands[i - 1].block) ++stats_.duplicate_proposals;
      }
    }
    if (depth == 0 && !root_reps_.empty()) {
      std::erase_if(cands, [&](const Candidate& c) {
        return std::find(root_reps_.begin(), root_reps_.end(), c.block) == root_reps_.end();
      });
    } else if (shuffle_) {
      std::shuffle(cands.begin(), cands.end(), rng_);
    }

    for (const Candidate& c : cands) {
      place(c, -1);
      ++stats_.placements;
      stack_.push_back(c.block);
      if (feasible() && dfs(depth + 1)) return true;
      stack_.pop_back();
      place(c, +1);
      if (budget_hit_) return false;
    }
    return false;
  }

  int n_;
  SearchConfig cfg_;
  bool symmetric_;
  std::uint64_t budget_ = 0;
  bool shuffle_ = false;
  std::mt19937_64 rng_;
  std::vector<std::uint8_t> count_;
  std::array<std::uint64_t, 64> adj_{};
  std::array<std::uint64_t, 64> deg_{};
  std::uint64_t remaining_ = 0;
  std::uint64_t hex_limit_ = 0, prism_limit_ = 0;
  std::uint64_t placed_hex_ = 0, placed_prism_ = 0;
  std::vector<Block> root_reps_;
  std::vector<Block> stack_;
  SearchStats stats_;
  bool budget_hit_ = false;
};

}  // namespace

// Runs the engine on an edge multiset with arbitrary vertex labels and maps
// the solution back. `result_host` becomes the host of the found design.
SearchOutcome run_engine(const EdgeList& edges, const SearchConfig& cfg, bool symmetric, const Host& result_host) {
  std::vector<Vertex> labels;
  for (const Edge& e : edges) {
    labels.push_back(e.lo);
    labels.push_back(e.hi);
  }
  for (Vertex v : result_host.vertices()) labels.push_back(v);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.size() > 64) throw SearchRequestError("search supports at most 64 vertices");

  auto local = [&](Vertex x) {
    return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), x) - labels.begin());
  };
  std::vector<std::pair<int, int>> local_edges;
  local_edges.reserve(edges.size());
  for (const Edge& e : edges) local_edges.emplace_back(local(e.lo), local(e.hi));

  // Symmetry reduction assumes labels are exactly 0..n-1 of a complete graph.
  const bool sym = symmetric && cfg.symmetry_breaking && !labels.empty() && labels.back() + 1 == labels.size();
  Engine engine(static_cast<int>(labels.size()), local_edges, cfg, sym);
  SearchOutcome out;
  const std::uint64_t budget = cfg.node_budget.value_or(kUnlimited);
  if (!cfg.restarts) {
    out.status = engine.run(budget, 0);
  } else {
    // Doubling slices, the first in the deterministic order and later ones
    // shuffled. Any slice that finishes is a complete enumeration.
    std::uint64_t slice = kFirstSlice;
    for (std::uint64_t seed = 0;; ++seed) {
      const std::uint64_t left = budget - engine.stats().nodes;
      out.status = engine.run(std::min(slice, left), seed);
      if (out.status != SearchStatus::BudgetExceeded || slice >= left) break;
      slice *= 2;
    }
  }
  out.stats = engine.stats();
  if (out.status == SearchStatus::Found) {
    Design d;
    d.host = result_host;
    d.kind = DesignKind::Decomposition;
    for (const Block& b : engine.solution()) d.blocks.push_back(canonical_form(relabel(b, labels)));
    out.design = std::move(d);
  }
  return out;
}

std::uint64_t unlimited() { return kUnlimited; }

}  // namespace detail

SearchOutcome search_multidecomposition(const Host& host, const SearchConfig& cfg) {
  const EdgeList edges = host_edges(host);
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw SearchRequestError("host has repeated edges; search_multidecomposition needs a simple host");
  }
  const std::size_t order = host.vertices().size();
  if (order > 64) throw SearchRequestError("search supports at most 64 vertices");
  if (order > kUnbudgetedVertexLimit && !cfg.node_budget) {
    throw SearchRequestError("hosts with more than " + std::to_string(kUnbudgetedVertexLimit) +
                             " vertices need an explicit node budget");
  }
  if (cfg.node_budget && *cfg.node_budget == 0) throw SearchRequestError("node budget must be positive");
  return detail::run_engine(edges, cfg, host.is_complete(), host);
}

namespace {

// Advances `idx` to the next k-combination (with_repetition: multiset) of
// {lowest..size-1} with idx[0] held fixed. Returns false when exhausted.
bool next_combination(std::vector<std::size_t>& idx, std::size_t size, bool with_repetition) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 1;) {
    const std::size_t limit = with_repetition ? size - 1 : size - (k - i);
    if (idx[i] < limit) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = with_repetition ? idx[i] : idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

SearchOutcome find_extremal(const Host& host, ExtremalKind kind, std::uint64_t bound,
                            std::optional<std::uint64_t> node_budget) {
  const EdgeList edges = host_edges(host);
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw SearchRequestError("find_extremal needs a simple host");
  }
  const std::size_t order = host.vertices().size();
  if (order > kUnbudgetedVertexLimit && !node_budget) {
    throw SearchRequestError("hosts with more than " + std::to_string(kUnbudgetedVertexLimit) +
                             " vertices need an explicit node budget");
  }
  const std::uint64_t e = edges.size();
  const bool packing = kind == ExtremalKind::Packing;
  if (packing && bound > e) throw SearchRequestError("leave larger than the host");
  const std::uint64_t used = packing ? e - bound : e + bound;
  if (block_count_solutions(used, true).empty()) {
    throw SearchRequestError(std::to_string(used) + " = 6x + 9y has no solution with x, y >= 1 (" +
                             (packing ? "leave " : "padding ") + std::to_string(bound) + ")");
  }

  SearchConfig cfg;  // both types, at least one of each
  std::uint64_t budget_left = node_budget.value_or(detail::unlimited());
  SearchOutcome total;
  total.status = SearchStatus::ExhaustedNone;

  auto attempt = [&](const EdgeList& chosen) -> bool {
    EdgeList multiset;
    if (packing) {
      std::set_difference(edges.begin(), edges.end(), chosen.begin(), chosen.end(), std::back_inserter(multiset));
    } else {
      std::merge(edges.begin(), edges.end(), chosen.begin(), chosen.end(), std::back_inserter(multiset));
    }
    cfg.node_budget = budget_left;
    SearchOutcome one = detail::run_engine(multiset, cfg, chosen.empty() && host.is_complete(), host);
    total.stats += one.stats;
    budget_left -= std::min(budget_left, one.stats.nodes);
    if (one.status == SearchStatus::BudgetExceeded || (budget_left == 0 && one.status != SearchStatus::Found)) {
      total.status = SearchStatus::BudgetExceeded;
      return true;
    }
    if (one.status == SearchStatus::Found) {
      Design d = std::move(*one.design);
      d.kind = packing ? DesignKind::Packing : DesignKind::Covering;
      (packing ? d.leave : d.padding) = chosen;
      total.status = SearchStatus::Found;
      total.design = std::move(d);
      return true;
    }
    return false;
  };

  if (bound == 0) {
    attempt({});
    return total;
  }

  // On a complete host every nonempty candidate is equivalent to one that
  // contains the least edge {0,1}; elsewhere the first index runs freely.
  const std::size_t first_limit = host.is_complete() ? 1 : e;
  for (std::size_t first = 0; first < first_limit; ++first) {
    std::vector<std::size_t> idx(bound);
    idx[0] = first;
    bool valid = true;
    for (std::size_t j = 1; j < bound; ++j) {
      idx[j] = packing ? idx[j - 1] + 1 : first;
      if (idx[j] >= e) valid = false;
    }
    if (!valid) continue;
    do {
      EdgeList chosen;
      for (std::size_t i : idx) chosen.push_back(edges[i]);
      if (attempt(chosen)) return total;
    } while (next_combination(idx, e, !packing));
  }
  return total;
}

}  // namespace multidesign
