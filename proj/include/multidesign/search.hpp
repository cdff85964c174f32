#pragma once

// Exhaustive backtracking over hexagon/prism placements.
//
// Branching rule: at every node take one uncovered edge (at the vertex of
// least remaining degree) and branch over every block of an allowed type that
// contains it and lies inside the uncovered edges, each block proposed once,
// prisms first. A node is pruned when some vertex's remaining degree cannot
// be written as 2p + 3q within the remaining block budget, or when the
// remaining edge count cannot be split into the remaining blocks.
//
// With restarts on, the search runs in doubling node slices, later slices
// taking candidates in a seeded random order. Results are deterministic.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multidesign/feasibility.hpp"
#include "multidesign/graph.hpp"

namespace multidesign {

enum class BlockTypes : std::uint8_t { HexagonsOnly, PrismsOnly, Both };

// Degree: edge-count and per-vertex 2p + 3q pruning. None: every partial
// placement is expanded and only complete covers are tested.
enum class Pruning : std::uint8_t { Degree, None };

std::string to_string(BlockTypes types);
std::optional<BlockTypes> parse_block_types(std::string_view text);

struct SearchConfig {
  BlockTypes allowed = BlockTypes::Both;
  std::uint32_t min_hexagons = 1;
  std::uint32_t min_prisms = 1;
  std::optional<BlockCounts> target;       // exact (x, y) when set
  std::optional<std::uint64_t> node_budget;
  // On a complete host, restricts the root to one block per orbit of the
  // stabiliser of the first edge {0,1}.
  bool symmetry_breaking = true;
  Pruning pruning = Pruning::Degree;
  bool restarts = true;
  // Counts blocks proposed twice at one node (expected to stay zero).
  bool instrument = false;

  // Pure single-type configuration with no minimums.
  static SearchConfig only(BlockTypes types);
};

enum class SearchStatus : std::uint8_t { Found, ExhaustedNone, BudgetExceeded };

std::string to_string(SearchStatus status);

struct SearchStats {
  std::uint64_t nodes = 0;       // nodes expanded
  std::uint64_t max_depth = 0;
  std::uint64_t placements = 0;  // blocks placed
  std::uint64_t duplicate_proposals = 0;

  SearchStats& operator+=(const SearchStats& other);
  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::ExhaustedNone;
  std::optional<Design> design;
  SearchStats stats;
};

// Hosts with more than this many vertices need an explicit node budget.
inline constexpr std::size_t kUnbudgetedVertexLimit = 10;

// Searches for a decomposition of `host` (all multiplicities 1, at most 64
// vertices). Throws SearchRequestError for multigraph hosts, oversize hosts,
// or a missing budget on a large host.
SearchOutcome search_multidecomposition(const Host& host, const SearchConfig& cfg);

enum class ExtremalKind : std::uint8_t { Packing, Covering };

// Looks for a packing with leave of exactly `bound` edges (covering with
// padding of exactly `bound` extra edge uses) of a complete host. Candidate
// leaves/paddings containing edge {0,1} are enumerated in lexicographic order
// (every nonempty edge multiset of K_n is equivalent to one containing it).
// Throws SearchRequestError when the bound fails the 6x + 9y arithmetic.
SearchOutcome find_extremal(const Host& host, ExtremalKind kind, std::uint64_t bound,
                            std::optional<std::uint64_t> node_budget = std::nullopt);

struct EnumerationBranch {
  BlockCounts counts;              // the (x, y) case handled
  std::uint64_t prism_placements;  // prism tuples enumerated
  std::uint64_t remainders_tested; // tuples whose complement was searched
  std::uint64_t completions;       // remainders that decomposed into hexagons
  SearchStats stats;
};

struct NonexistenceReport {
  std::uint32_t n = 0;
  bool analytic_nonexistence = false;
  std::vector<std::string> analytic_trace;
  bool enumerative_nonexistence = false;
  std::string enumerative_method;
  std::vector<EnumerationBranch> branches;

  [[nodiscard]] bool agree() const { return analytic_nonexistence && enumerative_nonexistence; }
};

// Two independent certificates that K_n has no hexagon/prism decomposition,
// for n in {7, 9, 10}. Throws UnsupportedOrder for other n.
NonexistenceReport confirm_nonexistence(std::uint32_t n);

}  // namespace multidesign
