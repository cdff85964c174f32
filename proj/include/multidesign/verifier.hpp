#pragma once

// Independent checker for designs. Block edge sets are recomputed here from
// the raw vertex tuples; nothing is shared with the construction code.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multidesign/graph.hpp"

namespace multidesign {

enum class FindingCode : std::uint8_t {
  MalformedBlock,      // repeated vertex
  UnrecognizedBlock,   // edge set is not the declared shape
  VertexOutsideHost,
  EdgeOutsideHost,     // block or padding edge that the host does not have
  OverlappingBlocks,   // edge used more often than the host provides
  UncoveredEdges,
  LeaveMismatch,
  LeaveOverlapsBlock,
  PaddingMismatch,
  UnexpectedLeave,
  UnexpectedPadding,
  MissingHexagon,
  MissingPrism,
};

std::string to_string(FindingCode code);

struct Finding {
  FindingCode code;
  std::string message;
  EdgeList edges;
  std::optional<std::size_t> block_index;
};

struct VertexIncidence {
  Vertex vertex = 0;
  std::uint32_t hexagons = 0;
  std::uint32_t prisms = 0;
  friend bool operator==(const VertexIncidence&, const VertexIncidence&) = default;
};

struct VerificationReport {
  bool valid = false;
  std::vector<Finding> failures;
  std::size_t hexagon_count = 0;
  std::size_t prism_count = 0;
  EdgeList leave;    // host edges no block uses
  EdgeList padding;  // extra uses beyond the host multiplicity
  std::vector<VertexIncidence> incidence;
};

struct VerifyOptions {
  // Single-type designs (pure hexagon or pure prism decompositions used as
  // construction ingredients) are checked with this off.
  bool require_both_types = true;
};

VerificationReport verify_design(const Design& d, VerifyOptions options = {});

// Hexagon and prism counts through every host vertex, ordered by vertex.
std::vector<VertexIncidence> incidence_table(const Design& d);

}  // namespace multidesign
