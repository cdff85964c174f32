#pragma once

// Design files. JSON is the interchange format:
//
//   {
//     "host": {"type": "complete", "n": 7},
//     "kind": "covering",
//     "blocks": [
//       {"type": "hexagon", "vertices": [0, 3, 6, 5, 2, 4]},
//       {"type": "prism", "triangles": [[0, 1, 2], [5, 4, 3]]}
//     ],
//     "leave": [],
//     "padding": [[0, 1], [0, 4]]
//   }
//
// Other host shapes: {"type": "bipartite", "left": [...], "right": [...]}
// and {"type": "explicit", "edges": [[a, b], ...]}. Block order is kept.
// The text format is for reading only.

#include <string>
#include <string_view>

#include "multidesign/graph.hpp"

namespace multidesign {

// Fixed key order, one block per line, trailing newline.
std::string emit_design_json(const Design& d);

// Throws ParseError on malformed JSON or a missing/mistyped field. Block
// shapes are not checked here (that is the verifier's job) beyond arity.
Design parse_design_json(std::string_view text);

std::string design_text(const Design& d);

}  // namespace multidesign
