#pragma once

// 1-based copies of the bundled explicit designs, for side-by-side reading.
// Prisms are listed as a,b,c,d,e,f for [a,b,c;d,e,f]. The covering of K_17
// lists only its explicit blocks.

#include <array>
#include <string_view>
#include <vector>

struct OneBasedEntry {
  std::string_view key;
  std::vector<std::array<unsigned, 6>> prisms;
  std::vector<std::array<unsigned, 6>> hexagons;
  std::vector<std::array<unsigned, 2>> extra;  // leave or padding
};

inline const std::vector<OneBasedEntry>& one_based_entries() {
  static const std::vector<OneBasedEntry> entries = {
      {"decomposition-13",
       {{1, 2, 3, 7, 9, 8}, {1, 4, 5, 9, 12, 10}, {3, 4, 6, 7, 11, 10}, {2, 5, 6, 8, 12, 11}},
       {{13, 1, 6, 8, 5, 11}, {13, 2, 4, 7, 6, 12}, {13, 3, 5, 9, 4, 10}, {13, 7, 12, 3, 9, 6}, {13, 8, 10, 2, 7, 5}, {13, 9, 11, 1, 8, 4}, {1, 10, 3, 11, 2, 12}},
       {}},
      {"decomposition-15",
       {{1, 5, 10, 6, 8, 12}, {4, 8, 13, 9, 11, 15}, {7, 11, 1, 12, 14, 3}, {10, 14, 4, 15, 2, 6}, {13, 2, 7, 3, 5, 9}},
       {{1, 12, 11, 13, 5, 15}, {4, 15, 14, 1, 8, 3}, {7, 3, 2, 4, 11, 6}, {10, 6, 5, 7, 14, 9}, {13, 9, 8, 10, 2, 12}, {1, 2, 11, 3, 6, 13}, {4, 5, 14, 6, 9, 1}, {7, 8, 2, 9, 12, 4}, {10, 11, 5, 12, 15, 7}, {13, 14, 8, 15, 3, 10}},
       {}},
      {"decomposition-19",
       {{2, 11, 14, 17, 4, 18}, {3, 12, 15, 18, 5, 19}, {4, 13, 16, 19, 6, 11}, {5, 14, 17, 11, 7, 12}, {6, 15, 18, 12, 8, 13}, {7, 16, 19, 13, 9, 14}, {8, 17, 11, 14, 10, 15}, {9, 18, 12, 15, 2, 16}, {10, 19, 13, 16, 3, 17}},
       {{2, 12, 14, 3, 11, 1}, {3, 13, 15, 4, 12, 1}, {4, 14, 16, 5, 13, 1}, {5, 15, 17, 6, 14, 1}, {6, 16, 18, 7, 15, 1}, {7, 17, 19, 8, 16, 1}, {8, 18, 11, 9, 17, 1}, {9, 19, 12, 10, 18, 1}, {10, 11, 13, 2, 19, 1}, {2, 3, 10, 4, 9, 5}, {2, 6, 8, 7, 3, 4}, {2, 7, 4, 5, 3, 8}, {2, 10, 8, 4, 6, 9}, {3, 6, 10, 5, 7, 9}, {5, 6, 7, 10, 9, 8}},
       {}},
      {"packing-7",
       {{1, 3, 5, 4, 6, 2}},
       {{1, 2, 3, 4, 5, 6}},
       {{1, 7}, {2, 7}, {3, 7}, {4, 7}, {5, 7}, {6, 7}}},
      {"packing-8",
       {{2, 5, 7, 4, 1, 8}},
       {{1, 2, 3, 4, 5, 6}, {1, 3, 5, 8, 6, 7}, {3, 8, 2, 6, 4, 7}},
       {{3, 6}}},
      {"packing-9",
       {{1, 2, 3, 6, 5, 4}, {1, 4, 7, 9, 8, 3}, {2, 6, 8, 7, 9, 5}},
       {{1, 5, 3, 6, 7, 8}},
       {{2, 4}, {2, 9}, {4, 9}}},
      {"packing-11",
       {{1, 7, 10, 9, 6, 3}, {1, 5, 6, 4, 10, 2}, {2, 5, 7, 11, 8, 4}, {1, 3, 11, 8, 2, 9}},
       {{3, 4, 9, 10, 6, 8}, {4, 5, 9, 7, 11, 6}, {3, 5, 11, 10, 8, 7}},
       {{1, 2}}},
      {"packing-17",
       {{2, 3, 5, 7, 8, 1}, {3, 6, 4, 9, 8, 10}, {2, 4, 9, 6, 5, 7}},
       {{2, 12, 5, 10, 11, 14}, {2, 10, 17, 4, 13, 11}, {4, 7, 13, 14, 5, 15}, {4, 11, 15, 8, 16, 12}, {1, 15, 14, 16, 5, 17}, {3, 12, 11, 17, 6, 15}, {1, 2, 16, 7, 14, 4}, {2, 13, 5, 8, 14, 17}, {7, 15, 10, 13, 9, 17}, {1, 13, 6, 9, 11, 16}, {1, 9, 12, 7, 3, 11}, {3, 10, 12, 8, 4, 16}, {3, 13, 16, 6, 12, 14}, {2, 8, 13, 17, 12, 15}, {6, 10, 16, 15, 9, 14}, {5, 9, 16, 17, 8, 11}, {1, 3, 17, 15, 13, 12}, {1, 6, 11, 7, 10, 14}},
       {{1, 10}}},
      {"covering-7",
       {{1, 2, 3, 6, 5, 4}},
       {{1, 4, 7, 6, 3, 5}, {1, 6, 2, 4, 5, 7}, {1, 2, 7, 3, 6, 5}},
       {{1, 2}, {1, 5}, {1, 6}, {3, 6}, {4, 5}, {5, 6}}},
      {"covering-8",
       {{1, 2, 8, 4, 3, 5}, {1, 5, 6, 3, 7, 8}},
       {{1, 7, 2, 6, 4, 8}, {2, 4, 7, 6, 3, 5}},
       {{1, 8}, {3, 5}}},
      {"covering-11",
       {{1, 2, 11, 6, 5, 7}, {1, 3, 5, 10, 2, 9}, {4, 6, 10, 7, 9, 8}},
       {{3, 4, 5, 8, 11, 6}, {1, 8, 2, 7, 3, 9}, {2, 4, 9, 11, 8, 6}, {1, 4, 3, 11, 10, 7}, {3, 8, 4, 11, 5, 10}},
       {{3, 4}, {8, 11}}},
      {"covering-17",
       {{1, 2, 3, 6, 5, 4}, {1, 4, 8, 7, 2, 6}},
       {{1, 5, 7, 8, 3, 9}, {1, 10, 3, 7, 4, 11}, {2, 8, 7, 11, 6, 9}, {5, 11, 8, 9, 7, 10}, {3, 5, 9, 4, 10, 6}, {2, 11, 3, 5, 8, 10}},
       {{3, 5}, {7, 8}}},
  };
  return entries;
}
