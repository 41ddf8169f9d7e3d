#pragma once

// Published strong Skolem starters for Z_11, Z_19 and Z_43, each in two
// displays: construction order ({alpha^i, beta * alpha^i} for i = 1..t) and
// Skolem order (pair i has difference i).

#include <cstdint>
#include <utility>
#include <vector>

namespace fixtures {

using PairList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

struct Table {
  std::uint32_t q;
  std::uint32_t alpha;
  std::uint32_t beta;
  PairList construction_order;
  PairList skolem_order;
};

inline const std::vector<Table>& paper_tables() {
  static const std::vector<Table> tables = {
      {11, 4, 2,
       {{4, 8}, {5, 10}, {9, 7}, {3, 6}, {1, 2}},
       {{1, 2}, {7, 9}, {3, 6}, {4, 8}, {5, 10}}},
      {11, 4, 6,
       {{4, 2}, {5, 8}, {9, 10}, {3, 7}, {1, 6}},
       {{9, 10}, {2, 4}, {5, 8}, {3, 7}, {1, 6}}},
      {19, 4, 2,
       {{4, 8}, {16, 13}, {7, 14}, {9, 18}, {17, 15}, {11, 3}, {6, 12}, {5, 10}, {1, 2}},
       {{1, 2}, {15, 17}, {13, 16}, {4, 8}, {5, 10}, {6, 12}, {7, 14}, {3, 11}, {9, 18}}},
      {19, 4, 10,
       {{4, 2}, {16, 8}, {7, 13}, {9, 14}, {17, 18}, {11, 15}, {6, 3}, {5, 12}, {1, 10}},
       {{17, 18}, {2, 4}, {3, 6}, {11, 15}, {9, 14}, {7, 13}, {5, 12}, {8, 16}, {1, 10}}},
      {43, 9, 2,
       {{9, 18},  {38, 33}, {41, 39}, {25, 7},  {10, 20}, {4, 8},   {36, 29},
        {23, 3},  {35, 27}, {14, 28}, {40, 37}, {16, 32}, {15, 30}, {6, 12},
        {11, 22}, {13, 26}, {31, 19}, {21, 42}, {17, 34}, {24, 5},  {1, 2}},
       {{1, 2},   {39, 41}, {37, 40}, {4, 8},   {33, 38}, {6, 12},  {29, 36},
        {27, 35}, {9, 18},  {10, 20}, {11, 22}, {19, 31}, {13, 26}, {14, 28},
        {15, 30}, {16, 32}, {17, 34}, {7, 25},  {5, 24},  {3, 23},  {21, 42}}},
      {43, 9, 22,
       {{9, 26},  {38, 19}, {41, 42}, {25, 34}, {10, 5},  {4, 2},   {36, 18},
        {23, 33}, {35, 39}, {14, 7},  {40, 20}, {16, 8},  {15, 29}, {6, 3},
        {11, 27}, {13, 28}, {31, 37}, {21, 32}, {17, 30}, {24, 12}, {1, 22}},
       {{41, 42}, {2, 4},   {3, 6},   {35, 39}, {5, 10},  {31, 37}, {7, 14},
        {8, 16},  {25, 34}, {23, 33}, {21, 32}, {12, 24}, {17, 30}, {15, 29},
        {13, 28}, {11, 27}, {9, 26},  {18, 36}, {19, 38}, {20, 40}, {1, 22}}},
  };
  return tables;
}

// The introductory example for Z_11, identical to the beta = 6 table.
inline PairList z11_example() { return {{9, 10}, {2, 4}, {5, 8}, {3, 7}, {1, 6}}; }

inline const std::vector<std::uint32_t> kQr11 = {1, 3, 4, 5, 9};
inline const std::vector<std::uint32_t> kNqr11 = {2, 6, 7, 8, 10};
inline const std::vector<std::uint32_t> kQr19 = {1, 4, 5, 6, 7, 9, 11, 16, 17};
// The published non-residue list for 19 omits 14 (= -5, and 5 is a residue).
inline const std::vector<std::uint32_t> kNqr19Printed = {2, 3, 8, 10, 12, 13, 15, 18};
inline const std::vector<std::uint32_t> kNqr19 = {2, 3, 8, 10, 12, 13, 14, 15, 18};
inline const std::vector<std::uint32_t> kQr43 = {1,  4,  6,  9,  10, 11, 13, 14, 15, 16, 17,
                                                 21, 23, 24, 25, 31, 35, 36, 38, 40, 41};
inline const std::vector<std::uint32_t> kNqr43 = {2,  3,  5,  7,  8,  12, 18, 19, 20, 22, 26,
                                                  27, 28, 29, 30, 32, 33, 34, 37, 39, 42};

}  // namespace fixtures
