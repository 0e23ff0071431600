#pragma once

// Printed reference values for the genus-0 tables (5 <= n <= 13) and the
// genus-2 bound table, transcribed as printed, misprints included.

#include <array>
#include <string_view>
#include <vector>

namespace reference {

struct Genus0Row {
  int n;
  std::string_view group;
  int n_f;
  int vcd_wf;
  int lambda;
};

// Cyclic and dihedral rows, followed by the polyhedral rows for n = 6, 8, 10, 12.
inline const std::vector<Genus0Row>& genus0_rows() {
  static const std::vector<Genus0Row> rows = {
      {5, "Z/4", 3, 0, 2}, {5, "Z/2", 4, 1, 1}, {5, "Z/5", 3, 0, 1},
      {5, "D_{2(5)}", 3, 0, 2}, {5, "Z/3", 3, 0, 1}, {5, "D_{2(3)}", 3, 0, 2},

      {6, "Z/5", 3, 0, 1}, {6, "Z/6", 3, 0, 2}, {6, "Z/3", 4, 1, 1}, {6, "Z/2", 5, 2, 1},
      {6, "D_{2(6)}", 3, 0, 3}, {6, "D_{2(3)}", 3, 0, 2}, {6, "D_{2(3)}", 4, 1, 2},
      {6, "D_{2(2)}", 4, 1, 2}, {6, "Z/4", 3, 0, 2}, {6, "Z/2", 4, 1, 1},
      {6, "D_{2(4)}", 3, 0, 3}, {6, "D_{2(2)}", 3, 0, 2}, {6, "D_{2(2)}", 4, 1, 2},

      {7, "Z/6", 3, 0, 2}, {7, "Z/3", 4, 1, 1}, {7, "Z/2", 5, 2, 1}, {7, "Z/7", 3, 0, 1},
      {7, "D_{2(7)}", 3, 0, 2}, {7, "Z/5", 3, 0, 1}, {7, "D_{2(5)}", 3, 0, 2},

      {8, "Z/7", 3, 0, 1}, {8, "Z/8", 3, 0, 3}, {8, "Z/4", 4, 1, 2}, {8, "Z/2", 6, 3, 1},
      {8, "D_{2(8)}", 3, 0, 4}, {8, "D_{2(4)}", 3, 0, 3}, {8, "D_{2(4)}", 4, 1, 3},
      {8, "D_{2(2)}", 4, 1, 2}, {8, "D_{2(2)}", 5, 2, 2}, {8, "Z/6", 3, 0, 2},
      {8, "Z/3", 4, 1, 1}, {8, "Z/2", 5, 2, 1}, {8, "D_{2(6)}", 3, 0, 3},
      {8, "D_{2(3)}", 3, 0, 2}, {8, "D_{2(3)}", 4, 1, 2}, {8, "D_{2(2)}", 4, 1, 2},

      {9, "Z/8", 3, 0, 3}, {9, "Z/4", 4, 1, 2}, {9, "Z/2", 6, 3, 1}, {9, "Z/9", 3, 0, 2},
      {9, "Z/3", 5, 2, 1}, {9, "D_{2(9)}", 3, 0, 3}, {9, "D_{2(3)}", 4, 1, 2},
      {9, "Z/7", 3, 0, 1}, {9, "D_{2(7)}", 3, 0, 2},

      {10, "Z/9", 3, 0, 2}, {10, "Z/3", 5, 2, 1}, {10, "Z/10", 3, 0, 2},
      {10, "Z/5", 4, 1, 1}, {10, "Z/2", 7, 4, 1}, {10, "D_{2(10)}", 3, 0, 3},
      {10, "D_{2(5)}", 3, 0, 2}, {10, "D_{2(5)}", 4, 1, 2}, {10, "D_{2(2)}", 5, 2, 2},
      {10, "Z/8", 3, 0, 3}, {10, "Z/4", 4, 1, 2}, {10, "Z/2", 6, 3, 1},
      {10, "D_{2(8)}", 3, 0, 4}, {10, "D_{2(4)}", 3, 0, 3}, {10, "D_{2(4)}", 4, 1, 3},
      {10, "D_{2(2)}", 4, 0, 2}, {10, "D_{2(2)}", 5, 2, 2},

      {11, "Z/10", 3, 0, 2}, {11, "Z/5", 4, 1, 1}, {11, "Z/2", 7, 4, 1},
      {11, "Z/11", 3, 0, 1}, {11, "D_{2(11)}", 3, 0, 2}, {11, "Z/9", 3, 0, 2},
      {11, "Z/3", 5, 2, 1}, {11, "D_{2(9)}", 3, 0, 2}, {11, "D_{2(3)}", 4, 1, 1},

      {12, "Z/11", 3, 0, 1}, {12, "Z/12", 3, 0, 3}, {12, "Z/6", 4, 1, 2},
      {12, "Z/4", 5, 2, 2}, {12, "Z/3", 6, 3, 1}, {12, "Z/2", 8, 5, 1},
      {12, "D_{2(12)}", 3, 0, 4}, {12, "D_{2(6)}", 3, 0, 3}, {12, "D_{2(6)}", 4, 1, 3},
      {12, "D_{2(4)}", 4, 1, 3}, {12, "D_{2(3)}", 4, 1, 2}, {12, "D_{2(3)}", 5, 2, 2},
      {12, "D_{2(2)}", 5, 2, 2}, {12, "D_{2(2)}", 6, 3, 2}, {12, "Z/10", 3, 0, 2},
      {12, "Z/5", 4, 1, 1}, {12, "Z/2", 7, 4, 1}, {12, "D_{2(10)}", 3, 0, 3},
      {12, "D_{2(5)}", 3, 0, 2}, {12, "D_{2(5)}", 4, 1, 2}, {12, "D_{2(2)}", 5, 2, 2},

      {13, "Z/12", 3, 0, 3}, {13, "Z/6", 3, 0, 3}, {13, "Z/4", 5, 2, 2},
      {13, "Z/2", 8, 5, 1}, {13, "Z/13", 3, 0, 1}, {13, "D_{2(13)}", 3, 0, 2},
      {13, "Z/11", 3, 0, 1}, {13, "D_{2(11)}", 3, 0, 2},

      {6, "S_4", 3, 0, 4}, {6, "A_4", 3, 0, 3},
      {8, "S_4", 3, 0, 4}, {8, "A_4", 3, 0, 3},
      {10, "A_4", 3, 0, 3},
      {12, "S_4", 3, 0, 4}, {12, "A_4", 4, 1, 3}, {12, "A_5", 3, 0, 4},
  };
  return rows;
}

/// The single misprint the regenerated tables are allowed to disagree with.
inline constexpr Genus0Row kDocumentedMisprint{10, "D_{2(2)}", 4, 0, 2};
inline constexpr Genus0Row kDocumentedCorrection{10, "D_{2(2)}", 4, 1, 2};

struct Genus2Row {
  std::string_view group;
  int order;
  int quotient_genus;
  std::vector<int> periods;
  int n_f_constant;    // n_F <= n/order + c
  int vcd_constant;    // vcd(WF) <= n/order + c
  int lambda_bound;
};

inline const std::vector<Genus2Row>& genus2_rows() {
  static const std::vector<Genus2Row> rows = {
      {"Z/2", 2, 0, {2, 2, 2, 2, 2, 2}, 6, 3, 1},
      {"Z/2", 2, 1, {2, 2}, 2, 2, 1},
      {"Z/3", 3, 0, {3, 3, 3, 3}, 4, 1, 1},
      {"Z/2xZ/2", 4, 0, {2, 2, 2, 2, 2}, 5, 2, 2},
      {"Z/4", 4, 0, {2, 2, 4, 4}, 4, 1, 2},
      {"Z/5", 5, 0, {5, 5, 5}, 3, 0, 1},
      {"Z/6", 6, 0, {3, 6, 6}, 3, 0, 2},
      {"Z/6", 6, 0, {2, 2, 3, 3}, 4, 1, 2},
      {"D_{2(3)}", 6, 0, {2, 2, 3, 3}, 4, 1, 2},
      {"Z/8", 8, 0, {2, 8, 8}, 3, 0, 3},
      {"~D_2", 8, 0, {4, 4, 4}, 3, 0, 2},
      {"D_{2(4)}", 8, 0, {2, 2, 2, 4}, 4, 1, 3},
      {"Z/10", 10, 0, {2, 5, 10}, 3, 0, 2},
      {"Z/2xZ/6", 12, 0, {2, 6, 6}, 3, 0, 3},
      {"D_{4,3,-1}", 12, 0, {3, 4, 4}, 3, 0, 3},
      {"D_{2(6)}", 12, 0, {2, 2, 2, 3}, 4, 1, 3},
      {"D_{2,8,3}", 16, 0, {2, 4, 8}, 3, 0, 4},
      {"Z/2x|(Z/2xZ/2xZ/3)", 24, 0, {2, 4, 6}, 3, 0, 4},
      {"SL_2(3)", 24, 0, {3, 3, 4}, 3, 0, 4},
      {"GL_2(4)", 48, 0, {2, 3, 8}, 3, 0, 5},
  };
  return rows;
}

}  // namespace reference
