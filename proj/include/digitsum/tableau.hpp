#pragma once

#include <string>
#include <vector>

#include "digitsum/types.hpp"

namespace digitsum {

/// 1-based board coordinates: row counts from the top, column from the left.
struct PegPosition {
  int row;
  long long col;
};

/// A rectangular board of holes, some holding labeled pegs. Rows equal the
/// base; width is fixed at construction. Labels are arbitrary nonnegative
/// integers, at most one peg per hole.
class PegBoard {
 public:
  PegBoard(Base b, long long width);

  int rows() const noexcept { return static_cast<int>(grid_.size()); }
  long long width() const noexcept { return width_; }
  Base base() const noexcept { return base_; }

  bool in_bounds(PegPosition p) const noexcept;
  bool occupied(PegPosition p) const;
  /// Label of the peg at p, or -1 for an empty hole.
  long long label_at(PegPosition p) const;
  void place(PegPosition p, long long label);
  void move(PegPosition from, PegPosition to);
  /// Number of pegs in a row (pegs need not be contiguous mid-rearrangement).
  long long row_count(int row) const;

 private:
  Base base_;
  long long width_;
  std::vector<std::vector<long long>> grid_;
};

/// Whether the b^k-shift from `from` to (row+1, col - b^k) is permissible:
/// the source holds a peg, the target hole exists and is empty, and source
/// and target columns lie in a common b^{k+1}-block, i.e. there is l with
/// (l-1)*b^{k+1} < col - b^k < col <= l*b^{k+1}.
bool is_permissible_shift(const PegBoard& board, PegPosition from, unsigned k);

/// b x k arrangement of the integers 0..bk-1 with digitwise-dominated,
/// digit-sum-graded columns.
struct Tableau {
  Base base;
  long long width;
  std::vector<std::vector<long long>> entries;  // entries[i][j], 0-based
};

/// Builds the canonical tableau for (b, k) by permissible power shifts:
/// a single row of bk pegs labeled 0..bk-1 is padded to a power-of-b board,
/// then at each exponent level every permissible shift is applied, scanning
/// rows top to bottom and columns right to left until none remains, before
/// recursing on the freshly formed sub-board. Deterministic; output always
/// satisfies verify_tableau. Requires k >= 1.
Tableau build_tableau(Base b, long long k);

enum class TableauProperty {
  kPermutation,   // entries are exactly 0..bk-1
  kFirstRow,      // entries[0][j] == j
  kDominance,     // digit_dominates(entries[0][j], entries[i][j])
  kDigitSumStep,  // s_b(entries[i][j]) == s_b(entries[0][j]) + i
};

struct TableauViolation {
  TableauProperty property;
  int row;        // 1-based; 0 when the violation is not cell-specific
  long long col;  // 1-based; 0 likewise
  std::string detail;
};

struct TableauReport {
  bool valid = true;
  std::vector<TableauViolation> violations;
};

/// Checks all tableau properties; violations are reported per cell, never
/// thrown.
TableauReport verify_tableau(const Tableau& t);

}  // namespace digitsum
