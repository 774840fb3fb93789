#include "digitsum/tableau.hpp"

#include <algorithm>

#include "digitsum/digits.hpp"

namespace digitsum {

namespace {

long long pow_ll(long long base, unsigned exp) {
  long long r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

PegBoard::PegBoard(Base b, long long width) : base_(b), width_(width) {
  if (width < 1) throw std::invalid_argument("PegBoard width must be >= 1");
  grid_.assign(static_cast<std::size_t>(b.value()),
               std::vector<long long>(static_cast<std::size_t>(width), -1));
}

bool PegBoard::in_bounds(PegPosition p) const noexcept {
  return p.row >= 1 && p.row <= rows() && p.col >= 1 && p.col <= width_;
}

bool PegBoard::occupied(PegPosition p) const { return label_at(p) >= 0; }

long long PegBoard::label_at(PegPosition p) const {
  if (!in_bounds(p)) throw std::invalid_argument("position outside the board");
  return grid_[static_cast<std::size_t>(p.row - 1)]
              [static_cast<std::size_t>(p.col - 1)];
}

void PegBoard::place(PegPosition p, long long label) {
  if (!in_bounds(p)) throw std::invalid_argument("position outside the board");
  if (label < 0) throw std::invalid_argument("peg labels are nonnegative");
  auto& hole = grid_[static_cast<std::size_t>(p.row - 1)]
                    [static_cast<std::size_t>(p.col - 1)];
  if (hole >= 0) throw std::invalid_argument("hole already occupied");
  hole = label;
}

void PegBoard::move(PegPosition from, PegPosition to) {
  const long long label = label_at(from);
  if (label < 0) throw std::invalid_argument("no peg at source position");
  place(to, label);
  grid_[static_cast<std::size_t>(from.row - 1)]
       [static_cast<std::size_t>(from.col - 1)] = -1;
}

long long PegBoard::row_count(int row) const {
  if (row < 1 || row > rows()) {
    throw std::invalid_argument("row outside the board");
  }
  const auto& r = grid_[static_cast<std::size_t>(row - 1)];
  return std::count_if(r.begin(), r.end(), [](long long v) { return v >= 0; });
}

bool is_permissible_shift(const PegBoard& board, PegPosition from, unsigned k) {
  if (!board.in_bounds(from)) {
    throw std::invalid_argument("shift source outside the board");
  }
  if (!board.occupied(from)) return false;
  const long long b = board.base().value();
  const long long step = pow_ll(b, k);
  const PegPosition to{from.row + 1, from.col - step};
  if (!board.in_bounds(to) || board.occupied(to)) return false;
  // Common b^{k+1}-block: (l-1)*block < col - b^k < col <= l*block.
  const long long block = step * b;
  const long long l = (from.col + block - 1) / block;  // ceil(col / block)
  return (l - 1) * block < from.col - step;
}

namespace {

// One full canonical pass of b^k-shifts: rows top to bottom, columns right to
// left within each row. Returns whether any peg moved.
bool shift_pass(PegBoard& board, long long col_lo, long long col_hi,
                unsigned k) {
  const long long step = pow_ll(board.base().value(), k);
  bool moved = false;
  for (int i = 1; i <= board.rows(); ++i) {
    for (long long j = col_hi; j >= col_lo; --j) {
      const PegPosition from{i, j};
      if (is_permissible_shift(board, from, k)) {
        board.move(from, {i + 1, j - step});
        moved = true;
      }
    }
  }
  return moved;
}

std::string profile_string(const PegBoard& board, long long col_lo,
                           long long col_hi) {
  std::string s = "(";
  for (int i = 1; i <= board.rows(); ++i) {
    long long cnt = 0;
    for (long long j = col_lo; j <= col_hi; ++j) {
      if (board.occupied({i, j})) ++cnt;
    }
    s += std::to_string(cnt);
    s += i == board.rows() ? ")" : ",";
  }
  return s;
}

// Rearranges the level-tableau occupying columns [offset+1, offset+b^level]
// into full columns via permissible shifts, recursing level by level.
void arrange(PegBoard& board, long long offset, unsigned level) {
  if (level == 0) return;
  const long long b = board.base().value();
  const long long span = pow_ll(b, level);
  const long long col_lo = offset + 1;
  const long long col_hi = offset + span;

  // Expected shape: f full rows, one partial row of m pegs, empty rows below.
  std::vector<long long> counts;
  for (int i = 1; i <= board.rows(); ++i) {
    long long cnt = 0;
    for (long long j = col_lo; j <= col_hi; ++j) {
      if (board.occupied({i, j})) ++cnt;
    }
    counts.push_back(cnt);
  }
  int f = 0;
  while (f < static_cast<int>(counts.size()) && counts[f] == span) ++f;
  const long long m = f < static_cast<int>(counts.size()) ? counts[f] : 0;
  for (int i = f + 1; i < static_cast<int>(counts.size()); ++i) {
    if (counts[i] != 0) {
      throw std::logic_error("tableau recursion invariant broken at level " +
                             std::to_string(level) + ": row profile " +
                             profile_string(board, col_lo, col_hi));
    }
  }
  if (f == board.rows()) return;  // window already full

  while (shift_pass(board, col_lo, col_hi, level - 1)) {
  }

  // The fixpoint must form the three-block profile: l-1 rows of (f+1)*b^{k},
  // one row of f*b^k + m - (l-1)*b^k, then b-l rows of f*b^k.
  const long long step = span / b;
  const long long l = m / step + 1;
  for (int i = 1; i <= board.rows(); ++i) {
    long long expected;
    if (i <= l - 1) {
      expected = (f + 1) * step;
    } else if (i == l) {
      expected = f * step + (m - (l - 1) * step);
    } else {
      expected = f * step;
    }
    long long cnt = 0;
    for (long long j = col_lo; j <= col_hi; ++j) {
      if (board.occupied({i, j})) ++cnt;
    }
    if (cnt != expected) {
      throw std::logic_error(
          "unexpected row profile after b^" + std::to_string(level - 1) +
          "-shifts: " + profile_string(board, col_lo, col_hi));
    }
  }

  arrange(board, offset + f * step, level - 1);
}

}  // namespace

Tableau build_tableau(Base b, long long k) {
  if (k < 1) throw std::invalid_argument("build_tableau requires k >= 1");
  const long long base = b.value();
  const long long n = base * k;

  unsigned levels = 0;
  long long span = 1;
  while (span < n) {
    span *= base;
    ++levels;
  }

  PegBoard board(b, span);
  for (long long j = 1; j <= n; ++j) {
    board.place({1, j}, j - 1);
  }
  arrange(board, 0, levels);

  Tableau out{b, k, {}};
  out.entries.assign(static_cast<std::size_t>(base), {});
  for (int i = 1; i <= board.rows(); ++i) {
    auto& row = out.entries[static_cast<std::size_t>(i - 1)];
    row.reserve(static_cast<std::size_t>(k));
    for (long long j = 1; j <= k; ++j) {
      const long long label = board.label_at({i, j});
      if (label < 0) {
        throw std::logic_error("tableau construction left hole at row " +
                               std::to_string(i) + ", column " +
                               std::to_string(j));
      }
      row.push_back(label);
    }
    for (long long j = k + 1; j <= board.width(); ++j) {
      if (board.occupied({i, j})) {
        throw std::logic_error("tableau construction left peg beyond column " +
                               std::to_string(k));
      }
    }
  }
  return out;
}

TableauReport verify_tableau(const Tableau& t) {
  TableauReport report;
  const long long base = t.base.value();
  const long long k = t.width;
  auto flag = [&report](TableauProperty prop, int row, long long col,
                        std::string detail) {
    report.valid = false;
    report.violations.push_back({prop, row, col, std::move(detail)});
  };

  if (static_cast<long long>(t.entries.size()) != base) {
    flag(TableauProperty::kPermutation, 0, 0,
         "expected " + std::to_string(base) + " rows");
    return report;
  }
  for (const auto& row : t.entries) {
    if (static_cast<long long>(row.size()) != k) {
      flag(TableauProperty::kPermutation, 0, 0,
           "expected " + std::to_string(k) + " columns in every row");
      return report;
    }
  }

  std::vector<bool> seen(static_cast<std::size_t>(base * k), false);
  for (int i = 0; i < base; ++i) {
    for (long long j = 0; j < k; ++j) {
      const long long v = t.entries[static_cast<std::size_t>(i)]
                                   [static_cast<std::size_t>(j)];
      if (v < 0 || v >= base * k || seen[static_cast<std::size_t>(v)]) {
        flag(TableauProperty::kPermutation, i + 1, j + 1,
             "entry " + std::to_string(v) + " repeated or out of range");
      } else {
        seen[static_cast<std::size_t>(v)] = true;
      }
    }
  }

  for (long long j = 0; j < k; ++j) {
    const long long top = t.entries[0][static_cast<std::size_t>(j)];
    if (top != j) {
      flag(TableauProperty::kFirstRow, 1, j + 1,
           "first row holds " + std::to_string(top) + ", expected " +
               std::to_string(j));
    }
    const Natural top_sum = digit_sum(Natural(static_cast<long>(top)), t.base);
    for (int i = 1; i < base; ++i) {
      const long long v = t.entries[static_cast<std::size_t>(i)]
                                   [static_cast<std::size_t>(j)];
      if (v < 0) continue;  // already flagged by the permutation check
      const Natural top_nat(static_cast<long>(top));
      const Natural v_nat(static_cast<long>(v));
      if (!digit_dominates(top_nat, v_nat, t.base)) {
        flag(TableauProperty::kDominance, i + 1, j + 1,
             std::to_string(top) + " is not digitwise below " +
                 std::to_string(v));
      }
      if (digit_sum(v_nat, t.base) != top_sum + i) {
        flag(TableauProperty::kDigitSumStep, i + 1, j + 1,
             "digit sum of " + std::to_string(v) + " is not s(" +
                 std::to_string(top) + ") + " + std::to_string(i));
      }
    }
  }
  return report;
}

}  // namespace digitsum
