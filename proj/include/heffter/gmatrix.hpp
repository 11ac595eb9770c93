#pragma once

#include <compare>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "heffter/group.hpp"

namespace heffter {

/// Matrix cell, 0-based.  Serialized coordinates are 1-based.
struct Cell {
  int r = 0;
  int c = 0;
  auto operator<=>(const Cell&) const = default;
};

/// m x n matrix over a finite group; the zero element marks an empty cell.
struct GMatrix {
  Group group;
  int rows = 0;
  int cols = 0;
  std::vector<elem> cells;  // row-major

  GMatrix() = default;
  GMatrix(Group g, int m, int n) : group(std::move(g)), rows(m), cols(n), cells((size_t)m * n, 0) {
    if (m < 1 || n < 1) throw std::invalid_argument("matrix dimensions must be positive");
  }
  GMatrix(Group g, int m, int n, std::vector<elem> entries)
      : group(std::move(g)), rows(m), cols(n), cells(std::move(entries)) {
    if (m < 1 || n < 1) throw std::invalid_argument("matrix dimensions must be positive");
    if ((int)cells.size() != m * n) throw std::invalid_argument("entry count does not match dimensions");
    for (elem e : cells) group.check_elem(e);
  }

  elem at(int r, int c) const { return cells[(size_t)r * cols + c]; }
  elem at(Cell x) const { return at(x.r, x.c); }
  void set(int r, int c, elem v) {
    group.check_elem(v);
    cells[(size_t)r * cols + c] = v;
  }
  void set(Cell x, elem v) { set(x.r, x.c, v); }

  bool operator==(const GMatrix& o) const {
    return group == o.group && rows == o.rows && cols == o.cols && cells == o.cells;
  }
};

struct WeightData {
  std::vector<int> row;
  std::vector<int> col;
  int total = 0;
};

/// Per-row and per-column sequences of cell coordinates; each sequence is a
/// permutation of that line's nonzero cells.
struct Ordering {
  std::vector<std::vector<Cell>> rows;
  std::vector<std::vector<Cell>> cols;
  bool operator==(const Ordering& o) const { return rows == o.rows && cols == o.cols; }
};

inline WeightData weights(const GMatrix& m) {
  WeightData w;
  w.row.assign(m.rows, 0);
  w.col.assign(m.cols, 0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) {
        ++w.row[i];
        ++w.col[j];
        ++w.total;
      }
  return w;
}

/// Lexicographically ordered nonzero cell positions.
inline std::vector<Cell> skeleton(const GMatrix& m) {
  std::vector<Cell> out;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) out.push_back({i, j});
  return out;
}

/// Position matrix: rank (1-based) of each nonzero cell in the lexicographic
/// skeleton, 0 on empty cells.
inline std::vector<int> position_matrix(const GMatrix& m) {
  std::vector<int> out((size_t)m.rows * m.cols, 0);
  int rank = 0;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) out[(size_t)i * m.cols + j] = ++rank;
  return out;
}

namespace detail {
inline std::vector<Cell> row_cells(const GMatrix& m, int i) {
  std::vector<Cell> out;
  for (int j = 0; j < m.cols; ++j)
    if (m.at(i, j) != 0) out.push_back({i, j});
  return out;
}
inline std::vector<Cell> col_cells(const GMatrix& m, int j) {
  std::vector<Cell> out;
  for (int i = 0; i < m.rows; ++i)
    if (m.at(i, j) != 0) out.push_back({i, j});
  return out;
}
inline std::vector<Cell> rotate_from(std::vector<Cell> cells, int start) {
  if (cells.empty()) {
    if (start != 0) throw std::invalid_argument("start index out of range for empty line");
    return cells;
  }
  if (start < 0 || start >= (int)cells.size())
    throw std::invalid_argument("natural ordering start index out of range");
  std::rotate(cells.begin(), cells.begin() + start, cells.end());
  return cells;
}
}  // namespace detail

/// Natural ordering: each row left-to-right and each column top-to-bottom,
/// cyclically from the given per-line start offsets (0 = first nonzero cell).
inline Ordering natural_ordering(const GMatrix& m, const std::vector<int>& row_starts,
                                 const std::vector<int>& col_starts) {
  if ((int)row_starts.size() != m.rows || (int)col_starts.size() != m.cols)
    throw std::invalid_argument("start vectors must match matrix dimensions");
  Ordering o;
  for (int i = 0; i < m.rows; ++i)
    o.rows.push_back(detail::rotate_from(detail::row_cells(m, i), row_starts[i]));
  for (int j = 0; j < m.cols; ++j)
    o.cols.push_back(detail::rotate_from(detail::col_cells(m, j), col_starts[j]));
  return o;
}

inline Ordering default_natural_ordering(const GMatrix& m) {
  return natural_ordering(m, std::vector<int>(m.rows, 0), std::vector<int>(m.cols, 0));
}

inline void validate_ordering(const GMatrix& m, const Ordering& o) {
  if ((int)o.rows.size() != m.rows || (int)o.cols.size() != m.cols)
    throw std::invalid_argument("ordering line counts do not match matrix");
  auto check_line = [&](const std::vector<Cell>& seq, const std::vector<Cell>& cells) {
    std::set<Cell> a(seq.begin(), seq.end()), b(cells.begin(), cells.end());
    if (a.size() != seq.size() || a != b)
      throw std::invalid_argument("ordering line is not a permutation of the nonzero cells");
  };
  for (int i = 0; i < m.rows; ++i) check_line(o.rows[i], detail::row_cells(m, i));
  for (int j = 0; j < m.cols; ++j) check_line(o.cols[j], detail::col_cells(m, j));
}

/// Sequence of entry values along an ordered line.
inline std::vector<elem> line_values(const GMatrix& m, const std::vector<Cell>& cells) {
  std::vector<elem> out;
  out.reserve(cells.size());
  for (Cell x : cells) out.push_back(m.at(x));
  return out;
}

/// Left-to-right group sums s_1..s_n (order-sensitive).
inline std::vector<elem> partial_sums(const Group& g, const std::vector<elem>& seq) {
  std::vector<elem> out;
  out.reserve(seq.size());
  elem s = 0;
  for (elem a : seq) {
    s = g.add(s, a);
    out.push_back(s);
  }
  return out;
}

inline elem sum_of(const Group& g, const std::vector<elem>& seq) {
  elem s = 0;
  for (elem a : seq) s = g.add(s, a);
  return s;
}

/// Run s_{i..j}, 0-based inclusive bounds.
inline elem run_sum(const Group& g, const std::vector<elem>& seq, int i, int j) {
  if (i < 0 || j >= (int)seq.size() || i > j) throw std::invalid_argument("run bounds out of range");
  elem s = 0;
  for (int t = i; t <= j; ++t) s = g.add(s, seq[t]);
  return s;
}

/// All proper runs nonzero; equivalently partial sums pairwise distinct with
/// s_1..s_{n-1} nonzero (the total may be zero).
inline bool is_simple(const Group& g, const std::vector<elem>& seq) {
  if (seq.empty()) throw std::invalid_argument("is_simple requires a nonempty sequence");
  auto ps = partial_sums(g, seq);
  std::set<elem> seen;
  for (size_t t = 0; t < ps.size(); ++t) {
    if (t + 1 < ps.size() && ps[t] == 0) return false;
    if (!seen.insert(ps[t]).second) return false;
  }
  return true;
}

enum class SumVerdict { zero_sum, nonzero_sum, mixed };

struct SumClassification {
  std::vector<elem> row_sums;
  std::vector<elem> col_sums;
  SumVerdict verdict = SumVerdict::mixed;
};

/// Ordered line sums and the zero/nonzero/mixed verdict over all m+n of them.
inline SumClassification classify_sums(const GMatrix& m, const Ordering& o) {
  validate_ordering(m, o);
  SumClassification out;
  bool any_zero = false, any_nonzero = false;
  auto eat = [&](const std::vector<Cell>& line, std::vector<elem>& sink) {
    elem s = sum_of(m.group, line_values(m, line));
    sink.push_back(s);
    (s == 0 ? any_zero : any_nonzero) = true;
  };
  for (auto& line : o.rows) eat(line, out.row_sums);
  for (auto& line : o.cols) eat(line, out.col_sums);
  out.verdict = any_zero && any_nonzero ? SumVerdict::mixed
                : any_zero              ? SumVerdict::zero_sum
                                        : SumVerdict::nonzero_sum;
  return out;
}

enum class FirstSign { negative, positive };

/// Alternated form: (-a1, a2, -a3, ...) or its negative, per the flag.
/// Only meaningful over abelian groups.
inline std::vector<elem> alternated(const Group& g, const std::vector<elem>& seq, FirstSign first) {
  if (!g.abelian())
    throw std::invalid_argument("alternated forms are defined over abelian groups only");
  std::vector<elem> out;
  out.reserve(seq.size());
  bool negate = first == FirstSign::negative;
  for (elem a : seq) {
    out.push_back(negate ? g.neg(a) : a);
    negate = !negate;
  }
  return out;
}

/// Searches per line for a cyclic start making the line simple; lines are
/// independent, so the per-line scan is exhaustive over natural orderings.
inline std::optional<Ordering> find_simple_natural_ordering(const GMatrix& m) {
  std::vector<int> rs(m.rows, 0), cs(m.cols, 0);
  auto pick = [&](const std::vector<Cell>& cells, int& start) {
    if (cells.empty()) {
      start = 0;
      return true;
    }
    for (int s = 0; s < (int)cells.size(); ++s) {
      auto rot = cells;
      std::rotate(rot.begin(), rot.begin() + s, rot.end());
      if (is_simple(m.group, line_values(m, rot))) {
        start = s;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < m.rows; ++i)
    if (!pick(detail::row_cells(m, i), rs[i])) return std::nullopt;
  for (int j = 0; j < m.cols; ++j)
    if (!pick(detail::col_cells(m, j), cs[j])) return std::nullopt;
  return natural_ordering(m, rs, cs);
}

}  // namespace heffter
