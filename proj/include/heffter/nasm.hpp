#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "heffter/binmat.hpp"

namespace heffter {

/// m x n matrix over {-1,0,+1}.
struct SignMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<int8_t> cells;

  SignMatrix() = default;
  SignMatrix(int m, int n) : rows(m), cols(n), cells((size_t)m * n, 0) {
    if (m < 1 || n < 1) throw std::invalid_argument("matrix dimensions must be positive");
  }
  SignMatrix(int m, int n, std::vector<int> entries) : rows(m), cols(n) {
    if (m < 1 || n < 1) throw std::invalid_argument("matrix dimensions must be positive");
    if ((int)entries.size() != m * n) throw std::invalid_argument("entry count does not match dimensions");
    cells.reserve(entries.size());
    for (int e : entries) {
      if (e < -1 || e > 1) throw std::invalid_argument("sign matrix entries must be -1, 0 or 1");
      cells.push_back((int8_t)e);
    }
  }

  int at(int r, int c) const { return cells[(size_t)r * cols + c]; }
  void set(int r, int c, int v) { cells[(size_t)r * cols + c] = (int8_t)v; }

  std::vector<int> row_weights() const {
    std::vector<int> w(rows, 0);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) w[i] += at(i, j) != 0;
    return w;
  }
  std::vector<int> col_weights() const {
    std::vector<int> w(cols, 0);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) w[j] += at(i, j) != 0;
    return w;
  }
  int weight() const {
    int w = 0;
    for (auto e : cells) w += e != 0;
    return w;
  }

  BinMatrix abs() const {
    BinMatrix b(rows, cols);
    for (size_t t = 0; t < cells.size(); ++t) b.cells[t] = cells[t] != 0;
    return b;
  }

  bool operator==(const SignMatrix& o) const {
    return rows == o.rows && cols == o.cols && cells == o.cells;
  }
};

struct NasmReport {
  bool ok = false;
  std::vector<int> row_weights;
  std::vector<int> col_weights;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// A sign matrix is a NASM when the nonzero entries of every row and every
/// column alternate in sign.
inline NasmReport verify_nasm(const SignMatrix& s) {
  NasmReport rep;
  rep.row_weights = s.row_weights();
  rep.col_weights = s.col_weights();
  rep.ok = true;
  for (int i = 0; i < s.rows && rep.ok; ++i) {
    int prev = 0;
    for (int j = 0; j < s.cols; ++j) {
      int e = s.at(i, j);
      if (e == 0) continue;
      if (e == prev) {
        rep.ok = false;
        rep.reason = "NASM:alternation fails in row " + std::to_string(i + 1);
        break;
      }
      prev = e;
    }
  }
  for (int j = 0; j < s.cols && rep.ok; ++j) {
    int prev = 0;
    for (int i = 0; i < s.rows; ++i) {
      int e = s.at(i, j);
      if (e == 0) continue;
      if (e == prev) {
        rep.ok = false;
        rep.reason = "NASM:alternation fails in column " + std::to_string(j + 1);
        break;
      }
      prev = e;
    }
  }
  return rep;
}

/// Boundary signs: first/last nonzero entry of every row and column
/// (0 for empty lines).
struct Frame {
  std::vector<int8_t> left, right, up, down;
};

inline Frame frame(const SignMatrix& s) {
  if (!verify_nasm(s)) throw std::invalid_argument("frame is defined for NASMs only");
  Frame f;
  f.left.assign(s.rows, 0);
  f.right.assign(s.rows, 0);
  f.up.assign(s.cols, 0);
  f.down.assign(s.cols, 0);
  for (int i = 0; i < s.rows; ++i)
    for (int j = 0; j < s.cols; ++j) {
      int e = s.at(i, j);
      if (e == 0) continue;
      if (f.left[i] == 0) f.left[i] = (int8_t)e;
      f.right[i] = (int8_t)e;
      if (f.up[j] == 0) f.up[j] = (int8_t)e;
      f.down[j] = (int8_t)e;
    }
  return f;
}

enum class Axis { horizontal, vertical };

/// Frame compatibility of [A B] (horizontal) or [A; B] (vertical): the shared
/// boundary signs must be opposite.  A true result guarantees the
/// concatenation is again a NASM.
inline CheckResult join_check(const SignMatrix& a, const SignMatrix& b, Axis axis) {
  if (!verify_nasm(a) || !verify_nasm(b)) return {false, "operands must be NASMs"};
  Frame fa = frame(a), fb = frame(b);
  if (axis == Axis::horizontal) {
    if (a.rows != b.rows) return {false, "row counts differ"};
    for (int i = 0; i < a.rows; ++i)
      if (fa.right[i] != -fb.left[i])
        return {false, "frame mismatch at row " + std::to_string(i + 1)};
  } else {
    if (a.cols != b.cols) return {false, "column counts differ"};
    for (int j = 0; j < a.cols; ++j)
      if (fa.down[j] != -fb.up[j])
        return {false, "frame mismatch at column " + std::to_string(j + 1)};
  }
  return {true, ""};
}

inline SignMatrix hconcat(const SignMatrix& a, const SignMatrix& b) {
  if (a.rows != b.rows) throw std::invalid_argument("row counts differ");
  SignMatrix out(a.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) out.set(i, j, a.at(i, j));
    for (int j = 0; j < b.cols; ++j) out.set(i, a.cols + j, b.at(i, j));
  }
  return out;
}

inline SignMatrix vconcat(const SignMatrix& a, const SignMatrix& b) {
  if (a.cols != b.cols) throw std::invalid_argument("column counts differ");
  SignMatrix out(a.rows + b.rows, a.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out.set(i, j, a.at(i, j));
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < a.cols; ++j) out.set(a.rows + i, j, b.at(i, j));
  return out;
}

inline SignMatrix negated(const SignMatrix& a) {
  SignMatrix out = a;
  for (auto& e : out.cells) e = (int8_t)-e;
  return out;
}

/// The ell x ell building block with alternating reduced lines of length d.
/// Indices in the defining cases are 1-based.
inline SignMatrix nasm_base(int ell, int d) {
  if (d < 1 || d > ell) throw std::invalid_argument("base block requires 1 <= d <= ell");
  SignMatrix a(ell, ell);
  const bool ld_even = (ell - d) % 2 == 0;
  for (int i = 1; i <= ell; ++i)
    for (int j = 1; j <= ell; ++j) {
      int v = 0;
      bool main_band = j <= i && i <= std::min(ell, j + d - 1);
      bool wrap_band = 1 <= i && i <= j + d - ell - 1;
      if (main_band || (wrap_band && ld_even))
        v = (i + j) % 2 == 0 ? 1 : -1;
      else if (wrap_band && !ld_even)
        v = (i + j) % 2 == 0 ? -1 : 1;
      a.set(i - 1, j - 1, v);
    }
  return a;
}

/// Uniform NASM(m,n;h,k), which exists exactly when mh = nk: an f x g block
/// grid of the base block A, signed (-1)^{i+j} when d is odd.
inline SignMatrix build_uniform_nasm(int m, int n, int h, int k) {
  if (h < 1 || h > n) throw std::invalid_argument("row weight must satisfy 1 <= h <= n");
  if (k < 1 || k > m) throw std::invalid_argument("column weight must satisfy 1 <= k <= m");
  if ((long long)m * h != (long long)n * k)
    throw std::invalid_argument("uniform NASM requires m*h = n*k");
  const int f = std::gcd(m, k), g = std::gcd(n, h);
  const int ell = m / f, d = h / g;
  if (n / g != ell || k / f != d) throw std::logic_error("block parameter derivation failed");
  SignMatrix base = nasm_base(ell, d);
  SignMatrix out(m, n);
  for (int bi = 1; bi <= f; ++bi)
    for (int bj = 1; bj <= g; ++bj) {
      int sgn = (d % 2 == 0 || (bi + bj) % 2 == 0) ? 1 : -1;
      for (int i = 0; i < ell; ++i)
        for (int j = 0; j < ell; ++j)
          out.set((bi - 1) * ell + i, (bj - 1) * ell + j, sgn * base.at(i, j));
    }
  return out;
}

/// NASM(2m, 2n; 2(h1,h1,...,hm,hm), 2(k1,k1,...,kn,kn)) by inflating a 0/1
/// realization of (h,k): each 1 becomes [[1,-1],[-1,1]], each 0 a zero block.
inline SignMatrix build_doubled_nasm(const std::vector<int>& h, const std::vector<int>& k) {
  BinMatrix b = gale_ryser_construct(h, k);
  SignMatrix out(2 * b.rows, 2 * b.cols);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j)
      if (b.at(i, j)) {
        out.set(2 * i, 2 * j, 1);
        out.set(2 * i, 2 * j + 1, -1);
        out.set(2 * i + 1, 2 * j, -1);
        out.set(2 * i + 1, 2 * j + 1, 1);
      }
  return out;
}

}  // namespace heffter
