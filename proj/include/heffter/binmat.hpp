#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace heffter {

struct CheckResult {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// m x n matrix over {0,1}.
struct BinMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<uint8_t> cells;

  BinMatrix() = default;
  BinMatrix(int m, int n) : rows(m), cols(n), cells((size_t)m * n, 0) {
    if (m < 1 || n < 1) throw std::invalid_argument("matrix dimensions must be positive");
  }
  BinMatrix(int m, int n, std::vector<uint8_t> entries)
      : rows(m), cols(n), cells(std::move(entries)) {
    if (m < 1 || n < 1) throw std::invalid_argument("matrix dimensions must be positive");
    if ((int)cells.size() != m * n) throw std::invalid_argument("entry count does not match dimensions");
    for (auto e : cells)
      if (e > 1) throw std::invalid_argument("binary matrix entries must be 0 or 1");
  }

  uint8_t at(int r, int c) const { return cells[(size_t)r * cols + c]; }
  void set(int r, int c, uint8_t v) { cells[(size_t)r * cols + c] = v; }

  std::vector<int> row_weights() const {
    std::vector<int> w(rows, 0);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) w[i] += at(i, j);
    return w;
  }
  std::vector<int> col_weights() const {
    std::vector<int> w(cols, 0);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) w[j] += at(i, j);
    return w;
  }
};

/// Feasibility of a 0/1 matrix with row weights h and column weights k:
/// equal totals and, for every u, sum_i min(h_i, u) >= sum of the u largest
/// column weights.  Violated bounds are reported, not thrown.
inline CheckResult gale_ryser_check(const std::vector<int>& h, const std::vector<int>& k) {
  const int m = (int)h.size(), n = (int)k.size();
  if (m == 0 || n == 0) return {false, "empty weight sequence"};
  for (int i = 0; i < m; ++i) {
    if (h[i] < 1) return {false, "row weight " + std::to_string(i + 1) + " is not positive"};
    if (h[i] > n) return {false, "row weight " + std::to_string(i + 1) + " exceeds column count"};
  }
  for (int j = 0; j < n; ++j) {
    if (k[j] < 1) return {false, "column weight " + std::to_string(j + 1) + " is not positive"};
    if (k[j] > m) return {false, "column weight " + std::to_string(j + 1) + " exceeds row count"};
  }
  long long sh = std::accumulate(h.begin(), h.end(), 0LL);
  long long sk = std::accumulate(k.begin(), k.end(), 0LL);
  if (sh != sk)
    return {false, "weight totals differ: " + std::to_string(sh) + " vs " + std::to_string(sk)};
  std::vector<int> kd = k;
  std::sort(kd.begin(), kd.end(), std::greater<int>());
  long long rhs = 0;
  for (int u = 1; u <= n; ++u) {
    rhs += kd[u - 1];
    long long lhs = 0;
    for (int hi : h) lhs += std::min(hi, u);
    if (lhs < rhs) return {false, "dominance fails at u=" + std::to_string(u)};
  }
  return {true, ""};
}

/// Deterministic greedy realization: each row places its ones into the
/// currently most-demanding columns, ties broken by smaller column index.
inline BinMatrix gale_ryser_construct(const std::vector<int>& h, const std::vector<int>& k) {
  auto feasible = gale_ryser_check(h, k);
  if (!feasible) throw std::invalid_argument("infeasible weight sequences: " + feasible.reason);
  const int m = (int)h.size(), n = (int)k.size();
  BinMatrix out(m, n);
  std::vector<int> demand = k;
  std::vector<int> idx(n);
  for (int i = 0; i < m; ++i) {
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return demand[a] > demand[b]; });
    for (int t = 0; t < h[i]; ++t) {
      out.set(i, idx[t], 1);
      --demand[idx[t]];
    }
  }
  if (out.row_weights() != h || out.col_weights() != k)
    throw std::logic_error("greedy realization failed to meet the prescribed weights");
  return out;
}

}  // namespace heffter
