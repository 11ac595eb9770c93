#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "heffter/binmat.hpp"
#include "heffter/gmatrix.hpp"
#include "heffter/nasm.hpp"

namespace heffter {

/// A set of canonical representatives S (subset of G+, zero excluded) with a
/// multiplicity lambda.
struct SymbolSet {
  Group group;
  std::vector<elem> elems;  // sorted, distinct, abs(s) == s != 0
  int lambda = 1;

  SymbolSet() = default;
  SymbolSet(Group g, std::vector<elem> s, int lam) : group(std::move(g)), elems(std::move(s)), lambda(lam) {
    if (lambda < 1) throw std::invalid_argument("multiplicity must be positive");
    std::sort(elems.begin(), elems.end());
    for (size_t t = 0; t < elems.size(); ++t) {
      group.check_elem(elems[t]);
      if (elems[t] == 0) throw std::invalid_argument("symbol set may not contain zero");
      if (group.abs(elems[t]) != elems[t])
        throw std::invalid_argument("symbol set entries must be canonical representatives");
      if (t > 0 && elems[t] == elems[t - 1])
        throw std::invalid_argument("symbol set entries must be distinct");
    }
  }

  std::vector<elem> involution_part() const { return involutions(group, elems); }
  std::vector<elem> noninvolution_part() const {
    std::vector<elem> out;
    for (elem s : elems)
      if (!group.is_involution(s)) out.push_back(s);
    return out;
  }
};

struct GHACandidate {
  GMatrix matrix;
  SymbolSet symbols;
  std::vector<int> row_weights;
  std::vector<int> col_weights;
  std::optional<Ordering> ordering;
};

struct GhaReport {
  bool nec_ok = false;        // GHA:nec
  bool gale_ryser_ok = false; // GHA:nec2
  bool weights_ok = false;    // GHA:weights
  bool multiset_ok = false;   // GHA:multiset
  bool ok = false;
  std::optional<SumClassification> sums;
  std::vector<bool> row_simple, col_simple;
  bool all_simple = false;
  std::vector<std::string> failures;
};

/// Checks the defining conditions of a generalized Heffter array: the
/// necessary counting condition, Gale-Ryser feasibility of the declared
/// weights, the actual weights, and the absolute-value multiset condition.
/// When an ordering is attached, line sums and per-line simplicity are
/// reported as well.
inline GhaReport verify_gha(const GHACandidate& c) {
  GhaReport rep;
  const Group& g = c.matrix.group;
  const int lambda = c.symbols.lambda;
  auto inv = c.symbols.involution_part();

  long long sh = std::accumulate(c.row_weights.begin(), c.row_weights.end(), 0LL);
  long long sk = std::accumulate(c.col_weights.begin(), c.col_weights.end(), 0LL);
  long long lhs2 = 2LL * lambda * (long long)c.symbols.elems.size() - (long long)lambda * inv.size();
  rep.nec_ok = (inv.empty() || lambda % 2 == 0) && lhs2 == 2 * sh && sh == sk;
  if (!rep.nec_ok) rep.failures.push_back("GHA:nec");

  rep.gale_ryser_ok = (bool)gale_ryser_check(c.row_weights, c.col_weights);
  if (!rep.gale_ryser_ok) rep.failures.push_back("GHA:nec2");

  WeightData w = weights(c.matrix);
  rep.weights_ok = w.row == c.row_weights && w.col == c.col_weights;
  for (int x : w.row) rep.weights_ok = rep.weights_ok && x >= 1 && x <= c.matrix.cols;
  for (int x : w.col) rep.weights_ok = rep.weights_ok && x >= 1 && x <= c.matrix.rows;
  if (!rep.weights_ok) rep.failures.push_back("GHA:weights");

  // 2 ||E(H)|| must equal 2*lambda copies of S \ I(S) plus lambda copies of I(S).
  std::map<elem, long long> have;
  for (elem e : c.matrix.cells)
    if (e != 0) have[g.abs(e)] += 2;
  std::map<elem, long long> want;
  for (elem s : c.symbols.elems) want[s] = g.is_involution(s) ? lambda : 2LL * lambda;
  rep.multiset_ok = have == want;
  if (!rep.multiset_ok) rep.failures.push_back("GHA:multiset");

  rep.ok = rep.nec_ok && rep.gale_ryser_ok && rep.weights_ok && rep.multiset_ok;

  if (c.ordering) {
    rep.sums = classify_sums(c.matrix, *c.ordering);
    rep.all_simple = true;
    auto line_simple = [&](const std::vector<Cell>& line) {
      if (line.empty()) return true;
      return is_simple(g, line_values(c.matrix, line));
    };
    for (auto& line : c.ordering->rows) rep.row_simple.push_back(line_simple(line));
    for (auto& line : c.ordering->cols) rep.col_simple.push_back(line_simple(line));
    for (bool b : rep.row_simple) rep.all_simple = rep.all_simple && b;
    for (bool b : rep.col_simple) rep.all_simple = rep.all_simple && b;
  }
  return rep;
}

/// The increasing map f : [0,|S|] -> [0, floor((v-1)/2)] fixing 0 whose image
/// reduces onto S; unique, so construction outputs are canonical.
inline std::vector<int> value_map(int v, const std::vector<int>& symbols) {
  std::vector<int> s = symbols;
  std::sort(s.begin(), s.end());
  const int cap = (v - 1) / 2;
  for (size_t t = 0; t < s.size(); ++t) {
    if (s[t] < 1 || s[t] > cap)
      throw std::invalid_argument("symbol " + std::to_string(s[t]) +
                                  " is outside [1, floor((v-1)/2)] for v=" + std::to_string(v));
    if (t > 0 && s[t] == s[t - 1]) throw std::invalid_argument("symbols must be distinct");
  }
  std::vector<int> f(s.size() + 1, 0);
  for (size_t t = 0; t < s.size(); ++t) f[t + 1] = s[t];
  return f;
}

/// Nonzero sum and simple NGHA over Z_v from a NASM: H = pi_v(A o f(A*)).
/// The default natural ordering of the result is simple with every line sum
/// nonzero.
inline GHACandidate build_nonzero_simple_ngha(int v, const std::vector<int>& symbols,
                                              const SignMatrix& nasm) {
  auto nrep = verify_nasm(nasm);
  if (!nrep) throw std::invalid_argument(nrep.reason);
  if (nasm.weight() != (int)symbols.size())
    throw std::invalid_argument("NASM weight must equal |S|");
  std::vector<int> f = value_map(v, symbols);  // also rejects v/2 and involutions

  Group zv = Group::cyclic(v);
  GMatrix h(zv, nasm.rows, nasm.cols);
  int rank = 0;
  for (int i = 0; i < nasm.rows; ++i)
    for (int j = 0; j < nasm.cols; ++j) {
      int sgn = nasm.at(i, j);
      if (sgn == 0) continue;
      ++rank;
      h.set(i, j, sgn > 0 ? f[rank] : zv.neg(f[rank]));
    }

  GHACandidate out;
  out.matrix = std::move(h);
  out.symbols = SymbolSet(zv, std::vector<elem>(f.begin() + 1, f.end()), 1);
  out.row_weights = nasm.row_weights();
  out.col_weights = nasm.col_weights();
  out.ordering = default_natural_ordering(out.matrix);

  auto rep = verify_gha(out);
  if (!rep.ok || !rep.all_simple || rep.sums->verdict != SumVerdict::nonzero_sum)
    throw std::logic_error("nonzero-sum construction produced an invalid array");
  return out;
}

/// Base data for the zero-sum construction: a set S of positive integers that
/// is a disjoint union of consecutive-integer pairs, split into blocks of
/// size 4*h_i, plus the shift x and modulus v.
struct PairedSymbolSet {
  std::vector<int> base;       // sorted
  int shift = 0;               // x
  int modulus = 0;             // v
  std::vector<int> row_parts;  // h, block i has 4*h_i elements

  PairedSymbolSet() = default;
  PairedSymbolSet(std::vector<int> s, int x, int v, std::vector<int> h)
      : base(std::move(s)), shift(x), modulus(v), row_parts(std::move(h)) {
    std::sort(base.begin(), base.end());
    if (base.empty() || base.size() % 4 != 0)
      throw std::invalid_argument("|S| must be a positive multiple of 4");
    long long hsum = std::accumulate(row_parts.begin(), row_parts.end(), 0LL);
    for (int hi : row_parts)
      if (hi < 1) throw std::invalid_argument("row parts must be positive");
    if (4 * hsum != (long long)base.size())
      throw std::invalid_argument("block sizes 4*h_i must partition S");
    for (size_t t = 0; t < base.size(); ++t) {
      if (base[t] < 1) throw std::invalid_argument("S must contain positive integers");
      if (t > 0 && base[t] == base[t - 1]) throw std::invalid_argument("S entries must be distinct");
      if (t % 2 == 1 && base[t] != base[t - 1] + 1)
        throw std::invalid_argument("S must be a disjoint union of consecutive-integer pairs");
    }
    int mx = base.back(), mn = base.front();
    if (!(shift > mx - mn)) throw std::invalid_argument("shift must exceed max(S) - min(S)");
    if (!(modulus - 2 * mx > 2 * shift))
      throw std::invalid_argument("shift must be below v/2 - max(S)");
  }

  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out;
    size_t off = 0;
    for (int hi : row_parts) {
      out.emplace_back(base.begin() + off, base.begin() + off + 4 * hi);
      off += 4 * hi;
    }
    return out;
  }
};

namespace detail {
// b_{eps,i,j} for j in [1, 4h]: the block values with the (2h+1)-th moved last.
inline std::vector<int> zero_row_values(const std::vector<int>& block, int h, int eps_x) {
  std::vector<int> out;
  const int n4 = 4 * h;
  out.reserve(n4);
  for (int j = 1; j <= n4; ++j) {
    int a;
    if (j <= 2 * h) a = block[j - 1];
    else if (j <= n4 - 1) a = block[j];  // a_{i,j+1}
    else a = block[2 * h];               // a_{i,2h+1}
    out.push_back(eps_x + a);
  }
  return out;
}
}  // namespace detail

/// Zero-sum and simple GHA over Z_v: stacks pi_v(A o B(0)) on top of
/// pi_v(-A o B(1)) for a NASM A with row weights 4h and column weights 2k.
/// Rows are simple left to right; each column is simple under the returned
/// ordering (top half in natural order, bottom half rotated by one).
inline GHACandidate build_zero_simple_gha(const PairedSymbolSet& p, const SignMatrix& nasm) {
  auto nrep = verify_nasm(nasm);
  if (!nrep) throw std::invalid_argument(nrep.reason);
  const int m = nasm.rows, n = nasm.cols;
  if ((int)p.row_parts.size() != m)
    throw std::invalid_argument("row parts must match the NASM row count");
  for (int i = 0; i < m; ++i)
    if (nrep.row_weights[i] != 4 * p.row_parts[i])
      throw std::invalid_argument("NASM row weights must be 4*h_i");
  for (int j = 0; j < n; ++j)
    if (nrep.col_weights[j] % 2 != 0 || nrep.col_weights[j] == 0)
      throw std::invalid_argument("NASM column weights must be even and positive");
  if (nasm.weight() != (int)p.base.size())
    throw std::invalid_argument("NASM weight must equal |S|");

  const int v = p.modulus;
  Group zv = Group::cyclic(v);
  auto blocks = p.blocks();
  GMatrix c(zv, 2 * m, n);
  for (int i = 0; i < m; ++i) {
    auto b0 = detail::zero_row_values(blocks[i], p.row_parts[i], 0);
    auto b1 = detail::zero_row_values(blocks[i], p.row_parts[i], p.shift);
    int t = 0;
    for (int j = 0; j < n; ++j) {
      int sgn = nasm.at(i, j);
      if (sgn == 0) continue;
      elem top = b0[t] % v, bot = b1[t] % v;
      c.set(i, j, sgn > 0 ? top : zv.neg(top));
      c.set(m + i, j, sgn > 0 ? zv.neg(bot) : bot);
      ++t;
    }
  }

  Ordering ord;
  for (int i = 0; i < 2 * m; ++i) ord.rows.push_back(detail::row_cells(c, i));
  for (int j = 0; j < n; ++j) {
    std::vector<Cell> top, bottom;
    for (int i = 0; i < m; ++i)
      if (c.at(i, j) != 0) top.push_back({i, j});
    for (int i = m; i < 2 * m; ++i)
      if (c.at(i, j) != 0) bottom.push_back({i, j});
    std::rotate(bottom.begin(), bottom.begin() + 1, bottom.end());
    top.insert(top.end(), bottom.begin(), bottom.end());
    ord.cols.push_back(std::move(top));
  }

  std::vector<elem> symbols;
  for (int s : p.base) {
    symbols.push_back(s % v);
    symbols.push_back((s + p.shift) % v);
  }

  GHACandidate out;
  out.matrix = std::move(c);
  out.symbols = SymbolSet(zv, std::move(symbols), 1);
  WeightData w = weights(out.matrix);
  out.row_weights = w.row;
  out.col_weights = w.col;
  out.ordering = std::move(ord);

  auto rep = verify_gha(out);
  if (!rep.ok || !rep.all_simple || rep.sums->verdict != SumVerdict::zero_sum)
    throw std::logic_error("zero-sum construction produced an invalid array");
  return out;
}

/// Symbol data for the subgroup-complement case: v = (2d+1)u with
/// v congruent to u mod 16 and u = 1 or u divisible by 4.
struct RelativeParams {
  int v = 0;
  int x = 0;
  std::vector<int> symbols;
};

inline RelativeParams relative_symbol_params(int d, int u) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  if (!(u == 1 || (u >= 4 && u % 4 == 0)))
    throw std::invalid_argument("u must be 1 or divisible by 4");
  RelativeParams out;
  out.v = (2 * d + 1) * u;
  if ((out.v - u) % 16 != 0)
    throw std::invalid_argument("v=(2d+1)u must be congruent to u mod 16");
  if (u == 1) {
    out.x = d / 2;
    for (int i = 1; i <= out.x; ++i) out.symbols.push_back(i);
  } else {
    out.x = (2 * d + 1) * (u / 4);
    for (int i = 1; i <= out.x; ++i)
      if (i % (2 * d + 1) != 0) out.symbols.push_back(i);
  }
  if ((long long)out.symbols.size() * 2 != (long long)d * u)
    throw std::invalid_argument("derived symbol set has the wrong size");
  if (out.symbols.size() % 4 != 0)
    throw std::invalid_argument("|S| = du/2 must be divisible by 4");
  return out;
}

/// Zero-sum and simple GHA with symbol set (Z_v \ U)+, U the subgroup of
/// order u.  The NASM(m, n; 4h, 2k) is built uniformly (constant h and k)
/// or by the doubled construction (h and k in doubled form).
inline GHACandidate build_relative_zero_gha(int d, int u, const std::vector<int>& h,
                                            const std::vector<int>& k, bool uniform) {
  RelativeParams params = relative_symbol_params(d, u);
  long long hsum = std::accumulate(h.begin(), h.end(), 0LL);
  if (8 * hsum != (long long)d * u)
    throw std::invalid_argument("row parts must partition d*u/8");

  SignMatrix nasm;
  const int m = (int)h.size(), n = (int)k.size();
  if (uniform) {
    for (int hi : h)
      if (hi != h[0]) throw std::invalid_argument("uniform case requires constant row parts");
    for (int kj : k)
      if (kj != k[0]) throw std::invalid_argument("uniform case requires constant column parts");
    nasm = build_uniform_nasm(m, n, 4 * h[0], 2 * k[0]);
  } else {
    auto halve = [](const std::vector<int>& seq, const char* what) {
      if (seq.empty() || seq.size() % 2 != 0)
        throw std::invalid_argument(std::string(what) + " must have even length in the doubled case");
      std::vector<int> out;
      for (size_t t = 0; t < seq.size(); t += 2) {
        if (seq[t] != seq[t + 1])
          throw std::invalid_argument(std::string(what) + " must be in doubled form");
        out.push_back(seq[t]);
      }
      return out;
    };
    std::vector<int> hb = halve(h, "row parts"), kb = halve(k, "column parts");
    for (auto& x : hb) x *= 2;
    nasm = build_doubled_nasm(hb, kb);
  }

  PairedSymbolSet p(params.symbols, params.x, params.v, h);
  GHACandidate out = build_zero_simple_gha(p, nasm);

  // The symbol set must be exactly (Z_v \ U)+.
  std::vector<elem> expect;
  for (elem a = 1; a <= params.v / 2; ++a)
    if (a % (2 * d + 1) != 0) expect.push_back(a);
  if (out.symbols.elems != expect)
    throw std::logic_error("relative construction symbol set is not (Z_v \\ U)+");
  return out;
}

/// In the tight case (full array), moving the (m+1)-th row to the end makes
/// the zero-sum array simple under the default natural ordering.
inline GHACandidate row_shift_naturally_simple(const GHACandidate& c) {
  const GMatrix& a = c.matrix;
  if (a.rows % 2 != 0) throw std::invalid_argument("row shift expects a stacked 2m x n array");
  for (elem e : a.cells)
    if (e == 0) throw std::invalid_argument("row shift requires the tight case (no empty cells)");
  const int m = a.rows / 2;
  GMatrix b(a.group, a.rows, a.cols);
  for (int i = 0; i < a.rows; ++i) {
    int src = i < m ? i : (i == a.rows - 1 ? m : i + 1);
    for (int j = 0; j < a.cols; ++j) b.set(i, j, a.at(src, j));
  }
  GHACandidate out;
  out.matrix = std::move(b);
  out.symbols = c.symbols;
  out.row_weights = c.row_weights;
  out.col_weights = c.col_weights;
  out.ordering = default_natural_ordering(out.matrix);

  auto rep = verify_gha(out);
  if (!rep.ok || !rep.all_simple || rep.sums->verdict != SumVerdict::zero_sum)
    throw std::logic_error("row shift did not produce a naturally simple zero-sum array");
  return out;
}

}  // namespace heffter
