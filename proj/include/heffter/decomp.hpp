#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "heffter/binmat.hpp"
#include "heffter/gha.hpp"
#include "heffter/gmatrix.hpp"
#include "heffter/parallel.hpp"

namespace heffter {

enum class Sign { plus, minus };
enum class Side { rows, cols };

struct LineRef {
  Side side = Side::rows;
  int index = 0;
  Sign sign = Sign::plus;
};

/// Directed (or undirected) walk with vertices in a group.
struct Walk {
  std::vector<elem> verts;
  bool directed = true;
  LineRef origin;
  int length() const { return (int)verts.size() - 1; }
};

/// W+ = (0, -s_1, ..., -s_k); W- = (0, suffix sums); left-to-right group sums.
inline Walk walk_from_ordering(const GMatrix& m, const Ordering& o, Side side, int index, Sign sign) {
  const auto& lines = side == Side::rows ? o.rows : o.cols;
  if (index < 0 || index >= (int)lines.size()) throw std::invalid_argument("line index out of range");
  auto seq = line_values(m, lines[index]);
  if (seq.empty()) throw std::invalid_argument("walk requires a line of weight >= 1");
  const Group& g = m.group;
  Walk w;
  w.origin = {side, index, sign};
  w.verts.push_back(0);
  if (sign == Sign::plus) {
    elem s = 0;
    for (elem a : seq) {
      s = g.add(s, a);
      w.verts.push_back(g.neg(s));
    }
  } else {
    elem s = 0;
    for (size_t t = 0; t < seq.size(); ++t) {
      s = g.add(seq[seq.size() - 1 - t], s);
      w.verts.push_back(s);
    }
  }
  return w;
}

enum class WalkClass { cycle, path, general };

/// Cycle when closed with distinct interior, path when open and injective;
/// both correspond to the source ordering being simple.
inline WalkClass classify_walk(const Walk& w) {
  const auto& v = w.verts;
  if (v.size() < 2) return WalkClass::general;
  bool closed = v.front() == v.back();
  std::set<elem> seen(v.begin(), v.end() - 1);
  bool interior_distinct = seen.size() == v.size() - 1;
  if (closed && interior_distinct && v.size() >= 3) return WalkClass::cycle;
  if (!closed && interior_distinct && !seen.count(v.back())) return WalkClass::path;
  return WalkClass::general;
}

inline Walk translate(const Group& g, const Walk& w, elem t) {
  Walk out = w;
  for (auto& x : out.verts) x = g.add(x, t);
  return out;
}

/// Base walk plus its group; the |G| right translates are implicit.
struct Development {
  Walk base;
  Group group;
};

inline std::vector<Walk> materialize(const Development& d) {
  std::vector<Walk> out;
  out.reserve(d.group.order());
  for (elem t = 0; t < d.group.order(); ++t) out.push_back(translate(d.group, d.base, t));
  return out;
}

/// One development per line of the chosen side.
inline std::vector<Development> decomposition_from_matrix(const GMatrix& m, const Ordering& o,
                                                          Sign sign, Side side, bool undirected) {
  validate_ordering(m, o);
  const int count = side == Side::rows ? m.rows : m.cols;
  std::vector<Development> out;
  for (int t = 0; t < count; ++t) {
    Walk w = walk_from_ordering(m, o, side, t, sign);
    w.directed = !undirected;
    out.push_back({std::move(w), m.group});
  }
  return out;
}

/// Cayley (di)graph data: arcs (x, d+x) for d in the connection multiset.
struct CayleySpec {
  Group group;
  std::vector<elem> connection;
  bool directed = true;

  CayleySpec() = default;
  CayleySpec(Group g, std::vector<elem> m, bool dir)
      : group(std::move(g)), connection(std::move(m)), directed(dir) {
    for (elem d : connection) {
      group.check_elem(d);
      if (d == 0) throw std::invalid_argument("connection multiset may not contain zero");
    }
  }
};

using EdgeMultiset = std::unordered_map<long long, long long>;

namespace detail {
inline long long edge_key(int order, elem u, elem v, bool directed) {
  if (!directed && u > v) std::swap(u, v);
  return (long long)u * order + v;
}
inline void add_walk_edges(EdgeMultiset& out, const Group& g, const Walk& w, elem t) {
  for (size_t i = 0; i + 1 < w.verts.size(); ++i) {
    elem u = g.add(w.verts[i], t), v = g.add(w.verts[i + 1], t);
    ++out[edge_key(g.order(), u, v, w.directed)];
  }
}
}  // namespace detail

inline EdgeMultiset edge_multiset(const CayleySpec& s) {
  EdgeMultiset out;
  for (elem d : s.connection)
    for (elem x = 0; x < s.group.order(); ++x)
      ++out[detail::edge_key(s.group.order(), x, s.group.add(d, x), s.directed)];
  return out;
}

inline EdgeMultiset edges_of(const std::vector<Development>& devs) {
  EdgeMultiset out;
  for (const auto& d : devs)
    for (elem t = 0; t < d.group.order(); ++t) detail::add_walk_edges(out, d.group, d.base, t);
  return out;
}

/// Exact multiset equality between the translated walk edges and the edges
/// of the specified Cayley (di)graph.
inline CheckResult check_decomposes(const std::vector<Development>& devs, const CayleySpec& spec) {
  for (const auto& d : devs) {
    if (d.group != spec.group) return {false, "group mismatch"};
    if (d.base.directed != spec.directed) return {false, "directedness mismatch"};
  }
  EdgeMultiset have = edges_of(devs);
  EdgeMultiset want = edge_multiset(spec);
  if (have == want) return {true, ""};
  return {false, "edge multisets differ"};
}

/// Orthogonality: every pair of translated walks, one from each family,
/// shares at most one edge.  Right translation preserves shared-edge counts,
/// so only the relative translate must be scanned.
inline bool check_orthogonal(const std::vector<Development>& a, const std::vector<Development>& b) {
  if (a.empty() || b.empty()) return true;
  const Group& g = a.front().group;
  for (const auto& d : a)
    if (d.group != g || d.base.directed != a.front().base.directed) return false;
  for (const auto& d : b)
    if (d.group != g || d.base.directed != a.front().base.directed) return false;

  std::vector<char> bad(a.size() * b.size(), 0);
  parallel_for((long long)a.size() * (long long)b.size(), [&](long long pair) {
    const auto& wa = a[pair / b.size()].base;
    const auto& wb = b[pair % b.size()].base;
    EdgeMultiset ea;
    detail::add_walk_edges(ea, g, wa, 0);
    for (elem delta = 0; delta < g.order(); ++delta) {
      EdgeMultiset eb;
      detail::add_walk_edges(eb, g, wb, delta);
      long long shared = 0;
      for (auto& [key, cnt] : eb) {
        auto it = ea.find(key);
        if (it != ea.end()) shared += std::min(cnt, it->second);
      }
      if (shared > 1) {
        bad[pair] = 1;
        return;
      }
    }
  });
  for (char c : bad)
    if (c) return false;
  return true;
}

/// Closed walk joining the p(g) translates of an undirected walk by
/// multiples of its terminal vertex g, one circuit per coset of <g>.
struct Circuit {
  std::vector<elem> verts;  // closed; the first vertex is not repeated
  elem join_elem = 0;
  int period = 1;
  int edge_count() const { return (int)verts.size(); }
};

inline std::vector<Circuit> circuits_from_line(const GMatrix& m, const Ordering& o, Side side,
                                               int index, Sign sign) {
  const Group& g = m.group;
  Walk w = walk_from_ordering(m, o, side, index, sign);
  elem join = w.verts.back();
  int p = g.element_order(join);

  Circuit base;
  base.join_elem = join;
  base.period = p;
  elem mult = 0;
  for (int t = 1; t <= p; ++t) {
    mult = g.add(mult, join);
    for (size_t i = 0; i + 1 < w.verts.size(); ++i) base.verts.push_back(g.add(w.verts[i], mult));
  }

  // Canonical transversal of the right cosets of <g>: smallest representative.
  std::vector<elem> subgroup;
  elem x = 0;
  do {
    subgroup.push_back(x);
    x = g.add(x, join);
  } while (x != 0);
  std::vector<char> seen(g.order(), 0);
  std::vector<Circuit> out;
  for (elem t = 0; t < g.order(); ++t) {
    if (seen[t]) continue;
    for (elem h : subgroup) seen[g.add(h, t)] = 1;
    Circuit c = base;
    for (auto& vtx : c.verts) vtx = g.add(vtx, t);
    out.push_back(std::move(c));
  }
  return out;
}

inline EdgeMultiset circuit_edges(const Group& g, const Circuit& c) {
  EdgeMultiset out;
  for (size_t i = 0; i < c.verts.size(); ++i) {
    elem u = c.verts[i], v = c.verts[(i + 1) % c.verts.size()];
    ++out[detail::edge_key(g.order(), u, v, false)];
  }
  return out;
}

/// Row-wise / column-wise sign alternation with a positive leading sign.
inline GMatrix alternate_signs(const GMatrix& b, Side side) {
  GMatrix out = b;
  const Group& g = b.group;
  if (side == Side::rows) {
    for (int i = 0; i < b.rows; ++i) {
      bool negate = false;
      for (int j = 0; j < b.cols; ++j)
        if (b.at(i, j) != 0) {
          out.set(i, j, negate ? g.neg(b.at(i, j)) : b.at(i, j));
          negate = !negate;
        }
    }
  } else {
    for (int j = 0; j < b.cols; ++j) {
      bool negate = false;
      for (int i = 0; i < b.rows; ++i)
        if (b.at(i, j) != 0) {
          out.set(i, j, negate ? g.neg(b.at(i, j)) : b.at(i, j));
          negate = !negate;
        }
    }
  }
  return out;
}

struct PathDecompositionPair {
  GMatrix row_matrix, col_matrix;
  Ordering row_ordering, col_ordering;
  std::vector<Development> rows, cols;
};

/// Orthogonal Z_v-regular path decompositions of Cay[Z_v : S] with path
/// lengths spanning h (row side) and k (column side): a 0/1 realization of
/// (h,k) carries the symbols in increasing order, then the two matrices take
/// alternated signs row-wise and column-wise respectively.
inline PathDecompositionPair ortho_path_decomposition(int v, const std::vector<int>& symbols,
                                                      const std::vector<int>& h,
                                                      const std::vector<int>& k) {
  std::vector<int> f = value_map(v, symbols);  // rejects v/2 and out-of-range symbols
  long long sh = 0, sk = 0;
  for (int x : h) sh += x;
  for (int x : k) sk += x;
  if (sh != (long long)symbols.size() || sk != (long long)symbols.size())
    throw std::invalid_argument("|S| must equal the total of h and of k");
  BinMatrix c = gale_ryser_construct(h, k);

  Group zv = Group::cyclic(v);
  GMatrix b(zv, c.rows, c.cols);
  int rank = 0;
  for (int i = 0; i < c.rows; ++i)
    for (int j = 0; j < c.cols; ++j)
      if (c.at(i, j)) b.set(i, j, f[++rank]);

  PathDecompositionPair out;
  out.row_matrix = alternate_signs(b, Side::rows);
  out.col_matrix = alternate_signs(b, Side::cols);
  out.row_ordering = default_natural_ordering(out.row_matrix);
  out.col_ordering = default_natural_ordering(out.col_matrix);
  out.rows = decomposition_from_matrix(out.row_matrix, out.row_ordering, Sign::plus, Side::rows, true);
  out.cols = decomposition_from_matrix(out.col_matrix, out.col_ordering, Sign::plus, Side::cols, true);
  return out;
}

/// Orders of the ordered line sums, rows first; all ones exactly when the
/// ordered matrix is zero sum.
inline std::vector<int> period_sequence(const GMatrix& m, const Ordering& o) {
  validate_ordering(m, o);
  std::vector<int> out;
  for (auto& line : o.rows) out.push_back(m.group.element_order(sum_of(m.group, line_values(m, line))));
  for (auto& line : o.cols) out.push_back(m.group.element_order(sum_of(m.group, line_values(m, line))));
  return out;
}

}  // namespace heffter
