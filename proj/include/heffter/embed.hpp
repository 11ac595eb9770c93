#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "heffter/decomp.hpp"
#include "heffter/gha.hpp"
#include "heffter/gmatrix.hpp"

namespace heffter {

namespace detail {
// Cyclic successor permutations on skeleton ranks induced by the row and
// column orderings.  Requires pairwise distinct nonzero entries.
struct LinePerms {
  std::vector<int> row_succ, col_succ;  // rank -> rank
  int size = 0;
};

inline LinePerms line_permutations(const GMatrix& m, const Ordering& o) {
  validate_ordering(m, o);
  std::set<elem> entries;
  for (elem e : m.cells)
    if (e != 0 && !entries.insert(e).second)
      throw std::invalid_argument("compatibility requires pairwise distinct entries");
  auto pos = position_matrix(m);
  auto rank = [&](Cell c) { return pos[(size_t)c.r * m.cols + c.c] - 1; };
  LinePerms lp;
  lp.size = (int)entries.size();
  lp.row_succ.assign(lp.size, 0);
  lp.col_succ.assign(lp.size, 0);
  for (const auto& line : o.rows)
    for (size_t t = 0; t < line.size(); ++t)
      lp.row_succ[rank(line[t])] = rank(line[(t + 1) % line.size()]);
  for (const auto& line : o.cols)
    for (size_t t = 0; t < line.size(); ++t)
      lp.col_succ[rank(line[t])] = rank(line[(t + 1) % line.size()]);
  return lp;
}

inline bool composite_is_full_cycle(const LinePerms& lp) {
  if (lp.size == 0) return false;
  int seen = 0, cur = 0;
  do {
    cur = lp.col_succ[lp.row_succ[cur]];
    ++seen;
  } while (cur != 0 && seen <= lp.size);
  return cur == 0 && seen == lp.size;
}
}  // namespace detail

/// True when the composite of the column and row permutations (rows applied
/// first) is a single cycle through all nonzero cells.
inline bool check_compatible(const GMatrix& m, const Ordering& o) {
  return detail::composite_is_full_cycle(detail::line_permutations(m, o));
}

enum class SearchStatus { found, exhausted, budget_exhausted };

struct CompatibleSearch {
  std::optional<Ordering> ordering;
  SearchStatus status = SearchStatus::exhausted;
};

/// Search for a compatible ordering: the natural ordering first, then every
/// combination of per-line cyclic orders (first cell of each line fixed).
/// The budget counts compatibility evaluations.
inline CompatibleSearch find_compatible_ordering(const GMatrix& m, long long budget) {
  CompatibleSearch out;
  long long spent = 0;
  auto try_one = [&](const Ordering& o) {
    if (spent >= budget) return false;
    ++spent;
    if (check_compatible(m, o)) {
      out.ordering = o;
      out.status = SearchStatus::found;
      return true;
    }
    return false;
  };

  if (budget <= 0) {
    out.status = SearchStatus::budget_exhausted;
    return out;
  }
  if (try_one(default_natural_ordering(m))) return out;

  // Odometer over per-line cyclic orders: each line's candidates are the
  // permutations of its cells with the lexicographically first cell fixed.
  std::vector<std::vector<std::vector<Cell>>> options;
  for (int i = 0; i < m.rows; ++i) {
    auto cells = detail::row_cells(m, i);
    std::vector<std::vector<Cell>> opts;
    if (cells.size() <= 1) {
      opts.push_back(cells);
    } else {
      std::vector<Cell> tail(cells.begin() + 1, cells.end());
      do {
        std::vector<Cell> seq{cells.front()};
        seq.insert(seq.end(), tail.begin(), tail.end());
        opts.push_back(std::move(seq));
      } while (std::next_permutation(tail.begin(), tail.end()));
    }
    options.push_back(std::move(opts));
  }
  for (int j = 0; j < m.cols; ++j) {
    auto cells = detail::col_cells(m, j);
    std::vector<std::vector<Cell>> opts;
    if (cells.size() <= 1) {
      opts.push_back(cells);
    } else {
      std::vector<Cell> tail(cells.begin() + 1, cells.end());
      do {
        std::vector<Cell> seq{cells.front()};
        seq.insert(seq.end(), tail.begin(), tail.end());
        opts.push_back(std::move(seq));
      } while (std::next_permutation(tail.begin(), tail.end()));
    }
    options.push_back(std::move(opts));
  }

  std::vector<size_t> idx(options.size(), 0);
  while (true) {
    Ordering o;
    for (int i = 0; i < m.rows; ++i) o.rows.push_back(options[i][idx[i]]);
    for (int j = 0; j < m.cols; ++j) o.cols.push_back(options[m.rows + j][idx[m.rows + j]]);
    if (try_one(o)) return out;
    if (spent >= budget) {
      out.status = SearchStatus::budget_exhausted;
      return out;
    }
    size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == options[pos].size()) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  out.status = SearchStatus::exhausted;
  return out;
}

/// Rotation of Cay[G:S] induced by a compatible ordering of a GHA with
/// lambda = 1 and involution-free S: rho_0(a) = -succ_row(a) on entries,
/// rho_0(a) = succ_col(-a) on negated entries; applied vertex-transitively.
struct RotationSystem {
  GHACandidate gha;
  Ordering ordering;
  std::vector<elem> half_symbols;         // S
  std::vector<elem> pm_symbols;           // +-S, sorted
  std::unordered_map<elem, elem> rho0;
};

inline RotationSystem rotation_system(const GHACandidate& h, const Ordering& o) {
  const Group& g = h.matrix.group;
  if (h.symbols.lambda != 1)
    throw std::invalid_argument("rotation systems require multiplicity 1");
  if (!h.symbols.involution_part().empty())
    throw std::invalid_argument("rotation systems require an involution-free symbol set");
  if (!check_compatible(h.matrix, o))
    throw std::invalid_argument("ordering is not compatible");

  // Cyclic successor maps on the actual entries.
  std::unordered_map<elem, elem> row_succ, col_succ;
  for (const auto& line : o.rows)
    for (size_t t = 0; t < line.size(); ++t)
      row_succ[h.matrix.at(line[t])] = h.matrix.at(line[(t + 1) % line.size()]);
  for (const auto& line : o.cols)
    for (size_t t = 0; t < line.size(); ++t)
      col_succ[h.matrix.at(line[t])] = h.matrix.at(line[(t + 1) % line.size()]);

  RotationSystem r;
  r.gha = h;
  r.ordering = o;
  r.half_symbols = h.symbols.elems;
  for (auto& [a, succ] : row_succ) {
    r.rho0[a] = g.neg(succ);
    r.rho0[g.neg(a)] = col_succ.at(a);
    r.pm_symbols.push_back(a);
    r.pm_symbols.push_back(g.neg(a));
  }
  std::sort(r.pm_symbols.begin(), r.pm_symbols.end());
  if (r.pm_symbols.size() != 2 * r.half_symbols.size() ||
      std::adjacent_find(r.pm_symbols.begin(), r.pm_symbols.end()) != r.pm_symbols.end())
    throw std::invalid_argument("entry set and its negatives must be disjoint");

  // rho_0 must act as one cycle on all of +-S.
  elem start = r.pm_symbols.front(), cur = start;
  size_t steps = 0;
  do {
    cur = r.rho0.at(cur);
    ++steps;
  } while (cur != start && steps <= r.pm_symbols.size());
  if (steps != r.pm_symbols.size())
    throw std::logic_error("rho_0 is not a full cycle despite a compatible ordering");
  return r;
}

struct ComponentStats {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int genus = 0;
};

struct EmbeddingResult {
  std::vector<std::vector<elem>> faces;  // closed directed boundary walks
  std::vector<int> face_class;           // 0 = row family, 1 = column family
  std::vector<ComponentStats> components;
  bool two_colorable = false;
  bool families_match = false;
  bool euler_ok = false;
  bool ok() const { return two_colorable && families_match && euler_ok; }
};

/// Traces the faces of the embedding as orbits of rho*tau, classifies each
/// face against the row/column circuit families, checks 2-colorability and
/// computes per-component Euler data.
inline EmbeddingResult trace_embedding(const RotationSystem& r) {
  const Group& g = r.gha.matrix.group;
  const int order = g.order();
  const int deg = (int)r.pm_symbols.size();

  std::vector<int> sym_index(g.order(), -1);
  for (int t = 0; t < deg; ++t) sym_index[r.pm_symbols[t]] = t;
  std::vector<int> rho0_idx(deg), neg_idx(deg);
  for (int t = 0; t < deg; ++t) {
    rho0_idx[t] = sym_index[r.rho0.at(r.pm_symbols[t])];
    neg_idx[t] = sym_index[g.neg(r.pm_symbols[t])];
  }

  // Directed edge (x, a+x) has id x*deg + index(a).
  auto rho_tau = [&](long long id) {
    elem x = (elem)(id / deg);
    int ai = (int)(id % deg);
    elem y = g.add(r.pm_symbols[ai], x);  // tau moves to the reversed edge at y
    return (long long)y * deg + rho0_idx[neg_idx[ai]];
  };

  EmbeddingResult out;
  const long long nedges = (long long)order * deg;
  std::vector<char> visited(nedges, 0);
  for (long long e0 = 0; e0 < nedges; ++e0) {
    if (visited[e0]) continue;
    std::vector<elem> walk;
    long long e = e0;
    do {
      visited[e] = 1;
      walk.push_back((elem)(e / deg));
      e = rho_tau(e);
    } while (e != e0);
    out.faces.push_back(std::move(walk));
  }

  // Circuit families from the ordered array: rows with sign +, reversed
  // columns with sign -.
  Ordering rev = r.ordering;
  for (auto& line : rev.cols) std::reverse(line.begin(), line.end());
  std::map<std::vector<std::pair<long long, long long>>, std::pair<int, int>> family;  // -> {class, count}
  auto canon = [](const EdgeMultiset& em) {
    std::vector<std::pair<long long, long long>> v(em.begin(), em.end());
    std::sort(v.begin(), v.end());
    return v;
  };
  int n_row_circuits = 0, n_col_circuits = 0;
  for (int i = 0; i < r.gha.matrix.rows; ++i)
    for (const Circuit& c : circuits_from_line(r.gha.matrix, r.ordering, Side::rows, i, Sign::plus)) {
      auto key = canon(circuit_edges(g, c));
      auto& slot = family[key];
      slot.first = 0;
      ++slot.second;
      ++n_row_circuits;
    }
  std::map<std::vector<std::pair<long long, long long>>, std::pair<int, int>> col_family;
  for (int j = 0; j < r.gha.matrix.cols; ++j)
    for (const Circuit& c : circuits_from_line(r.gha.matrix, rev, Side::cols, j, Sign::minus)) {
      auto key = canon(circuit_edges(g, c));
      auto& slot = col_family[key];
      slot.first = 1;
      ++slot.second;
      ++n_col_circuits;
    }

  out.families_match = (int)out.faces.size() == n_row_circuits + n_col_circuits;
  for (const auto& face : out.faces) {
    EdgeMultiset em;
    for (size_t t = 0; t < face.size(); ++t) {
      elem u = face[t], v = face[(t + 1) % face.size()];
      ++em[detail::edge_key(order, u, v, false)];
    }
    auto key = canon(em);
    auto it = family.find(key);
    if (it != family.end() && it->second.second > 0) {
      --it->second.second;
      out.face_class.push_back(0);
      continue;
    }
    auto jt = col_family.find(key);
    if (jt != col_family.end() && jt->second.second > 0) {
      --jt->second.second;
      out.face_class.push_back(1);
      continue;
    }
    throw std::logic_error("a traced face matches neither circuit family");
  }
  for (auto& [key, slot] : family) out.families_match = out.families_match && slot.second == 0;
  for (auto& [key, slot] : col_family) out.families_match = out.families_match && slot.second == 0;

  // Each undirected edge must border one face of each class.
  std::unordered_map<long long, std::pair<long long, long long>> border;
  for (size_t fi = 0; fi < out.faces.size(); ++fi) {
    const auto& face = out.faces[fi];
    for (size_t t = 0; t < face.size(); ++t) {
      auto& slot = border[detail::edge_key(order, face[t], face[(t + 1) % face.size()], false)];
      (out.face_class[fi] == 0 ? slot.first : slot.second) += 1;
    }
  }
  out.two_colorable = border.size() == (size_t)(nedges / 2);
  for (auto& [key, slot] : border)
    out.two_colorable = out.two_colorable && slot.first == 1 && slot.second == 1;

  // Per-component Euler data; vertices grouped by the edges of Cay[G:S].
  std::vector<int> comp(order);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (elem x = 0; x < order; ++x)
    for (elem a : r.half_symbols) {
      int u = find(x), v = find(g.add(a, x));
      if (u != v) comp[u] = v;
    }
  std::map<int, ComponentStats> stats;
  for (elem x = 0; x < order; ++x) ++stats[find(x)].vertices;
  for (elem x = 0; x < order; ++x) stats[find(x)].edges += deg;  // directed darts at x
  for (size_t fi = 0; fi < out.faces.size(); ++fi) ++stats[find(out.faces[fi].front())].faces;

  out.euler_ok = true;
  for (auto& [root, st] : stats) {
    (void)root;
    st.edges /= 2;
    int chi = st.vertices - st.edges + st.faces;
    if (chi > 2 || (2 - chi) % 2 != 0) {
      out.euler_ok = false;
      st.genus = -1;
    } else {
      st.genus = (2 - chi) / 2;
    }
    out.components.push_back(st);
  }
  return out;
}

}  // namespace heffter
