#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "heffter/binmat.hpp"
#include "heffter/gha.hpp"
#include "heffter/gmatrix.hpp"

namespace heffter {

/// Last nonzero cell of every row (R), of every column (C), and L = R ∩ C.
struct TerminalSets {
  std::vector<Cell> row_last;  // size m
  std::vector<Cell> col_last;  // size n
  std::vector<Cell> l_cells;   // sorted
};

inline TerminalSets terminal_sets(const BinMatrix& a) {
  TerminalSets t;
  t.row_last.assign(a.rows, {-1, -1});
  t.col_last.assign(a.cols, {-1, -1});
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j)
      if (a.at(i, j)) {
        t.row_last[i] = {i, j};
        t.col_last[j] = {i, j};
      }
  for (int i = 0; i < a.rows; ++i)
    if (t.row_last[i].r < 0)
      throw std::invalid_argument("row " + std::to_string(i + 1) + " has weight zero");
  for (int j = 0; j < a.cols; ++j)
    if (t.col_last[j].r < 0)
      throw std::invalid_argument("column " + std::to_string(j + 1) + " has weight zero");
  std::set<Cell> r(t.row_last.begin(), t.row_last.end());
  for (Cell c : t.col_last)
    if (r.count(c)) t.l_cells.push_back(c);
  std::sort(t.l_cells.begin(), t.l_cells.end());
  return t;
}

struct ForestComponent {
  Cell l_vertex;
  std::vector<Cell> vertices;  // sorted
  std::vector<Cell> path;      // leaf x_1, ..., x_ell = l_vertex
  std::map<Cell, int> depth;   // distance from l_vertex
};

struct CellForest {
  std::vector<Cell> vertices;                // sorted R ∪ C
  std::vector<std::pair<Cell, Cell>> edges;  // normalized (smaller first)
  std::vector<ForestComponent> components;   // sorted by l_vertex
};

/// The graph on R ∪ C joining an R-cell and a C-cell that share a row or a
/// column.  Violations of the forest structure or of the one-L-vertex-per-
/// component property are structural impossibilities and raise logic_error.
inline CellForest build_forest(const TerminalSets& t) {
  CellForest f;
  std::set<Cell> vset(t.row_last.begin(), t.row_last.end());
  vset.insert(t.col_last.begin(), t.col_last.end());
  f.vertices.assign(vset.begin(), vset.end());
  std::map<Cell, int> vid;
  for (size_t i = 0; i < f.vertices.size(); ++i) vid[f.vertices[i]] = (int)i;

  std::set<std::pair<Cell, Cell>> eset;
  for (Cell r : t.row_last)
    for (Cell c : t.col_last) {
      if (r == c) continue;
      if (r.r == c.r || r.c == c.c) eset.insert({std::min(r, c), std::max(r, c)});
    }
  f.edges.assign(eset.begin(), eset.end());

  // union-find
  std::vector<int> parent(f.vertices.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = (int)i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto& e : f.edges) {
    int a = find(vid[e.first]), b = find(vid[e.second]);
    if (a != b) parent[a] = b;
  }
  std::map<int, std::vector<Cell>> comps;
  for (size_t i = 0; i < f.vertices.size(); ++i) comps[find((int)i)].push_back(f.vertices[i]);

  if (f.edges.size() != f.vertices.size() - comps.size())
    throw std::logic_error("terminal-cell graph contains a cycle");

  std::set<Cell> lset(t.l_cells.begin(), t.l_cells.end());
  std::map<Cell, std::vector<Cell>> adj;
  for (auto& e : f.edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  for (auto& [root, verts] : comps) {
    (void)root;
    ForestComponent comp;
    comp.vertices = verts;
    int lcount = 0;
    for (Cell v : verts)
      if (lset.count(v)) {
        comp.l_vertex = v;
        ++lcount;
      }
    if (lcount != 1)
      throw std::logic_error("terminal-cell component does not contain exactly one corner cell");
    // BFS from the L-vertex; the maximal path ends at the deepest leaf.
    std::map<Cell, Cell> bfs_parent;
    comp.depth[comp.l_vertex] = 0;
    std::vector<Cell> queue{comp.l_vertex};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      Cell u = queue[qi];
      for (Cell w : adj[u])
        if (!comp.depth.count(w)) {
          comp.depth[w] = comp.depth[u] + 1;
          bfs_parent[w] = u;
          queue.push_back(w);
        }
    }
    Cell deepest = comp.l_vertex;
    for (auto& [cell, d] : comp.depth)
      if (d > comp.depth[deepest] || (d == comp.depth[deepest] && cell < deepest)) deepest = cell;
    Cell cur = deepest;
    comp.path.push_back(cur);
    while (cur != comp.l_vertex) {
      cur = bfs_parent[cur];
      comp.path.push_back(cur);
    }
    f.components.push_back(std::move(comp));
  }
  std::sort(f.components.begin(), f.components.end(),
            [](const ForestComponent& a, const ForestComponent& b) { return a.l_vertex < b.l_vertex; });
  return f;
}

namespace detail {

struct FillState {
  GMatrix grid;
  std::vector<std::vector<Cell>> row_cells, col_cells;  // natural order

  explicit FillState(const Group& g, const BinMatrix& a) : grid(g, a.rows, a.cols) {
    row_cells.resize(a.rows);
    col_cells.resize(a.cols);
    for (int i = 0; i < a.rows; ++i)
      for (int j = 0; j < a.cols; ++j)
        if (a.at(i, j)) {
          row_cells[i].push_back({i, j});
          col_cells[j].push_back({i, j});
        }
  }

  // The value that would force the natural sum of the given line to zero,
  // assuming every other cell of the line is already filled.
  elem zero_value(const std::vector<Cell>& line, Cell hole) const {
    const Group& g = grid.group;
    elem prefix = 0, suffix = 0;
    bool seen = false;
    for (Cell c : line) {
      if (c == hole) {
        seen = true;
        continue;
      }
      (seen ? suffix : prefix) = g.add(seen ? suffix : prefix, grid.at(c));
    }
    return g.add(g.neg(prefix), g.neg(suffix));
  }
  elem row_zero_value(Cell c) const { return zero_value(row_cells[c.r], c); }
  elem col_zero_value(Cell c) const { return zero_value(col_cells[c.c], c); }
};

// Stage 2: isolated corner cells get distinct values +-f avoiding up to two
// forbidden elements each; first-fit with backtracking over the reserve.
inline bool assign_isolated(FillState& st, const std::vector<Cell>& cells, size_t idx,
                            std::vector<elem>& reserve, std::vector<char>& used) {
  if (idx == cells.size()) return true;
  Cell cell = cells[idx];
  const Group& g = st.grid.group;
  elem fr = st.row_zero_value(cell), fc = st.col_zero_value(cell);
  for (size_t t = 0; t < reserve.size(); ++t) {
    if (used[t]) continue;
    for (elem cand : {reserve[t], g.neg(reserve[t])}) {
      if (cand == fr || cand == fc) continue;
      used[t] = 1;
      st.grid.set(cell, cand);
      if (assign_isolated(st, cells, idx + 1, reserve, used)) return true;
      st.grid.set(cell, 0);
      used[t] = 0;
    }
  }
  return false;
}

}  // namespace detail

/// Builds a nonzero-sum NGHA over an arbitrary group by filling the ones of
/// a 0/1 pattern with the multiset of lambda copies of S (lambda/2 copies of
/// its involutions):
///   0. cyclic row shift so the last row has the largest weight;
///   1. non-terminal cells take the unreserved values in lexicographic order;
///   2. isolated corner cells avoid their (at most two) forbidden elements;
///   3. off-path terminal cells avoid their single forbidden element,
///      processed children-first toward the corner cell;
///   4. each component path is filled leaf-to-corner from the reserve,
///      permuted so the corner cell keeps a usable candidate.
/// Every row and column of the result has a nonzero natural sum.
inline GHACandidate fill_gha(const BinMatrix& pattern, const Group& g, const SymbolSet& symbols) {
  if (symbols.group != g) throw std::invalid_argument("symbol set group mismatch");
  const int m = pattern.rows, n = pattern.cols;
  std::vector<int> hw = pattern.row_weights(), kw = pattern.col_weights();
  for (int x : hw)
    if (x < 1) throw std::invalid_argument("every row must have weight >= 1");
  for (int x : kw)
    if (x < 1) throw std::invalid_argument("every column must have weight >= 1");

  const int lambda = symbols.lambda;
  auto inv = symbols.involution_part();
  auto noninv = symbols.noninvolution_part();
  if (!inv.empty() && lambda % 2 != 0)
    throw std::invalid_argument("lambda must be even when S contains involutions");
  long long total = 0;
  for (int x : hw) total += x;
  if ((long long)lambda * (long long)symbols.elems.size() -
          (long long)(lambda / 2) * (long long)inv.size() !=
      total)
    throw std::invalid_argument("pattern weight does not match lambda|S| - (lambda/2)|I(S)|");

  // Stage 0: rotate rows so a row of maximal weight comes last.
  int argmax = 0;
  for (int i = 0; i < m; ++i)
    if (hw[i] >= hw[argmax]) argmax = i;
  const int shift = (m - 1) - argmax;
  BinMatrix a(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) a.set((i + shift) % m, j, pattern.at(i, j));

  TerminalSets ts = terminal_sets(a);
  CellForest forest = build_forest(ts);
  const size_t nverts = forest.vertices.size();
  if (noninv.size() < nverts)
    throw std::invalid_argument("S needs at least " + std::to_string(nverts) +
                                " noninvolutions for this pattern");

  // Reserve F: the canonically largest noninvolutions.
  std::vector<elem> reserve(noninv.end() - nverts, noninv.end());

  // Stage 1 values: lambda copies of S, lambda/2 of involutions, minus one
  // copy of each reserved element; ascending.
  std::vector<elem> bulk;
  for (elem s : symbols.elems) {
    int copies = g.is_involution(s) ? lambda / 2 : lambda;
    if (std::binary_search(reserve.begin(), reserve.end(), s)) --copies;
    for (int t = 0; t < copies; ++t) bulk.push_back(s);
  }
  std::sort(bulk.begin(), bulk.end());

  detail::FillState st(g, a);
  std::set<Cell> terminal(forest.vertices.begin(), forest.vertices.end());
  size_t next = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (a.at(i, j) && !terminal.count({i, j})) st.grid.set(i, j, bulk[next++]);
  if (next != bulk.size()) throw std::logic_error("non-terminal fill count mismatch");

  std::set<Cell> rset(ts.row_last.begin(), ts.row_last.end());

  // Stage 2.
  std::vector<Cell> isolated;
  for (auto& comp : forest.components)
    if (comp.vertices.size() == 1) isolated.push_back(comp.l_vertex);
  std::vector<char> used(reserve.size(), 0);
  if (!detail::assign_isolated(st, isolated, 0, reserve, used))
    throw std::logic_error("no admissible assignment for isolated corner cells");
  std::vector<elem> avail;
  for (size_t t = 0; t < reserve.size(); ++t)
    if (!used[t]) avail.push_back(reserve[t]);

  // Stages 3 and 4, one component at a time with a pre-sliced reserve.
  size_t off = 0;
  for (auto& comp : forest.components) {
    if (comp.vertices.size() == 1) continue;
    std::vector<Cell> path = comp.path;
    std::set<Cell> on_path(path.begin(), path.end());
    std::vector<Cell> w;
    for (Cell c : comp.vertices)
      if (!on_path.count(c)) w.push_back(c);
    std::sort(w.begin(), w.end(), [&](Cell x, Cell y) {
      int dx = comp.depth.at(x), dy = comp.depth.at(y);
      return dx != dy ? dx > dy : x < y;
    });

    std::vector<elem> slice(avail.begin() + off, avail.begin() + off + w.size() + path.size());
    off += slice.size();

    // Stage 3: deepest first, so every constraint line is complete in time.
    size_t si = 0;
    for (Cell c : w) {
      elem forbidden = rset.count(c) ? st.row_zero_value(c) : st.col_zero_value(c);
      elem f = slice[si++];
      elem cand = f != forbidden ? f : g.neg(f);
      if (cand == forbidden) throw std::logic_error("off-path cell has no admissible value");
      st.grid.set(c, cand);
    }

    // Stage 4: fill the path leaf-to-corner.
    std::vector<elem> fz(slice.begin() + si, slice.end());
    const size_t ell = path.size();
    Cell z = path[ell - 1], prev = path[ell - 2];
    const bool shares_row = prev.r == z.r;
    elem g_last = shares_row ? st.col_zero_value(z) : st.row_zero_value(z);
    if (g.abs(g_last) == g.abs(fz[ell - 1])) std::swap(fz[0], fz[ell - 1]);
    for (size_t t = 0; t + 1 < ell; ++t) {
      Cell c = path[t];
      elem forbidden = rset.count(c) ? st.row_zero_value(c) : st.col_zero_value(c);
      elem cand = fz[t] != forbidden ? fz[t] : g.neg(fz[t]);
      if (cand == forbidden) throw std::logic_error("path cell has no admissible value");
      st.grid.set(c, cand);
    }
    elem g_other = shares_row ? st.row_zero_value(z) : st.col_zero_value(z);
    elem pick = 0;
    for (elem cand : {fz[ell - 1], g.neg(fz[ell - 1])})
      if (cand != g_last && cand != g_other) {
        pick = cand;
        break;
      }
    if (pick == 0) throw std::logic_error("corner cell has no admissible value");
    st.grid.set(z, pick);
  }

  // Shift rows back.
  GHACandidate out;
  out.matrix = GMatrix(g, m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) out.matrix.set(i, j, st.grid.at((i + shift) % m, j));
  out.symbols = symbols;
  out.row_weights = hw;
  out.col_weights = kw;
  out.ordering = default_natural_ordering(out.matrix);

  auto rep = verify_gha(out);
  if (!rep.ok || rep.sums->verdict != SumVerdict::nonzero_sum)
    throw std::logic_error("fill produced an array with a zero line sum");
  return out;
}

}  // namespace heffter
