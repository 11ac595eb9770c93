#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "heffter/decomp.hpp"
#include "heffter/embed.hpp"
#include "heffter/gha.hpp"
#include "heffter/gmatrix.hpp"
#include "heffter/nasm.hpp"

namespace heffter {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Text format: first line "m n <group descriptor>", then m rows of n entries.
// Entries are canonical element indices; 0 is the empty cell.  Sign matrices
// use the descriptor "sign" with entries in {-1,0,1}; binary patterns use
// "binary" with entries in {0,1}.
// ---------------------------------------------------------------------------

inline std::string to_text(const GMatrix& m) {
  std::ostringstream out;
  out << m.rows << ' ' << m.cols << ' ' << m.group.descriptor() << '\n';
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) out << (j ? " " : "") << m.at(i, j);
    out << '\n';
  }
  return out.str();
}

inline std::string to_text(const SignMatrix& m) {
  std::ostringstream out;
  out << m.rows << ' ' << m.cols << " sign\n";
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) out << (j ? " " : "") << m.at(i, j);
    out << '\n';
  }
  return out.str();
}

inline std::string to_text(const BinMatrix& m) {
  std::ostringstream out;
  out << m.rows << ' ' << m.cols << " binary\n";
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) out << (j ? " " : "") << (int)m.at(i, j);
    out << '\n';
  }
  return out.str();
}

namespace detail {
struct TextHeader {
  int rows, cols;
  std::string descriptor;
  std::vector<int> entries;
};
inline TextHeader parse_matrix_text(const std::string& text) {
  std::istringstream in(text);
  TextHeader h{};
  if (!(in >> h.rows >> h.cols >> h.descriptor))
    throw std::invalid_argument("matrix text must start with: m n <group descriptor>");
  if (h.rows < 1 || h.cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
  h.entries.resize((size_t)h.rows * h.cols);
  for (auto& e : h.entries)
    if (!(in >> e)) throw std::invalid_argument("matrix text is truncated");
  return h;
}
}  // namespace detail

inline GMatrix gmatrix_from_text(const std::string& text) {
  auto h = detail::parse_matrix_text(text);
  return GMatrix(Group::parse(h.descriptor), h.rows, h.cols, std::move(h.entries));
}

inline SignMatrix sign_matrix_from_text(const std::string& text) {
  auto h = detail::parse_matrix_text(text);
  if (h.descriptor != "sign" && h.descriptor != "binary")
    throw std::invalid_argument("sign matrices use the descriptor 'sign'");
  return SignMatrix(h.rows, h.cols, std::move(h.entries));
}

inline BinMatrix bin_matrix_from_text(const std::string& text) {
  auto h = detail::parse_matrix_text(text);
  if (h.descriptor != "binary" && h.descriptor != "sign")
    throw std::invalid_argument("binary patterns use the descriptor 'binary'");
  std::vector<uint8_t> cells;
  cells.reserve(h.entries.size());
  for (int e : h.entries) {
    if (e != 0 && e != 1) throw std::invalid_argument("binary pattern entries must be 0 or 1");
    cells.push_back((uint8_t)e);
  }
  return BinMatrix(h.rows, h.cols, std::move(cells));
}

// ---------------------------------------------------------------------------
// JSON mirrors.  Cell coordinates serialize 1-based.
// ---------------------------------------------------------------------------

inline json to_json(const GMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"m", m.rows}, {"n", m.cols}, {"group", m.group.descriptor()}, {"entries", rows}};
}

inline GMatrix gmatrix_from_json(const json& j) {
  int m = j.at("m"), n = j.at("n");
  std::vector<elem> cells;
  for (const auto& row : j.at("entries"))
    for (const auto& e : row) cells.push_back(e.get<int>());
  return GMatrix(Group::parse(j.at("group").get<std::string>()), m, n, std::move(cells));
}

inline json to_json(const SignMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j));
    rows.push_back(std::move(row));
  }
  return json{{"m", m.rows}, {"n", m.cols}, {"group", "sign"}, {"entries", rows}};
}

inline SignMatrix sign_matrix_from_json(const json& j) {
  int m = j.at("m"), n = j.at("n");
  std::vector<int> cells;
  for (const auto& row : j.at("entries"))
    for (const auto& e : row) cells.push_back(e.get<int>());
  return SignMatrix(m, n, std::move(cells));
}

inline json to_json(const Ordering& o) {
  auto lines = [](const std::vector<std::vector<Cell>>& ls) {
    json out = json::array();
    for (const auto& line : ls) {
      json seq = json::array();
      for (Cell c : line) seq.push_back(json::array({c.r + 1, c.c + 1}));
      out.push_back(std::move(seq));
    }
    return out;
  };
  return json{{"rows", lines(o.rows)}, {"cols", lines(o.cols)}};
}

inline Ordering ordering_from_json(const json& j) {
  auto lines = [](const json& ls) {
    std::vector<std::vector<Cell>> out;
    for (const auto& line : ls) {
      std::vector<Cell> seq;
      for (const auto& c : line) seq.push_back({c.at(0).get<int>() - 1, c.at(1).get<int>() - 1});
      out.push_back(std::move(seq));
    }
    return out;
  };
  return Ordering{lines(j.at("rows")), lines(j.at("cols"))};
}

inline json to_json(const GHACandidate& c) {
  json out{{"matrix", to_json(c.matrix)},
           {"symbols", c.symbols.elems},
           {"lambda", c.symbols.lambda},
           {"row_weights", c.row_weights},
           {"col_weights", c.col_weights}};
  out["ordering"] = c.ordering ? to_json(*c.ordering) : json(nullptr);
  return out;
}

inline GHACandidate gha_from_json(const json& j) {
  GHACandidate c;
  c.matrix = gmatrix_from_json(j.at("matrix"));
  c.symbols = SymbolSet(c.matrix.group, j.at("symbols").get<std::vector<int>>(), j.at("lambda").get<int>());
  c.row_weights = j.at("row_weights").get<std::vector<int>>();
  c.col_weights = j.at("col_weights").get<std::vector<int>>();
  if (j.contains("ordering") && !j.at("ordering").is_null())
    c.ordering = ordering_from_json(j.at("ordering"));
  return c;
}

inline json to_json(const GhaReport& r) {
  json checks{{"GHA:nec", r.nec_ok},
              {"GHA:nec2", r.gale_ryser_ok},
              {"GHA:weights", r.weights_ok},
              {"GHA:multiset", r.multiset_ok}};
  json out{{"ok", r.ok}, {"checks", checks}, {"failures", r.failures}};
  if (r.sums) {
    const char* verdict = r.sums->verdict == SumVerdict::zero_sum      ? "zero sum"
                          : r.sums->verdict == SumVerdict::nonzero_sum ? "nonzero sum"
                                                                       : "mixed";
    out["sums"] = json{{"rows", r.sums->row_sums}, {"cols", r.sums->col_sums}, {"verdict", verdict}};
    out["simple"] = json{{"rows", r.row_simple}, {"cols", r.col_simple}, {"all", r.all_simple}};
  }
  return out;
}

inline json to_json(const std::vector<Development>& devs, Side side, Sign sign) {
  json walks = json::array();
  for (const auto& d : devs)
    walks.push_back(json{{"line", d.base.origin.index + 1}, {"verts", d.base.verts}});
  return json{{"group", devs.empty() ? "" : devs.front().group.descriptor()},
              {"side", side == Side::rows ? "rows" : "cols"},
              {"sign", sign == Sign::plus ? "+" : "-"},
              {"directed", devs.empty() ? true : devs.front().base.directed},
              {"walks", walks}};
}

inline std::vector<Development> developments_from_json(const json& j) {
  Group g = Group::parse(j.at("group").get<std::string>());
  Side side = j.at("side").get<std::string>() == "rows" ? Side::rows : Side::cols;
  Sign sign = j.at("sign").get<std::string>() == "+" ? Sign::plus : Sign::minus;
  bool directed = j.at("directed").get<bool>();
  std::vector<Development> out;
  for (const auto& w : j.at("walks")) {
    Walk walk;
    walk.verts = w.at("verts").get<std::vector<int>>();
    walk.directed = directed;
    walk.origin = {side, w.at("line").get<int>() - 1, sign};
    for (elem x : walk.verts) g.check_elem(x);
    out.push_back({std::move(walk), g});
  }
  return out;
}

inline json to_json(const EmbeddingResult& e) {
  json faces = json::array(), colors = json::array(), comps = json::array();
  for (const auto& f : e.faces) faces.push_back(f);
  for (int c : e.face_class) colors.push_back(c == 0 ? "row" : "col");
  for (const auto& c : e.components)
    comps.push_back(json{{"vertices", c.vertices}, {"edges", c.edges}, {"faces", c.faces}, {"genus", c.genus}});
  return json{{"faces", faces},
              {"colors", colors},
              {"components", comps},
              {"checks",
               json{{"two_colorable", e.two_colorable},
                    {"families_match", e.families_match},
                    {"euler", e.euler_ok}}}};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

/// FNV-1a digest of the raw inputs, for run reports.
inline std::string digest(const std::string& data) {
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a:%016llx", h);
  return buf;
}

}  // namespace heffter
