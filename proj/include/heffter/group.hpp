#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace heffter {

// Canonical element index into a fixed enumeration; 0 is always the identity.
using elem = int;

/// A finite group with additive notation, dense integer element encoding and
/// a canonical absolute value |a| = the element of {a, -a} with smaller index.
///
/// Supported kinds: cyclic Z_v (residues 0..v-1), dihedral Dih_n (rotations
/// 0..n-1 followed by reflections n..2n-1), direct products (mixed-radix,
/// left factor major) and explicit Cayley tables.  Immutable after
/// construction; all operations are pure and thread-safe.
class Group {
 public:
  Group() = default;

  static Group cyclic(int v) {
    if (v < 1) throw std::invalid_argument("cyclic group order must be >= 1");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::cyclic;
    impl->n = v;
    impl->order = v;
    impl->abelian = true;
    impl->descriptor = "Z:" + std::to_string(v);
    return Group(std::move(impl));
  }

  static Group dihedral(int n) {
    if (n < 1) throw std::invalid_argument("dihedral parameter must be >= 1");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::dihedral;
    impl->n = n;
    impl->order = 2 * n;
    impl->abelian = n <= 2;
    impl->descriptor = "Dih:" + std::to_string(n);
    return Group(std::move(impl));
  }

  static Group product(const Group& a, const Group& b) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::product;
    impl->left = a.impl_;
    impl->right = b.impl_;
    impl->order = a.order() * b.order();
    impl->abelian = a.abelian() && b.abelian();
    impl->descriptor = "x(" + a.descriptor() + "," + b.descriptor() + ")";
    return Group(std::move(impl));
  }

  /// Explicit group from an order*order Cayley table (row-major, table[a][b] = a+b).
  /// The identity must be element 0; the table must be a Latin square and associative.
  static Group from_table(std::vector<elem> table, std::string descriptor = "") {
    auto impl = std::make_shared<Impl>();
    int o = 0;
    while ((long long)o * o < (long long)table.size()) ++o;
    if (o < 1 || (long long)o * o != (long long)table.size())
      throw std::invalid_argument("table size is not a perfect square");
    impl->kind = Kind::table;
    impl->order = o;
    impl->table = std::move(table);
    validate_table(*impl);
    impl->abelian = true;
    for (int a = 0; a < o && impl->abelian; ++a)
      for (int b = a + 1; b < o; ++b)
        if (impl->table[a * o + b] != impl->table[b * o + a]) { impl->abelian = false; break; }
    impl->inverse.assign(o, 0);
    for (int a = 0; a < o; ++a)
      for (int b = 0; b < o; ++b)
        if (impl->table[a * o + b] == 0) { impl->inverse[a] = b; break; }
    impl->descriptor = descriptor.empty() ? "table:<inline>" : std::move(descriptor);
    return Group(std::move(impl));
  }

  /// Parses "Z:<v>", "Dih:<n>", "x(<desc>,<desc>)" or "table:<path>".
  static Group parse(const std::string& descriptor);

  int order() const { return impl_->order; }
  bool abelian() const { return impl_->abelian; }
  const std::string& descriptor() const { return impl_->descriptor; }
  bool valid() const { return impl_ != nullptr; }

  elem zero() const { return 0; }
  elem add(elem a, elem b) const { return impl_add(*impl_, a, b); }
  elem neg(elem a) const { return impl_neg(*impl_, a); }
  elem sub(elem a, elem b) const { return add(a, neg(b)); }

  elem abs(elem a) const {
    elem m = neg(a);
    return a < m ? a : m;
  }

  bool is_involution(elem a) const { return a != 0 && add(a, a) == 0; }

  /// Smallest p >= 1 with p*a = 0, by repeated addition.
  int element_order(elem a) const {
    int p = 1;
    elem x = a;
    while (x != 0) {
      x = add(x, a);
      ++p;
    }
    return p;
  }

  bool contains(elem a) const { return a >= 0 && a < order(); }

  void check_elem(elem a) const {
    if (!contains(a))
      throw std::invalid_argument("element index " + std::to_string(a) + " out of range for group " +
                                  descriptor());
  }

  bool operator==(const Group& o) const {
    return impl_ == o.impl_ || descriptor() == o.descriptor();
  }
  bool operator!=(const Group& o) const { return !(*this == o); }

 private:
  enum class Kind { cyclic, dihedral, product, table };
  struct Impl {
    Kind kind = Kind::cyclic;
    int order = 1;
    int n = 1;  // cyclic modulus / dihedral parameter
    bool abelian = true;
    std::string descriptor;
    std::shared_ptr<const Impl> left, right;
    std::vector<elem> table, inverse;
  };

  explicit Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  static elem impl_add(const Impl& im, elem a, elem b) {
    switch (im.kind) {
      case Kind::cyclic:
        return (a + b) % im.n;
      case Kind::dihedral: {
        const int n = im.n;
        if (a < n) return b < n ? (a + b) % n : (a + b) % n + n;
        if (b < n) return (a - b + n) % n + n;  // reflection * rotation
        return (a - b + n) % n;                 // reflection * reflection
      }
      case Kind::product: {
        const int ro = im.right->order;
        return impl_add(*im.left, a / ro, b / ro) * ro + impl_add(*im.right, a % ro, b % ro);
      }
      case Kind::table:
        return im.table[a * im.order + b];
    }
    return 0;
  }

  static elem impl_neg(const Impl& im, elem a) {
    switch (im.kind) {
      case Kind::cyclic:
        return (im.n - a) % im.n;
      case Kind::dihedral:
        return a < im.n ? (im.n - a) % im.n : a;
      case Kind::product: {
        const int ro = im.right->order;
        return impl_neg(*im.left, a / ro) * ro + impl_neg(*im.right, a % ro);
      }
      case Kind::table:
        return im.inverse[a];
    }
    return 0;
  }

  static void validate_table(const Impl& im) {
    const int o = im.order;
    for (elem x : im.table)
      if (x < 0 || x >= o) throw std::invalid_argument("table entry out of range");
    for (int i = 0; i < o; ++i) {
      std::vector<char> row(o, 0), col(o, 0);
      for (int j = 0; j < o; ++j) {
        if (row[im.table[i * o + j]]++) throw std::invalid_argument("table is not a Latin square");
        if (col[im.table[j * o + i]]++) throw std::invalid_argument("table is not a Latin square");
      }
    }
    for (int j = 0; j < o; ++j)
      if (im.table[j] != j || im.table[j * o] != j)
        throw std::invalid_argument("table identity must be element 0");
    for (int a = 0; a < o; ++a)
      for (int b = 0; b < o; ++b)
        for (int c = 0; c < o; ++c)
          if (im.table[im.table[a * o + b] * o + c] != im.table[a * o + im.table[b * o + c]])
            throw std::invalid_argument("table is not associative");
  }

  std::shared_ptr<const Impl> impl_;
};

inline Group Group::parse(const std::string& descriptor) {
  std::string d = descriptor;
  while (!d.empty() && std::isspace((unsigned char)d.front())) d.erase(d.begin());
  while (!d.empty() && std::isspace((unsigned char)d.back())) d.pop_back();
  if (d.rfind("Z:", 0) == 0) {
    return cyclic(std::stoi(d.substr(2)));
  }
  if (d.rfind("Dih:", 0) == 0) {
    return dihedral(std::stoi(d.substr(4)));
  }
  if (d.rfind("x(", 0) == 0 && !d.empty() && d.back() == ')') {
    std::string inner = d.substr(2, d.size() - 3);
    int depth = 0;
    for (size_t i = 0; i < inner.size(); ++i) {
      char c = inner[i];
      if (c == '(') ++depth;
      else if (c == ')') --depth;
      else if (c == ',' && depth == 0)
        return product(parse(inner.substr(0, i)), parse(inner.substr(i + 1)));
    }
    throw std::invalid_argument("malformed product descriptor: " + descriptor);
  }
  if (d.rfind("table:", 0) == 0) {
    std::string path = d.substr(6);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open table file: " + path);
    int o = 0;
    in >> o;
    if (o < 1) throw std::invalid_argument("table order must be >= 1");
    std::vector<elem> t((size_t)o * o);
    for (auto& x : t)
      if (!(in >> x)) throw std::invalid_argument("table file truncated: " + path);
    return from_table(std::move(t), d);
  }
  throw std::invalid_argument("unknown group descriptor: " + descriptor);
}

/// Elements of s that have order 2.
inline std::vector<elem> involutions(const Group& g, const std::vector<elem>& s) {
  std::vector<elem> out;
  for (elem a : s) {
    g.check_elem(a);
    if (g.is_involution(a)) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Underlying set of {|h| : h in m} with the zero element removed.
inline std::vector<elem> positive_part(const Group& g, const std::vector<elem>& m) {
  std::vector<elem> out;
  for (elem a : m) {
    g.check_elem(a);
    elem c = g.abs(a);
    if (c != 0) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// G+ : all canonical representatives, zero excluded.
inline std::vector<elem> canonical_positives(const Group& g) {
  std::vector<elem> out;
  for (elem a = 1; a < g.order(); ++a)
    if (g.abs(a) == a) out.push_back(a);
  return out;
}

}  // namespace heffter
