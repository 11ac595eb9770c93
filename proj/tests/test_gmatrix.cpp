#include "doctest.h"

#include <set>

#include "heffter/gmatrix.hpp"

using namespace heffter;

namespace {
Cell c1(int r, int c) { return {r - 1, c - 1}; }  // 1-based helper for literals

// The 6x8 pattern with row weights (4,3,3,2,2,5), as a Z2-valued matrix.
GMatrix pattern_6x8(const Group& g) {
  std::vector<int> bits = {
      1, 1, 1, 0, 1, 0, 0, 0,
      1, 0, 1, 0, 0, 1, 0, 0,
      0, 1, 0, 1, 1, 0, 0, 0,
      0, 0, 1, 0, 1, 0, 0, 0,
      0, 0, 0, 0, 0, 1, 0, 1,
      1, 0, 0, 1, 0, 1, 1, 1};
  return GMatrix(g, 6, 8, bits);
}
}  // namespace

TEST_CASE("skeleton") {
  auto z5 = Group::cyclic(5);
  GMatrix m(z5, 2, 2, {1, 0, 0, 2});
  CHECK(skeleton(m) == std::vector<Cell>{c1(1, 1), c1(2, 2)});

  GMatrix zero(z5, 2, 3);
  CHECK(skeleton(zero).empty());

  auto sk = skeleton(pattern_6x8(Group::cyclic(2)));
  CHECK(sk.size() == 19);
  CHECK(sk.front() == c1(1, 1));
  CHECK(sk.back() == c1(6, 8));
}

TEST_CASE("weights") {
  auto w = weights(pattern_6x8(Group::cyclic(2)));
  CHECK(w.row == std::vector<int>{4, 3, 3, 2, 2, 5});
  CHECK(w.col == std::vector<int>{3, 2, 3, 2, 3, 3, 1, 2});
  CHECK(w.total == 19);

  auto z7 = Group::cyclic(7);
  GMatrix diag(z7, 3, 3, {1, 0, 0, 0, 2, 0, 0, 0, 3});
  auto wd = weights(diag);
  CHECK(wd.row == std::vector<int>{1, 1, 1});
  CHECK(wd.col == std::vector<int>{1, 1, 1});

  GMatrix zero(z7, 2, 2);
  auto wz = weights(zero);
  CHECK(wz.row == std::vector<int>{0, 0});
  CHECK(wz.col == std::vector<int>{0, 0});
  CHECK(wz.total == 0);
}

TEST_CASE("position matrix") {
  auto z7 = Group::cyclic(7);
  CHECK(position_matrix(GMatrix(z7, 2, 2, {5, 0, 0, 3})) == std::vector<int>{1, 0, 0, 2});
  CHECK(position_matrix(GMatrix(z7, 1, 3, {1, 1, 1})) == std::vector<int>{1, 2, 3});
  CHECK(position_matrix(GMatrix(z7, 2, 2, {1, 2, 3, 4})) == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("position matrix ranks increase along the skeleton") {
  auto m = pattern_6x8(Group::cyclic(2));
  auto pos = position_matrix(m);
  auto sk = skeleton(m);
  for (size_t t = 0; t < sk.size(); ++t)
    CHECK(pos[(size_t)sk[t].r * m.cols + sk[t].c] == (int)t + 1);
}

TEST_CASE("natural orderings") {
  auto z7 = Group::cyclic(7);
  GMatrix row(z7, 1, 4, {1, 0, 2, 3});
  auto o0 = natural_ordering(row, {0}, {0, 0, 0, 0});
  CHECK(o0.rows[0] == std::vector<Cell>{c1(1, 1), c1(1, 3), c1(1, 4)});
  auto o1 = natural_ordering(row, {1}, {0, 0, 0, 0});
  CHECK(o1.rows[0] == std::vector<Cell>{c1(1, 3), c1(1, 4), c1(1, 1)});
  CHECK_THROWS_AS(natural_ordering(row, {3}, {0, 0, 0, 0}), std::invalid_argument);

  auto z11 = Group::cyclic(11);
  GMatrix col(z11, 3, 1, {2, 0, 5});
  auto oc = default_natural_ordering(col);
  CHECK(oc.cols[0] == std::vector<Cell>{c1(1, 1), c1(3, 1)});
}

TEST_CASE("runs and partial sums") {
  auto z7 = Group::cyclic(7);
  CHECK(partial_sums(z7, {1, 2, 3}) == std::vector<elem>{1, 3, 6});
  CHECK(run_sum(z7, {1, 2, 3}, 1, 2) == 5);
  CHECK(partial_sums(z7, {4}) == std::vector<elem>{4});

  // order matters over nonabelian groups
  auto d3 = Group::dihedral(3);
  elem alpha = 1, beta = 3;
  CHECK(sum_of(d3, {alpha, beta}) == d3.add(alpha, beta));
  CHECK(sum_of(d3, {beta, alpha}) == d3.add(beta, alpha));
  CHECK(sum_of(d3, {alpha, beta}) != sum_of(d3, {beta, alpha}));
}

TEST_CASE("is_simple") {
  auto z7 = Group::cyclic(7);
  CHECK(is_simple(z7, {1, 2, 3}));
  auto z5 = Group::cyclic(5);
  CHECK_FALSE(is_simple(z5, {1, 4, 2}));  // 1+4 = 0 is a proper run
  auto z17 = Group::cyclic(17);
  CHECK(is_simple(z17, {1, 15, 4, 14}));  // (1,-2,4,-3): sums 1,16,3,0
  CHECK(sum_of(z17, {1, 15, 4, 14}) == 0);
  // simple iff all proper runs nonzero (cross-check on small sequences)
  auto z9 = Group::cyclic(9);
  for (elem a = 1; a < 9; ++a)
    for (elem b = 1; b < 9; ++b)
      for (elem c = 1; c < 9; ++c) {
        std::vector<elem> seq{a, b, c};
        bool all_proper_nonzero = true;
        for (int i = 0; i < 3; ++i)
          for (int j = i; j < 3; ++j)
            if (!(i == 0 && j == 2) && run_sum(z9, seq, i, j) == 0) all_proper_nonzero = false;
        CHECK(is_simple(z9, seq) == all_proper_nonzero);
      }
}

TEST_CASE("classify_sums") {
  auto z17 = Group::cyclic(17);
  GMatrix m(z17, 1, 4, {1, 15, 4, 14});
  auto cls = classify_sums(m, default_natural_ordering(m));
  CHECK(cls.row_sums == std::vector<elem>{0});
  CHECK(cls.verdict == SumVerdict::mixed);  // columns are single nonzero cells

  auto z11 = Group::cyclic(11);
  GMatrix nz(z11, 2, 2, {1, 9, 8, 4});
  auto cnz = classify_sums(nz, default_natural_ordering(nz));
  CHECK(cnz.row_sums == std::vector<elem>{10, 1});
  CHECK(cnz.col_sums == std::vector<elem>{9, 2});
  CHECK(cnz.verdict == SumVerdict::nonzero_sum);

  GMatrix ones(z11, 2, 2, {1, 0, 0, 5});
  CHECK(classify_sums(ones, default_natural_ordering(ones)).verdict == SumVerdict::nonzero_sum);

  // ordering/skeleton mismatch
  Ordering bad = default_natural_ordering(nz);
  bad.rows[0].pop_back();
  CHECK_THROWS_AS(classify_sums(nz, bad), std::invalid_argument);
}

TEST_CASE("zero-sum verdict is start-invariant") {
  auto z12 = Group::cyclic(12);
  GMatrix m(z12, 1, 3, {3, 4, 5});
  for (int s = 0; s < 3; ++s) {
    auto o = natural_ordering(m, {s}, {0, 0, 0});
    CHECK(classify_sums(m, o).row_sums[0] == 0);
  }
  // nonabelian: a zero natural sum stays zero under every cyclic start
  auto d3 = Group::dihedral(3);
  elem alpha = 1, beta = 3, ab = d3.add(alpha, beta);
  GMatrix nm(d3, 1, 3, {alpha, beta, d3.neg(ab)});
  REQUIRE(sum_of(d3, {alpha, beta, d3.neg(ab)}) == 0);
  for (int s = 0; s < 3; ++s) {
    auto o = natural_ordering(nm, {s}, {0, 0, 0});
    CHECK(classify_sums(nm, o).row_sums[0] == 0);
  }
}

TEST_CASE("alternated forms") {
  auto z9 = Group::cyclic(9);
  CHECK(alternated(z9, {1, 2, 3}, FirstSign::negative) == std::vector<elem>{8, 2, 6});
  CHECK(alternated(z9, {1, 2, 3}, FirstSign::positive) == std::vector<elem>{1, 7, 3});
  CHECK(alternated(z9, {}, FirstSign::negative).empty());
  CHECK_THROWS_AS(alternated(Group::dihedral(3), {1, 2}, FirstSign::negative),
                  std::invalid_argument);
}

// Alternated forms of increasing sequences are simple with nonzero sum, and
// the zero-total variant has all proper runs nonzero (desk-scale sweep; the
// acceptance suite runs the full ranges).
TEST_CASE("alternated increasing sequences, small sweep") {
  const int maxval = 8, vmax = 20;
  for (int mask = 1; mask < (1 << maxval); ++mask) {
    std::vector<int> a;
    for (int b = 0; b < maxval; ++b)
      if (mask & (1 << b)) a.push_back(b + 1);
    int top = a.back();
    for (int v = top + 1; v <= vmax; ++v) {
      auto zv = Group::cyclic(v);
      std::vector<elem> seq;
      for (int x : a) seq.push_back(x % v);
      for (auto first : {FirstSign::negative, FirstSign::positive}) {
        auto b = alternated(zv, seq, first);
        CHECK(is_simple(zv, b));
        CHECK(sum_of(zv, b) != 0);
      }
    }
  }
}

TEST_CASE("find_simple_natural_ordering") {
  auto z5 = Group::cyclic(5);
  GMatrix m(z5, 1, 3, {1, 4, 2});  // natural start 0 is not simple; start 1 is
  auto found = find_simple_natural_ordering(m);
  REQUIRE(found.has_value());
  CHECK(is_simple(z5, line_values(m, found->rows[0])));
  // (1,4,1,4) over Z5 repeats partial sums under every cyclic start
  GMatrix bad(z5, 1, 4, {1, 4, 1, 4});
  CHECK_FALSE(find_simple_natural_ordering(bad).has_value());
}
