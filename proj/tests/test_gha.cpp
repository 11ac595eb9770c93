#include "doctest.h"

#include "heffter/gha.hpp"
#include "heffter/nasm.hpp"

using namespace heffter;

namespace {
GHACandidate zero_sum_33() {
  PairedSymbolSet p({1, 2, 3, 4, 5, 6, 7, 8}, 8, 33, {1, 1});
  return build_zero_simple_gha(p, build_uniform_nasm(2, 4, 4, 2));
}
}  // namespace

TEST_CASE("verify_gha accepts the worked arrays") {
  auto c = zero_sum_33();
  auto rep = verify_gha(c);
  CHECK(rep.ok);
  CHECK(rep.sums->verdict == SumVerdict::zero_sum);
  CHECK(rep.all_simple);

  auto z11 = Group::cyclic(11);
  GHACandidate nz;
  nz.matrix = GMatrix(z11, 2, 2, {1, 9, 8, 4});
  nz.symbols = SymbolSet(z11, {1, 2, 3, 4}, 1);
  nz.row_weights = {2, 2};
  nz.col_weights = {2, 2};
  nz.ordering = default_natural_ordering(nz.matrix);
  auto rep2 = verify_gha(nz);
  CHECK(rep2.ok);
  CHECK(rep2.sums->verdict == SumVerdict::nonzero_sum);
}

TEST_CASE("verify_gha flags a symbol set with involutions at lambda 1") {
  auto z8 = Group::cyclic(8);
  GHACandidate c;
  c.matrix = GMatrix(z8, 1, 2, {1, 4});
  c.symbols = SymbolSet(z8, {1, 4}, 1);  // 4 is an involution
  c.row_weights = {2};
  c.col_weights = {1, 1};
  auto rep = verify_gha(c);
  CHECK_FALSE(rep.nec_ok);
  CHECK_FALSE(rep.ok);
  CHECK(std::find(rep.failures.begin(), rep.failures.end(), "GHA:nec") != rep.failures.end());
}

TEST_CASE("verify_gha flags a tampered entry") {
  auto c = zero_sum_33();
  c.matrix.set(0, 0, c.matrix.group.neg(c.matrix.at(0, 0)));  // sign flip keeps the multiset
  auto rep = verify_gha(c);
  CHECK(rep.ok);
  CHECK(rep.sums->verdict != SumVerdict::zero_sum);  // but the row sum moved

  c.matrix.set(0, 0, 5);  // now the multiset breaks
  auto rep2 = verify_gha(c);
  CHECK_FALSE(rep2.multiset_ok);
  CHECK_FALSE(rep2.ok);
}

TEST_CASE("build_nonzero_simple_ngha pinned instances") {
  auto c = build_nonzero_simple_ngha(11, {1, 2, 3, 4}, build_uniform_nasm(2, 2, 2, 2));
  CHECK(c.matrix.cells == std::vector<elem>{1, 9, 8, 4});

  auto small = build_nonzero_simple_ngha(9, {2, 4}, SignMatrix(1, 2, {1, -1}));
  CHECK(small.matrix.cells == std::vector<elem>{2, 5});

  auto c29 = build_nonzero_simple_ngha(
      29, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}, build_uniform_nasm(3, 4, 4, 3));
  auto rep = verify_gha(c29);
  CHECK(rep.ok);
  CHECK(rep.sums->verdict == SumVerdict::nonzero_sum);
  CHECK(rep.all_simple);
}

TEST_CASE("build_nonzero_simple_ngha rejects bad inputs") {
  // v/2 in S
  CHECK_THROWS_AS(build_nonzero_simple_ngha(8, {1, 4}, SignMatrix(1, 2, {1, -1})),
                  std::invalid_argument);
  // weight mismatch
  CHECK_THROWS_AS(build_nonzero_simple_ngha(11, {1, 2, 3}, build_uniform_nasm(2, 2, 2, 2)),
                  std::invalid_argument);
  // v too small for |S|
  CHECK_THROWS_AS(build_nonzero_simple_ngha(7, {1, 2, 3, 4}, build_uniform_nasm(2, 2, 2, 2)),
                  std::invalid_argument);
}

TEST_CASE("build_zero_simple_gha reproduces the v=33 array") {
  auto c = zero_sum_33();
  CHECK(c.matrix.cells == std::vector<elem>{1, 31, 4, 30, 28, 6, 25, 7, 24, 10, 21, 11, 13, 19, 16, 18});
  // symbol set is S together with S + x
  std::vector<elem> expect;
  for (int t = 1; t <= 16; ++t) expect.push_back(t);
  CHECK(c.symbols.elems == expect);
  // rows sum to zero left to right; the returned column ordering is simple
  auto rep = verify_gha(c);
  CHECK(rep.sums->verdict == SumVerdict::zero_sum);
  CHECK(rep.all_simple);
  // the column ordering interleaves the bottom half shifted by one
  CHECK(c.ordering->cols[0] ==
        std::vector<Cell>{{0, 0}, {1, 0}, {3, 0}, {2, 0}});
}

TEST_CASE("paired symbol sets reject degenerate parameters") {
  // x <= max S - min S
  CHECK_THROWS_AS(PairedSymbolSet({1, 2, 3, 4, 5, 6, 7, 8}, 7, 33, {1, 1}), std::invalid_argument);
  // x >= v/2 - max S
  CHECK_THROWS_AS(PairedSymbolSet({1, 2, 3, 4, 5, 6, 7, 8}, 9, 33, {1, 1}), std::invalid_argument);
  // not a union of consecutive pairs
  CHECK_THROWS_AS(PairedSymbolSet({1, 2, 4, 6, 7, 8, 10, 12}, 12, 60, {1, 1}), std::invalid_argument);
  // |S| not divisible by 4
  CHECK_THROWS_AS(PairedSymbolSet({1, 2}, 3, 20, {1}), std::invalid_argument);
}

TEST_CASE("relative symbol parameters") {
  auto p17 = relative_symbol_params(8, 1);
  CHECK(p17.v == 17);
  CHECK(p17.x == 4);
  CHECK(p17.symbols == std::vector<int>{1, 2, 3, 4});

  auto p68 = relative_symbol_params(8, 4);
  CHECK(p68.v == 68);
  CHECK(p68.x == 17);
  CHECK(p68.symbols.size() == 16);
  CHECK(p68.symbols.front() == 1);
  CHECK(p68.symbols.back() == 16);

  // v=(2d+1)u with d=1, u=4 gives v=12 which is not congruent to 4 mod 16
  CHECK_THROWS_AS(relative_symbol_params(1, 4), std::invalid_argument);
}

TEST_CASE("build_relative_zero_gha") {
  // d=8, u=1 admits no NASM(1, n; 4, 2k): rejected whatever k is tried.
  CHECK_THROWS_AS(build_relative_zero_gha(8, 1, {1}, {1}, true), std::invalid_argument);
  CHECK_THROWS_AS(build_relative_zero_gha(8, 1, {1}, {1, 1}, true), std::invalid_argument);

  // smallest admissible uniform case: d=16, u=1, v=33
  auto c33 = build_relative_zero_gha(16, 1, {1, 1}, {1, 1, 1, 1}, true);
  CHECK(c33.matrix.group.order() == 33);
  CHECK(c33.symbols.elems.size() == 16);
  auto rep = verify_gha(c33);
  CHECK(rep.ok);
  CHECK(rep.sums->verdict == SumVerdict::zero_sum);
  CHECK(rep.all_simple);

  // u=4, d=8, v=68 with a uniform NASM(2,8;8,2)
  auto c68 = build_relative_zero_gha(8, 4, {2, 2}, std::vector<int>(8, 1), true);
  CHECK(c68.matrix.group.order() == 68);
  CHECK(c68.matrix.rows == 4);
  CHECK(c68.matrix.cols == 8);
  auto rep68 = verify_gha(c68);
  CHECK(rep68.ok);
  CHECK(rep68.sums->verdict == SumVerdict::zero_sum);
  CHECK(rep68.all_simple);
  // symbol set is (Z_68 \ U)+ with U of order 4
  for (elem s : c68.symbols.elems) CHECK(s % 17 != 0);
}

TEST_CASE("row shift gives a naturally simple array in the tight case") {
  auto c = zero_sum_33();
  auto shifted = row_shift_naturally_simple(c);
  // rows reordered 1,2,4,3
  CHECK(shifted.matrix.cells ==
        std::vector<elem>{1, 31, 4, 30, 28, 6, 25, 7, 13, 19, 16, 18, 24, 10, 21, 11});
  auto rep = verify_gha(shifted);
  CHECK(rep.ok);
  CHECK(rep.sums->verdict == SumVerdict::zero_sum);
  CHECK(rep.all_simple);

  // non-tight input: a zero-sum array with empty cells
  std::vector<int> s24;
  for (int t = 1; t <= 24; ++t) s24.push_back(t);
  PairedSymbolSet p(s24, 24, 97, {2, 2, 1, 1});
  auto sparse = build_zero_simple_gha(p, build_doubled_nasm({4, 2}, {2, 2, 1, 1}));
  auto rep_sparse = verify_gha(sparse);
  CHECK(rep_sparse.ok);
  CHECK(rep_sparse.sums->verdict == SumVerdict::zero_sum);
  CHECK(rep_sparse.all_simple);
  CHECK_THROWS_AS(row_shift_naturally_simple(sparse), std::invalid_argument);
}

// Classic specialization: v = 2hm+1, S = {1..hm}; the nonzero-sum pipeline
// reproduces an array whose absolute entries are exactly 1..hm.
TEST_CASE("classic rectangular specialization") {
  struct Case { int m, n, h, k; } cases[] = {{3, 4, 4, 3}, {2, 4, 4, 2}, {4, 4, 3, 3}, {5, 2, 2, 5}};
  for (auto [m, n, h, k] : cases) {
    REQUIRE(m * h == n * k);
    int v = 2 * h * m + 1;
    std::vector<int> symbols;
    for (int t = 1; t <= h * m; ++t) symbols.push_back(t);
    auto c = build_nonzero_simple_ngha(v, symbols, build_uniform_nasm(m, n, h, k));
    std::vector<elem> abs_entries;
    for (elem e : c.matrix.cells)
      if (e != 0) abs_entries.push_back(c.matrix.group.abs(e));
    std::sort(abs_entries.begin(), abs_entries.end());
    CHECK(abs_entries == std::vector<elem>(symbols.begin(), symbols.end()));
    auto rep = verify_gha(c);
    CHECK(rep.ok);
    CHECK(rep.all_simple);
    CHECK(rep.sums->verdict == SumVerdict::nonzero_sum);
  }
}

// Uniform and doubled NASM shapes both feed the nonzero-sum pipeline.
TEST_CASE("nonzero pipeline over both NASM families") {
  // uniform
  for (auto [m, n, h, k] : {std::array<int, 4>{2, 2, 2, 2}, {4, 2, 1, 2}, {3, 6, 4, 2}}) {
    int w = m * h;
    std::vector<int> symbols;
    for (int t = 1; t <= w; ++t) symbols.push_back(2 * t - 1);  // odd symbols
    int v = 4 * w + 3;
    auto c = build_nonzero_simple_ngha(v, symbols, build_uniform_nasm(m, n, h, k));
    auto rep = verify_gha(c);
    CHECK(rep.ok);
    CHECK(rep.all_simple);
  }
  // doubled
  for (auto base : {std::pair<std::vector<int>, std::vector<int>>{{2, 1}, {1, 1, 1}},
                    {{1, 1}, {2}},
                    {{3, 2, 1}, {2, 2, 1, 1}}}) {
    auto nasm = build_doubled_nasm(base.first, base.second);
    int w = nasm.weight();
    std::vector<int> symbols;
    for (int t = 1; t <= w; ++t) symbols.push_back(t);
    auto c = build_nonzero_simple_ngha(2 * w + 1, symbols, nasm);
    auto rep = verify_gha(c);
    CHECK(rep.ok);
    CHECK(rep.all_simple);
    CHECK(rep.sums->verdict == SumVerdict::nonzero_sum);
  }
}
