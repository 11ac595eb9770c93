#include "doctest.h"

#include <map>
#include <set>

#include "heffter/binmat.hpp"

using namespace heffter;

TEST_CASE("gale_ryser_check basics") {
  CHECK(gale_ryser_check({2, 1}, {1, 1, 1}).ok);
  CHECK_FALSE(gale_ryser_check({3, 1}, {2, 2}).ok);  // a 2-column row cannot hold 3 ones
  CHECK(gale_ryser_check({1}, {1}).ok);
  CHECK_FALSE(gale_ryser_check({2}, {1}).ok);        // totals differ
  CHECK_FALSE(gale_ryser_check({0, 1}, {1}).ok);     // weights must be positive
  CHECK_FALSE(gale_ryser_check({}, {}).ok);
  auto res = gale_ryser_check({1, 1}, {1, 1, 1});
  CHECK_FALSE(res.ok);
  CHECK_FALSE(res.reason.empty());
}

TEST_CASE("gale_ryser_construct") {
  auto a = gale_ryser_construct({2, 1}, {1, 1, 1});
  CHECK(a.cells == std::vector<uint8_t>{1, 1, 0, 0, 0, 1});

  auto forced = gale_ryser_construct({1, 1}, {2});
  CHECK(forced.cells == std::vector<uint8_t>{1, 1});

  std::vector<int> h{4, 3, 3, 2, 2, 5}, k{3, 2, 3, 2, 3, 3, 1, 2};
  auto big = gale_ryser_construct(h, k);
  CHECK(big.row_weights() == h);
  CHECK(big.col_weights() == k);

  CHECK_THROWS_AS(gale_ryser_construct({3, 1}, {2, 2}), std::invalid_argument);
}

// Oracle: existence decided by enumerating all 2^(mn) matrices.
TEST_CASE("check agrees with brute force at desk scale") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      std::set<std::pair<std::vector<int>, std::vector<int>>> realizable;
      for (int mask = 0; mask < (1 << (m * n)); ++mask) {
        std::vector<int> h(m, 0), k(n, 0);
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < n; ++j)
            if (mask & (1 << (i * n + j))) {
              ++h[i];
              ++k[j];
            }
        realizable.insert({h, k});
      }
      std::vector<int> h(m), k(n);
      auto sweep = [&](auto&& self, int pos) -> void {
        if (pos == m + n) {
          bool expected = realizable.count({h, k}) > 0;
          CHECK(gale_ryser_check(h, k).ok == expected);
          if (expected) {
            auto a = gale_ryser_construct(h, k);
            CHECK(a.row_weights() == h);
            CHECK(a.col_weights() == k);
          }
          return;
        }
        int limit = 4;
        for (int w = 1; w <= limit; ++w) {
          (pos < m ? h[pos] : k[pos - m]) = w;
          self(self, pos + 1);
        }
      };
      sweep(sweep, 0);
    }
}
