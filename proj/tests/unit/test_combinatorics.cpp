#include <doctest.h>

#include <set>
#include <stdexcept>

#include "fano/combinatorics.hpp"
#include "oracle.hpp"

using namespace fano;

TEST_CASE("binom conventions") {
  CHECK(binom(4, 1) == 4);
  CHECK(binom(41, 39) == 820);
  CHECK(binom(3, -1) == 0);
  CHECK(binom(-1, -1) == 0);
  CHECK(binom(-5, 0) == 1);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(3, 4) == 0);
  CHECK_THROWS_AS(binom(-1, 1), std::domain_error);
  CHECK(binom(BigInt(41), 2) == 820);
  CHECK(binom(BigInt(2), 3) == 0);
}

TEST_CASE("binom symmetry and big values") {
  for (long m = 0; m <= 40; ++m)
    for (long k = 0; k <= m; ++k) CHECK(binom(m, k) == binom(m, m - k));
  // exceeds 64 bits
  CHECK(binom(100, 50).get_str() == "100891344545564193334812497256");
}

TEST_CASE("binom_sum") {
  CHECK(binom_sum(MultiDegree({3}), 1, 1) == 4);
  CHECK(binom_sum(MultiDegree({2, 2}), -1, 0) == 2);
  CHECK(binom_sum(MultiDegree({3}), 1, 2) == 6);
  CHECK(binom_sum(MultiDegree({2, 3}), 2, 2) == 6 + 10);
}

TEST_CASE("MultiDegree") {
  CHECK_THROWS_AS(MultiDegree({}), std::invalid_argument);
  CHECK_THROWS_AS(MultiDegree({2, 0}), std::invalid_argument);
  CHECK(MultiDegree({2, 3}) == MultiDegree({3, 2}));
  CHECK_FALSE(MultiDegree({2, 3}) == MultiDegree({3, 3}));
  CHECK(MultiDegree({3, 2}).to_string() == "3,2");
  CHECK(MultiDegree({2}).is_single_quadric());
  CHECK_FALSE(MultiDegree({2, 2}).is_single_quadric());
}

TEST_CASE("Partition") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({1, -1}), std::invalid_argument);
  CHECK(Partition({3, 1, 0}).to_string() == "3,1");
  CHECK(Partition::zero(3).to_string() == "0");
  CHECK(Partition::staircase(3) == Partition({2, 1, 0}));
  CHECK(Partition({3, 1}).fits(2, 3));
  CHECK_FALSE(Partition({3, 1}).fits(2, 2));
  CHECK(Partition({2, 0, 0}).fits(1, 2));
}

TEST_CASE("multi_indices") {
  using V = std::vector<std::vector<int>>;
  CHECK(multi_indices(1, 3) == V{{0, 3}, {1, 2}, {2, 1}, {3, 0}});
  CHECK(multi_indices(2, 1) == V{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  CHECK(multi_indices(2, 5).size() == 21);
  CHECK(multi_indices(0, 4) == V{{4}});

  SUBCASE("count is C(d+r, r) and entries are distinct and sorted") {
    for (int r = 0; r <= 5; ++r) {
      for (int d = 0; d <= 9; ++d) {
        const auto idx = multi_indices(r, d);
        CHECK(BigInt(static_cast<long>(idx.size())) == binom(d + r, r));
        CHECK(std::is_sorted(idx.begin(), idx.end()));
        CHECK(std::set<std::vector<int>>(idx.begin(), idx.end()).size() == idx.size());
      }
    }
  }
}

TEST_CASE("partitions_in_rectangle") {
  CHECK(partitions_in_rectangle(0, 3, 3) == 1);
  CHECK(partitions_in_rectangle(0, 0, 0) == 1);
  CHECK(partitions_in_rectangle(2, 2, 4) == 2);
  CHECK(partitions_in_rectangle(3, 1, 2) == 0);
  CHECK(partitions_in_rectangle(-1, 2, 2) == 0);

  SUBCASE("total over p is C(rows+cols, rows)") {
    for (int rows = 0; rows <= 6; ++rows) {
      for (int cols = 0; cols <= 6; ++cols) {
        BigInt total = 0;
        for (long p = 0; p <= rows * cols; ++p) total += partitions_in_rectangle(p, rows, cols);
        CHECK(total == binom(rows + cols, rows));
      }
    }
  }

  SUBCASE("symmetric under p -> rows*cols - p and under transposition") {
    for (int rows = 1; rows <= 5; ++rows)
      for (int cols = 1; cols <= 5; ++cols)
        for (long p = 0; p <= rows * cols; ++p) {
          CHECK(partitions_in_rectangle(p, rows, cols) ==
                partitions_in_rectangle(rows * cols - p, rows, cols));
          CHECK(partitions_in_rectangle(p, rows, cols) == partitions_in_rectangle(p, cols, rows));
        }
  }
}

TEST_CASE("schubert_degree by Pieri chains") {
  CHECK(schubert_degree(Partition({2, 2}), 3) == 1);
  CHECK(schubert_degree(Partition({0, 0}), 3) == 2);
  CHECK(schubert_degree(Partition({2, 1}), 3) == 1);
  CHECK(schubert_degree(Partition({0, 0}), 5) == 14);
  CHECK_THROWS_AS(schubert_degree(Partition({3, 1}), 3), std::invalid_argument);

  SUBCASE("empty partition matches the hook-length count") {
    for (int r = 0; r <= 3; ++r)
      for (int n = r + 1; n <= r + 7; ++n)
        CHECK(schubert_degree(Partition::zero(static_cast<std::size_t>(r) + 1), n) ==
              oracle::hook_syt_count(r + 1, n - r));
  }
}

TEST_CASE("permutation helpers") {
  const std::vector<int> id{0, 1, 2};
  const std::vector<int> swap{1, 0, 2};
  const std::vector<int> cycle{1, 2, 0};
  CHECK(permutation_sign(id) == 1);
  CHECK(permutation_sign(swap) == -1);
  CHECK(permutation_sign(cycle) == 1);
  int count = 0;
  int sign_sum = 0;
  for_each_permutation(4, [&](std::span<const int>, int s) {
    ++count;
    sign_sum += s;
  });
  CHECK(count == 24);
  CHECK(sign_sum == 0);
}
