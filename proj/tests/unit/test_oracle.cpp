#include <doctest.h>

#include <stdexcept>

#include "fano/invariants.hpp"
#include "oracle.hpp"

using namespace fano;

namespace {

MultiPoly::Term t(std::vector<int> e, long c) { return {ExponentVector(std::move(e)), BigInt(c)}; }

}  // namespace

TEST_CASE("dense_expand") {
  CHECK(oracle::dense_expand(1, MultiDegree({3}), 0) ==
        MultiPoly::from_terms(2, {t({3, 1}, 18), t({2, 2}, 45), t({1, 3}, 18)}));
  CHECK(oracle::dense_expand(1, MultiDegree({1}), 0) == MultiPoly::from_terms(2, {t({1, 1}, 1)}));
  CHECK(oracle::dense_expand(1, MultiDegree({2}), 1) ==
        MultiPoly::from_terms(2, {t({3, 1}, 4), t({2, 2}, 8), t({1, 3}, 4)}));
  CHECK_THROWS_AS(oracle::dense_expand(2, MultiDegree({2}), 0), std::invalid_argument);
  CHECK_THROWS_AS(oracle::dense_expand(1, MultiDegree({9}), 20), std::invalid_argument);
}

TEST_CASE("dense_expand matches build_Q + mul_e_power over the guarded range") {
  for (int r = 0; r <= 1; ++r)
    for (int d = 1; d <= 9; ++d)
      for (int d2 = 0; d2 <= 4; ++d2) {
        const MultiDegree deg = d2 ? MultiDegree({d, d2}) : MultiDegree({d});
        for (long e = 0; e <= 6; ++e) {
          if (binom_sum(deg, r, r) + e > 24) continue;
          CHECK(oracle::dense_expand(r, deg, e) == mul_e_power(build_Q(r, deg), e));
        }
      }
}

TEST_CASE("hook_syt_count") {
  CHECK(oracle::hook_syt_count(2, 2) == 2);
  CHECK(oracle::hook_syt_count(1, 6) == 1);
  CHECK(oracle::hook_syt_count(2, 4) == 14);
  CHECK(oracle::hook_syt_count(3, 3) == 42);
  CHECK_THROWS_AS(oracle::hook_syt_count(8, 2), std::invalid_argument);
}

TEST_CASE("straighten_bruteforce agrees with straighten, exhaustively") {
  const std::vector<int> a{3, 1}, b{0, 4}, c{1, 2};
  CHECK(oracle::straighten_bruteforce(a) == Straightened{1, Partition({3, 1})});
  CHECK(oracle::straighten_bruteforce(b) == Straightened{-1, Partition({3, 1})});
  CHECK_FALSE(oracle::straighten_bruteforce(c).has_value());

  for (int r = 0; r <= 3; ++r) {
    const int m = r + 1;
    std::vector<int> alpha(static_cast<std::size_t>(m), 0);
    long cases = 0;
    while (true) {
      CHECK(oracle::straighten_bruteforce(alpha) == straighten(alpha));
      ++cases;
      int k = 0;
      while (k < m && alpha[static_cast<std::size_t>(k)] == 6) alpha[static_cast<std::size_t>(k++)] = 0;
      if (k == m) break;
      ++alpha[static_cast<std::size_t>(k)];
    }
    long expected = 1;
    for (int i = 0; i < m; ++i) expected *= 7;
    CHECK(cases == expected);
  }
}

TEST_CASE("localization_degree") {
  CHECK(oracle::localization_degree(3, MultiDegree({3}), 1) == 27);
  CHECK(oracle::localization_degree(4, MultiDegree({5}), 1) == 2875);
  CHECK(oracle::localization_degree(4, MultiDegree({2, 2}), 1) == 16);
  CHECK(oracle::localization_degree(8, MultiDegree({3}), 3) == 321489);
  CHECK_THROWS_AS(oracle::localization_degree(3, MultiDegree({4}), 1), std::invalid_argument);
}

TEST_CASE("localization_degree agrees with fano_degree") {
  for (int r = 0; r <= 2; ++r)
    for (int n = r + 1; n <= 8; ++n)
      for (const auto& dv : std::vector<std::vector<int>>{{1}, {2}, {3}, {4}, {5}, {2, 2}, {2, 3}, {3, 3}}) {
        const FanoProblem p(n, MultiDegree(dv), r);
        if (delta(p) < 0) continue;
        CAPTURE(p.to_string());
        CHECK(oracle::localization_degree(n, MultiDegree(dv), r) == fano_degree(p));
      }
}
