#pragma once

#include <istream>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "fano/combinatorics.hpp"
#include "fano/problem.hpp"

namespace fano {

/// Improved base values r(D), keyed by the sorted multidegree.
using RecursionOverrides = std::map<std::vector<int>, BigInt>;

/// The pair (n(d), r(d)): a complete intersection of multidegree d in P^N,
/// N >= n(d), containing a suitable r(d)-plane is unirational.
struct PSBound {
  MultiDegree input_d;
  BigInt r_of_d;
  BigInt n_of_d;
};

/// Unirationality bound for Fano schemes of r-planes.
struct FanoBound {
  /// Each d_i repeated C(d_i + r, r) times.
  MultiDegree D;
  BigInt r_D;
  /// (r_D + 1)(r + 1) - 1
  BigInt r1;
  /// r1 + sum C(d_i + r1 - 1, r1)
  BigInt bound;
  RecursionOverrides overrides_used;
};

/// Memoized evaluation of the recursion
///   n(1) = r(1) = 0,
///   n(d) = n(d') + 1 and r(d) = r(d') when d' is d with one entry 1 removed,
///   r(d) = n(d - 1) and n(d) = r(d) + sum C(d_i + r(d) - 1, r(d)) otherwise.
/// An override for sorted d replaces r(d) in the last rule.
///
/// The cache is shared between threads; concurrent lookups of the same key
/// may both compute it, and both store the same value.
class PSRecursion {
 public:
  explicit PSRecursion(RecursionOverrides overrides = {});

  PSBound evaluate(const MultiDegree& d);
  /// Overrides consulted by any evaluation so far.
  RecursionOverrides overrides_used() const;

 private:
  struct Pair {
    BigInt r;
    BigInt n;
  };
  Pair eval_sorted(const std::vector<int>& sorted);

  RecursionOverrides overrides_;
  mutable std::mutex mutex_;
  std::map<std::vector<int>, Pair> memo_;
  RecursionOverrides used_;
};

PSBound ps_pair(const MultiDegree& d, const RecursionOverrides& overrides = {});

/// Throws std::invalid_argument when some d_i = 1 (drop the linear
/// equation and lower n by one instead).
FanoBound fano_unirationality_bound(const MultiDegree& d, int r,
                                    const RecursionOverrides& overrides = {});
FanoBound fano_unirationality_bound(const FanoProblem& p,
                                    const RecursionOverrides& overrides = {});

/// Parses lines "d=3,3,3,3 r=13". Whitespace is ignored, '#' starts a
/// comment. Throws std::invalid_argument naming the line on bad input.
RecursionOverrides parse_overrides(std::istream& in);

}  // namespace fano
