#pragma once

#include <string>

#include "fano/combinatorics.hpp"

namespace fano {

/// r-planes on a complete intersection of multidegree d in P^n.
class FanoProblem {
 public:
  /// Throws std::invalid_argument unless 0 <= r < n.
  FanoProblem(int n, MultiDegree d, int r);

  int n() const { return n_; }
  const MultiDegree& d() const { return d_; }
  int r() const { return r_; }
  /// Number of equations.
  int s() const { return static_cast<int>(d_.size()); }

  /// Dimension of G(r, P^n).
  long grassmannian_dim() const { return static_cast<long>(r_ + 1) * (n_ - r_); }
  /// Rank of Sym^d S*, the codimension of F_r(X) in G(r, P^n).
  BigInt codim() const { return binom_sum(d_, r_, r_); }

  std::string to_string() const;

 private:
  int n_;
  MultiDegree d_;
  int r_;
};

/// Expected dimension (r+1)(n-r) - sum_i C(d_i+r, r). May be negative.
BigInt delta(const FanoProblem& p);

/// min(delta, n - 2r - s).
BigInt delta_minus(const FanoProblem& p);

/// Expected dimension of the r-planes through a fixed r0-plane,
/// (r-r0)(n-r) + sum C(d_i+r0, r0) - sum C(d_i+r, r). Requires -1 <= r0 < r.
BigInt delta_rel(const FanoProblem& p, int r0);

/// min(delta_rel, n - 2r + r0 + 1 - sum C(d_i+r0, r0+1)).
BigInt delta_minus_rel(const FanoProblem& p, int r0);

/// Narrowing with a range check; throws std::overflow_error.
long to_long(const BigInt& value);

}  // namespace fano
