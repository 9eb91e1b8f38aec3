#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fano/combinatorics.hpp"
#include "fano/polyengine.hpp"
#include "fano/problem.hpp"

namespace fano {

struct Straightened {
  int sign;
  Partition lambda;
  friend bool operator==(const Straightened&, const Straightened&) = default;
};

/// std::nullopt stands for the zero class.
using StraightenResult = std::optional<Straightened>;

/// Rewrites sigma_alpha as +-sigma_lambda or 0: alpha + kappa is sorted
/// strictly decreasing by a permutation tau, lambda = sorted - kappa, and
/// the sign is that of tau. Repeated entries give zero.
StraightenResult straighten(std::span<const int> alpha);

/// Decomposition of [F_r(X)] on Schubert classes, keyed by lambda with
/// partitions listed in decreasing lexicographic order.
struct FanoClass {
  int r = 0;
  /// Ambient dimension; std::nullopt for the untruncated class (n large).
  std::optional<int> n;
  std::map<Partition, BigInt, std::greater<>> coefficients;

  bool is_zero() const { return coefficients.empty(); }
  /// gcd of all coefficients (0 for the zero class).
  BigInt content() const;
};

/// Straightens every monomial of Q_{r,d} and accumulates. Classes outside
/// the (r+1) x (n-r) rectangle vanish and are dropped. Also valid for
/// delta < 0, where it is the top Chern class of Sym^d S*.
FanoClass fano_class(const FanoProblem& problem);

/// The class with no rectangle truncation, as it reads for n large.
FanoClass fano_class_abstract(int r, const MultiDegree& d);

/// Straightens the monomials of an arbitrary polynomial in r+1 variables.
FanoClass straighten_polynomial(const MultiPoly& q, std::optional<int> n);

/// Plucker degree: coefficient of x_0^n x_1^(n-1) ... x_r^(n-r) in
/// Q_{r,d} e^delta times the Vandermonde. Exponents are capped at n during
/// the build. Throws std::domain_error when delta < 0.
BigInt fano_degree(const FanoProblem& problem);

/// Same number through the Schubert decomposition and iterated Pieri:
/// sum over lambda of f_lambda * deg(sigma_lambda sigma_1^delta).
BigInt fano_degree_via_pieri(const FanoProblem& problem);

/// "18 s[3,1] + 27 s[2,2]"; the zero class renders as "0".
std::string render_class(const FanoClass& cls);
/// "9 (2 s[3,1] + 3 s[2,2])" with the content pulled out.
std::string render_class_factored(const FanoClass& cls);

}  // namespace fano
