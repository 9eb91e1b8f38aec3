#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fano/problem.hpp"

namespace fano {

enum class Classification {
  GenericallyEmpty,
  NonemptySmoothOfExpectedDim,
  NonemptySmoothConnected,
  QuadricTwoComponents,
};

std::string_view to_string(Classification c);

/// Emptiness / smoothness / connectedness for a general X, from the sign
/// of delta_minus. A quadric with n = 2r+1 is reported separately: its
/// r-planes form two connected components.
Classification classify(const FanoProblem& p);

/// k such that the canonical sheaf of F_r(X) is O(k):
/// sum C(d_i+r, r+1) - n - 1.
BigInt canonical_twist(const FanoProblem& p);
BigInt fano_index(const FanoProblem& p);
bool is_fano(const FanoProblem& p);

struct HodgeAnswer {
  enum class Kind { Exact, LowerBound, Unknown };
  Kind kind = Kind::Unknown;
  BigInt value = 0;
};

/// Betti number b_i of F_r(X) where the Lefschetz comparison with the
/// Grassmannian applies: exact for i < delta_minus, a lower bound for
/// i = delta_minus, unknown above. Even i = 2p counts partitions of p in
/// the (r+1) x (n-r) rectangle; odd i gives 0. All classes are of type (p,p).
HodgeAnswer hodge_number(const FanoProblem& p, long i);

struct SplittingType {
  BigInt trivial_count;   // copies of O
  BigInt twisted_count;   // copies of O(1)
};

/// Splitting of the normal bundle along a general line of r-planes.
/// Throws std::domain_error unless n >= sum C(d_i+r, r+1) + r + 1.
SplittingType splitting_type(const FanoProblem& p);

/// One bound-based criterion. `holds` means the sufficient bound is met;
/// a false value says nothing about the property itself. `bound` is the
/// smallest n (for this d and r) at which the criterion is met.
struct Predicate {
  std::string name;
  bool holds = false;
  BigInt bound = 0;
  /// Extra integer carried by some criteria (minimal equation degree,
  /// degree of connecting chains of lines).
  std::optional<BigInt> value;
};

/// All criteria in a fixed order: simply_connected, picard_Z_homotopy,
/// picard_rank_one, projectively_normal, covered_by_r_planes,
/// uniruled_in_lines, separably_uniruled, rationally_chain_connected,
/// chain_degree, B1_rank_one, A1_rank_one.
std::vector<Predicate> predicate_suite(const FanoProblem& p);

struct InvariantReport {
  BigInt delta;
  BigInt delta_minus;
  Classification classification;
  BigInt canonical_twist;
  BigInt fano_index;
  bool is_fano;
  std::vector<Predicate> predicates;
};

InvariantReport invariant_report(const FanoProblem& p);

}  // namespace fano
