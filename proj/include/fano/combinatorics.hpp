#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace fano {

using BigInt = mpz_class;

/// Degrees (d_1, ..., d_s) of the equations cutting out a complete
/// intersection. Entries keep the user's order; equality ignores it.
class MultiDegree {
 public:
  explicit MultiDegree(std::vector<int> degrees);

  const std::vector<int>& degrees() const { return degrees_; }
  std::size_t size() const { return degrees_.size(); }
  int operator[](std::size_t i) const { return degrees_[i]; }
  auto begin() const { return degrees_.begin(); }
  auto end() const { return degrees_.end(); }

  /// Sum of the degrees.
  long total() const;
  int min_degree() const;
  std::vector<int> sorted() const;
  /// True for the single quadric d = (2).
  bool is_single_quadric() const { return degrees_.size() == 1 && degrees_[0] == 2; }

  /// "3,3,3"
  std::string to_string() const;

  friend bool operator==(const MultiDegree& a, const MultiDegree& b) {
    return a.sorted() == b.sorted();
  }

 private:
  std::vector<int> degrees_;
};

/// Weakly decreasing sequence of nonnegative integers of fixed length.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  long weight() const;
  bool fits(int rows, int cols) const;

  /// Zero partition (0,...,0) of the given length.
  static Partition zero(std::size_t length);
  /// Staircase (m-1, ..., 1, 0).
  static Partition staircase(std::size_t length);
  /// rows parts equal to cols.
  static Partition rectangle(int rows, int cols);

  /// Trailing zeros trimmed: "3,1" for (3,1,0). The zero partition prints as "0".
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// C(m, k) with C(m, k) = 0 for k < 0 or k > m >= 0 and C(m, 0) = 1.
/// Throws std::domain_error for m < 0 and k >= 1.
BigInt binom(long m, long k);

/// C(m, k) for a big upper index m >= 0 and small k.
BigInt binom(const BigInt& m, long k);

/// Sum over i of C(d_i + shift, lower).
BigInt binom_sum(const MultiDegree& d, long shift, long lower);

/// All (a_0, ..., a_r) >= 0 with sum deg, in lexicographic order.
std::vector<std::vector<int>> multi_indices(int r, int deg);

/// Partitions of p with at most `rows` parts, each at most `cols`.
BigInt partitions_in_rectangle(long p, int rows, int cols);

/// Number of ways to grow lambda one box at a time to the full
/// (r+1) x (n-r) rectangle, i.e. the integral of sigma_lambda * sigma_1^k
/// over G(r, P^n) by iterated Pieri. r is lambda.length() - 1.
/// Throws std::invalid_argument when lambda does not fit the rectangle.
BigInt schubert_degree(const Partition& lambda, int n);

/// Sign of the permutation given as images perm[i] of 0..m-1.
int permutation_sign(std::span<const int> perm);

/// Calls fn(perm, sign) for every permutation of {0, ..., m-1}.
void for_each_permutation(int m, const std::function<void(std::span<const int>, int)>& fn);

}  // namespace fano
