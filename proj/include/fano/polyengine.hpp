#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fano/combinatorics.hpp"

namespace fano {

/// Exponents of x_0, ..., x_r for one monomial.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<int> exponents) : exponents_(std::move(exponents)) {}

  const std::vector<int>& values() const { return exponents_; }
  std::size_t size() const { return exponents_.size(); }
  int operator[](std::size_t i) const { return exponents_[i]; }
  long total_degree() const;

  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<int> exponents_;
};

/// Sparse polynomial in num_vars variables with big integer coefficients.
///
/// Terms are kept sorted by a packed 64-bit exponent key (x_0 most
/// significant), so iteration order is lexicographic in the exponents and
/// independent of how the polynomial was built. An optional per-variable
/// cap bounds every stored exponent; multiplication discards terms that
/// would exceed it.
class MultiPoly {
 public:
  using Caps = std::optional<std::vector<int>>;
  using Term = std::pair<ExponentVector, BigInt>;

  static constexpr int kMaxVars = 8;

  /// The zero polynomial.
  explicit MultiPoly(int num_vars, Caps caps = std::nullopt);

  static MultiPoly constant(int num_vars, const BigInt& value, Caps caps = std::nullopt);
  /// Sums duplicate exponents and drops zero coefficients. Throws if a term
  /// has the wrong length, a negative exponent, or breaks the caps.
  static MultiPoly from_terms(int num_vars, const std::vector<Term>& terms,
                              Caps caps = std::nullopt);

  int num_vars() const { return num_vars_; }
  const Caps& caps() const { return caps_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Largest exponent the packed representation can hold per variable.
  int max_exponent() const;

  BigInt coefficient(const ExponentVector& e) const;
  std::vector<Term> terms() const;
  bool is_homogeneous() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  friend MultiPoly mul_linear(const MultiPoly& p, std::span<const long> coeffs);

 private:
  struct PackedTerm {
    std::uint64_t key;
    BigInt coeff;
    friend bool operator==(const PackedTerm& a, const PackedTerm& b) {
      return a.key == b.key && a.coeff == b.coeff;
    }
  };

  int bits() const { return 64 / num_vars_; }
  int shift(int var) const { return bits() * (num_vars_ - 1 - var); }
  int exponent(std::uint64_t key, int var) const;
  std::uint64_t pack(const ExponentVector& e) const;
  ExponentVector unpack(std::uint64_t key) const;
  /// Key lookup; exponents outside the representable range are absent.
  const BigInt* find(const ExponentVector& e) const;

  int num_vars_;
  Caps caps_;
  std::vector<PackedTerm> terms_;
};

/// p times (sum_i coeffs[i] x_i), dropping terms that break p's caps.
MultiPoly mul_linear(const MultiPoly& p, std::span<const long> coeffs);

/// Product over every d_i and every multi-index a with |a| = d_i of the
/// linear form a_0 x_0 + ... + a_r x_r, in the order of d and the
/// lexicographic order of the multi-indices.
MultiPoly build_Q(int r, const MultiDegree& d, MultiPoly::Caps caps = std::nullopt);

/// p times (x_0 + ... + x_r)^delta.
MultiPoly mul_e_power(const MultiPoly& p, long delta);

/// Coefficient of x^target in p times the Vandermonde prod_{i<j} (x_i - x_j),
/// evaluated as the signed sum over permutations of coefficient lookups.
BigInt alternant_coefficient(const MultiPoly& p, const ExponentVector& target);

}  // namespace fano
