#include "fano/schubert.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fano {

StraightenResult straighten(std::span<const int> alpha) {
  const int m = static_cast<int>(alpha.size());
  std::vector<int> shifted(alpha.begin(), alpha.end());
  for (int i = 0; i < m; ++i) shifted[static_cast<std::size_t>(i)] += m - 1 - i;

  // Order positions by decreasing shifted value; the resulting index
  // sequence is the sorting permutation.
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return shifted[static_cast<std::size_t>(a)] > shifted[static_cast<std::size_t>(b)];
  });

  std::vector<int> parts(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const int value = shifted[static_cast<std::size_t>(order[ui])];
    if (i > 0 && value == shifted[static_cast<std::size_t>(order[ui - 1])]) return std::nullopt;
    parts[ui] = value - (m - 1 - i);
    if (parts[ui] < 0) return std::nullopt;
  }
  return Straightened{permutation_sign(order), Partition(std::move(parts))};
}

BigInt FanoClass::content() const {
  BigInt g = 0;
  for (const auto& [lambda, c] : coefficients) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g;
}

FanoClass straighten_polynomial(const MultiPoly& q, std::optional<int> n) {
  FanoClass cls;
  cls.r = q.num_vars() - 1;
  cls.n = n;
  const int rows = q.num_vars();
  const int cols = n ? *n - cls.r : 0;
  std::map<Partition, BigInt, std::greater<>> acc;
  for (const auto& [alpha, coeff] : q.terms()) {
    const auto st = straighten(alpha.values());
    if (!st) continue;
    if (n && !st->lambda.fits(rows, cols)) continue;
    if (st->sign > 0) {
      acc[st->lambda] += coeff;
    } else {
      acc[st->lambda] -= coeff;
    }
  }
  for (auto& [lambda, c] : acc) {
    if (c != 0) cls.coefficients.emplace(lambda, std::move(c));
  }
  return cls;
}

FanoClass fano_class(const FanoProblem& problem) {
  return straighten_polynomial(build_Q(problem.r(), problem.d()), problem.n());
}

FanoClass fano_class_abstract(int r, const MultiDegree& d) {
  return straighten_polynomial(build_Q(r, d), std::nullopt);
}

namespace {

long checked_delta(const FanoProblem& problem) {
  const BigInt dl = delta(problem);
  if (dl < 0) {
    throw std::domain_error("degree undefined for " + problem.to_string() +
                            ": expected dimension " + dl.get_str() + " is negative");
  }
  return to_long(dl);
}

}  // namespace

BigInt fano_degree(const FanoProblem& problem) {
  const long dl = checked_delta(problem);
  const int m = problem.r() + 1;
  const std::vector<int> caps(static_cast<std::size_t>(m), problem.n());
  const MultiPoly q = mul_e_power(build_Q(problem.r(), problem.d(), caps), dl);
  std::vector<int> target(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) target[static_cast<std::size_t>(i)] = problem.n() - i;
  return alternant_coefficient(q, ExponentVector(std::move(target)));
}

BigInt fano_degree_via_pieri(const FanoProblem& problem) {
  checked_delta(problem);
  const FanoClass cls = fano_class(problem);
  BigInt total = 0;
  for (const auto& [lambda, c] : cls.coefficients) {
    total += c * schubert_degree(lambda, problem.n());
  }
  return total;
}

namespace {

std::string render_terms(const FanoClass& cls, const BigInt& divisor) {
  if (cls.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [lambda, c] : cls.coefficients) {
    BigInt value = c / divisor;
    if (!first) out << (value < 0 ? " - " : " + ");
    else if (value < 0) out << "-";
    out << BigInt(abs(value)).get_str() << " s[" << lambda.to_string() << "]";
    first = false;
  }
  return out.str();
}

}  // namespace

std::string render_class(const FanoClass& cls) { return render_terms(cls, 1); }

std::string render_class_factored(const FanoClass& cls) {
  if (cls.is_zero()) return "0";
  const BigInt g = cls.content();
  if (g == 1 || cls.coefficients.size() == 1) return render_terms(cls, 1);
  return g.get_str() + " (" + render_terms(cls, g) + ")";
}

}  // namespace fano
