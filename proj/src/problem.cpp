#include "fano/problem.hpp"

#include <algorithm>
#include <stdexcept>

namespace fano {

FanoProblem::FanoProblem(int n, MultiDegree d, int r) : n_(n), d_(std::move(d)), r_(r) {
  if (r < 0) throw std::invalid_argument("r must be >= 0, got " + std::to_string(r));
  if (r >= n) {
    throw std::invalid_argument("r must be < n, got r=" + std::to_string(r) +
                                " n=" + std::to_string(n));
  }
}

std::string FanoProblem::to_string() const {
  return "n=" + std::to_string(n_) + " d=(" + d_.to_string() + ") r=" + std::to_string(r_);
}

BigInt delta(const FanoProblem& p) {
  return BigInt(p.grassmannian_dim()) - p.codim();
}

BigInt delta_minus(const FanoProblem& p) {
  const BigInt other = p.n() - 2 * p.r() - p.s();
  return std::min(delta(p), other);
}

namespace {

void check_r0(const FanoProblem& p, int r0) {
  if (r0 < -1 || r0 >= p.r()) {
    throw std::invalid_argument("r0 must satisfy -1 <= r0 < r, got r0=" + std::to_string(r0));
  }
}

}  // namespace

BigInt delta_rel(const FanoProblem& p, int r0) {
  check_r0(p, r0);
  return BigInt(static_cast<long>(p.r() - r0) * (p.n() - p.r())) + binom_sum(p.d(), r0, r0) -
         binom_sum(p.d(), p.r(), p.r());
}

BigInt delta_minus_rel(const FanoProblem& p, int r0) {
  check_r0(p, r0);
  const BigInt other = BigInt(p.n() - 2 * p.r() + r0 + 1) - binom_sum(p.d(), r0, r0 + 1);
  return std::min(delta_rel(p, r0), other);
}

long to_long(const BigInt& value) {
  if (!value.fits_slong_p()) throw std::overflow_error("integer too large: " + value.get_str());
  return value.get_si();
}

}  // namespace fano
