#include "fano/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace fano {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::GenericallyEmpty: return "GenericallyEmpty";
    case Classification::NonemptySmoothOfExpectedDim: return "NonemptySmoothOfExpectedDim";
    case Classification::NonemptySmoothConnected: return "NonemptySmoothConnected";
    case Classification::QuadricTwoComponents: return "QuadricTwoComponents";
  }
  return "?";
}

Classification classify(const FanoProblem& p) {
  if (p.d().is_single_quadric() && p.n() == 2 * p.r() + 1) {
    return Classification::QuadricTwoComponents;
  }
  const BigInt dm = delta_minus(p);
  if (dm < 0) return Classification::GenericallyEmpty;
  if (dm == 0) return Classification::NonemptySmoothOfExpectedDim;
  return Classification::NonemptySmoothConnected;
}

BigInt canonical_twist(const FanoProblem& p) {
  return binom_sum(p.d(), p.r(), p.r() + 1) - p.n() - 1;
}

BigInt fano_index(const FanoProblem& p) { return -canonical_twist(p); }

bool is_fano(const FanoProblem& p) { return fano_index(p) >= 1; }

HodgeAnswer hodge_number(const FanoProblem& p, long i) {
  if (i < 0) throw std::invalid_argument("cohomological degree must be >= 0");
  const BigInt dm = delta_minus(p);
  HodgeAnswer answer;
  if (i > dm) return answer;
  answer.kind = i < dm ? HodgeAnswer::Kind::Exact : HodgeAnswer::Kind::LowerBound;
  answer.value = i % 2 == 1 ? BigInt(0) : partitions_in_rectangle(i / 2, p.r() + 1, p.n() - p.r());
  return answer;
}

SplittingType splitting_type(const FanoProblem& p) {
  const BigInt upper = binom_sum(p.d(), p.r(), p.r() + 1);
  if (p.n() < upper + p.r() + 1) {
    throw std::domain_error("splitting type needs n >= " + BigInt(upper + p.r() + 1).get_str());
  }
  const long r = p.r();
  const long n = p.n();
  SplittingType t;
  t.trivial_count = BigInt(r * (n - r - 1)) + upper - p.codim();
  t.twisted_count = BigInt(n - r - 1) - upper;
  return t;
}

namespace {

BigInt ceil_div(const BigInt& a, long b) {
  BigInt q;
  mpz_cdiv_q_ui(q.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(b));
  return q;
}

Predicate make(const FanoProblem& p, std::string name, bool holds, BigInt bound) {
  Predicate pr;
  pr.name = std::move(name);
  pr.holds = holds;
  pr.bound = std::max(bound, BigInt(p.r() + 1));
  return pr;
}

}  // namespace

std::vector<Predicate> predicate_suite(const FanoProblem& p) {
  const long n = p.n();
  const long r = p.r();
  const long s = p.s();
  const BigInt codim = p.codim();                              // C(d+r, r)
  const BigInt upper = binom_sum(p.d(), r, r + 1);             // C(d+r, r+1)
  const BigInt a1 = binom_sum(p.d(), r + 1, r + 2);            // C(d+r+1, r+2)
  const BigInt lines_bound = upper + r + 1;

  std::vector<Predicate> out;

  // n >= 2/(r+1) C(d+r,r) + r + 1, cross-multiplied.
  out.push_back(make(p, "simply_connected", BigInt((r + 1) * (n - r - 1)) >= 2 * codim,
                     r + 1 + ceil_div(2 * codim, r + 1)));

  out.push_back(make(p, "picard_Z_homotopy", n >= 2 * codim + 2, 2 * codim + 2));

  out.push_back(make(p, "picard_rank_one", delta_minus(p) >= 3,
                     std::max(BigInt(r + ceil_div(codim + 3, r + 1)), BigInt(2 * r + s + 3))));

  auto normal = make(p, "projectively_normal", n >= r + codim, r + codim);
  normal.value = p.d().min_degree();
  out.push_back(std::move(normal));

  if (p.d().is_single_quadric()) {
    out.push_back(make(p, "covered_by_r_planes", n >= 2 * r + 1, BigInt(2 * r + 1)));
  } else if (r == 0) {
    // Points: the inequality degenerates to 0 >= sum C(d_i, 0) - s = 0.
    out.push_back(make(p, "covered_by_r_planes", true, BigInt(1)));
  } else {
    const BigInt rhs = codim + r * r - s;
    out.push_back(make(p, "covered_by_r_planes", BigInt(r * n) >= rhs, ceil_div(rhs, r)));
  }

  out.push_back(make(p, "uniruled_in_lines", n >= lines_bound, lines_bound));
  out.push_back(make(p, "separably_uniruled", n >= lines_bound, lines_bound));
  out.push_back(make(p, "rationally_chain_connected", n >= upper, upper));

  auto chain = make(p, "chain_degree", n >= lines_bound, lines_bound);
  if (chain.holds) chain.value = delta(p);
  out.push_back(std::move(chain));

  out.push_back(make(p, "B1_rank_one", n >= lines_bound, lines_bound));
  out.push_back(make(p, "A1_rank_one", n >= a1, a1));
  return out;
}

InvariantReport invariant_report(const FanoProblem& p) {
  return InvariantReport{
      .delta = delta(p),
      .delta_minus = delta_minus(p),
      .classification = classify(p),
      .canonical_twist = canonical_twist(p),
      .fano_index = fano_index(p),
      .is_fano = is_fano(p),
      .predicates = predicate_suite(p),
  };
}

}  // namespace fano
