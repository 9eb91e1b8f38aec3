#include "fano/polyengine.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace fano {

long ExponentVector::total_degree() const {
  long total = 0;
  for (int e : exponents_) total += e;
  return total;
}

MultiPoly::MultiPoly(int num_vars, Caps caps) : num_vars_(num_vars), caps_(std::move(caps)) {
  if (num_vars < 1 || num_vars > kMaxVars) {
    throw std::invalid_argument("polynomial needs between 1 and " + std::to_string(kMaxVars) +
                                " variables, got " + std::to_string(num_vars));
  }
  if (caps_) {
    if (static_cast<int>(caps_->size()) != num_vars) {
      throw std::invalid_argument("cap vector length does not match the variable count");
    }
    for (int c : *caps_) {
      if (c < 0 || c > max_exponent()) {
        throw std::invalid_argument("exponent cap " + std::to_string(c) + " out of range");
      }
    }
  }
}

int MultiPoly::max_exponent() const {
  if (bits() >= 31) return std::numeric_limits<int>::max();
  return (1 << bits()) - 1;
}

int MultiPoly::exponent(std::uint64_t key, int var) const {
  const int b = bits();
  const std::uint64_t mask = b >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << b) - 1);
  return static_cast<int>((key >> shift(var)) & mask);
}

std::uint64_t MultiPoly::pack(const ExponentVector& e) const {
  std::uint64_t key = 0;
  for (int i = 0; i < num_vars_; ++i) {
    key |= static_cast<std::uint64_t>(e[static_cast<std::size_t>(i)]) << shift(i);
  }
  return key;
}

ExponentVector MultiPoly::unpack(std::uint64_t key) const {
  std::vector<int> e(static_cast<std::size_t>(num_vars_));
  for (int i = 0; i < num_vars_; ++i) e[static_cast<std::size_t>(i)] = exponent(key, i);
  return ExponentVector(std::move(e));
}

MultiPoly MultiPoly::constant(int num_vars, const BigInt& value, Caps caps) {
  MultiPoly p(num_vars, std::move(caps));
  if (value != 0) p.terms_.push_back({0, value});
  return p;
}

MultiPoly MultiPoly::from_terms(int num_vars, const std::vector<Term>& terms, Caps caps) {
  MultiPoly p(num_vars, std::move(caps));
  std::map<std::uint64_t, BigInt> acc;
  for (const auto& [e, c] : terms) {
    if (static_cast<int>(e.size()) != num_vars) {
      throw std::invalid_argument("exponent vector length does not match the variable count");
    }
    for (int i = 0; i < num_vars; ++i) {
      const int ei = e[static_cast<std::size_t>(i)];
      const int limit = p.caps_ ? (*p.caps_)[static_cast<std::size_t>(i)] : p.max_exponent();
      if (ei < 0 || ei > limit) {
        throw std::invalid_argument("exponent " + std::to_string(ei) + " out of range");
      }
    }
    acc[p.pack(e)] += c;
  }
  for (auto& [key, c] : acc) {
    if (c != 0) p.terms_.push_back({key, std::move(c)});
  }
  return p;
}

const BigInt* MultiPoly::find(const ExponentVector& e) const {
  if (static_cast<int>(e.size()) != num_vars_) {
    throw std::invalid_argument("exponent vector length does not match the variable count");
  }
  for (int v : e.values()) {
    if (v < 0 || v > max_exponent()) return nullptr;
  }
  const std::uint64_t key = pack(e);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const PackedTerm& t, std::uint64_t k) { return t.key < k; });
  if (it == terms_.end() || it->key != key) return nullptr;
  return &it->coeff;
}

BigInt MultiPoly::coefficient(const ExponentVector& e) const {
  const BigInt* c = find(e);
  return c ? *c : BigInt(0);
}

std::vector<MultiPoly::Term> MultiPoly::terms() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.emplace_back(unpack(t.key), t.coeff);
  return out;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const long degree = unpack(terms_.front().key).total_degree();
  return std::all_of(terms_.begin(), terms_.end(), [&](const PackedTerm& t) {
    return unpack(t.key).total_degree() == degree;
  });
}

MultiPoly mul_linear(const MultiPoly& p, std::span<const long> coeffs) {
  if (static_cast<int>(coeffs.size()) != p.num_vars_) {
    throw std::invalid_argument("linear form has " + std::to_string(coeffs.size()) +
                                " coefficients for " + std::to_string(p.num_vars_) +
                                " variables");
  }
  MultiPoly result(p.num_vars_, p.caps_);

  // One stream per variable with a nonzero coefficient: the terms of p
  // shifted by x_j. Shifting a packed key by a constant keeps the streams
  // sorted, so the product is a k-way merge.
  struct Stream {
    std::uint64_t unit;
    long coeff;
    int var;
    int limit;
    std::size_t pos;
  };
  std::vector<Stream> streams;
  for (int j = 0; j < p.num_vars_; ++j) {
    const long c = coeffs[static_cast<std::size_t>(j)];
    if (c == 0) continue;
    const int limit = p.caps_ ? (*p.caps_)[static_cast<std::size_t>(j)] : p.max_exponent();
    streams.push_back({std::uint64_t{1} << p.shift(j), c, j, limit, 0});
  }

  const auto& src = p.terms_;
  auto skip_capped = [&](Stream& s) {
    while (s.pos < src.size() && p.exponent(src[s.pos].key, s.var) >= s.limit) {
      if (!p.caps_) {
        throw std::overflow_error("exponent overflow in packed monomial key");
      }
      ++s.pos;
    }
  };
  for (auto& s : streams) skip_capped(s);

  result.terms_.reserve(src.size() * std::max<std::size_t>(1, streams.size()) / 2 + 1);
  BigInt acc;
  while (true) {
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    bool any = false;
    for (const auto& s : streams) {
      if (s.pos < src.size()) {
        best = std::min(best, src[s.pos].key + s.unit);
        any = true;
      }
    }
    if (!any) break;
    acc = 0;
    for (auto& s : streams) {
      if (s.pos < src.size() && src[s.pos].key + s.unit == best) {
        const mpz_srcptr c = src[s.pos].coeff.get_mpz_t();
        if (s.coeff > 0) {
          mpz_addmul_ui(acc.get_mpz_t(), c, static_cast<unsigned long>(s.coeff));
        } else {
          mpz_submul_ui(acc.get_mpz_t(), c, static_cast<unsigned long>(-s.coeff));
        }
        ++s.pos;
        skip_capped(s);
      }
    }
    if (acc != 0) result.terms_.push_back({best, acc});
  }
  return result;
}

MultiPoly build_Q(int r, const MultiDegree& d, MultiPoly::Caps caps) {
  if (r < 0) throw std::invalid_argument("plane dimension r must be >= 0");
  const int num_vars = r + 1;
  MultiPoly q = MultiPoly::constant(num_vars, 1, std::move(caps));
  std::vector<long> form(static_cast<std::size_t>(num_vars));
  for (int di : d) {
    for (const auto& a : multi_indices(r, di)) {
      std::copy(a.begin(), a.end(), form.begin());
      q = mul_linear(q, form);
    }
  }
  return q;
}

MultiPoly mul_e_power(const MultiPoly& p, long delta) {
  if (delta < 0) {
    throw std::invalid_argument("power of e must be >= 0, got " + std::to_string(delta));
  }
  const std::vector<long> ones(static_cast<std::size_t>(p.num_vars()), 1);
  MultiPoly result = p;
  for (long i = 0; i < delta; ++i) result = mul_linear(result, ones);
  return result;
}

BigInt alternant_coefficient(const MultiPoly& p, const ExponentVector& target) {
  const int m = p.num_vars();
  if (static_cast<int>(target.size()) != m) {
    throw std::invalid_argument("target exponent has the wrong length");
  }
  BigInt total = 0;
  std::vector<int> lookup(static_cast<std::size_t>(m));
  for_each_permutation(m, [&](std::span<const int> perm, int sign) {
    for (int i = 0; i < m; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      // staircase entry kappa_{perm(i)} = r - perm(i)
      lookup[ui] = target[ui] - (m - 1 - perm[ui]);
      if (lookup[ui] < 0) return;
    }
    const BigInt c = p.coefficient(ExponentVector(lookup));
    if (sign > 0) {
      total += c;
    } else {
      total -= c;
    }
  });
  return total;
}

}  // namespace fano
