#include "oracle.hpp"

#include <map>
#include <stdexcept>

namespace fano::oracle {

namespace {

using Dense = std::map<std::vector<int>, BigInt>;

Dense multiply(const Dense& a, const Dense& b) {
  Dense out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Dense linear(const std::vector<int>& coeffs) {
  Dense out;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    std::vector<int> e(coeffs.size(), 0);
    e[j] = 1;
    out[e] += coeffs[j];
  }
  return out;
}

}  // namespace

MultiPoly dense_expand(int r, const MultiDegree& d, long delta) {
  if (r < 0 || r > 1) throw std::invalid_argument("dense_expand: r must be 0 or 1");
  if (delta < 0) throw std::invalid_argument("dense_expand: delta must be >= 0");
  if (binom_sum(d, r, r) + delta > 24) {
    throw std::invalid_argument("dense_expand: input exceeds the oracle size guard");
  }
  const auto m = static_cast<std::size_t>(r + 1);
  Dense poly{{std::vector<int>(m, 0), BigInt(1)}};
  for (int di : d) {
    for (const auto& a : multi_indices(r, di)) poly = multiply(poly, linear(a));
  }
  const Dense e = linear(std::vector<int>(m, 1));
  for (long k = 0; k < delta; ++k) poly = multiply(poly, e);

  std::vector<MultiPoly::Term> terms;
  for (const auto& [exps, c] : poly) terms.emplace_back(ExponentVector(exps), c);
  return MultiPoly::from_terms(r + 1, terms);
}

BigInt hook_syt_count(int rows, int cols) {
  if (rows < 0 || cols < 0 || rows > 7 || cols > 7) {
    throw std::invalid_argument("hook_syt_count: rectangle exceeds 7 x 7 guard");
  }
  BigInt numerator;
  mpz_fac_ui(numerator.get_mpz_t(), static_cast<unsigned long>(rows * cols));
  BigInt hooks = 1;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) hooks *= (cols - j) + (rows - i) - 1;
  }
  return numerator / hooks;
}

StraightenResult straighten_bruteforce(std::span<const int> alpha) {
  const int m = static_cast<int>(alpha.size());
  std::vector<int> shifted(alpha.begin(), alpha.end());
  for (int i = 0; i < m; ++i) shifted[static_cast<std::size_t>(i)] += m - 1 - i;

  StraightenResult found;
  for_each_permutation(m, [&](std::span<const int> perm, int sign) {
    if (found) return;
    // beta_i = shifted[perm[i]] must be strictly decreasing
    for (int i = 0; i + 1 < m; ++i) {
      if (shifted[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] <=
          shifted[static_cast<std::size_t>(perm[static_cast<std::size_t>(i + 1)])]) {
        return;
      }
    }
    std::vector<int> parts(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      parts[static_cast<std::size_t>(i)] =
          shifted[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] - (m - 1 - i);
      if (parts[static_cast<std::size_t>(i)] < 0) return;
    }
    found = Straightened{sign, Partition(std::move(parts))};
  });
  return found;
}

BigInt localization_degree(int n, const MultiDegree& d, int r) {
  if (r < 0 || r >= n) throw std::invalid_argument("localization_degree: need 0 <= r < n");
  long codim = 0;
  for (int di : d) codim += binom(di + r, r).get_si();
  const long delta = static_cast<long>(r + 1) * (n - r) - codim;
  if (delta < 0) throw std::invalid_argument("localization_degree: negative expected dimension");

  // Any pairwise distinct weights give the same (integral) total.
  std::vector<BigInt> t(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) t[static_cast<std::size_t>(i)] = BigInt(i) * i * 3 + 7 * i + 1;

  mpq_class total = 0;
  std::vector<int> plane(static_cast<std::size_t>(r) + 1);
  for (int i = 0; i <= r; ++i) plane[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<bool> in(static_cast<std::size_t>(n) + 1, false);
    for (int i : plane) in[static_cast<std::size_t>(i)] = true;

    BigInt num = 1;
    for (int di : d) {
      for (const auto& a : multi_indices(r, di)) {
        BigInt w = 0;
        for (int k = 0; k <= r; ++k) w -= a[static_cast<std::size_t>(k)] * t[static_cast<std::size_t>(plane[static_cast<std::size_t>(k)])];
        num *= w;
      }
    }
    BigInt h = 0;
    for (int i : plane) h -= t[static_cast<std::size_t>(i)];
    for (long k = 0; k < delta; ++k) num *= h;

    BigInt den = 1;
    for (int i : plane)
      for (int j = 0; j <= n; ++j)
        if (!in[static_cast<std::size_t>(j)]) den *= t[static_cast<std::size_t>(j)] - t[static_cast<std::size_t>(i)];
    mpq_class term(num, den);
    term.canonicalize();
    total += term;

    int k = r;
    while (k >= 0 && plane[static_cast<std::size_t>(k)] == n - r + k) --k;
    if (k < 0) break;
    ++plane[static_cast<std::size_t>(k)];
    for (int j = k + 1; j <= r; ++j) plane[static_cast<std::size_t>(j)] = plane[static_cast<std::size_t>(j) - 1] + 1;
  }
  if (total.get_den() != 1) throw std::logic_error("localization_degree: non-integral total");
  return total.get_num();
}

}  // namespace fano::oracle
