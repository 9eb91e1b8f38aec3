#include "fano/unirationality.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace fano {

PSRecursion::PSRecursion(RecursionOverrides overrides) : overrides_(std::move(overrides)) {
  for (const auto& [key, value] : overrides_) {
    if (key.empty() || !std::is_sorted(key.begin(), key.end()) || key.front() < 2) {
      throw std::invalid_argument("override keys must be sorted multidegrees with entries >= 2");
    }
    if (value < 0) throw std::invalid_argument("override value must be >= 0");
  }
}

PSRecursion::Pair PSRecursion::eval_sorted(const std::vector<int>& sorted) {
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(sorted);
    if (it != memo_.end()) return it->second;
  }

  Pair result;
  const auto first_big = std::find_if(sorted.begin(), sorted.end(), [](int d) { return d > 1; });
  const long ones = first_big - sorted.begin();
  if (first_big == sorted.end()) {
    // (1, ..., 1): strip down to the base case n(1) = r(1) = 0.
    result = {0, ones - 1};
  } else if (ones > 0) {
    const Pair rest = eval_sorted(std::vector<int>(first_big, sorted.end()));
    result = {rest.r, rest.n + ones};
  } else {
    auto ov = overrides_.find(sorted);
    if (ov != overrides_.end()) {
      result.r = ov->second;
      std::lock_guard lock(mutex_);
      used_.insert(*ov);
    } else {
      std::vector<int> lowered = sorted;
      for (int& d : lowered) --d;
      result.r = eval_sorted(lowered).n;
    }
    // C(d + r - 1, r) = C(d + r - 1, d - 1)
    result.n = result.r;
    for (int d : sorted) result.n += binom(BigInt(result.r + d - 1), d - 1);
  }

  std::lock_guard lock(mutex_);
  memo_.emplace(sorted, result);
  return result;
}

PSBound PSRecursion::evaluate(const MultiDegree& d) {
  const Pair p = eval_sorted(d.sorted());
  return PSBound{d, p.r, p.n};
}

RecursionOverrides PSRecursion::overrides_used() const {
  std::lock_guard lock(mutex_);
  return used_;
}

PSBound ps_pair(const MultiDegree& d, const RecursionOverrides& overrides) {
  PSRecursion rec(overrides);
  return rec.evaluate(d);
}

FanoBound fano_unirationality_bound(const MultiDegree& d, int r,
                                    const RecursionOverrides& overrides) {
  if (r < 0) throw std::invalid_argument("r must be >= 0");
  if (d.min_degree() < 2) {
    throw std::invalid_argument(
        "degree-1 equations are not accepted: a linear equation cuts P^n down to P^(n-1), "
        "so drop it and lower n by one");
  }
  std::vector<int> expanded;
  for (int di : d) {
    const long copies = to_long(binom(di + r, r));
    expanded.insert(expanded.end(), static_cast<std::size_t>(copies), di);
  }
  PSRecursion rec(overrides);
  FanoBound out{.D = MultiDegree(std::move(expanded)),
                .r_D = 0,
                .r1 = 0,
                .bound = 0,
                .overrides_used = {}};
  out.r_D = rec.evaluate(out.D).r_of_d;
  out.r1 = (out.r_D + 1) * (r + 1) - 1;
  out.bound = out.r1;
  for (int di : d) out.bound += binom(BigInt(out.r1 + di - 1), di - 1);
  out.overrides_used = rec.overrides_used();
  return out;
}

FanoBound fano_unirationality_bound(const FanoProblem& p, const RecursionOverrides& overrides) {
  return fano_unirationality_bound(p.d(), p.r(), overrides);
}

RecursionOverrides parse_overrides(std::istream& in) {
  static const std::regex entry(R"(^d=([0-9]+(?:,[0-9]+)*)r=([0-9]+)$)");
  RecursionOverrides out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::erase_if(line, [](unsigned char c) { return std::isspace(c); });
    if (line.empty()) continue;
    std::smatch m;
    if (!std::regex_match(line, m, entry)) {
      throw std::invalid_argument("overrides line " + std::to_string(lineno) +
                                  ": expected 'd=<degrees> r=<integer>'");
    }
    std::vector<int> degrees;
    std::istringstream list(m[1].str());
    for (std::string tok; std::getline(list, tok, ',');) {
      const int v = std::stoi(tok);
      if (v < 2) {
        throw std::invalid_argument("overrides line " + std::to_string(lineno) +
                                    ": degrees must be >= 2");
      }
      degrees.push_back(v);
    }
    std::sort(degrees.begin(), degrees.end());
    out[degrees] = BigInt(m[2].str());
  }
  return out;
}

}  // namespace fano
