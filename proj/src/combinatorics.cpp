#include "fano/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fano {

MultiDegree::MultiDegree(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) {
    throw std::invalid_argument("multidegree must have at least one entry");
  }
  for (int d : degrees_) {
    if (d < 1) {
      throw std::invalid_argument("degree " + std::to_string(d) + " is not >= 1");
    }
  }
}

long MultiDegree::total() const {
  return std::accumulate(degrees_.begin(), degrees_.end(), 0L);
}

int MultiDegree::min_degree() const {
  return *std::min_element(degrees_.begin(), degrees_.end());
}

std::vector<int> MultiDegree::sorted() const {
  std::vector<int> s = degrees_;
  std::sort(s.begin(), s.end());
  return s;
}

std::string MultiDegree::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (i) out << ',';
    out << degrees_[i];
  }
  return out.str();
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) {
      throw std::invalid_argument("partition has a negative part");
    }
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

long Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0L);
}

bool Partition::fits(int rows, int cols) const {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) break;
    if (static_cast<int>(i) >= rows || parts_[i] > cols) return false;
  }
  return true;
}

Partition Partition::zero(std::size_t length) {
  return Partition(std::vector<int>(length, 0));
}

Partition Partition::staircase(std::size_t length) {
  std::vector<int> parts(length);
  for (std::size_t i = 0; i < length; ++i) parts[i] = static_cast<int>(length - 1 - i);
  return Partition(std::move(parts));
}

Partition Partition::rectangle(int rows, int cols) {
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

std::string Partition::to_string() const {
  std::size_t len = parts_.size();
  while (len > 0 && parts_[len - 1] == 0) --len;
  if (len == 0) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < len; ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  return out.str();
}

BigInt binom(long m, long k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (m < 0) {
    throw std::domain_error("binomial C(" + std::to_string(m) + "," + std::to_string(k) +
                            ") with negative upper index is undefined");
  }
  if (k > m) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
  return result;
}

BigInt binom(const BigInt& m, long k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (m < 0) throw std::domain_error("binomial with negative upper index is undefined");
  if (m < k) return 0;
  BigInt result;
  mpz_bin_ui(result.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(k));
  return result;
}

BigInt binom_sum(const MultiDegree& d, long shift, long lower) {
  BigInt sum = 0;
  for (int di : d) sum += binom(di + shift, lower);
  return sum;
}

namespace {

void fill_indices(int pos, int remaining, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
  const int last = static_cast<int>(current.size()) - 1;
  if (pos == last) {
    current[pos] = remaining;
    out.push_back(current);
    return;
  }
  for (int a = 0; a <= remaining; ++a) {
    current[pos] = a;
    fill_indices(pos + 1, remaining - a, current, out);
  }
}

}  // namespace

std::vector<std::vector<int>> multi_indices(int r, int deg) {
  std::vector<std::vector<int>> out;
  if (r < 0 || deg < 0) return out;
  std::vector<int> current(static_cast<std::size_t>(r) + 1, 0);
  fill_indices(0, deg, current, out);
  return out;
}

BigInt partitions_in_rectangle(long p, int rows, int cols) {
  if (p < 0) return 0;
  if (p == 0) return 1;
  if (rows <= 0 || cols <= 0) return 0;
  if (p > static_cast<long>(rows) * cols) return 0;
  const auto P = static_cast<std::size_t>(p);
  // table[j][q]: partitions of q into exactly j parts, part sizes admitted so far.
  std::vector<std::vector<BigInt>> table(static_cast<std::size_t>(rows) + 1,
                                         std::vector<BigInt>(P + 1, 0));
  table[0][0] = 1;
  for (int size = 1; size <= cols; ++size) {
    for (int j = 1; j <= rows; ++j) {
      for (std::size_t q = static_cast<std::size_t>(size); q <= P; ++q) {
        table[j][q] += table[j - 1][q - size];
      }
    }
  }
  BigInt total = 0;
  for (int j = 0; j <= rows; ++j) total += table[j][P];
  return total;
}

namespace {

BigInt chains_to_rectangle(std::vector<int>& parts, int cols,
                           std::map<std::vector<int>, BigInt>& memo) {
  auto it = memo.find(parts);
  if (it != memo.end()) return it->second;
  BigInt total = 0;
  bool full = true;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] >= cols) continue;
    full = false;
    if (i > 0 && parts[i - 1] == parts[i]) continue;
    ++parts[i];
    total += chains_to_rectangle(parts, cols, memo);
    --parts[i];
  }
  if (full) total = 1;
  memo.emplace(parts, total);
  return total;
}

}  // namespace

BigInt schubert_degree(const Partition& lambda, int n) {
  const int rows = static_cast<int>(lambda.length());
  const int cols = n - rows + 1;
  if (rows == 0 || cols < 1 || !lambda.fits(rows, cols)) {
    throw std::invalid_argument("partition (" + lambda.to_string() +
                                ") does not fit the Grassmannian rectangle");
  }
  std::map<std::vector<int>, BigInt> memo;
  std::vector<int> parts = lambda.parts();
  return chains_to_rectangle(parts, cols, memo);
}

int permutation_sign(std::span<const int> perm) {
  int inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

void for_each_permutation(int m, const std::function<void(std::span<const int>, int)>& fn) {
  std::vector<int> perm(static_cast<std::size_t>(std::max(m, 0)));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    fn(perm, permutation_sign(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace fano
