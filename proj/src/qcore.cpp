#include "qcong/qcore.hpp"

#include <mutex>
#include <string>
#include <utility>

namespace qcong {
namespace {

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) throw InvalidArgument(std::string(what) + " must be >= 1, got " + std::to_string(n));
}

bool is_power_of_three(std::int64_t d, std::int64_t& prev_power) {
  if (d < 3) return false;
  std::int64_t p = 1;
  while (p * 3 < d) p *= 3;
  prev_power = p;
  return p * 3 == d;
}

IntPoly build_cyclotomic(std::int64_t d, CyclotomicCache& cache) {
  if (d == 1) return IntPoly{-1, 1};
  std::int64_t prev = 1;
  if (is_power_of_three(d, prev)) {
    // Phi_{3^j}(q) = 1 + q^{3^{j-1}} + q^{2*3^{j-1}}
    std::vector<BigInt> coeffs(static_cast<std::size_t>(2 * prev + 1));
    coeffs[0] = 1;
    coeffs[static_cast<std::size_t>(prev)] = 1;
    coeffs[static_cast<std::size_t>(2 * prev)] = 1;
    return IntPoly(std::move(coeffs));
  }
  // q^d - 1 = prod_{e | d} Phi_e
  IntPoly value = IntPoly::monomial(1, static_cast<std::size_t>(d)) - IntPoly{1};
  for (std::int64_t e = 1; e < d; ++e) {
    if (d % e == 0) value = exact_div(value, cache.get(e));
  }
  return value;
}

}  // namespace

Char3 char3(std::int64_t k) {
  switch (((k % 3) + 3) % 3) {
    case 0:
      return Char3::kZero;
    case 1:
      return Char3::kPlusOne;
    default:
      return Char3::kMinusOne;
  }
}

Char3 char3(const BigInt& k) {
  const unsigned long r = mpz_fdiv_ui(k.get_mpz_t(), 3);
  return r == 0 ? Char3::kZero : (r == 1 ? Char3::kPlusOne : Char3::kMinusOne);
}

IntPoly q_int(std::int64_t n) {
  require_positive(n, "n");
  return IntPoly(std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
}

IntPoly mul_q_int(const IntPoly& p, std::int64_t n) {
  require_positive(n, "n");
  if (p.is_zero()) return {};
  const auto& c = p.coeffs();
  const std::size_t width = static_cast<std::size_t>(n);
  std::vector<BigInt> out(c.size() + width - 1);
  BigInt window = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < c.size()) window += c[i];
    if (i >= width) window -= c[i - width];
    out[i] = window;
  }
  return IntPoly(std::move(out));
}

IntPoly div_q_int(const IntPoly& p, std::int64_t n) {
  require_positive(n, "n");
  if (p.is_zero() || n == 1) return p;
  const std::size_t width = static_cast<std::size_t>(n);
  const std::size_t len = p.length();
  if (len < width) throw InexactDivision(p);

  // s = p (1 - q), then r_i = s_i + r_{i-n}; exact iff the recurrence
  // continued past deg r reproduces s.
  const std::size_t quot_len = len - width + 1;
  std::vector<BigInt> r(quot_len);
  for (std::size_t i = 0; i < quot_len; ++i) {
    r[i] = p[i];
    if (i > 0) r[i] -= p[i - 1];
    if (i >= width) r[i] += r[i - width];
  }
  for (std::size_t i = quot_len; i <= len; ++i) {
    BigInt s = p[i];
    if (i > 0) s -= p[i - 1];
    BigInt expected = i >= width && i - width < quot_len ? BigInt(-r[i - width]) : BigInt(0);
    if (s != expected) throw InexactDivision(divrem_monic(p, q_int(n)).rem);
  }
  return IntPoly(std::move(r));
}

const IntPoly* CyclotomicCache::find(std::int64_t d) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(d);
  return it == entries_.end() ? nullptr : &it->second;
}

const IntPoly& CyclotomicCache::get(std::int64_t d) {
  require_positive(d, "d");
  if (const IntPoly* hit = find(d)) return *hit;
  // Built outside the lock: construction recurses into get() for divisors.
  IntPoly value = build_cyclotomic(d, *this);
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.emplace(d, std::move(value));
  return it->second;
}

std::size_t CyclotomicCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

CyclotomicCache& default_cyclotomic_cache() {
  static CyclotomicCache cache;
  return cache;
}

IntPoly cyclotomic(std::int64_t d, CyclotomicCache& cache) { return cache.get(d); }
IntPoly cyclotomic(std::int64_t d) { return cyclotomic(d, default_cyclotomic_cache()); }

IntPoly q_binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw InvalidArgument("q_binom arguments must be nonnegative");
  if (k > n) return {};
  if (k > n - k) k = n - k;
  IntPoly acc{1};
  for (std::int64_t j = 1; j <= k; ++j) {
    acc = div_q_int(mul_q_int(acc, n - k + j), j);
  }
  return acc;
}

IntPoly q_binom_pascal(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw InvalidArgument("q_binom arguments must be nonnegative");
  if (k > n) return {};
  // row[j] = [i choose j]_q for the current i
  std::vector<IntPoly> row(static_cast<std::size_t>(k + 1));
  row[0] = IntPoly{1};
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::int64_t j = std::min(i, k); j >= 1; --j) {
      auto& cell = row[static_cast<std::size_t>(j)];
      IntPoly next = row[static_cast<std::size_t>(j - 1)];
      next.add_scaled_shifted(cell, 1, static_cast<std::size_t>(j));
      cell = std::move(next);
    }
  }
  return row[static_cast<std::size_t>(k)];
}

std::vector<IntPoly> q_binom_row(std::int64_t n, std::int64_t k_max) {
  if (n < 0 || k_max < 0) throw InvalidArgument("q_binom_row arguments must be nonnegative");
  std::vector<IntPoly> row;
  row.reserve(static_cast<std::size_t>(k_max + 1));
  row.push_back(IntPoly{1});
  for (std::int64_t k = 0; k < k_max; ++k) {
    if (k >= n) {
      row.emplace_back();
      continue;
    }
    // [n, k+1] = [n, k] [n-k]_q / [k+1]_q
    row.push_back(div_q_int(mul_q_int(row.back(), n - k), k + 1));
  }
  return row;
}

IntPoly central_qbinom_sum(std::int64_t count, const std::optional<IntPoly>& modulus) {
  require_positive(count, "N");
  if (modulus) {
    if (modulus->is_zero()) throw DivisionByZeroPoly();
    if (!modulus->is_monic()) throw NonMonicDivisor();
    if (*modulus->degree() < 1) throw InvalidArgument("modulus must have degree >= 1");
  }
  IntPoly sum;
  IntPoly central{1};  // [2k choose k]_q
  for (std::int64_t k = 0; k < count; ++k) {
    sum.add_scaled_shifted(central, 1, static_cast<std::size_t>(k));
    if (modulus) sum = divrem_monic(sum, *modulus).rem;
    if (k + 1 < count) {
      // [2k+2, k+1] = [2k, k] [2k+1]_q [2k+2]_q / [k+1]_q^2
      central = mul_q_int(mul_q_int(central, 2 * k + 1), 2 * k + 2);
      central = div_q_int(div_q_int(central, k + 1), k + 1);
    }
  }
  return sum;
}

IntPoly central_qbinom_sum_direct(std::int64_t count) {
  require_positive(count, "N");
  IntPoly sum;
  for (std::int64_t k = 0; k < count; ++k) {
    sum.add_scaled_shifted(q_binom(2 * k, k), 1, static_cast<std::size_t>(k));
  }
  return sum;
}

}  // namespace qcong
