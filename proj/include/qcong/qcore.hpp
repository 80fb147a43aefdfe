#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "qcong/polyring.hpp"

namespace qcong {

/// The mod-3 character (k/3).
enum class Char3 : int { kMinusOne = -1, kZero = 0, kPlusOne = 1 };

Char3 char3(std::int64_t k);
Char3 char3(const BigInt& k);
constexpr int to_int(Char3 c) noexcept { return static_cast<int>(c); }

/// [n]_q = 1 + q + ... + q^{n-1}, n >= 1.
IntPoly q_int(std::int64_t n);

/// p * [n]_q by a sliding window sum; O(deg p) additions.
IntPoly mul_q_int(const IntPoly& p, std::int64_t n);

/// p / [n]_q via p(1 - q) = r(1 - q^n). Throws InexactDivision (with the
/// true remainder) when [n]_q does not divide p.
IntPoly div_q_int(const IntPoly& p, std::int64_t n);

/// Lazily populated map d -> Phi_d(q). Lookups are safe from any thread;
/// misses take an exclusive lock while the entry is built.
class CyclotomicCache {
 public:
  const IntPoly& get(std::int64_t d);
  std::size_t size() const;

 private:
  const IntPoly* find(std::int64_t d) const;

  mutable std::shared_mutex mutex_;
  std::map<std::int64_t, IntPoly> entries_;
};

/// Process-wide cache used when callers do not supply their own.
CyclotomicCache& default_cyclotomic_cache();

IntPoly cyclotomic(std::int64_t d, CyclotomicCache& cache);
IntPoly cyclotomic(std::int64_t d);

/// Gaussian binomial [n choose k]_q by the product formula
/// prod_{j=1..k} [n-k+j]_q / [j]_q, each step an exact division.
IntPoly q_binom(std::int64_t n, std::int64_t k);

/// Same value through the q-Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k].
/// Independent of q_binom; kept as its oracle.
IntPoly q_binom_pascal(std::int64_t n, std::int64_t k);

/// [n choose 0]_q, ..., [n choose k_max]_q, each from its predecessor.
std::vector<IntPoly> q_binom_row(std::int64_t n, std::int64_t k_max);

/// sum_{k=0}^{count-1} q^k [2k choose k]_q. With a modulus (monic, degree
/// >= 1) the running sum is reduced after every term.
IntPoly central_qbinom_sum(std::int64_t count, const std::optional<IntPoly>& modulus = std::nullopt);

/// Oracle for central_qbinom_sum: one q_binom call per term.
IntPoly central_qbinom_sum_direct(std::int64_t count);

}  // namespace qcong
