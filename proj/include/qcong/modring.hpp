#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcong/polyring.hpp"
#include "qcong/qcore.hpp"

namespace qcong {

/// 3-adic valuation: a nonnegative integer, or infinite for zero.
class Valuation {
 public:
  static Valuation finite(std::uint64_t v) { return Valuation(v); }
  static Valuation infinite() { return Valuation(std::nullopt); }

  bool is_infinite() const noexcept { return !value_; }
  /// Throws InvalidArgument when infinite.
  std::uint64_t value() const;
  std::string to_string() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend Valuation operator+(const Valuation& lhs, const Valuation& rhs);

 private:
  explicit Valuation(std::optional<std::uint64_t> v) : value_(v) {}
  std::optional<std::uint64_t> value_;
};

/// A monic modulus of degree >= 1, optionally with a factorization into
/// pairwise-coprime monic factors. The product of the factors is checked
/// against the modulus at construction.
class Modulus {
 public:
  explicit Modulus(IntPoly poly);
  Modulus(IntPoly poly, std::vector<IntPoly> factors);

  /// [3^a]_q^exponent together with its factors Phi_{3^j}^exponent, j = 1..a.
  static Modulus three_power_qint(std::int64_t a, int exponent,
                                  CyclotomicCache& cache = default_cyclotomic_cache());

  const IntPoly& poly() const noexcept { return poly_; }
  const std::optional<std::vector<IntPoly>>& factors() const noexcept { return factors_; }

 private:
  IntPoly poly_;
  std::optional<std::vector<IntPoly>> factors_;
};

IntPoly reduce(const IntPoly& p, const Modulus& m);

/// reduce(p, m) == 0. With a factorization present, each factor is also
/// tested and any disagreement throws InternalError.
bool divisible(const IntPoly& p, const Modulus& m);

/// True iff Phi_d does not divide p. Phi_d is irreducible over Q, so this
/// is a full coprimality test.
bool coprime_to_cyclotomic(const IntPoly& p, std::int64_t d,
                           CyclotomicCache& cache = default_cyclotomic_cache());

Valuation nu3(const BigInt& n);

/// a^{-1} mod modulus by the extended Euclidean algorithm, result in
/// [0, modulus). Throws InvalidArgument when gcd(a, modulus) != 1.
BigInt inverse_mod(const BigInt& a, const BigInt& modulus);

/// num * den^{-1} mod 3^e in [0, 3^e). Requires 3 not dividing den.
BigInt rat_mod3e(const BigRat& r, unsigned e);

BigInt pow3(unsigned e);

}  // namespace qcong
