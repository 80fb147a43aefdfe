#include "qcong/modring.hpp"

#include <utility>

namespace qcong {

std::uint64_t Valuation::value() const {
  if (!value_) throw InvalidArgument("valuation is infinite");
  return *value_;
}

std::string Valuation::to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

Valuation operator+(const Valuation& lhs, const Valuation& rhs) {
  if (lhs.is_infinite() || rhs.is_infinite()) return Valuation::infinite();
  return Valuation::finite(*lhs.value_ + *rhs.value_);
}

Modulus::Modulus(IntPoly poly) : poly_(std::move(poly)) {
  if (poly_.is_zero()) throw DivisionByZeroPoly();
  if (!poly_.is_monic()) throw NonMonicDivisor();
  if (*poly_.degree() < 1) throw InvalidArgument("modulus must have degree >= 1");
}

Modulus::Modulus(IntPoly poly, std::vector<IntPoly> factors) : Modulus(std::move(poly)) {
  IntPoly product{1};
  for (const auto& f : factors) {
    if (!f.is_monic()) throw NonMonicDivisor();
    product *= f;
  }
  if (!(product == poly_)) throw InvalidArgument("factorization does not multiply to the modulus");
  factors_ = std::move(factors);
}

Modulus Modulus::three_power_qint(std::int64_t a, int exponent, CyclotomicCache& cache) {
  if (a < 1) throw InvalidArgument("a must be >= 1");
  if (exponent < 1) throw InvalidArgument("exponent must be >= 1");
  std::vector<IntPoly> factors;
  IntPoly product{1};
  std::int64_t d = 1;
  for (std::int64_t j = 1; j <= a; ++j) {
    d *= 3;
    IntPoly f{1};
    for (int e = 0; e < exponent; ++e) f *= cache.get(d);
    product *= f;
    factors.push_back(std::move(f));
  }
  return Modulus(std::move(product), std::move(factors));
}

IntPoly reduce(const IntPoly& p, const Modulus& m) { return divrem_monic(p, m.poly()).rem; }

bool divisible(const IntPoly& p, const Modulus& m) {
  const bool whole = reduce(p, m).is_zero();
  if (m.factors()) {
    bool all = true;
    for (const auto& f : *m.factors()) all = all && divrem_monic(p, f).rem.is_zero();
    if (all != whole) {
      throw InternalError("modulus and its coprime factorization disagree on divisibility");
    }
  }
  return whole;
}

bool coprime_to_cyclotomic(const IntPoly& p, std::int64_t d, CyclotomicCache& cache) {
  return !divrem_monic(p, cache.get(d)).rem.is_zero();
}

Valuation nu3(const BigInt& n) {
  if (n == 0) return Valuation::infinite();
  BigInt rest = n;
  std::uint64_t v = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 3) != 0) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), 3);
    ++v;
  }
  return Valuation::finite(v);
}

BigInt inverse_mod(const BigInt& a, const BigInt& modulus) {
  if (modulus < 1) throw InvalidArgument("modulus must be positive");
  BigInt old_r = a % modulus;
  if (old_r < 0) old_r += modulus;
  BigInt r = modulus;
  BigInt old_s = 1;
  BigInt s = 0;
  while (r != 0) {
    BigInt quotient = old_r / r;
    BigInt t = old_r - quotient * r;
    old_r = r;
    r = t;
    t = old_s - quotient * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) throw InvalidArgument("element is not invertible modulo " + modulus.get_str());
  BigInt inv = old_s % modulus;
  if (inv < 0) inv += modulus;
  return inv;
}

BigInt pow3(unsigned e) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), 3, e);
  return out;
}

BigInt rat_mod3e(const BigRat& r, unsigned e) {
  if (e < 1) throw InvalidArgument("exponent must be >= 1");
  if (mpz_divisible_ui_p(r.get_den_mpz_t(), 3) != 0) {
    throw NotThreeIntegral("denominator " + r.get_den().get_str() + " is divisible by 3");
  }
  const BigInt modulus = pow3(e);
  BigInt num = r.get_num() % modulus;
  if (num < 0) num += modulus;
  BigInt out = num * inverse_mod(r.get_den(), modulus) % modulus;
  return out;
}

}  // namespace qcong
