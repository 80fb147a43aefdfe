#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "qcong/errors.hpp"

namespace qcong {

using BigInt = mpz_class;
/// Exact rational. mpq_class keeps den > 0 and gcd(num, den) = 1 after
/// every arithmetic operation; zero is 0/1.
using BigRat = mpq_class;

/// Dense univariate polynomial over Z. Position i holds the coefficient of
/// q^i. The leading stored coefficient is never zero; the zero polynomial
/// has no coefficients at all.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const BigInt& c);
  /// c * q^exponent
  static IntPoly monomial(const BigInt& c, std::size_t exponent);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree, or nullopt for the zero polynomial (degree minus infinity).
  std::optional<std::size_t> degree() const noexcept;
  std::size_t length() const noexcept { return coeffs_.size(); }
  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of q^i; zero beyond the degree.
  const BigInt& operator[](std::size_t i) const;
  /// Leading coefficient. Precondition: not zero.
  const BigInt& leading() const;
  bool is_monic() const;
  std::size_t term_count() const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  IntPoly& operator*=(const BigInt& scalar);

  /// this += scale * q^shift * p, in place.
  void add_scaled_shifted(const IntPoly& p, const BigInt& scale, std::size_t shift);

  friend bool operator==(const IntPoly& lhs, const IntPoly& rhs);

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

IntPoly operator+(IntPoly lhs, const IntPoly& rhs);
IntPoly operator-(IntPoly lhs, const IntPoly& rhs);
IntPoly operator-(IntPoly p);
IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
IntPoly operator*(IntPoly p, const BigInt& scalar);
IntPoly operator*(const BigInt& scalar, IntPoly p);

/// Remainder is non-zero; the division was not exact.
class InexactDivision : public Error {
 public:
  explicit InexactDivision(IntPoly remainder);
  const IntPoly& remainder() const noexcept { return remainder_; }

 private:
  IntPoly remainder_;
};

struct DivRem {
  IntPoly quot;
  IntPoly rem;
};

IntPoly poly_add(const IntPoly& p, const IntPoly& r);
IntPoly poly_mul(const IntPoly& p, const IntPoly& r);

/// p = m * quot + rem with deg rem < deg m. m must be monic.
DivRem divrem_monic(const IntPoly& p, const IntPoly& m);

/// quot with p = m * quot exactly; throws InexactDivision otherwise.
IntPoly exact_div(const IntPoly& p, const IntPoly& m);

/// Horner evaluation at a rational point.
BigRat eval_rat(const IntPoly& p, const BigRat& x);

/// q^t * p
IntPoly shift_mul(const IntPoly& p, std::size_t t);

/// Sparse "exp:coeff" list in increasing exponent order, e.g. "0:1,1:-2,4:1".
/// The zero polynomial prints as "0".
std::string to_canonical(const IntPoly& p);
IntPoly parse_canonical(std::string_view text);

}  // namespace qcong
