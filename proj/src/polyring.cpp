#include "qcong/polyring.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <utility>

namespace qcong {
namespace {

const BigInt& zero_coeff() {
  static const BigInt kZero = 0;
  return kZero;
}

}  // namespace

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, std::size_t exponent) {
  if (c == 0) return {};
  std::vector<BigInt> coeffs(exponent + 1);
  coeffs[exponent] = c;
  return IntPoly(std::move(coeffs));
}

std::optional<std::size_t> IntPoly::degree() const noexcept {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

const BigInt& IntPoly::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : zero_coeff();
}

const BigInt& IntPoly::leading() const {
  if (coeffs_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

bool IntPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

std::size_t IntPoly::term_count() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; }));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& other) {
  *this = poly_mul(*this, other);
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

void IntPoly::add_scaled_shifted(const IntPoly& p, const BigInt& scale, std::size_t shift) {
  if (p.is_zero() || scale == 0) return;
  const std::size_t need = p.coeffs_.size() + shift;
  if (coeffs_.size() < need) coeffs_.resize(need);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    mpz_addmul(coeffs_[i + shift].get_mpz_t(), p.coeffs_[i].get_mpz_t(), scale.get_mpz_t());
  }
  normalize();
}

bool operator==(const IntPoly& lhs, const IntPoly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
IntPoly operator-(IntPoly p) { return p *= BigInt(-1); }
IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) { return poly_mul(lhs, rhs); }
IntPoly operator*(IntPoly p, const BigInt& scalar) { return p *= scalar; }
IntPoly operator*(const BigInt& scalar, IntPoly p) { return p *= scalar; }

InexactDivision::InexactDivision(IntPoly remainder)
    : Error("inexact division, remainder " + to_canonical(remainder)),
      remainder_(std::move(remainder)) {}

IntPoly poly_add(const IntPoly& p, const IntPoly& r) { return p + r; }

IntPoly poly_mul(const IntPoly& p, const IntPoly& r) {
  if (p.is_zero() || r.is_zero()) return {};
  const auto& a = p.coeffs();
  const auto& b = r.coeffs();
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

DivRem divrem_monic(const IntPoly& p, const IntPoly& m) {
  if (m.is_zero()) throw DivisionByZeroPoly();
  if (!m.is_monic()) throw NonMonicDivisor();
  const std::size_t dm = *m.degree();
  if (p.length() <= dm) return {IntPoly{}, p};

  // Sparse divisors (the 3-power cyclotomics) only touch their support.
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < dm; ++j) {
    if (m[j] != 0) support.push_back(j);
  }

  std::vector<BigInt> work = p.coeffs();
  std::vector<BigInt> quot(work.size() - dm);
  for (std::size_t i = work.size(); i-- > dm;) {
    if (work[i] == 0) continue;
    const std::size_t base = i - dm;
    quot[base] = work[i];
    for (std::size_t j : support) {
      mpz_submul(work[base + j].get_mpz_t(), quot[base].get_mpz_t(), m[j].get_mpz_t());
    }
    work[i] = 0;
  }
  work.resize(dm);
  return {IntPoly(std::move(quot)), IntPoly(std::move(work))};
}

IntPoly exact_div(const IntPoly& p, const IntPoly& m) {
  auto [quot, rem] = divrem_monic(p, m);
  if (!rem.is_zero()) throw InexactDivision(std::move(rem));
  return std::move(quot);
}

BigRat eval_rat(const IntPoly& p, const BigRat& x) {
  BigRat acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * x + BigRat(c[i]);
  }
  acc.canonicalize();
  return acc;
}

IntPoly shift_mul(const IntPoly& p, std::size_t t) {
  if (p.is_zero() || t == 0) return p;
  std::vector<BigInt> coeffs(t);
  coeffs.insert(coeffs.end(), p.coeffs().begin(), p.coeffs().end());
  return IntPoly(std::move(coeffs));
}

std::string to_canonical(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!first) out << ',';
    out << i << ':' << c[i].get_str();
    first = false;
  }
  return out.str();
}

IntPoly parse_canonical(std::string_view text) {
  if (text == "0" || text.empty()) return {};
  std::vector<BigInt> coeffs;
  std::optional<std::size_t> last;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);

    const auto colon = item.find(':');
    if (colon == std::string_view::npos) throw InvalidArgument("malformed term: " + std::string(item));
    std::size_t exponent = 0;
    const auto exp_part = item.substr(0, colon);
    auto [ptr, ec] = std::from_chars(exp_part.data(), exp_part.data() + exp_part.size(), exponent);
    if (ec != std::errc{} || ptr != exp_part.data() + exp_part.size()) {
      throw InvalidArgument("malformed exponent: " + std::string(exp_part));
    }
    if (last && exponent <= *last) throw InvalidArgument("exponents must be strictly increasing");
    last = exponent;

    BigInt value;
    if (value.set_str(std::string(item.substr(colon + 1)), 10) != 0) {
      throw InvalidArgument("malformed coefficient: " + std::string(item.substr(colon + 1)));
    }
    if (coeffs.size() <= exponent) coeffs.resize(exponent + 1);
    coeffs[exponent] = value;
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace qcong
