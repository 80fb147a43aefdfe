#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qcong/polyring.hpp"

namespace qcong::testing {

/// Seeded generator for small random polynomials used by the property tests.
class PolyGen {
 public:
  explicit PolyGen(std::uint64_t seed) : rng_(seed) {}

  IntPoly poly(std::size_t max_len = 12, long max_coeff = 50) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<long> coeff(-max_coeff, max_coeff);
    std::vector<BigInt> c(len(rng_));
    for (auto& x : c) x = coeff(rng_);
    return IntPoly(std::move(c));
  }

  IntPoly monic(std::size_t max_degree = 6, long max_coeff = 20) {
    std::uniform_int_distribution<std::size_t> deg(1, max_degree);
    std::uniform_int_distribution<long> coeff(-max_coeff, max_coeff);
    std::vector<BigInt> c(deg(rng_) + 1);
    for (auto& x : c) x = coeff(rng_);
    c.back() = 1;
    return IntPoly(std::move(c));
  }

  BigInt integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  BigRat rational(long bound = 30) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    BigRat r(num(rng_), den(rng_));
    r.canonicalize();
    return r;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline IntPoly P(std::initializer_list<long> c) { return IntPoly(c); }

}  // namespace qcong::testing
