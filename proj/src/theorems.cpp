#include "qcong/theorems.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "qcong/qcore.hpp"

namespace qcong {
namespace {

using Clock = std::chrono::steady_clock;

template <class Body>
VerificationReport timed(std::string statement, Params params, Body&& body) {
  VerificationReport report;
  report.statement = std::move(statement);
  report.params = std::move(params);
  const auto start = Clock::now();
  body(report);
  report.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
  return report;
}

void require_positive(std::int64_t v, const char* name) {
  if (v < 1) throw InvalidArgument(std::string(name) + " must be >= 1, got " + std::to_string(v));
}

void set_divisibility_witness(VerificationReport& report, const DivRem& dr) {
  report.pass = dr.rem.is_zero();
  report.witness = to_canonical(report.pass ? dr.quot : dr.rem);
}

std::int64_t floor_mod(std::int64_t x, std::int64_t m) { return ((x % m) + m) % m; }

/// k = 1, 4, 7, ... below 3^a
std::vector<std::int64_t> one_mod_three_below(std::int64_t bound) {
  std::vector<std::int64_t> ks;
  for (std::int64_t k = 1; k < bound; k += 3) ks.push_back(k);
  return ks;
}

/// prod [k]_q^2 over the given k.
IntPoly cleared_denominator(const std::vector<std::int64_t>& ks) {
  IntPoly d{1};
  for (std::int64_t k : ks) d = mul_q_int(mul_q_int(d, k), k);
  return d;
}

/// acc += sign * q^shift * base * (1 + c (1 - q^k))
void add_linear_factor_term(IntPoly& acc, const IntPoly& base, int sign, std::int64_t c,
                            std::int64_t k, std::size_t shift) {
  acc.add_scaled_shifted(base, BigInt(sign) * (1 + c), shift);
  acc.add_scaled_shifted(base, BigInt(-sign) * c, shift + static_cast<std::size_t>(k));
}

std::size_t checked_shift(std::int64_t exponent, const char* what) {
  if (exponent < 0) throw InternalError(std::string(what) + " exponent is negative");
  return static_cast<std::size_t>(exponent);
}

BigInt central_binomial_sum(std::int64_t count) {
  BigInt sum = 0;
  BigInt central = 1;  // C(2k, k)
  for (std::int64_t k = 0; k < count; ++k) {
    sum += central;
    central = central * (2 * (2 * k + 1));
    mpz_divexact_ui(central.get_mpz_t(), central.get_mpz_t(), static_cast<unsigned long>(k + 1));
  }
  return sum;
}

Params psi_params(std::int64_t a, std::int64_t m, const PsiSpec& psi) {
  return {{"a", a}, {"m", m}, {"psi", static_cast<std::int64_t>(psi.kind())}};
}

void require_psi_hypotheses(const PsiSpec& psi) {
  auto check = psi_check(psi);
  if (!check.pass) {
    throw PsiHypothesisViolated("psi violates the symmetry/periodicity hypotheses at (k,j)=" +
                                    *check.witness,
                                *check.witness);
  }
}

}  // namespace

std::int64_t ipow3(std::int64_t e) {
  if (e < 0) throw InvalidArgument("negative exponent");
  std::int64_t out = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    if (out > std::numeric_limits<std::int64_t>::max() / 3) throw InvalidArgument("3^e overflows");
    out *= 3;
  }
  return out;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw InvalidArgument("binomial arguments must be nonnegative");
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------- PsiSpec

PsiSpec::PsiSpec(std::int64_t a, std::int64_t m, std::vector<std::int64_t> values, PsiKind kind)
    : a_(a), m_(m), values_(std::move(values)), kind_(kind) {
  require_positive(a, "a");
  require_positive(m, "m");
  span_ = ipow3(a) * m;
  if (values_.size() != static_cast<std::size_t>(3 * span_ + 1)) {
    throw InvalidArgument("psi table must cover [-3^a m, 2 * 3^a m]");
  }
}

PsiSpec PsiSpec::tabulate(std::int64_t a, std::int64_t m,
                          const std::function<std::int64_t(std::int64_t)>& fn, PsiKind kind) {
  require_positive(a, "a");
  require_positive(m, "m");
  const std::int64_t span = ipow3(a) * m;
  std::vector<std::int64_t> values;
  values.reserve(static_cast<std::size_t>(3 * span + 1));
  for (std::int64_t k = -span; k <= 2 * span; ++k) values.push_back(fn(k));
  return PsiSpec(a, m, std::move(values), kind);
}

PsiSpec PsiSpec::zero(std::int64_t a, std::int64_t m) {
  return tabulate(a, m, [](std::int64_t) { return std::int64_t{0}; }, PsiKind::kZero);
}

PsiSpec PsiSpec::psi_m(std::int64_t a, std::int64_t m) {
  return tabulate(a, m, [a, m](std::int64_t k) { return qcong::psi_m(a, m, k); }, PsiKind::kPsiM);
}

PsiSpec PsiSpec::identity(std::int64_t a, std::int64_t m) {
  return tabulate(a, m, [](std::int64_t k) { return k; }, PsiKind::kIdentity);
}

std::int64_t PsiSpec::at(std::int64_t k) const {
  if (!contains(k)) {
    throw InvalidArgument("psi(" + std::to_string(k) + ") is outside the tabulated window");
  }
  return values_[static_cast<std::size_t>(k + span_)];
}

// ---------------------------------------------------------------- psi ops

VerificationReport psi_check(const PsiSpec& psi) {
  return timed("psi_check", {{"a", psi.a()}, {"m", psi.m()}, {"psi", static_cast<std::int64_t>(psi.kind())}},
               [&](VerificationReport& report) {
                 const std::int64_t full = ipow3(psi.a());
                 for (std::int64_t k = psi.lo(); k <= psi.hi(); ++k) {
                   if (psi.contains(-k) && floor_mod(psi.at(k) - psi.at(-k), full) != 0) {
                     report.witness = std::to_string(k) + ",0";
                     return;
                   }
                   std::int64_t step = 1;
                   for (std::int64_t j = 1; j <= psi.a(); ++j) {
                     step *= 3;
                     if (psi.contains(k + step) && floor_mod(psi.at(k + step) - psi.at(k), step) != 0) {
                       report.witness = std::to_string(k) + "," + std::to_string(j);
                       return;
                     }
                   }
                 }
                 report.pass = true;
               });
}

std::int64_t psi_m(std::int64_t a, std::int64_t m, std::int64_t k) {
  require_positive(a, "a");
  require_positive(m, "m");
  const std::int64_t x = ipow3(a) * m - k;
  const std::int64_t chi = to_int(char3(x));
  const std::int64_t numerator = 2 * x * x - x * chi - chi * chi;
  if (numerator % 3 != 0) throw InternalError("psi_m numerator not divisible by 3");
  return numerator / 3;
}

std::int64_t psi_cap(const PsiSpec& psi, std::int64_t k) {
  const std::int64_t full = ipow3(psi.a());
  if (k < 1 || k > full - 1) throw PreconditionViolated("psi_cap needs 1 <= k <= 3^a - 1");
  const std::int64_t diff = psi.at(full - k) - psi.at(k);
  if (diff % full != 0) throw InternalError("(psi(3^a - k) - psi(k)) / 3^a is not an integer");
  return diff / full + (full - 1) / 2 - k;
}

// ---------------------------------------------------------------- central sum

VerificationReport verify_eq13(std::int64_t a, std::int64_t m, Eq13Options options) {
  require_positive(a, "a");
  require_positive(m, "m");
  Params params{{"a", a}, {"m", m}};
  if (options.truncate) params["truncate"] = 1;
  if (options.modulus_power != 2) params["power"] = options.modulus_power;

  return timed("eq13", std::move(params), [&](VerificationReport& report) {
    const std::int64_t count = ipow3(a) * m - (options.truncate ? 1 : 0);
    const Modulus modulus = Modulus::three_power_qint(a, options.modulus_power);
    const IntPoly sum = central_qbinom_sum(count);
    const DivRem dr = divrem_monic(sum, modulus.poly());
    if (divisible(sum, modulus) != dr.rem.is_zero()) {
      throw InternalError("divisible() disagrees with divrem_monic");
    }
    if (!(central_qbinom_sum(count, modulus.poly()) == dr.rem)) {
      throw InternalError("reduced accumulation disagrees with the unreduced remainder");
    }
    set_divisibility_witness(report, dr);
  });
}

// ---------------------------------------------------------------- R(a) congruence

ClearedR build_R_cleared(std::int64_t a) {
  require_positive(a, "a");
  const std::int64_t full = ipow3(a);
  const std::int64_t half_term = ipow3(a - 1) + 1;
  if (half_term % 2 != 0) throw InternalError("(3^{a-1} + 1) / 2 is not an integer");

  const auto ks = one_mod_three_below(full);
  ClearedR out{cleared_denominator(ks), IntPoly{}};
  for (std::int64_t k : ks) {
    if (((k + 2) * (k - 1)) % 6 != 0 || (k - 1) % 3 != 0) {
      throw InternalError("R(a,q) term is not integral at k=" + std::to_string(k));
    }
    const std::int64_t exponent = (k + 2) * (k - 1) / 6;
    const std::int64_t coeff = (k - 1) / 3 - half_term / 2;
    const IntPoly others = div_q_int(div_q_int(out.denominator, k), k);
    const int sign = k % 2 == 0 ? 1 : -1;
    add_linear_factor_term(out.numerator, others, sign, coeff, k, checked_shift(exponent, "R"));
  }
  return out;
}

IntPoly eq14_cleared_difference(std::int64_t a, bool perturb_r) {
  require_positive(a, "a");
  const std::int64_t full = ipow3(a);
  const Modulus square = Modulus::three_power_qint(a, 2);
  const IntPoly quotient = exact_div(central_qbinom_sum(full), square.poly());

  ClearedR r = build_R_cleared(a);
  if (!coprime_to_cyclotomic(r.denominator, full)) {
    throw InternalError("cleared denominator shares a factor with Phi_{3^a}");
  }
  if (perturb_r) r.numerator += r.denominator;
  return r.denominator * quotient - BigInt(2) * r.numerator;
}

VerificationReport verify_eq14(std::int64_t a, bool perturb_r) {
  require_positive(a, "a");
  Params params{{"a", a}};
  if (perturb_r) params["perturb"] = 1;
  return timed("eq14", std::move(params), [&](VerificationReport& report) {
    const IntPoly diff = eq14_cleared_difference(a, perturb_r);
    set_divisibility_witness(report, divrem_monic(diff, cyclotomic(ipow3(a))));
  });
}

// ---------------------------------------------------------------- twisted sum

ShiftedPoly theorem21_sum(std::int64_t a, std::int64_t m, const PsiSpec& psi) {
  require_positive(a, "a");
  require_positive(m, "m");
  if (psi.a() != a) throw InvalidArgument("psi was tabulated for a different a");
  const std::int64_t span = ipow3(a) * m;
  if (!psi.contains(1) || !psi.contains(span - 1)) {
    throw InvalidArgument("psi window does not cover the summation range");
  }

  std::int64_t min_exp = 0;
  for (std::int64_t k = 1; k < span; ++k) {
    if (char3(k) != Char3::kZero) min_exp = std::min(min_exp, psi.at(k));
  }
  ShiftedPoly out{IntPoly{}, static_cast<std::size_t>(-min_exp)};

  const auto row = q_binom_row(2 * span, span - 1);
  for (std::int64_t k = 1; k < span; ++k) {
    const int chi = to_int(char3(k));
    if (chi == 0) continue;
    const auto exponent = static_cast<std::size_t>(psi.at(k) - min_exp);
    out.poly.add_scaled_shifted(row[static_cast<std::size_t>(k)], chi, exponent);
  }
  return out;
}

VerificationReport verify_eq21(std::int64_t a, std::int64_t m, const PsiSpec& psi,
                               int modulus_power) {
  require_positive(a, "a");
  require_positive(m, "m");
  require_psi_hypotheses(psi);
  Params params = psi_params(a, m, psi);
  if (modulus_power != 2) params["power"] = modulus_power;
  return timed("eq21", std::move(params), [&](VerificationReport& report) {
    const ShiftedPoly sum = theorem21_sum(a, m, psi);
    const Modulus modulus = Modulus::three_power_qint(a, modulus_power);
    const DivRem dr = divrem_monic(sum.poly, modulus.poly());
    if (divisible(sum.poly, modulus) != dr.rem.is_zero()) {
      throw InternalError("divisible() disagrees with divrem_monic");
    }
    set_divisibility_witness(report, dr);
  });
}

// ---------------------------------------------------------------- exact identity

IntPoly identity33_rhs(std::int64_t a, std::int64_t m) {
  require_positive(a, "a");
  require_positive(m, "m");
  const std::int64_t span = ipow3(a) * m;
  const auto row = q_binom_row(2 * span, span - 1);
  IntPoly rhs;
  for (std::int64_t k = 1; k < span; ++k) {
    const int chi = to_int(char3(k));
    if (chi == 0) continue;
    const std::size_t exponent = checked_shift(psi_m(a, m, k), "psi_m");
    rhs.add_scaled_shifted(row[static_cast<std::size_t>(k)], -chi, exponent);
  }
  return rhs;
}

VerificationReport verify_identity33(std::int64_t a, std::int64_t m,
                                     std::optional<std::int64_t> drop_term) {
  require_positive(a, "a");
  require_positive(m, "m");
  const std::int64_t span = ipow3(a) * m;
  if (drop_term && (*drop_term < 0 || *drop_term >= span)) {
    throw InvalidArgument("dropped term index out of range");
  }
  Params params{{"a", a}, {"m", m}};
  if (drop_term) params["drop"] = *drop_term;
  return timed("id33", std::move(params), [&](VerificationReport& report) {
    IntPoly lhs = central_qbinom_sum(span);
    if (drop_term) {
      lhs.add_scaled_shifted(q_binom(2 * *drop_term, *drop_term), -1,
                             static_cast<std::size_t>(*drop_term));
    }
    const IntPoly rhs = identity33_rhs(a, m);
    report.pass = lhs == rhs;
    report.witness = to_canonical(report.pass ? lhs : lhs - rhs);
  });
}

// ---------------------------------------------------------------- binomial divisibility

namespace {

BigInt lemma31_form(std::int64_t k) {
  BigInt kk = k;
  return 2 * kk * kk - kk * to_int(char3(k));
}

}  // namespace

VerificationReport verify_lemma31(std::int64_t a, std::int64_t k, std::int64_t l) {
  require_positive(a, "a");
  const std::int64_t base = ipow3(a);
  if (floor_mod(k - l, base) != 0) {
    throw PreconditionViolated("k and l must agree modulo 3^a");
  }
  return timed("lemma31", {{"a", a}, {"k", k}, {"l", l}}, [&](VerificationReport& report) {
    const BigInt diff = lemma31_form(k) - lemma31_form(l);
    const BigInt modulus = pow3(static_cast<unsigned>(a + 1));
    BigInt rem = diff % modulus;
    report.pass = rem == 0;
    report.witness = report.pass ? BigInt(diff / modulus).get_str() : rem.get_str();
  });
}

VerificationReport verify_lemma31_sweep(std::int64_t a) {
  require_positive(a, "a");
  const std::int64_t base = ipow3(a);
  const std::int64_t top = 3 * base;
  return timed("lemma31", {{"a", a}, {"k_max", top}}, [&](VerificationReport& report) {
    const BigInt modulus = pow3(static_cast<unsigned>(a + 1));
    for (std::int64_t k = 0; k <= top; ++k) {
      for (std::int64_t l = k + base; l <= top; l += base) {
        if ((lemma31_form(k) - lemma31_form(l)) % modulus != 0) {
          report.witness = std::to_string(k) + "," + std::to_string(l);
          return;
        }
      }
    }
    report.pass = true;
  });
}

// ---------------------------------------------------------------- twisted quotient

ShiftedPoly lemma32_cleared_rhs(std::int64_t a, const PsiSpec& psi) {
  require_positive(a, "a");
  if (psi.a() != a) throw InvalidArgument("psi was tabulated for a different a");
  const std::int64_t full = ipow3(a);
  const auto ks = one_mod_three_below(full);
  const IntPoly denominator = cleared_denominator(ks);

  std::vector<std::int64_t> exponents;
  for (std::int64_t k : ks) exponents.push_back(psi.at(k) - k * (k - 1) / 2);
  const std::int64_t min_exp = std::min<std::int64_t>(0, *std::min_element(exponents.begin(), exponents.end()));

  ShiftedPoly out{IntPoly{}, static_cast<std::size_t>(-min_exp)};
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const std::int64_t k = ks[i];
    const IntPoly others = div_q_int(div_q_int(denominator, k), k);
    const int sign = (k - 1) % 2 == 0 ? 1 : -1;
    add_linear_factor_term(out.poly, others, sign, psi_cap(psi, k), k,
                           static_cast<std::size_t>(exponents[i] - min_exp));
  }
  return out;
}

VerificationReport verify_lemma32(std::int64_t a, const PsiSpec& psi) {
  require_positive(a, "a");
  require_psi_hypotheses(psi);
  return timed("lemma32", {{"a", a}, {"psi", static_cast<std::int64_t>(psi.kind())}},
               [&](VerificationReport& report) {
                 const std::int64_t full = ipow3(a);
                 const ShiftedPoly lhs = theorem21_sum(a, 1, psi);
                 const IntPoly quotient =
                     exact_div(lhs.poly, Modulus::three_power_qint(a, 2).poly());
                 const ShiftedPoly rhs = lemma32_cleared_rhs(a, psi);
                 const IntPoly denominator = cleared_denominator(one_mod_three_below(full));
                 if (!coprime_to_cyclotomic(denominator, full)) {
                   throw InternalError("cleared denominator shares a factor with Phi_{3^a}");
                 }
                 // Both sides over the common power q^{lhs.shift + rhs.shift}.
                 const IntPoly diff = shift_mul(denominator * quotient, rhs.shift) -
                                      BigInt(2) * shift_mul(rhs.poly, lhs.shift);
                 set_divisibility_witness(report, divrem_monic(diff, cyclotomic(full)));
               });
}

// ---------------------------------------------------------------- integer side

VerificationReport verify_ssz12(std::int64_t a) {
  require_positive(a, "a");
  return timed("ssz12", {{"a", a}}, [&](VerificationReport& report) {
    const BigInt sum = central_binomial_sum(ipow3(a));
    const auto twice_a = static_cast<unsigned>(2 * a);
    const bool congruent = (sum - pow3(twice_a)) % pow3(twice_a + 1) == 0;
    const Valuation v = nu3(sum);
    report.pass = congruent && v == Valuation::finite(twice_a);
    report.witness = sum.get_str();
  });
}

namespace {

void judge_ssz_quotient(VerificationReport& report, const BigInt& sum, std::int64_t n,
                        const BigInt& central) {
  BigRat r(sum, BigInt(n) * n * central);
  r.canonicalize();
  report.witness = r.get_str();
  if (mpz_divisible_ui_p(r.get_den_mpz_t(), 3) != 0) return;
  report.pass = rat_mod3e(r, 1) == 2;
}

}  // namespace

VerificationReport verify_ssz_quotient(std::int64_t n) {
  require_positive(n, "n");
  return timed("ssz_quotient", {{"n", n}}, [&](VerificationReport& report) {
    BigInt sum = 0;
    for (std::int64_t k = 0; k < n; ++k) sum += binomial(2 * k, k);
    judge_ssz_quotient(report, sum, n, binomial(2 * n, n));
  });
}

VerificationReport verify_ssz_quotient_range(std::int64_t n_max) {
  require_positive(n_max, "n_max");
  return timed("ssz_quotient", {{"n_max", n_max}}, [&](VerificationReport& report) {
    BigInt sum = 0;
    BigInt previous = 1;  // C(2(n-1), n-1)
    for (std::int64_t n = 1; n <= n_max; ++n) {
      sum += previous;
      BigInt central = previous * (2 * (2 * n - 1));
      mpz_divexact_ui(central.get_mpz_t(), central.get_mpz_t(), static_cast<unsigned long>(n));
      VerificationReport single;
      judge_ssz_quotient(single, sum, n, central);
      if (!single.pass) {
        report.witness = std::to_string(n);
        return;
      }
      previous = std::move(central);
    }
    report.pass = true;
  });
}

VerificationReport verify_sun_tauraso(std::int64_t p, std::int64_t a, std::int64_t bound) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  require_positive(a, "a");
  std::int64_t power = 1;
  for (std::int64_t i = 0; i < a; ++i) {
    if (power > bound / p) throw InvalidArgument("p^a exceeds the configured bound");
    power *= p;
  }
  return timed("sun_tauraso", {{"a", a}, {"p", p}}, [&](VerificationReport& report) {
    const BigInt sum = central_binomial_sum(power);
    const BigInt modulus = BigInt(p) * p;
    report.pass = (sum - to_int(char3(power))) % modulus == 0;
    report.witness = sum.get_str();
  });
}

BigRat remark14_value(std::int64_t a) {
  require_positive(a, "a");
  BigRat value = 0;
  for (std::int64_t k : one_mod_three_below(ipow3(a))) {
    BigRat term(BigInt(k % 2 == 0 ? 1 : -1), BigInt(k * k));
    term.canonicalize();
    value += term;
  }
  return value;
}

VerificationReport verify_remark14(std::int64_t a, std::int64_t cross_check_max_a) {
  require_positive(a, "a");
  return timed("remark14", {{"a", a}}, [&](VerificationReport& report) {
    const BigRat value = remark14_value(a);
    if (a <= cross_check_max_a) {
      const ClearedR r = build_R_cleared(a);
      BigRat cleared = eval_rat(r.numerator, 1) / eval_rat(r.denominator, 1);
      cleared.canonicalize();
      if (cleared != value) throw InternalError("R(a,1) disagrees with the cleared form at q = 1");
    }
    report.witness = value.get_str();
    report.pass = rat_mod3e(value, 1) == 2;
  });
}

// ---------------------------------------------------------------- q-Lucas

VerificationReport q_lucas_check(std::int64_t d, std::int64_t x1, std::int64_t y1, std::int64_t x2,
                                 std::int64_t y2) {
  require_positive(d, "d");
  if (x1 < 0 || x2 < 0) throw InvalidArgument("x1, x2 must be nonnegative");
  if (y1 < 0 || y1 >= d || y2 < 0 || y2 >= d) throw InvalidArgument("y1, y2 must lie in [0, d)");
  return timed("qlucas", {{"d", d}, {"x1", x1}, {"x2", x2}, {"y1", y1}, {"y2", y2}},
               [&](VerificationReport& report) {
                 const IntPoly lhs = q_binom(x1 * d + y1, x2 * d + y2);
                 const IntPoly rhs = binomial(x1, x2) * q_binom(y1, y2);
                 set_divisibility_witness(report, divrem_monic(lhs - rhs, cyclotomic(d)));
               });
}

VerificationReport q_lucas_grid(std::int64_t d, std::int64_t x_max) {
  require_positive(d, "d");
  if (x_max < 0) throw InvalidArgument("x_max must be nonnegative");
  return timed("qlucas", {{"d", d}, {"x_max", x_max}}, [&](VerificationReport& report) {
    for (std::int64_t x1 = 0; x1 <= x_max; ++x1) {
      for (std::int64_t x2 = 0; x2 <= x_max; ++x2) {
        for (std::int64_t y1 = 0; y1 < d; ++y1) {
          for (std::int64_t y2 = 0; y2 < d; ++y2) {
            if (!q_lucas_check(d, x1, y1, x2, y2).pass) {
              report.witness = std::to_string(x1) + "," + std::to_string(y1) + "," +
                               std::to_string(x2) + "," + std::to_string(y2);
              return;
            }
          }
        }
      }
    }
    report.pass = true;
  });
}

}  // namespace qcong
