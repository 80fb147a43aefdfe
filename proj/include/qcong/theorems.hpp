#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qcong/modring.hpp"
#include "qcong/polyring.hpp"
#include "qcong/report.hpp"

namespace qcong {

/// Where a tabulated psi came from. Recorded as the "psi" report parameter.
enum class PsiKind : int { kZero = 0, kPsiM = 1, kIdentity = 2, kCustom = 3 };

/// psi: Z -> Z tabulated on the window [-3^a m, 2 * 3^a m]. Tables rather
/// than closures, so a hypothesis violation can be reported and replayed.
class PsiSpec {
 public:
  /// values[i] is psi(i - 3^a m); size must be 3 * 3^a m + 1.
  PsiSpec(std::int64_t a, std::int64_t m, std::vector<std::int64_t> values,
          PsiKind kind = PsiKind::kCustom);

  static PsiSpec tabulate(std::int64_t a, std::int64_t m,
                          const std::function<std::int64_t(std::int64_t)>& fn,
                          PsiKind kind = PsiKind::kCustom);
  static PsiSpec zero(std::int64_t a, std::int64_t m);
  /// The psi_m of the central-sum identity (see psi_m below).
  static PsiSpec psi_m(std::int64_t a, std::int64_t m);
  /// psi(k) = k; violates the symmetry hypothesis. Negative control.
  static PsiSpec identity(std::int64_t a, std::int64_t m);

  std::int64_t a() const noexcept { return a_; }
  std::int64_t m() const noexcept { return m_; }
  PsiKind kind() const noexcept { return kind_; }
  std::int64_t lo() const noexcept { return -span_; }
  std::int64_t hi() const noexcept { return 2 * span_; }
  bool contains(std::int64_t k) const noexcept { return k >= lo() && k <= hi(); }
  /// Throws InvalidArgument outside the window.
  std::int64_t at(std::int64_t k) const;

 private:
  std::int64_t a_;
  std::int64_t m_;
  std::int64_t span_;  // 3^a m
  std::vector<std::int64_t> values_;
  PsiKind kind_;
};

/// 3^e for small e, as a machine integer. Throws on overflow.
std::int64_t ipow3(std::int64_t e);

/// Checks psi(k) = psi(-k) mod 3^a and psi(k + 3^j) = psi(k) mod 3^j
/// (j = 1..a) everywhere both sides lie in the window.
VerificationReport psi_check(const PsiSpec& psi);

/// psi_m(k) = (2x^2 - x (x/3) - (x/3)^2) / 3 with x = 3^a m - k. Equals
/// the textbook (2x^2 - x (x/3) - 1) / 3 whenever 3 does not divide x; the
/// (x/3)^2 keeps it integral on the remaining class, which carries weight
/// (k/3) = 0 in every sum.
std::int64_t psi_m(std::int64_t a, std::int64_t m, std::int64_t k);

/// (psi(3^a - k) - psi(k)) / 3^a + (3^a - 1)/2 - k, for 1 <= k < 3^a.
std::int64_t psi_cap(const PsiSpec& psi, std::int64_t k);

/// value = poly / q^shift
struct ShiftedPoly {
  IntPoly poly;
  std::size_t shift = 0;
};

struct Eq13Options {
  bool truncate = false;   // drop the last term (negative control)
  int modulus_power = 2;   // 3 turns it into the inflated-modulus control
};

/// [3^a]_q^2 divides sum_{k < 3^a m} q^k [2k, k]_q.
VerificationReport verify_eq13(std::int64_t a, std::int64_t m, Eq13Options options = {});

/// Cleared form of R(a, q): denominator D = prod [k]_q^2 over k = 1 mod 3,
/// k < 3^a, and numerator D * R(a, q) in Z[q].
struct ClearedR {
  IntPoly denominator;
  IntPoly numerator;
};
ClearedR build_R_cleared(std::int64_t a);

/// D * T - 2 * D * R with T the central sum over [3^a]_q^2. perturb_r
/// replaces R by R + 1.
IntPoly eq14_cleared_difference(std::int64_t a, bool perturb_r = false);

/// The central sum divided by [3^a]_q^2 is 2 R(a, q) mod Phi_{3^a}.
VerificationReport verify_eq14(std::int64_t a, bool perturb_r = false);

/// q^shift * sum_{k=1}^{3^a m - 1} q^{psi(k)} (k/3) [2 * 3^a m, k]_q,
/// shift chosen so every exponent is nonnegative.
ShiftedPoly theorem21_sum(std::int64_t a, std::int64_t m, const PsiSpec& psi);

/// [3^a]_q^2 divides theorem21_sum. Throws PsiHypothesisViolated when
/// psi_check fails.
VerificationReport verify_eq21(std::int64_t a, std::int64_t m, const PsiSpec& psi,
                               int modulus_power = 2);

/// -sum_{k=1}^{3^a m - 1} q^{psi_m(k)} (k/3) [2 * 3^a m, k]_q
IntPoly identity33_rhs(std::int64_t a, std::int64_t m);

/// Exact polynomial equality of the central sum and identity33_rhs.
/// drop_term removes that term from the central sum (negative control).
VerificationReport verify_identity33(std::int64_t a, std::int64_t m,
                                     std::optional<std::int64_t> drop_term = std::nullopt);

/// 2k^2 - k (k/3) = 2l^2 - l (l/3) mod 3^{a+1} for k = l mod 3^a.
VerificationReport verify_lemma31(std::int64_t a, std::int64_t k, std::int64_t l);
/// Every pair 0 <= k < l <= 3^{a+1} with k = l mod 3^a.
VerificationReport verify_lemma31_sweep(std::int64_t a);

/// D times the right-hand sum of the twisted quotient congruence, over q^shift.
ShiftedPoly lemma32_cleared_rhs(std::int64_t a, const PsiSpec& psi);

/// L / (2 [3^a]_q^2) = sum over k = 1 mod 3 ... mod Phi_{3^a}, checked in
/// the cleared form Phi_{3^a} | D * (L / [3^a]_q^2) - 2 * D * S.
VerificationReport verify_lemma32(std::int64_t a, const PsiSpec& psi);

/// sum_{k < 3^a} C(2k, k) = 3^{2a} mod 3^{2a+1}, and its 3-adic valuation is exactly 2a.
VerificationReport verify_ssz12(std::int64_t a);

/// (sum_{k<n} C(2k,k)) / (n^2 C(2n,n)) = -1 mod 3.
VerificationReport verify_ssz_quotient(std::int64_t n);
/// Same for every n in 1..n_max, with incremental binomials.
VerificationReport verify_ssz_quotient_range(std::int64_t n_max);

/// sum_{k < p^a} C(2k, k) = (p^a / 3) mod p^2.
VerificationReport verify_sun_tauraso(std::int64_t p, std::int64_t a,
                                      std::int64_t bound = 1'000'000);

/// R(a, 1) = sum_{k = 1 mod 3, k < 3^a} (-1)^k / k^2.
BigRat remark14_value(std::int64_t a);
/// R(a, 1) = -1 mod 3. For a <= cross_check_max_a the value is also
/// compared with the cleared numerator/denominator evaluated at q = 1.
VerificationReport verify_remark14(std::int64_t a, std::int64_t cross_check_max_a = 3);

/// [x1 d + y1, x2 d + y2]_q = C(x1, x2) [y1, y2]_q mod Phi_d.
VerificationReport q_lucas_check(std::int64_t d, std::int64_t x1, std::int64_t y1,
                                 std::int64_t x2, std::int64_t y2);
/// All x1, x2 <= x_max and 0 <= y1, y2 < d for one d.
VerificationReport q_lucas_grid(std::int64_t d, std::int64_t x_max);

/// Integer binomial C(n, k) (0 when k > n).
BigInt binomial(std::int64_t n, std::int64_t k);

bool is_prime(std::int64_t n);

}  // namespace qcong
