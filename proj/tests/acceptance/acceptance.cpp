// Acceptance gate: one line per criterion, nonzero exit if any fails.
// All checks are exact (zero remainder / exact residue).

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qcong/modring.hpp"
#include "qcong/qcore.hpp"
#include "qcong/suite.hpp"
#include "qcong/theorems.hpp"

namespace {

using namespace qcong;
using Clock = std::chrono::steady_clock;

/// Collects the first failure of a criterion.
class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && detail_.empty()) detail_ = what;
    ok_ = ok_ && ok;
  }
  void require(const VerificationReport& r) {
    require(r.pass, r.statement + " " + format_params(r.params) + " witness=" +
                        r.witness.value_or("-"));
  }
  bool ok() const { return ok_; }
  const std::string& detail() const { return detail_; }

 private:
  bool ok_ = true;
  std::string detail_;
};

struct Criterion {
  std::string name;
  std::function<void(Check&)> body;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool factored_agrees(const IntPoly& p, const Modulus& m) {
  bool per_factor = true;
  for (const auto& f : *m.factors()) per_factor = per_factor && divrem_monic(p, f).rem.is_zero();
  return per_factor == divrem_monic(p, m.poly()).rem.is_zero();
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> out;

  out.push_back({"1  central sum divisible by [3^a]^2 on (a,m) <= (3,3) and (4,1)", [](Check& c) {
    const auto start = Clock::now();
    for (std::int64_t a = 1; a <= 3; ++a) {
      for (std::int64_t m = 1; m <= 3; ++m) {
        const auto r = verify_eq13(a, m);
        c.require(r);
        if (a == 1 && m == 1) c.require(r.witness == "0:1,1:-1,2:1", "(1,1) quotient is not q^2-q+1");
      }
    }
    c.require(seconds_since(start) < 120.0, "(a,m) <= (3,3) took over 2 minutes");
    const auto start4 = Clock::now();
    c.require(verify_eq13(4, 1));
    c.require(seconds_since(start4) < 300.0, "(4,1) took over 5 minutes");
  }});

  out.push_back({"2  R(a) congruence mod Phi_{3^a} for a <= 3", [](Check& c) {
    for (std::int64_t a = 1; a <= 3; ++a) c.require(verify_eq14(a));
    c.require(eq14_cleared_difference(1) == cyclotomic(3), "a=1 cleared difference != Phi_3");
  }});

  out.push_back({"3  character-twisted sum for psi in {0, psi_m}", [](Check& c) {
    for (std::int64_t a = 1; a <= 2; ++a) {
      for (std::int64_t m = 1; m <= 3; ++m) {
        c.require(psi_check(PsiSpec::psi_m(a, m)));
        c.require(verify_eq21(a, m, PsiSpec::zero(a, m)));
        c.require(verify_eq21(a, m, PsiSpec::psi_m(a, m)));
      }
    }
  }});

  out.push_back({"4  exact sum identity on {1,2}x{1,2}", [](Check& c) {
    for (std::int64_t a = 1; a <= 2; ++a) {
      for (std::int64_t m = 1; m <= 2; ++m) c.require(verify_identity33(a, m));
    }
    const IntPoly expected{1, 1, 2, 1, 2, 1, 1};
    c.require(central_qbinom_sum(3) == expected, "(1,1) left side");
    c.require(identity33_rhs(1, 1) == expected, "(1,1) right side");
  }});

  out.push_back({"5  q-binomial divisibility sweep for a <= 3", [](Check& c) {
    for (std::int64_t a = 1; a <= 3; ++a) c.require(verify_lemma31_sweep(a));
  }});

  out.push_back({"6  twisted quotient congruence mod Phi_{3^a}", [](Check& c) {
    for (std::int64_t a = 1; a <= 2; ++a) {
      c.require(verify_lemma32(a, PsiSpec::zero(a, 1)));
      c.require(verify_lemma32(a, PsiSpec::psi_m(a, 1)));
    }
  }});

  out.push_back({"7  integer sum mod 9^a with nu3 = 2a for a <= 8", [](Check& c) {
    const auto start = Clock::now();
    for (std::int64_t a = 1; a <= 8; ++a) c.require(verify_ssz12(a));
    c.require(verify_ssz12(1).witness == "9", "a=1 sum != 9");
    c.require(verify_ssz12(2).witness == "17577", "a=2 sum != 17577");
    c.require(BigInt(17577) % 243 == 81, "17577 mod 243 != 81");
    c.require(nu3(17577) == Valuation::finite(4), "nu3(17577) != 4");
    c.require(seconds_since(start) < 60.0, "sweep took over a minute");
  }});

  out.push_back({"8  normalized quotient = -1 mod 3 for n <= 2000", [](Check& c) {
    const auto start = Clock::now();
    c.require(verify_ssz_quotient_range(2000));
    c.require(seconds_since(start) < 60.0, "sweep took over a minute");
    c.require(verify_ssz_quotient(1).witness == "1/2", "n=1");
    c.require(verify_ssz_quotient(2).witness == "1/8", "n=2");
    c.require(verify_ssz_quotient(3).witness == "1/20", "n=3");
  }});

  out.push_back({"9  prime-power central sum = (p^a/3) mod p^2", [](Check& c) {
    for (std::int64_t p : {2, 5, 7, 11, 13}) {
      for (std::int64_t a : {1, 2}) c.require(verify_sun_tauraso(p, a));
    }
    const auto r = verify_sun_tauraso(5, 1);
    c.require(r.witness == "99" && BigInt(99) % 25 == 24, "p=5 spot value");
  }});

  out.push_back({"10 rational value at q=1 is -1 mod 3 for a <= 6", [](Check& c) {
    for (std::int64_t a = 1; a <= 6; ++a) c.require(verify_remark14(a));
    c.require(remark14_value(2) == BigRat(-751, 784), "a=2 value");
    c.require(rat_mod3e(remark14_value(2), 1) == 2, "a=2 residue");
  }});

  out.push_back({"11 q-Lucas exhaustive d <= 6, x1,x2 <= 4", [](Check& c) {
    for (std::int64_t d = 1; d <= 6; ++d) c.require(q_lucas_grid(d, 4));
  }});

  out.push_back({"12 negative controls fail", [](Check& c) {
    auto must_fail = [&c](const VerificationReport& r) {
      c.require(!r.pass && r.witness.has_value(),
                "control passed: " + r.statement + " " + format_params(r.params));
    };
    for (std::int64_t a = 1; a <= 3; ++a) {
      must_fail(verify_eq13(a, 1, {.truncate = true}));
      must_fail(verify_eq14(a, true));
      for (std::int64_t m = 1; m <= 3; ++m) must_fail(verify_eq13(a, m, {.modulus_power = 3}));
    }
    must_fail(verify_eq13(4, 1, {.modulus_power = 3}));
    for (std::int64_t a = 1; a <= 2; ++a) {
      for (std::int64_t m = 1; m <= 3; ++m) {
        must_fail(verify_eq21(a, m, PsiSpec::zero(a, m), 3));
        must_fail(verify_eq21(a, m, PsiSpec::psi_m(a, m), 3));
      }
      for (std::int64_t m = 1; m <= 2; ++m) must_fail(verify_identity33(a, m, ipow3(a) * m - 1));
    }
    must_fail(psi_check(PsiSpec::identity(1, 1)));
    must_fail(run_guarded({"eq21", {}, false, [] { return verify_eq21(1, 1, PsiSpec::identity(1, 1)); }}));

    // The runner must treat a control that passes as an overall failure.
    std::vector<SuiteTask> tasks;
    tasks.push_back({"eq14", {{"a", 1}}, false, [] { return verify_eq14(1); }});
    c.require(!run_tasks(std::move(tasks), 1).ok(), "passing control not flagged");
  }});

  out.push_back({"13 oracle equivalences", [](Check& c) {
    c.require(check_qbinom_oracle(24));
    c.require(check_central_sum_oracle(27));
    for (std::int64_t a = 1; a <= 3; ++a) {
      const Modulus sq = Modulus::three_power_qint(a, 2);
      for (std::int64_t m = 1; m <= 3; ++m) {
        c.require(factored_agrees(central_qbinom_sum(ipow3(a) * m), sq), "eq13 CRT mismatch");
      }
    }
    c.require(factored_agrees(central_qbinom_sum(81), Modulus::three_power_qint(4, 2)), "eq13 (4,1) CRT");
    for (std::int64_t a = 1; a <= 2; ++a) {
      const Modulus sq = Modulus::three_power_qint(a, 2);
      for (std::int64_t m = 1; m <= 3; ++m) {
        c.require(factored_agrees(theorem21_sum(a, m, PsiSpec::zero(a, m)).poly, sq), "eq21 CRT");
        c.require(factored_agrees(theorem21_sum(a, m, PsiSpec::psi_m(a, m)).poly, sq), "eq21 CRT");
      }
    }
  }});

  return out;
}

}  // namespace

int main() {
  int failures = 0;
  for (const auto& criterion : criteria()) {
    Check check;
    const auto start = Clock::now();
    try {
      criterion.body(check);
    } catch (const std::exception& e) {
      check.require(false, std::string("exception: ") + e.what());
    }
    std::printf("[%s] %-58s %8.2fs%s%s\n", check.ok() ? "PASS" : "FAIL", criterion.name.c_str(),
                seconds_since(start), check.ok() ? "" : "  ", check.detail().c_str());
    if (!check.ok()) ++failures;
  }
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
