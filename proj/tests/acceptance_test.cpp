// Acceptance suite: runs every release criterion at its stated bound and
// prints one pass/fail line per criterion. All arithmetic is exact, so
// every comparison is exact equality; the stated wall-clock ceilings are
// asserted as well.

#include "icb/idot.hpp"
#include "icb/schur.hpp"
#include "icb/ujrewrite.hpp"
#include "support/testutil.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;

void criterion(const std::string& id, const std::string& what, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto start = Clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (elapsed >= budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("exceeded ") +
                  std::to_string(budget_seconds) + " s budget";
    }
    if (!ok) ++g_failures;
    std::printf("[%s] %s: %s (%.2f s%s)\n", ok ? "PASS" : "FAIL", id.c_str(), what.c_str(),
                elapsed, detail.empty() ? "" : ("; " + detail).c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    using namespace icb;

    criterion("C1", "divided-power commutation certified by rewriting, n = 0..12", 60.0,
              [](std::string& detail) {
                  for (std::int64_t n = 0; n <= 12; ++n) {
                      const auto res = verify_lemma_a(n);
                      if (res.verdict != LemmaVerdict::certified) {
                          detail = "n=" + std::to_string(n) +
                                   " normal form: " + res.normal_form.to_string();
                          return false;
                      }
                  }
                  return true;
              });

    criterion("C2", "quantum-integer step identity, 0 <= n <= d <= 40", 5.0,
              [](std::string& detail) {
                  for (std::int64_t d = 0; d <= 40; ++d)
                      for (std::int64_t n = 0; n <= d; ++n)
                          if (!qstep_identity(d, n)) {
                              detail = "d=" + std::to_string(d) + " n=" + std::to_string(n);
                              return false;
                          }
                  return true;
              });

    criterion("C3", "minimal polynomials split with distinct factors; bases have full size, d <= 50",
              10.0, [](std::string& detail) {
                  for (std::int64_t d = 0; d <= 50; ++d) {
                      std::vector<LaurentPoly> shifts;
                      for (std::int64_t i = 0; i <= d; ++i)
                          shifts.push_back(qint(d - 1 - 2 * i));
                      for (std::size_t a = 0; a < shifts.size(); ++a)
                          for (std::size_t b = a + 1; b < shifts.size(); ++b)
                              if (shifts[a] == shifts[b]) {
                                  detail = "repeated factor at d=" + std::to_string(d);
                                  return false;
                              }
                      const TPoly m = minpoly(d);
                      if (m.degree() != d + 1 || m.leading() != RatFunc(1)) {
                          detail = "degree of m_d at d=" + std::to_string(d);
                          return false;
                      }
                      // Distinct monic linear factors are pairwise coprime, so
                      // with the induction m_{d-2} | m_d it is enough to divide
                      // by the two factors new at this level (all at d <= 1).
                      std::vector<LaurentPoly> fresh;
                      if (d <= 1) {
                          fresh = shifts;
                      } else {
                          fresh = {shifts.front(), shifts.back()};
                          if (!divmod(m, minpoly(d - 2)).remainder.is_zero()) {
                              detail = "m_{d-2} does not divide m_d at d=" + std::to_string(d);
                              return false;
                          }
                      }
                      for (const auto& c : fresh) {
                          if (!divmod(m, TPoly::t() + TPoly(RatFunc(c))).remainder.is_zero()) {
                              detail = "factor fails to divide at d=" + std::to_string(d);
                              return false;
                          }
                      }
                      const auto lst = cb_list(d);
                      if (static_cast<std::int64_t>(lst.size()) != d + 1) {
                          detail = "basis size at d=" + std::to_string(d);
                          return false;
                      }
                      std::vector<bool> seen(static_cast<std::size_t>(d + 1), false);
                      for (const auto& [idx, elt] : lst) {
                          const std::int64_t deg = elt.rep().degree();
                          if (deg < 0 || deg > d || seen[static_cast<std::size_t>(deg)] ||
                              elt.rep().leading().is_zero()) {
                              detail = "degrees not 0..d at d=" + std::to_string(d);
                              return false;
                          }
                          seen[static_cast<std::size_t>(deg)] = true;
                      }
                  }
                  return true;
              });

    criterion("C4", "degree-one basis elements equal t; bar fixes all basis polynomials, d <= 50",
              10.0, [](std::string& detail) {
                  if (p0(1) != TPoly::t() || p1(1) != TPoly::t()) {
                      detail = "degree-one elements differ from t";
                      return false;
                  }
                  for (std::int64_t d = 0; d <= 50; ++d)
                      if (bar_t(p0(d)) != p0(d)) {
                          detail = "P_{0,d} not bar-fixed at d=" + std::to_string(d);
                          return false;
                      }
                  for (std::int64_t m = 1; m <= 50; ++m)
                      if (bar_t(p1(m)) != p1(m)) {
                          detail = "P_{1,m} not bar-fixed at m=" + std::to_string(m);
                          return false;
                      }
                  return true;
              });

    criterion("C5", "product relations t*P0 and t*P1 in closed form, d <= 100", 30.0,
              [](std::string& detail) {
                  const TPoly t = TPoly::t();
                  for (std::int64_t d = 0; d <= 100; ++d) {
                      if (t * p0(d) != p1(d + 1).scaled(RatFunc(qint(d + 1)))) {
                          detail = "line 1 at d=" + std::to_string(d);
                          return false;
                      }
                      if (t * p1(d + 1) != p0(d + 2).scaled(RatFunc(qint(d + 2))) +
                                               p0(d).scaled(RatFunc(qint(d + 1)))) {
                          detail = "line 2 at d=" + std::to_string(d);
                          return false;
                      }
                  }
                  return true;
              });

    criterion("C6", "transfer relations P1 -> P0 and P0(d+2) -> 0, d <= 60", 30.0,
              [](std::string& detail) {
                  for (std::int64_t d = 0; d <= 60; ++d) {
                      if (!divmod(p1(d + 1) - p0(d), minpoly(d)).remainder.is_zero()) {
                          detail = "P1 != P0 mod m_d at d=" + std::to_string(d);
                          return false;
                      }
                      if (!project(p0(d + 2), d).is_zero()) {
                          detail = "P0(d+2) nonzero mod m_d at d=" + std::to_string(d);
                          return false;
                      }
                  }
                  return true;
              });

    criterion("C7", "basis elements project onto basis elements or zero, deg <= d+10, d <= 30",
              60.0, [](std::string& detail) {
                  for (std::int64_t d = 0; d <= 30; ++d)
                      for (int eps = 0; eps <= 1; ++eps)
                          for (std::int64_t m = 0; m <= d + 10; ++m) {
                              const auto res = cb_image_check(CBIndex{eps, m}, d);
                              if (res.verdict == CBImage::violation) {
                                  detail = "violation at (" + std::to_string(eps) + "," +
                                           std::to_string(m) + ") level " + std::to_string(d);
                                  return false;
                              }
                          }
                  return true;
              });

    criterion("C8", "positivity of all structure constants, degrees <= 30", 600.0,
              [](std::string& detail) {
                  for (int s = 0; s <= 1; ++s)
                      for (std::int64_t di = 0; di <= 30; ++di)
                          for (std::int64_t dj = di; dj <= 30; ++dj) {
                              const auto sc = structure_constants(basis_index(s, di),
                                                                  basis_index(s, dj));
                              if (!is_positive(sc)) {
                                  detail = "negative coefficient in summand " +
                                           std::to_string(s) + " at (" + std::to_string(di) +
                                           "," + std::to_string(dj) + ")";
                                  return false;
                              }
                          }
                  return true;
              });

    criterion("C9", "expansion agrees with the independent elimination oracle on t^0..t^25",
              60.0, [](std::string& detail) {
                  for (int s = 0; s <= 1; ++s) {
                      TPoly power(1);
                      for (int n = 0; n <= 25; ++n) {
                          const UidotElement x(s, power);
                          if (expand_cb(x) != testutil::expand_cb_gauss(x)) {
                              detail = "mismatch at t^" + std::to_string(n) + " summand " +
                                       std::to_string(s);
                              return false;
                          }
                          power = power * TPoly::t();
                      }
                  }
                  return true;
              });

    if (g_failures == 0) {
        std::printf("acceptance: all 9 criteria passed\n");
    } else {
        std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    }
    return g_failures == 0 ? 0 : 1;
}
