#pragma once

#include <string>
#include <vector>

#include "casson/emit.hpp"
#include "casson/oracle.hpp"

namespace casson {

/// Per-row invariant checks run by the sweep. Each failure is one line
/// naming the manifold and what disagreed; failures are findings, never
/// silently absorbed.
struct SweepOutcome {
  std::vector<SweepRow> rows;
  std::vector<std::string> failures;
  bool all_passed() const { return failures.empty(); }
};

namespace detail {

inline void check_row(const SmallSeifertSpec& spec, const InvariantReport& rep,
                      const VerifyReport* verify,
                      std::vector<std::string>& failures) {
  const std::string who = render(spec);
  auto fail = [&](const std::string& what) {
    failures.push_back(who + ": " + what);
  };

  if (rep.lambda_psl < QuarterRational())
    fail("negative lambda_psl " + rep.lambda_psl.str());
  if (*rep.lambda_sl < QuarterRational())
    fail("negative lambda_sl " + rep.lambda_sl->str());
  if (!rep.lambda_sl->is_integer())
    fail("lambda_sl not an integer: " + rep.lambda_sl->str());

  if (rep.census->lambda_psl_from_census != rep.lambda_psl)
    fail("composition identity violated: formula " + rep.lambda_psl.str() +
         " vs census " + rep.census->lambda_psl_from_census.str());

  const bool coprime = gcd2(spec.p, spec.q) == 1 && gcd2(spec.p, spec.r) == 1 &&
                       gcd2(spec.q, spec.r) == 1;
  if (coprime) {
    QuarterRational shs =
        lambda_psl(SeifertHsSpec{{spec.p, spec.q, spec.r}});
    if (rep.lambda_psl != shs || *rep.lambda_sl != shs)
      fail("coprime reduction violated: psl " + rep.lambda_psl.str() + ", sl " +
           rep.lambda_sl->str() + ", homology-sphere value " + shs.str());
  }

  if (checked_abs(spec.euler_term()) % 2 == 1 &&
      rep.lambda_psl != *rep.lambda_sl)
    fail("Z2-homology-sphere agreement violated: psl " + rep.lambda_psl.str() +
         " vs sl " + rep.lambda_sl->str());

  if (h1(spec) != smith_normal_form(abelianized_presentation(spec)))
    fail("h1 formula disagrees with Smith normal form");

  if (verify && !verify->sl_agrees)
    fail("oracle mismatch: enumerated " +
         std::to_string(verify->oracle.total()) + " (" +
         std::to_string(verify->oracle.count_plus) + "+" +
         std::to_string(verify->oracle.count_minus) + "), closed form " +
         verify->lambda_sl_formula.str() + " [" + verify->parity + "]");
  if (verify && !verify->triangle_agrees)
    fail("triangle reducible count mismatch: " +
         std::to_string(verify->triangle_reducible) + " vs closed form " +
         std::to_string(verify->triangle_closed_form));
}

}  // namespace detail

/// Deterministic sweep over all 2 <= p <= q <= r <= max with the first
/// `samples` valid (a,b,c) triples each, in lexicographic order. Runs the
/// full per-row check battery including oracle agreement when p*q*r is
/// within the enumeration cap (rows beyond it are marked "skipped").
inline SweepOutcome run_sweep(int64 max, int64 samples,
                              int64 cap = kDefaultEnumerationCap,
                              bool quiet = false) {
  SweepOutcome out;
  for (int64 p = 2; p <= max; ++p)
    for (int64 q = p; q <= max; ++q)
      for (int64 r = q; r <= max; ++r)
        for (const auto& [a, b, c] : abc_samples(p, q, r, samples)) {
          SmallSeifertSpec spec = validate(SmallSeifertSpec{p, q, r, a, b, c});
          InvariantReport rep =
              invariant_report(ManifoldExpr(ManifoldExpr::Leaf(spec)));
          std::string oracle_ok = "skipped";
          std::optional<VerifyReport> verify;
          if (checked_mul(p, checked_mul(q, r)) <= cap) {
            verify = verify_census(spec, cap);
            oracle_ok = verify->sl_agrees ? "yes" : "no";
          }
          detail::check_row(spec, rep, verify ? &*verify : nullptr,
                            out.failures);
          out.rows.push_back(row_from_report(rep, oracle_ok, quiet));
        }
  return out;
}

}  // namespace casson
