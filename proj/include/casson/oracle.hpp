#pragma once

#include <string>
#include <vector>

#include "casson/formulas.hpp"

namespace casson {

class enumeration_cap_error : public std::runtime_error {
 public:
  enumeration_cap_error(int64 size, int64 cap)
      : std::runtime_error("enumeration size " + std::to_string(size) +
                           " exceeds cap " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}
  int64 size() const { return size_; }
  int64 cap() const { return cap_; }

 private:
  int64 size_, cap_;
};

inline constexpr int64 kDefaultEnumerationCap = 1'000'000;

/// Eigenvalue class of a generator image: zeta = exp(i*pi*exponent/modulus),
/// a 2*modulus-th root of unity, canonical up to inversion with
/// 0 < exponent < modulus. Excludes zeta = +-1 (a generator sent to +-I is
/// central in the image, so the representation is reducible).
///
/// Even exponents satisfy zeta^modulus = +1, odd exponents zeta^modulus = -1.
struct EigenClass {
  int64 modulus;
  int64 exponent;
  bool operator==(const EigenClass&) const = default;
};

/// Required signs of rho(x)^p, rho(y)^q, rho(xy)^r in one sector rho(h) =
/// central_sign * I. A central sign of -1 forces sign_* = (-1)^a etc.
struct SectorSpec {
  int central_sign;
  int sign_x, sign_y, sign_xy;

  static SectorSpec plus() { return {+1, +1, +1, +1}; }
  static SectorSpec minus_for(const SmallSeifertSpec& s) {
    auto sgn = [](int64 k) { return k % 2 != 0 ? -1 : +1; };
    return {-1, sgn(s.a), sgn(s.b), sgn(s.c)};
  }
};

/// Eigenvalue classes for a generator of order n whose n-th power must be
/// sign * I: all admissible 2n-th roots of unity up to inversion, excluding
/// +-1. For sign = +1 these are e^{2*pi*i*j/n}, j = 1 .. ceil(n/2)-1; for
/// sign = -1 the half-odd exponents.
inline std::vector<EigenClass> sector_eigen_classes(int64 n, int sign) {
  if (n < 2) throw std::domain_error("sector_eigen_classes: order must be >= 2");
  std::vector<EigenClass> out;
  for (int64 t = (sign > 0 ? 2 : 1); t < n; t += 2)
    out.push_back(EigenClass{n, t});
  return out;
}

/// Whether the character with these generator eigenvalue classes is
/// reducible: the xy eigenvalue equals a product lambda^{+-1} mu^{+-1} of
/// diagonal eigenvalues, tested as exact congruences on root-of-unity
/// exponents rescaled to the common modulus L = 2*lcm of the moduli.
/// (Equivalently the trace triple lies on the reducible locus
/// X^2+Y^2+Z^2-XYZ-4 = 0, which factors as
/// (Z - lambda mu - 1/(lambda mu))(Z - lambda/mu - mu/lambda).)
inline bool is_reducible_triple(const EigenClass& x, const EigenClass& y,
                                const EigenClass& z) {
  const int64 L =
      2 * checked_lcm(checked_lcm(x.modulus, y.modulus), z.modulus);
  const int64 tx = checked_mul(x.exponent, L / (2 * x.modulus));
  const int64 ty = checked_mul(y.exponent, L / (2 * y.modulus));
  const int64 tz = checked_mul(z.exponent, L / (2 * z.modulus));
  auto hits = [&](int64 v) { return ((tz - v) % L + L) % L == 0 || ((tz + v) % L + L) % L == 0; };
  return hits(checked_add(tx, ty)) || hits(checked_sub(tx, ty));
}

/// Irreducible SL2(C) character counts by sector chi(h) = +2 / -2.
/// Distinct (sector, class triple) pairs are distinct characters: chi(h)
/// separates the sectors even when the (x, y, xy) trace triples coincide.
struct SectorCounts {
  int64 count_plus = 0;
  int64 count_minus = 0;
  int64 total() const { return checked_add(count_plus, count_minus); }
};

namespace detail {

inline int64 count_sector(const SmallSeifertSpec& s, const SectorSpec& sector) {
  const int64 L =
      2 * checked_lcm(checked_lcm(s.p, s.q), s.r);
  auto exps = [&](int64 n, int sign) {
    std::vector<int64> ts;
    for (const auto& c : sector_eigen_classes(n, sign))
      ts.push_back(checked_mul(c.exponent, L / (2 * n)));
    return ts;
  };
  const auto xs = exps(s.p, sector.sign_x);
  const auto ys = exps(s.q, sector.sign_y);
  const auto zs = exps(s.r, sector.sign_xy);
  int64 count = 0;
  for (int64 tx : xs)
    for (int64 ty : ys) {
      const int64 sum = (tx + ty) % L;
      const int64 diff = ((tx - ty) % L + L) % L;
      for (int64 tz : zs) {
        bool red = (tz - sum) % L == 0 || (tz + sum) % L == 0 ||
                   (tz - diff) % L == 0 || (tz + diff) % L == 0;
        if (!red) ++count;
      }
    }
  return count;
}

}  // namespace detail

/// Brute-force count of irreducible SL2(C) characters by exact enumeration
/// of eigenvalue-class triples in both central sectors. Independent of the
/// closed form it cross-checks.
inline SectorCounts count_sl_irreducible(const SmallSeifertSpec& spec,
                                         int64 cap = kDefaultEnumerationCap) {
  const int64 size = checked_mul(spec.p, checked_mul(spec.q, spec.r));
  if (size > cap) throw enumeration_cap_error(size, cap);
  SectorCounts counts;
  counts.count_plus = detail::count_sector(spec, SectorSpec::plus());
  counts.count_minus = detail::count_sector(spec, SectorSpec::minus_for(spec));
  return counts;
}

/// Number of reducible SL2(C) characters of the group
/// <x, y | x^p = y^q = (xy)^r = 1>: diagonal characters up to inversion,
/// (|A| + |A[2]|)/2 for A its abelianization (computed by SNF).
inline int64 count_triangle_reducible(int64 p, int64 q, int64 r) {
  if (p < 2 || q < 2 || r < 2)
    throw std::domain_error("count_triangle_reducible: orders must be >= 2");
  AbelianGroup a = smith_normal_form(IntMatrix{{p, 0}, {0, q}, {r, r}});
  int64 order = a.order();
  int64 two_tors = 1;
  for (int64 f : a.invariant_factors())
    two_tors = checked_mul(two_tors, gcd2(2, f));
  return checked_add(order, two_tors) / 2;
}

/// Parity class of a spec, per the case split of the SL2(C) closed form:
/// "z2hs" when |aqr+bpr+cpq| is odd, else case1/case2/case3 by the number
/// of even cone orders (0 / 1-2 boundary cases / 3).
inline std::string parity_class(const SmallSeifertSpec& s) {
  if (checked_abs(s.euler_term()) % 2 == 1) return "z2hs";
  int evens = (s.p % 2 == 0) + (s.q % 2 == 0) + (s.r % 2 == 0);
  if (evens == 0) return "case1";
  if (evens == 3) return "case3";
  return "case2";
}

/// Oracle-vs-closed-form verification for one spec. Discrepancies are data,
/// not exceptions.
struct VerifyReport {
  SmallSeifertSpec spec;
  std::string parity;  // z2hs / case1 / case2 / case3
  std::vector<std::string> caveats;

  SectorCounts oracle;
  QuarterRational lambda_sl_formula;
  bool sl_agrees = false;

  int64 triangle_reducible = 0;      // (|A|+|A[2]|)/2 via SNF
  bool triangle_form_applicable = false;  // both invariant factors of A even
  int64 triangle_closed_form = 0;    // 2 + gcd(pq,pr,qr)/2 when applicable
  bool triangle_agrees = false;

  AbelianGroup h1_formula;
  AbelianGroup h1_snf;
  bool h1_agrees = false;

  QuarterRational lambda_psl_formula;
  QuarterRational lambda_psl_census;
  bool composition_agrees = false;

  bool passed() const {
    return sl_agrees && triangle_agrees && h1_agrees && composition_agrees;
  }
};

inline VerifyReport verify_census(const SmallSeifertSpec& spec,
                                  int64 cap = kDefaultEnumerationCap) {
  VerifyReport rep;
  rep.spec = spec;
  rep.parity = parity_class(spec);
  rep.caveats = caveats_for(ManifoldExpr(ManifoldExpr::Leaf(spec)));

  rep.oracle = count_sl_irreducible(spec, cap);
  rep.lambda_sl_formula = lambda_sl(spec);
  rep.sl_agrees =
      QuarterRational::from_integer(rep.oracle.total()) == rep.lambda_sl_formula;

  rep.triangle_reducible = count_triangle_reducible(spec.p, spec.q, spec.r);
  AbelianGroup tri = smith_normal_form(IntMatrix{{spec.p, 0}, {0, spec.q}, {spec.r, spec.r}});
  const auto& tf = tri.invariant_factors();
  rep.triangle_form_applicable =
      tf.size() == 2 && tf[0] % 2 == 0 && tf[1] % 2 == 0;
  if (rep.triangle_form_applicable) {
    int64 big_gcd = gcd_all({checked_mul(spec.p, spec.q),
                             checked_mul(spec.p, spec.r),
                             checked_mul(spec.q, spec.r)});
    rep.triangle_closed_form = checked_add(2, big_gcd / 2);
    rep.triangle_agrees = rep.triangle_reducible == rep.triangle_closed_form;
  } else {
    rep.triangle_agrees = true;  // closed form not applicable; nothing to check
  }

  rep.h1_formula = h1(spec);
  rep.h1_snf = smith_normal_form(abelianized_presentation(spec));
  rep.h1_agrees = rep.h1_formula == rep.h1_snf;

  rep.lambda_psl_formula = lambda_psl(spec);
  rep.lambda_psl_census = character_census(spec).lambda_psl_from_census;
  rep.composition_agrees = rep.lambda_psl_formula == rep.lambda_psl_census;

  return rep;
}

}  // namespace casson
