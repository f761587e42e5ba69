#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <optional>

#include "casson/abelian.hpp"
#include "casson/manifold.hpp"
#include "casson/quarter.hpp"
#include "casson/smith.hpp"

namespace casson {

inline int sigma_pair(int64 m, int64 n) {
  return (m % 2 == 0 && n % 2 == 0) ? 1 : 0;
}

inline int sigma_triple(int64 p, int64 q, int64 r) {
  return (p % 2 == 0 && q % 2 == 0 && r % 2 == 0) ? 1 : 0;
}

/// PSL2(C) invariant of the Seifert fibered homology sphere Sigma(a1,...,an):
/// sum over triples i1 < i2 < i3 of (a_i1 - 1)(a_i2 - 1)(a_i3 - 1)/4.
/// Equals the SL2(C) invariant (integral homology sphere).
inline QuarterRational lambda_psl(const SeifertHsSpec& spec) {
  const auto& a = spec.multiplicities;
  int64 sum4 = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      for (std::size_t k = j + 1; k < a.size(); ++k)
        sum4 = checked_add(
            sum4, checked_mul(a[i] - 1, checked_mul(a[j] - 1, a[k] - 1)));
  return QuarterRational::from_quarters(sum4);
}

/// PSL2(C) invariant of p/q surgery on the twist knot K_xi (p odd).
/// Equals the SL2(C) invariant (p odd makes a Z2-homology sphere).
inline QuarterRational lambda_psl(const TwistSurgerySpec& spec) {
  const int64 xi = spec.xi, p = spec.p, q = spec.q;
  int64 v;
  if (xi % 2 == 0) {
    v = checked_add(
        checked_mul(xi, checked_abs(checked_add(checked_mul(4, q), p))),
        checked_mul(xi - 2, checked_abs(p)));
    v = checked_add(v, checked_mul(2, checked_abs(checked_sub(
                           checked_mul(checked_mul(2, xi), q), p))));
  } else {
    v = checked_mul(
        xi - 1, checked_add(checked_abs(checked_sub(checked_mul(4, q), p)),
                            checked_abs(p)));
    int64 w = checked_sub(
        checked_add(checked_mul(checked_mul(2, xi), q), checked_mul(4, q)), p);
    v = checked_add(v, checked_mul(2, checked_abs(w)));
  }
  v = checked_sub(v, checked_mul(2, xi));
  return QuarterRational::from_quarters(v);
}

/// PSL2(C) invariant for base orbifold S^2(p,q,r):
/// (p-1)(q-1)(r-1)/4 + [gcd(p,q)/2] + [gcd(p,r)/2] + [gcd(q,r)/2]
///   - [gcd(pq,pr,qr)/2] - sigma(p,q,r).
/// Independent of (a,b,c).
inline QuarterRational lambda_psl(const SmallSeifertSpec& spec) {
  const int64 p = spec.p, q = spec.q, r = spec.r;
  int64 big_gcd = gcd_all({checked_mul(p, q), checked_mul(p, r), checked_mul(q, r)});
  int64 v4 = checked_mul(p - 1, checked_mul(q - 1, r - 1));
  int64 ints = floor_half(gcd2(p, q));
  ints = checked_add(ints, floor_half(gcd2(p, r)));
  ints = checked_add(ints, floor_half(gcd2(q, r)));
  ints = checked_sub(ints, floor_half(big_gcd));
  ints = checked_sub(ints, sigma_triple(p, q, r));
  return QuarterRational::from_quarters(checked_add(v4, checked_mul(4, ints)));
}

namespace detail {

/// Cone orders sorted by descending 2-adic valuation, ties broken by
/// descending order. The xi coefficients below depend only on the
/// valuations, so the tie-break is immaterial; determinism aids testing.
inline std::array<int64, 3> sort_by_valuation(int64 p, int64 q, int64 r) {
  std::array<int64, 3> v{p, q, r};
  std::stable_sort(v.begin(), v.end(), [](int64 x, int64 y) {
    auto vx = two_adic_split(x).valuation, vy = two_adic_split(y).valuation;
    if (vx != vy) return vx > vy;
    return x > y;
  });
  return v;
}

}  // namespace detail

/// SL2(C) invariant for base orbifold S^2(p,q,r): the count of irreducible
/// SL2(C) characters. Always an integer.
///
/// After reordering so the 2-adic valuations satisfy alpha >= beta >= gamma:
///   (p-1)(q-1)(r-1)/4 + sigma(p,q)(r-1)/4 + sigma(p,r)(q-1)/4
///     + sigma(q,r)(p-1)/4 + xi1 [gcd(p,q)/2] + xi2 [gcd(p,r)/2]
///     + xi2 [gcd(q,r)/2] - xi3 [gcd(pq,pr,qr)/2] - 4 sigma(p,q,r)
/// with xi1 = 2 iff beta > 0; xi2 = 2 iff gamma > 0 or alpha = beta > 0;
/// xi3 = 2 iff alpha = beta > gamma (exactly two of lcm/p, lcm/q, lcm/r odd,
/// which is when the chi(h) = -2 eigenvalue curves carry reducible
/// characters). Cross-validated against the enumeration oracle.
inline QuarterRational lambda_sl(const SmallSeifertSpec& spec) {
  const auto s = detail::sort_by_valuation(spec.p, spec.q, spec.r);
  const int64 p = s[0], q = s[1], r = s[2];
  const int64 alpha = two_adic_split(p).valuation;
  const int64 beta = two_adic_split(q).valuation;
  const int64 gamma = two_adic_split(r).valuation;

  const int64 xi1 = beta > 0 ? 2 : 1;
  const int64 xi2 = (gamma > 0 || (gamma == 0 && alpha == beta && beta > 0)) ? 2 : 1;
  const int64 xi3 = (alpha == beta && beta > gamma) ? 2 : 1;

  int64 v4 = checked_mul(p - 1, checked_mul(q - 1, r - 1));
  v4 = checked_add(v4, checked_mul(sigma_pair(p, q), r - 1));
  v4 = checked_add(v4, checked_mul(sigma_pair(p, r), q - 1));
  v4 = checked_add(v4, checked_mul(sigma_pair(q, r), p - 1));

  int64 big_gcd = gcd_all({checked_mul(p, q), checked_mul(p, r), checked_mul(q, r)});
  int64 ints = checked_mul(xi1, floor_half(gcd2(p, q)));
  ints = checked_add(ints, checked_mul(xi2, floor_half(gcd2(p, r))));
  ints = checked_add(ints, checked_mul(xi2, floor_half(gcd2(q, r))));
  ints = checked_sub(ints, checked_mul(xi3, floor_half(big_gcd)));
  ints = checked_sub(ints, checked_mul(4, sigma_triple(p, q, r)));

  auto val = QuarterRational::from_quarters(checked_add(v4, checked_mul(4, ints)));
  assert(val.is_integer());
  return val;
}

inline QuarterRational lambda_sl(const SeifertHsSpec& spec) {
  return lambda_psl(spec);  // integral homology sphere
}

inline QuarterRational lambda_sl(const TwistSurgerySpec& spec) {
  return lambda_psl(spec);  // p odd: Z2-homology sphere
}

/// H_1 = Z/m1 + Z/m2 with m1 = gcd(p,q,r) and m2 = |aqr+bpr+cpq| / m1.
inline AbelianGroup h1(const SmallSeifertSpec& spec) {
  int64 m1 = gcd_all({spec.p, spec.q, spec.r});
  int64 e = checked_abs(spec.euler_term());
  assert(e % m1 == 0);
  int64 m2 = e / m1;
  assert(m2 % m1 == 0);  // g^2 divides each of aqr, bpr, cpq
  return AbelianGroup::from_factors({m1, m2});
}

/// Presentation matrix of the abelianized fundamental group, with relation
/// signs chosen so |det| = |aqr+bpr+cpq|; the SNF oracle for h1().
inline IntMatrix abelianized_presentation(const SmallSeifertSpec& spec) {
  return IntMatrix{{spec.p, 0, checked_neg(spec.a)},
                   {0, spec.q, checked_neg(spec.b)},
                   {spec.r, spec.r, spec.c}};
}

inline AbelianGroup h1(const TwistSurgerySpec& spec) {
  return AbelianGroup::from_factors({checked_abs(spec.p)});
}

inline AbelianGroup h1(const SeifertHsSpec&) {
  return AbelianGroup();  // integral homology sphere
}

/// Character counts for pi_1 of a small Seifert fibered space, and the
/// weighted total they imply.
struct CharacterCensus {
  int64 reducible = 0;  // reducible PSL2(C) characters
  int64 dihedral = 0;   // image a dihedral group of order >= 4 (includes klein)
  int64 klein = 0;      // conjugate into the Klein four-group Z
  int64 total = 0;      // all PSL2(C) characters
  QuarterRational lambda_psl_from_census;  // total - red - dih/2 - klein/4
};

/// Census of PSL2(C) characters from the closed-form counts:
/// reducible = [|aqr+bpr+cpq|/2] + 1 (+1 more when gcd(p,q,r) is even);
/// dihedral = sigma(q,r)[p/2] + sigma(p,r)[q/2] + sigma(p,q)[r/2]
///   - 2 sigma(p,q,r); klein = sigma(p,q,r); total per the character count of
/// the presentation. The weighted combination total - reducible - dihedral/2
/// - klein/4 recovers lambda_psl exactly.
inline CharacterCensus character_census(const SmallSeifertSpec& spec) {
  const int64 p = spec.p, q = spec.q, r = spec.r;
  const int64 e_abs = checked_abs(spec.euler_term());
  CharacterCensus c;

  c.reducible = checked_add(floor_half(e_abs),
                            gcd_all({p, q, r}) % 2 == 0 ? int64{2} : int64{1});

  c.dihedral = checked_mul(sigma_pair(q, r), floor_half(p));
  c.dihedral = checked_add(c.dihedral, checked_mul(sigma_pair(p, r), floor_half(q)));
  c.dihedral = checked_add(c.dihedral, checked_mul(sigma_pair(p, q), floor_half(r)));
  c.dihedral = checked_sub(c.dihedral, checked_mul(2, sigma_triple(p, q, r)));

  c.klein = sigma_triple(p, q, r);

  int64 big_gcd = gcd_all({checked_mul(p, q), checked_mul(p, r), checked_mul(q, r)});
  int64 t = checked_mul(floor_half(p), checked_mul(floor_half(q), floor_half(r)));
  t = checked_add(t, checked_mul(floor_half(p - 1),
                                 checked_mul(floor_half(q - 1), floor_half(r - 1))));
  t = checked_add(t, floor_half(e_abs));
  t = checked_sub(t, floor_half(big_gcd));
  t = checked_add(t, floor_half(gcd2(p, q)));
  t = checked_add(t, floor_half(gcd2(p, r)));
  t = checked_add(t, floor_half(gcd2(q, r)));
  c.total = checked_add(t, 1);

  int64 w4 = checked_sub(checked_mul(4, checked_sub(c.total, c.reducible)),
                         checked_add(checked_mul(2, c.dihedral), c.klein));
  c.lambda_psl_from_census = QuarterRational::from_quarters(w4);
  return c;
}

/// PSL2(C) invariant of a connected-sum expression: additive over leaves.
inline QuarterRational lambda_psl(const ManifoldExpr& e) {
  if (e.is_leaf())
    return std::visit([](const auto& s) { return lambda_psl(s); }, e.leaf());
  return lambda_psl(e.lhs()) + lambda_psl(e.rhs());
}

namespace detail {

struct SlFold {
  QuarterRational lambda_sl;
  int64 z2_order;  // |H^1(.; Z_2)|, multiplicative under connected sum
};

inline SlFold lambda_sl_fold(const ManifoldExpr& e) {
  if (e.is_leaf()) {
    return std::visit(
        [](const auto& s) {
          return SlFold{lambda_sl(s), two_torsion_order(h1(s))};
        },
        e.leaf());
  }
  SlFold l = lambda_sl_fold(e.lhs());
  SlFold r = lambda_sl_fold(e.rhs());
  return SlFold{l.lambda_sl * r.z2_order + r.lambda_sl * l.z2_order,
                checked_mul(l.z2_order, r.z2_order)};
}

}  // namespace detail

/// SL2(C) invariant of a connected-sum expression:
/// lambda_SL(A # B) = |H^1(B;Z_2)| lambda_SL(A) + |H^1(A;Z_2)| lambda_SL(B).
/// The fold is association-independent.
inline QuarterRational lambda_sl(const ManifoldExpr& e) {
  return detail::lambda_sl_fold(e).lambda_sl;
}

inline AbelianGroup h1(const ManifoldExpr& e) {
  std::vector<int64> factors;
  e.for_each_leaf([&](const ManifoldExpr::Leaf& leaf) {
    AbelianGroup g = std::visit([](const auto& s) { return h1(s); }, leaf);
    const auto& f = g.invariant_factors();
    factors.insert(factors.end(), f.begin(), f.end());
  });
  return AbelianGroup::from_factors(std::move(factors));
}

inline bool is_small_seifert_leaf(const ManifoldExpr& e) {
  return e.is_leaf() && std::holds_alternative<SmallSeifertSpec>(e.leaf());
}

/// Caveat flags attached to computed reports.
inline std::vector<std::string> caveats_for(const ManifoldExpr& e) {
  std::vector<std::string> out;
  auto add = [&](const std::string& s) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
  };
  e.for_each_leaf([&](const ManifoldExpr::Leaf& leaf) {
    if (const auto* s = std::get_if<SmallSeifertSpec>(&leaf)) {
      // the closed forms assume a non-Haken total space; that hypothesis is
      // not decidable here and is the caller's responsibility
      add("unverified-non-haken-hypothesis");
      int64 lhs = checked_add(
          checked_add(checked_mul(s->q, s->r), checked_mul(s->p, s->r)),
          checked_mul(s->p, s->q));
      int64 rhs = checked_mul(s->p, checked_mul(s->q, s->r));
      // 1/p + 1/q + 1/r vs 1, exactly
      if (lhs > rhs)
        add("spherical-base");
      else if (lhs == rhs)
        add("euclidean-base");
    }
  });
  return out;
}

/// Full invariant report: both invariants, homology, and the w2 = 0 piece
/// lambda_0 = lambda_SL / |H^1(.;Z_2)| with the conjectural residual
/// lambda_PSL - lambda_0 (reported, never asserted).
struct InvariantReport {
  std::string manifold;
  QuarterRational lambda_psl;
  std::optional<QuarterRational> lambda_sl;
  AbelianGroup h1;
  int64 h1_z2_order = 1;
  std::optional<QuarterRational> lambda_zero;
  std::optional<QuarterRational> residual;  // conjectured sum over w2 != 0
  std::optional<CharacterCensus> census;    // single small-Seifert leaf only
  std::vector<std::string> caveats;
};

inline InvariantReport invariant_report(const ManifoldExpr& expr) {
  InvariantReport rep;
  rep.manifold = render(expr);
  rep.lambda_psl = lambda_psl(expr);
  rep.lambda_sl = lambda_sl(expr);
  rep.h1 = h1(expr);
  rep.h1_z2_order = two_torsion_order(rep.h1);
  rep.caveats = caveats_for(expr);
  rep.lambda_zero = rep.lambda_sl->divide_exact(rep.h1_z2_order);
  if (rep.lambda_zero)
    rep.residual = rep.lambda_psl - *rep.lambda_zero;
  else
    rep.caveats.push_back("lambda0-not-quarter-integral");
  if (is_small_seifert_leaf(expr))
    rep.census = character_census(std::get<SmallSeifertSpec>(expr.leaf()));
  return rep;
}

/// Lexicographically smallest positive (a,b,c) satisfying the coprimality
/// and nonzero-homology conditions.
inline std::array<int64, 3> default_abc(int64 p, int64 q, int64 r) {
  for (int64 a = 1;; ++a) {
    if (gcd2(a, p) != 1) continue;
    for (int64 b = 1; b <= a + 2; ++b) {
      if (gcd2(b, q) != 1) continue;
      for (int64 c = 1; c <= b + 2; ++c) {
        if (gcd2(c, r) != 1) continue;
        SmallSeifertSpec s{p, q, r, a, b, c};
        if (s.euler_term() != 0) return {a, b, c};
      }
    }
  }
}

/// First k valid (a,b,c) triples with entries in [1, 2*max(p,q,r)],
/// lexicographic; the deterministic sample set used by sweeps.
inline std::vector<std::array<int64, 3>> abc_samples(int64 p, int64 q, int64 r,
                                                     int64 k) {
  std::vector<std::array<int64, 3>> out;
  const int64 bound = 2 * std::max({p, q, r});
  for (int64 a = 1; a <= bound && std::ssize(out) < k; ++a) {
    if (gcd2(a, p) != 1) continue;
    for (int64 b = 1; b <= bound && std::ssize(out) < k; ++b) {
      if (gcd2(b, q) != 1) continue;
      for (int64 c = 1; c <= bound && std::ssize(out) < k; ++c) {
        if (gcd2(c, r) != 1) continue;
        SmallSeifertSpec s{p, q, r, a, b, c};
        if (s.euler_term() != 0) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

}  // namespace casson
