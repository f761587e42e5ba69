#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "casson/checked.hpp"

namespace casson {

/// Validation failure: names exactly one violated hypothesis and quotes the
/// offending values.
class validation_error : public std::runtime_error {
 public:
  validation_error(std::string hypothesis, const std::string& detail)
      : std::runtime_error(hypothesis + ": " + detail),
        hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// Seifert fibered homology sphere Sigma(a1,...,an): positive, pairwise
/// relatively prime multiplicities. n < 3 is allowed (the invariant is an
/// empty sum).
struct SeifertHsSpec {
  std::vector<int64> multiplicities;
  bool operator==(const SeifertHsSpec&) const = default;
};

/// Seifert fibered rational homology sphere with base orbifold S^2(p,q,r):
/// pi_1 = <x, y, h | h central, x^p = h^a, y^q = h^b, (xy)^r = h^c>.
struct SmallSeifertSpec {
  int64 p, q, r;
  int64 a, b, c;
  bool operator==(const SmallSeifertSpec&) const = default;

  /// aqr + bpr + cpq; |.| is the order of H_1, must be nonzero.
  int64 euler_term() const {
    return checked_add(checked_add(checked_mul(a, checked_mul(q, r)),
                                   checked_mul(b, checked_mul(p, r))),
                       checked_mul(c, checked_mul(p, q)));
  }
};

/// p/q Dehn surgery on the twist knot with xi half twists. p is normalized
/// positive (negating q alongside); the slope as written is kept for display.
struct TwistSurgerySpec {
  int64 xi;
  int64 p, q;                  // normalized: p > 0 after validate()
  int64 display_p, display_q;  // slope as given
  bool operator==(const TwistSurgerySpec&) const = default;
};

inline TwistSurgerySpec make_twist(int64 xi, int64 p, int64 q) {
  return TwistSurgerySpec{xi, p, q, p, q};
}

inline SeifertHsSpec validate(const SeifertHsSpec& s) {
  for (int64 a : s.multiplicities)
    if (a < 1)
      throw validation_error(
          "multiplicity < 1",
          "a_i = " + std::to_string(a) +
              " (Seifert homology-sphere multiplicities are positive integers)");
  for (std::size_t i = 0; i < s.multiplicities.size(); ++i)
    for (std::size_t j = i + 1; j < s.multiplicities.size(); ++j) {
      int64 g = gcd2(s.multiplicities[i], s.multiplicities[j]);
      if (g != 1)
        throw validation_error(
            "not pairwise coprime",
            "gcd(" + std::to_string(s.multiplicities[i]) + "," +
                std::to_string(s.multiplicities[j]) + ") = " + std::to_string(g) +
                " (required by the Seifert homology-sphere closed form)");
    }
  return s;
}

inline SmallSeifertSpec validate(const SmallSeifertSpec& s) {
  auto need_cone = [](int64 n, const char* name) {
    if (n < 2)
      throw validation_error(
          "cone order < 2", std::string(name) + " = " + std::to_string(n) +
                                " (base orbifold needs p,q,r >= 2)");
  };
  need_cone(s.p, "p");
  need_cone(s.q, "q");
  need_cone(s.r, "r");
  auto need_coprime = [](int64 coeff, int64 order, const char* pair) {
    int64 g = gcd2(checked_abs(coeff), order);
    if (g != 1)
      throw validation_error(
          std::string("gcd(") + pair + ") != 1",
          "gcd(" + std::to_string(coeff) + "," + std::to_string(order) +
              ") = " + std::to_string(g) +
              " (Seifert invariants must be coprime to their cone orders)");
  };
  need_coprime(s.a, s.p, "a,p");
  need_coprime(s.b, s.q, "b,q");
  need_coprime(s.c, s.r, "c,r");
  if (s.euler_term() == 0)
    throw validation_error(
        "aqr+bpr+cpq = 0 (not a rational homology sphere)",
        "a=" + std::to_string(s.a) + " b=" + std::to_string(s.b) +
            " c=" + std::to_string(s.c) + " with (p,q,r)=(" +
            std::to_string(s.p) + "," + std::to_string(s.q) + "," +
            std::to_string(s.r) + ") gives |H_1| = 0");
  return s;
}

inline TwistSurgerySpec validate(const TwistSurgerySpec& s) {
  if (s.xi < 1)
    throw validation_error("xi < 1", "xi = " + std::to_string(s.xi) +
                                         " (twist knots K_xi need xi >= 1)");
  if (s.q == 0)
    throw validation_error("q = 0", "slope " + std::to_string(s.p) +
                                        "/0 is not a surgery slope");
  if (s.p % 2 == 0)
    throw validation_error(
        "p even (strict boundary slope risk)",
        "p = " + std::to_string(s.p) +
            " (twist-knot strict boundary slopes are all even; the surgery "
            "formulas require odd p)");
  int64 g = gcd2(checked_abs(s.p), checked_abs(s.q));
  if (g != 1)
    throw validation_error("gcd(p,q) != 1",
                           "gcd(" + std::to_string(s.p) + "," +
                               std::to_string(s.q) + ") = " + std::to_string(g));
  TwistSurgerySpec out = s;
  if (out.p < 0) {
    out.p = checked_neg(out.p);
    out.q = checked_neg(out.q);
  }
  return out;
}

/// Connected-sum expression tree; leaves are the three supported families.
class ManifoldExpr {
 public:
  using Leaf = std::variant<SeifertHsSpec, SmallSeifertSpec, TwistSurgerySpec>;

  explicit ManifoldExpr(Leaf leaf) : leaf_(std::move(leaf)) {}
  ManifoldExpr(ManifoldExpr lhs, ManifoldExpr rhs)
      : lhs_(std::make_shared<ManifoldExpr>(std::move(lhs))),
        rhs_(std::make_shared<ManifoldExpr>(std::move(rhs))) {}

  bool is_leaf() const { return !lhs_; }
  const Leaf& leaf() const { return *leaf_; }
  const ManifoldExpr& lhs() const { return *lhs_; }
  const ManifoldExpr& rhs() const { return *rhs_; }

  std::size_t leaf_count() const {
    return is_leaf() ? 1 : lhs_->leaf_count() + rhs_->leaf_count();
  }

  template <typename F>
  void for_each_leaf(F&& f) const {
    if (is_leaf()) {
      f(*leaf_);
    } else {
      lhs_->for_each_leaf(f);
      rhs_->for_each_leaf(f);
    }
  }

  bool operator==(const ManifoldExpr& o) const {
    if (is_leaf() != o.is_leaf()) return false;
    if (is_leaf()) return *leaf_ == *o.leaf_;
    return *lhs_ == *o.lhs_ && *rhs_ == *o.rhs_;
  }

 private:
  std::optional<Leaf> leaf_;
  std::shared_ptr<ManifoldExpr> lhs_, rhs_;
};

/// Validates every leaf (normalizing twist slopes in place).
inline ManifoldExpr validate(const ManifoldExpr& e) {
  if (e.is_leaf()) {
    return ManifoldExpr(std::visit(
        [](const auto& s) -> ManifoldExpr::Leaf { return validate(s); },
        e.leaf()));
  }
  return ManifoldExpr(validate(e.lhs()), validate(e.rhs()));
}

inline std::string render(const SeifertHsSpec& s) {
  std::string out = "SHS(";
  for (std::size_t i = 0; i < s.multiplicities.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s.multiplicities[i]);
  }
  return out + ")";
}

inline std::string render(const SmallSeifertSpec& s) {
  return "SSF(" + std::to_string(s.p) + "," + std::to_string(s.q) + "," +
         std::to_string(s.r) + ";" + std::to_string(s.a) + "," +
         std::to_string(s.b) + "," + std::to_string(s.c) + ")";
}

inline std::string render(const TwistSurgerySpec& s) {
  return "TW(" + std::to_string(s.xi) + "; " + std::to_string(s.display_p) +
         "/" + std::to_string(s.display_q) + ")";
}

inline std::string render(const ManifoldExpr& e) {
  if (e.is_leaf())
    return std::visit([](const auto& s) { return render(s); }, e.leaf());
  return render(e.lhs()) + " # " + render(e.rhs());
}

}  // namespace casson
