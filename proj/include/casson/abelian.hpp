#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "casson/checked.hpp"

namespace casson {

/// Finitely generated abelian group in invariant-factor form.
///
/// factors d1 | d2 | ... with each di >= 2, followed by one 0 per infinite
/// cyclic summand. Factors equal to 1 are dropped; the trivial group is the
/// empty list.
class AbelianGroup {
 public:
  AbelianGroup() = default;

  /// Canonicalizes an arbitrary factor list: drops 1s, enforces the
  /// divisibility chain by pairwise gcd/lcm exchange, sorts zeros last.
  static AbelianGroup from_factors(std::vector<int64> factors) {
    for (int64 f : factors)
      if (f < 0) throw std::domain_error("AbelianGroup: negative factor");
    std::vector<int64> tors;
    std::size_t free_rank = 0;
    for (int64 f : factors) {
      if (f == 0)
        ++free_rank;
      else if (f > 1)
        tors.push_back(f);
    }
    // gcd/lcm exchange preserves the group and converges to the chain
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < tors.size(); ++i) {
        for (std::size_t j = i + 1; j < tors.size(); ++j) {
          if (tors[j] % tors[i] != 0) {
            int64 g = gcd2(tors[i], tors[j]);
            int64 l = checked_lcm(tors[i], tors[j]);
            tors[i] = g;
            tors[j] = l;
            changed = true;
          }
        }
      }
      std::sort(tors.begin(), tors.end());
      tors.erase(std::remove(tors.begin(), tors.end(), int64{1}), tors.end());
    }
    AbelianGroup g;
    g.factors_ = std::move(tors);
    g.factors_.insert(g.factors_.end(), free_rank, 0);
    return g;
  }

  const std::vector<int64>& invariant_factors() const { return factors_; }

  bool is_trivial() const { return factors_.empty(); }

  bool is_finite() const {
    return factors_.empty() || factors_.back() != 0;
  }

  int64 order() const {
    if (!is_finite())
      throw std::domain_error("AbelianGroup: infinite group has no order");
    int64 n = 1;
    for (int64 f : factors_) n = checked_mul(n, f);
    return n;
  }

  /// Order of the 2-torsion subgroup, i.e. |Hom(G, Z/2)| = |H^1(.; Z_2)|.
  int64 two_torsion_order() const {
    if (!is_finite())
      throw std::domain_error(
          "two_torsion_order: infinite factor present (not a rational homology "
          "sphere)");
    int64 n = 1;
    for (int64 f : factors_)
      if (f % 2 == 0) n = checked_mul(n, 2);
    return n;
  }

  bool operator==(const AbelianGroup&) const = default;

  /// "1" for the trivial group, else "Z/d1+Z/d2+..."; a 0 factor prints "Z".
  std::string str() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += "+";
      s += factors_[i] == 0 ? "Z" : "Z/" + std::to_string(factors_[i]);
    }
    return s;
  }

 private:
  std::vector<int64> factors_;
};

inline int64 two_torsion_order(const AbelianGroup& g) {
  return g.two_torsion_order();
}

}  // namespace casson
