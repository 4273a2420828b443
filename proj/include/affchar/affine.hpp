#pragma once

// Untwisted affine root data over a finite RootSystem.
//
// Node 0 is the affine node: its simple root is delta - theta_root and its
// simple coroot is K - theta, where theta is the highest coroot. The
// q-grading used by characters is q = e^{-delta}, so an AffineWeight with
// delta coefficient d sits at q-exponent -d.

#include <cstdint>
#include <vector>

#include "affchar/rootsys.hpp"

namespace affchar {

/// n * delta + finite, finite in simple-root coordinates (zero for
/// imaginary roots).
struct AffineRoot {
  std::int64_t n = 0;
  std::vector<std::int64_t> finite;

  bool is_real() const;
  bool is_positive(const RootSystem& rs) const;
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

/// k_coeff * K + finite.
struct AffineCoroot {
  Rational k_coeff;
  Coweight finite;
  friend bool operator==(const AffineCoroot&, const AffineCoroot&) = default;
};

/// level * Lambda + finite + delta * delta_root.
struct AffineWeight {
  std::int64_t level = 0;
  WeightVec finite;
  Rational delta;

  Rational q_exponent() const { return -delta; }
  friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
};

AffineRoot affine_simple_root(const RootSystem& rs, int node);
AffineCoroot affine_simple_coroot(const RootSystem& rs, int node);

Rational pair(const RootSystem& rs, const AffineWeight& w, const AffineCoroot& c);
Rational pair(const RootSystem& rs, const AffineRoot& r, const AffineCoroot& c);
AffineRoot reflect(const RootSystem& rs, const AffineRoot& r, int node);
AffineCoroot reflect(const RootSystem& rs, const AffineCoroot& c, int node);
AffineWeight reflect(const RootSystem& rs, const AffineWeight& w, int node);

/// (2n / (a,a)*) K + a^vee for the real root n*delta + a.
AffineCoroot affine_coroot(const RootSystem& rs, const AffineRoot& root);

/// Weight of the torus-fixed line at mu, scaled to level k:
/// k Lambda - k iota(mu) - k (mu,mu)/2 delta.
AffineWeight fixed_point_weight(const RootSystem& rs, const Coweight& mu, std::int64_t k);

struct CurveData {
  Rational degree;
  Coweight from;  // lambda
  Coweight to;    // lambda - (<lambda, a> - n) a^vee
};

/// Degree of the basic line bundle on the T-invariant curve through the
/// fixed point lambda in direction n*delta + a, and its two fixed points.
/// Requires n < <lambda, a>.
CurveData curve_data(const RootSystem& rs, const Coweight& lambda, const AffineRoot& root);

/// Affine Weyl group element x(v) = u(v) + t, with u acting on
/// simple-coroot coordinates.
class AffineWeylElement {
 public:
  static AffineWeylElement identity(const RootSystem& rs);
  static AffineWeylElement simple_reflection(const RootSystem& rs, int node);
  static AffineWeylElement translation(const RootSystem& rs, const Coweight& t);
  static AffineWeylElement from_word(const RootSystem& rs, const std::vector<int>& word);

  AffineWeylElement operator*(const AffineWeylElement& o) const;
  Coweight apply(const Coweight& v) const;

  const IntMatrix& finite_part() const { return finite_; }
  const Coweight& translation_part() const { return translation_; }
  friend bool operator==(const AffineWeylElement&, const AffineWeylElement&) = default;

 private:
  IntMatrix finite_;
  Coweight translation_;
};

/// Number of affine hyperplanes separating the fundamental alcove from its image.
std::int64_t length(const RootSystem& rs, const AffineWeylElement& x);

/// Reduced word (i_1, ..., i_m) with t_lambda = s_{i_1} ... s_{i_m};
/// lambda must lie in the coroot lattice.
std::vector<int> translation_reduced_word(const RootSystem& rs, const Coweight& lambda);

/// Union of W-orbits of the dominant mu <= lambda in lambda's class.
std::vector<Coweight> fixed_point_support(const RootSystem& rs, const Coweight& lambda,
                                          std::size_t cap = kDefaultOrbitCap);

}  // namespace affchar
