#pragma once

// Finite root systems of types A-G in Bourbaki numbering.
//
// Conventions used throughout the library:
//  * "roots" live in h*, "coroots" and "coweights" in h.
//  * cartan()(i, j) = <coroot_i, root_j>.
//  * Coweights are stored in simple-coroot coordinates, weights (as
//    WeightVec) in simple-root coordinates; both with rational entries.
//  * Characters use the packed integral Weight in fundamental-weight
//    coordinates.
//  * The invariant forms are normalized so long roots (and the coroots of
//    long roots) have squared length 2.
//  * Finite nodes are numbered 1..rank as in Bourbaki; node 0 is reserved
//    for the affine node.
//
// E-type numbering (Bourbaki): the chain is 1-3-4-5-6(-7-8) and node 2 is
// attached to node 4. The highest root of E6 is (1,2,2,3,2,1).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "affchar/numeric.hpp"
#include "affchar/weight.hpp"

namespace affchar {

inline constexpr std::size_t kDefaultOrbitCap = 1'000'000;

template <class Tag>
struct CoordVec {
  std::vector<Rational> coords;

  CoordVec() = default;
  explicit CoordVec(std::size_t n) : coords(n, Rational(0)) {}
  explicit CoordVec(std::vector<Rational> c) : coords(std::move(c)) {}
  static CoordVec from_ints(std::span<const std::int64_t> v) {
    CoordVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r.coords[i] = Rational(v[i]);
    return r;
  }

  std::size_t size() const { return coords.size(); }
  Rational& operator[](std::size_t i) { return coords[i]; }
  const Rational& operator[](std::size_t i) const { return coords[i]; }

  CoordVec& operator+=(const CoordVec& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
  }
  CoordVec& operator-=(const CoordVec& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
  }
  friend CoordVec operator+(CoordVec a, const CoordVec& b) { return a += b; }
  friend CoordVec operator-(CoordVec a, const CoordVec& b) { return a -= b; }
  friend CoordVec operator-(CoordVec a) {
    for (auto& x : a.coords) x = -x;
    return a;
  }
  friend CoordVec operator*(const Rational& s, CoordVec a) {
    for (auto& x : a.coords) x *= s;
    return a;
  }
  bool is_zero() const {
    for (const auto& x : coords)
      if (x != 0) return false;
    return true;
  }
  bool is_integral() const {
    for (const auto& x : coords)
      if (x.denominator() != 1) return false;
    return true;
  }
  friend bool operator==(const CoordVec&, const CoordVec&) = default;
  friend bool operator<(const CoordVec& a, const CoordVec& b) { return a.coords < b.coords; }
};

struct CorootBasis {};
struct RootBasis {};
/// Element of h in simple-coroot coordinates.
using Coweight = CoordVec<CorootBasis>;
/// Element of h* in simple-root coordinates.
using WeightVec = CoordVec<RootBasis>;

using IntMatrix = std::vector<std::vector<std::int64_t>>;
using RatMatrix = std::vector<std::vector<Rational>>;

class RootSystem {
 public:
  /// Throws InputError naming the violated constraint for invalid pairs.
  static RootSystem build(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const;
  bool simply_laced() const;

  const IntMatrix& cartan() const { return cartan_; }
  std::int64_t cartan(int i, int j) const { return cartan_[i - 1][j - 1]; }
  const RatMatrix& inverse_cartan() const { return inv_cartan_; }

  /// (alpha_i, alpha_i)* for simple roots, node i in 1..rank.
  const Rational& simple_root_norm(int i) const { return simple_norms_[i - 1]; }

  /// Positive roots in simple-root coordinates, sorted by height then lexicographically.
  const std::vector<std::vector<std::int64_t>>& positive_roots() const { return pos_roots_; }
  /// Coroots of positive_roots(), index-aligned, in simple-coroot coordinates.
  const std::vector<std::vector<std::int64_t>>& positive_coroots() const { return pos_coroots_; }
  /// (alpha, alpha)* of positive_roots()[k].
  const Rational& root_norm(std::size_t k) const { return root_norms_[k]; }
  /// positive_roots()[k] in fundamental-weight coordinates.
  const Weight& positive_root_weight(std::size_t k) const { return pos_root_weights_[k]; }
  bool is_long(std::size_t k) const { return root_norms_[k] == 2; }

  /// Index into positive_roots() of a root given in simple-root coordinates, or -1.
  int root_index(std::span<const std::int64_t> root) const;

  std::size_t highest_root_index() const { return highest_; }
  /// Coefficients of the highest root in simple roots.
  const std::vector<std::int64_t>& marks() const { return pos_roots_[highest_]; }
  /// Coefficients of the highest coroot theta in simple coroots.
  const std::vector<std::int64_t>& comarks() const { return pos_coroots_[highest_]; }
  int coxeter_number() const;
  int dual_coxeter_number() const;

  /// |det A| = |pi_1| for the adjoint group.
  std::int64_t fundamental_group_order() const { return det_; }

  const Weight& simple_root_weight(int i) const { return simple_root_weights_[i - 1]; }
  const Weight& highest_root_weight() const { return pos_root_weights_[highest_]; }
  Weight rho() const;

  // Basis conversions.
  Coweight fundamental_coweight(int i) const;
  Coweight coweight_from_fundamental(std::span<const std::int64_t> f) const;
  std::vector<Rational> coweight_to_fundamental(const Coweight& c) const;
  WeightVec weight_from_fundamental(std::span<const Rational> f) const;
  std::vector<Rational> weight_to_fundamental(const WeightVec& w) const;
  Weight to_packed(const WeightVec& w) const;
  WeightVec from_packed(const Weight& w) const;

  // Pairings and forms.
  Rational pair(const Coweight& c, const WeightVec& w) const;
  Rational pair(const Coweight& c, std::span<const std::int64_t> root) const;
  /// <c, alpha_i>: the i-th fundamental-coweight coordinate of c.
  Rational pair_simple(const Coweight& c, int i) const;
  Rational coweight_form(const Coweight& a, const Coweight& b) const;
  Rational weight_form(const WeightVec& a, const WeightVec& b) const;
  const RatMatrix& coweight_gram() const { return coweight_gram_; }

  // Weyl group action (finite nodes 1..rank).
  Coweight reflect(const Coweight& c, int i) const;
  Weight reflect(const Weight& w, int i) const;
  bool is_dominant(const Coweight& c) const;
  bool is_dominant(const Weight& w) const;
  /// Dominant element of the orbit; `parity` receives the number of
  /// reflections used mod 2 when non-null.
  Coweight dominant_part(const Coweight& c) const;
  Weight dominant_part(const Weight& w, int* parity = nullptr) const;
  /// Reduced word of w0 (greedy on -rho).
  std::vector<int> longest_element_word() const;

  // Lattices.
  bool in_coweight_lattice(const Coweight& c) const;
  bool in_coroot_lattice(const Coweight& c) const { return c.is_integral(); }
  /// Fractional parts of the simple-coroot coordinates: the class in
  /// Lambda_G / R_G.
  std::vector<Rational> coset_key(const Coweight& c) const;

 private:
  RootSystem() = default;

  char type_ = 'A';
  int rank_ = 0;
  IntMatrix cartan_;
  RatMatrix inv_cartan_;
  std::int64_t det_ = 1;
  std::vector<Rational> simple_norms_;
  std::vector<std::vector<std::int64_t>> pos_roots_;
  std::vector<std::vector<std::int64_t>> pos_coroots_;
  std::vector<Rational> root_norms_;
  std::vector<Weight> pos_root_weights_;
  std::vector<Weight> simple_root_weights_;
  std::size_t highest_ = 0;
  RatMatrix coweight_gram_;
};

RootSystem build_root_system(char type, int rank);

/// The form-induced isomorphism h -> h*.
WeightVec iota(const RootSystem& rs, const Coweight& c);
/// iota of an element of Lambda_G, packed (always integral there).
Weight iota_packed(const RootSystem& rs, const Coweight& c);

/// lambda - mu is a non-negative integer combination of simple coroots.
bool dominance_leq(const RootSystem& rs, const Coweight& mu, const Coweight& lambda);

std::vector<Coweight> weyl_orbit(const RootSystem& rs, const Coweight& c,
                                 std::size_t cap = kDefaultOrbitCap);
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w,
                               std::size_t cap = kDefaultOrbitCap);

/// Dominant mu <= lambda (same class mod R_G), lambda dominant.
std::vector<Coweight> dominant_coweights_below(const RootSystem& rs, const Coweight& lambda);

struct MinusculeRep {
  std::vector<Rational> coset;  // coset_key of the representative
  Coweight coweight;            // omega_{i_gamma}, zero for the trivial class
  int node = 0;                 // i_gamma, 0 for the trivial class
};

/// One minuscule representative per class of Lambda_G / R_G, trivial class first.
std::vector<MinusculeRep> minuscule_reps(const RootSystem& rs);

/// Weight multiplicities of the irreducible module of dominant highest
/// weight `highest` (fundamental coordinates), by Freudenthal's recursion.
FiniteCharacter finite_weyl_character(const RootSystem& rs, const Weight& highest);

/// Dominant weights of the irreducible module with their multiplicities.
FiniteCharacter finite_dominant_multiplicities(const RootSystem& rs, const Weight& highest);

}  // namespace affchar
