#pragma once

// q-graded characters: finitely supported integer functions on
// (finite weight) x (rational q-exponent), optionally truncated at a depth.

#include <optional>
#include <string>
#include <string_view>

#include "affchar/kernels.hpp"
#include "affchar/rootsys.hpp"

namespace affchar {

using kernels::LayerMap;

class QCharacter {
 public:
  /// Empty character. A missing depth means no truncation.
  QCharacter(int rank, std::int64_t level, std::optional<Rational> depth = std::nullopt);

  /// e^0 q^0 at level 0.
  static QCharacter unit(int rank, std::optional<Rational> depth = std::nullopt);
  static QCharacter monomial(int rank, std::int64_t level, const Weight& w, const Rational& q,
                             std::optional<Rational> depth = std::nullopt);
  /// A finite character placed at q^0.
  static QCharacter from_finite(int rank, std::int64_t level, const FiniteCharacter& ch,
                                std::optional<Rational> depth = std::nullopt);
  static QCharacter from_layers(int rank, std::int64_t level, LayerMap layers,
                                std::optional<Rational> depth = std::nullopt, bool truncated = false);

  int rank() const { return rank_; }
  std::int64_t level() const { return level_; }
  const std::optional<Rational>& depth() const { return depth_; }
  bool truncated() const { return truncated_; }
  const LayerMap& layers() const { return layers_; }

  bool empty() const { return layers_.empty(); }
  std::size_t term_count() const;
  BigInt coefficient(const Weight& w, const Rational& q) const;
  /// Coefficients at q, empty if the layer is absent.
  FiniteCharacter layer(const Rational& q) const;
  Rational min_q() const;
  Rational max_q() const;

  /// Adds c * e^w q^q, dropping it (and flagging) beyond the depth.
  void add_term(const Weight& w, const Rational& q, const BigInt& c);
  /// Shifts all q-exponents so the smallest is 0. No-op on the zero character.
  void normalize();
  /// Lowers the depth bound (or sets one), dropping terms beyond it.
  void truncate(const Rational& depth);
  void set_level(std::int64_t k) { level_ = k; }

  QCharacter& operator+=(const QCharacter& o);
  QCharacter& operator-=(const QCharacter& o);
  friend QCharacter operator+(QCharacter a, const QCharacter& b) { return a += b; }
  friend QCharacter operator-(QCharacter a, const QCharacter& b) { return a -= b; }
  friend bool operator==(const QCharacter&, const QCharacter&) = default;

 private:
  void check_compatible(const QCharacter& o) const;

  int rank_ = 0;
  std::int64_t level_ = 0;
  std::optional<Rational> depth_;
  bool truncated_ = false;
  LayerMap layers_;
};

/// Product; depths must agree, levels add.
QCharacter qchar_mul(const QCharacter& a, const QCharacter& b);

/// Demazure operator D_i, node i in 0..rank; uses chi's level for node 0.
QCharacter demazure_op(const RootSystem& rs, int node, const QCharacter& chi);
/// The linear data of D_i at level k, as consumed by the kernels.
kernels::StringOp demazure_string(const RootSystem& rs, int node, std::int64_t level);

/// Sum over q. Throws InputError on a truncated character unless allowed.
FiniteCharacter specialize_q1(const QCharacter& chi, bool allow_truncated = false);

bool is_weyl_invariant(const RootSystem& rs, const QCharacter& chi);

/// Terms with q <= the smaller of the two depths agree.
bool equal_up_to_common_depth(const QCharacter& a, const QCharacter& b);

struct Discrepancy {
  Weight weight;
  Rational q;
  BigInt lhs;
  BigInt rhs;
};

/// Smallest (q, weight) where the coefficients differ, restricted to the
/// common depth.
std::optional<Discrepancy> first_discrepancy(const QCharacter& lhs, const QCharacter& rhs);

/// One term per line: "w=(c1,...,cl) q=p/r coeff=m".
std::string serialize(const QCharacter& chi);
QCharacter parse_qcharacter(std::string_view text, int rank, std::int64_t level,
                            std::optional<Rational> depth = std::nullopt);

}  // namespace affchar
