#pragma once

// Characters of the level-k affine Demazure modules attached to the
// Schubert varieties of the affine Grassmannian.
//
// Sign convention: the extreme weight -k iota(lambda) sits in the deepest
// q-layer and the top layer is q^0.

#include <cstdint>
#include <optional>
#include <vector>

#include "affchar/affine.hpp"
#include "affchar/qcharacter.hpp"

namespace affchar {

/// Which negative node the raising step picks.
enum class RaisingOrder { SmallestNode, LargestNode, Random };

struct DemazureOptions {
  RaisingOrder order = RaisingOrder::SmallestNode;
  unsigned seed = 0;  // for RaisingOrder::Random
  /// Truncate the normalized result at this depth (flagging it).
  std::optional<Rational> depth;
  /// Abort with CapExceeded when an intermediate character exceeds this many terms.
  std::size_t term_cap = 20'000'000;
};

struct DemazureCharacter {
  QCharacter character;
  Coweight lambda;
  std::int64_t level = 0;
  AffineWeight base_weight;
  /// character = D_{word[0]} ... D_{word.back()} e^{base_weight}, last factor first.
  std::vector<int> word;
};

DemazureCharacter demazure_character(const RootSystem& rs, const Coweight& lambda, std::int64_t k,
                                     const DemazureOptions& opts = {});

/// Total multiplicity of the finite weight nu over all q-layers.
BigInt finite_multiplicity(const DemazureCharacter& dc, const Weight& nu);

struct TensorCheck {
  bool holds = false;
  FiniteCharacter lhs;  // V_{lambda+mu} at q = 1
  FiniteCharacter rhs;  // V_lambda * V_mu at q = 1
};

TensorCheck tensor_product_check(const RootSystem& rs, const Coweight& lambda, const Coweight& mu,
                                 std::int64_t k, const DemazureOptions& opts = {});

/// V_mu is dominated coefficientwise by V_lambda at q = 1; requires mu <= lambda.
bool restriction_domination_check(const RootSystem& rs, const Coweight& lambda, const Coweight& mu,
                                  std::int64_t k, const DemazureOptions& opts = {});

}  // namespace affchar
