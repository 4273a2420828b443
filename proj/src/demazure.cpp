#include "affchar/demazure.hpp"

#include <random>

namespace affchar {

namespace {

// Level-k affine weight with packed finite part.
struct PackedAffine {
  Weight finite;
  Rational delta;
};

std::int64_t pairing(const RootSystem& rs, const PackedAffine& w, std::int64_t k, int node) {
  if (node > 0) return w.finite[node - 1];
  std::int64_t m = k;
  for (int j = 0; j < rs.rank(); ++j) m -= rs.comarks()[j] * w.finite[j];
  return m;
}

void reflect(const RootSystem& rs, PackedAffine& w, std::int64_t k, int node) {
  const std::int64_t m = pairing(rs, w, k, node);
  if (node > 0) {
    w.finite -= m * rs.simple_root_weight(node);
  } else {
    w.finite += m * rs.highest_root_weight();
    w.delta += Rational(m);
  }
}

}  // namespace

DemazureCharacter demazure_character(const RootSystem& rs, const Coweight& lambda, std::int64_t k,
                                     const DemazureOptions& opts) {
  if (k < 1) throw InputError("level must be at least 1");
  if (!rs.in_coweight_lattice(lambda)) throw InputError("lambda is not in the coweight lattice");
  if (!rs.is_dominant(lambda)) throw InputError("lambda is not dominant");

  const AffineWeight start = fixed_point_weight(rs, lambda, k);
  PackedAffine w{rs.to_packed(start.finite), start.delta};

  std::mt19937 rng(opts.seed);
  std::vector<int> word;
  for (;;) {
    std::vector<int> negative;
    for (int i = 0; i <= rs.rank(); ++i)
      if (pairing(rs, w, k, i) < 0) negative.push_back(i);
    if (negative.empty()) break;
    int node = negative.front();
    if (opts.order == RaisingOrder::LargestNode) {
      node = negative.back();
    } else if (opts.order == RaisingOrder::Random) {
      std::uniform_int_distribution<std::size_t> pick(0, negative.size() - 1);
      node = negative[pick(rng)];
    }
    word.push_back(node);
    reflect(rs, w, k, node);
  }

  QCharacter chi = QCharacter::monomial(rs.rank(), k, w.finite, -w.delta);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    chi = demazure_op(rs, *it, chi);
    if (chi.term_count() > opts.term_cap) throw CapExceeded("Demazure character too large", opts.term_cap);
  }
  chi.normalize();
  if (opts.depth) chi.truncate(*opts.depth);

  return {std::move(chi), lambda, k, AffineWeight{k, rs.from_packed(w.finite), w.delta}, std::move(word)};
}

BigInt finite_multiplicity(const DemazureCharacter& dc, const Weight& nu) {
  if (dc.character.truncated()) throw InputError("finite multiplicity of a truncated character");
  BigInt total = 0;
  for (const auto& [q, layer] : dc.character.layers()) {
    const auto it = layer.find(nu);
    if (it != layer.end()) total += it->second;
  }
  return total;
}

TensorCheck tensor_product_check(const RootSystem& rs, const Coweight& lambda, const Coweight& mu,
                                 std::int64_t k, const DemazureOptions& opts) {
  TensorCheck out;
  out.lhs = specialize_q1(demazure_character(rs, lambda + mu, k, opts).character);
  out.rhs = multiply(specialize_q1(demazure_character(rs, lambda, k, opts).character),
                     specialize_q1(demazure_character(rs, mu, k, opts).character));
  out.holds = out.lhs == out.rhs;
  return out;
}

bool restriction_domination_check(const RootSystem& rs, const Coweight& lambda, const Coweight& mu,
                                  std::int64_t k, const DemazureOptions& opts) {
  if (!dominance_leq(rs, mu, lambda)) throw InputError("restriction check requires mu <= lambda");
  const FiniteCharacter big = specialize_q1(demazure_character(rs, lambda, k, opts).character);
  const FiniteCharacter small = specialize_q1(demazure_character(rs, mu, k, opts).character);
  for (const auto& [w, c] : small) {
    const auto it = big.find(w);
    if (it == big.end() || it->second < c) return false;
  }
  return true;
}

}  // namespace affchar
