#include "affchar/kacweyl.hpp"

#include <map>
#include <vector>

#include "affchar/fock.hpp"

namespace affchar {

namespace {

// Multiplies layers (indexed by integer q) by 1/(1 - q^n e^w) in place.
void geometric(std::vector<FiniteCharacter>& layers, int n, const Weight& w) {
  for (std::size_t q = static_cast<std::size_t>(n); q < layers.size(); ++q) {
    const FiniteCharacter& src = layers[q - static_cast<std::size_t>(n)];
    if (src.empty()) continue;
    FiniteCharacter& dst = layers[q];
    for (const auto& [v, c] : src) dst[v + w] += c;
  }
}

}  // namespace

void validate(const RootSystem& rs, const AffineDominantWeight& hw) {
  if (hw.level < 1) throw InputError("level must be at least 1");
  for (int i = rs.rank(); i < kMaxRank; ++i)
    if (hw.finite[i] != 0) throw InputError("finite weight has entries beyond the rank");
  if (!rs.is_dominant(hw.finite)) throw InputError("finite part is not dominant");
  std::int64_t theta = 0;
  for (int i = 0; i < rs.rank(); ++i) theta += rs.comarks()[i] * hw.finite[i];
  if (theta > hw.level) throw InputError("integrability bound <nu, theta> <= k violated");
}

QCharacter inverse_denominator(const RootSystem& rs, std::int64_t depth) {
  if (depth < 0) throw InputError("depth must be non-negative");
  std::vector<FiniteCharacter> layers(static_cast<std::size_t>(depth) + 1);
  layers[0][Weight{}] = 1;
  for (int n = 1; n <= depth; ++n) {
    for (int c = 0; c < rs.rank(); ++c) geometric(layers, n, Weight{});
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
      geometric(layers, n, rs.positive_root_weight(k));
      geometric(layers, n, -rs.positive_root_weight(k));
    }
  }
  LayerMap out;
  for (std::size_t q = 0; q < layers.size(); ++q)
    if (!layers[q].empty()) out.emplace(Rational(static_cast<std::int64_t>(q)), std::move(layers[q]));
  return QCharacter::from_layers(rs.rank(), 0, std::move(out), Rational(depth), true);
}

QCharacter weyl_kac_numerator(const RootSystem& rs, const AffineDominantWeight& hw, std::int64_t depth,
                              std::size_t cap) {
  validate(rs, hw);
  if (depth < 0) throw InputError("depth must be non-negative");
  const int n = rs.rank();
  const Weight rho = rs.rho();
  const Weight lbar = hw.finite + rho;
  const std::int64_t m = hw.level + rs.dual_coxeter_number();

  // depth(gamma) = <gamma, lbar> + m (gamma,gamma)/2
  //             = m/2 |gamma + c|^2 - |lbar|^2 / (2m),  iota(c) = lbar / m.
  Coweight c(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    c += (Rational(lbar[i - 1]) * rs.simple_root_norm(i) / Rational(2 * m)) * rs.fundamental_coweight(i);
  std::vector<Rational> lbar_f(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) lbar_f[static_cast<std::size_t>(i)] = lbar[i];
  const WeightVec lbar_v = rs.weight_from_fundamental(lbar_f);
  const Rational bound = (Rational(depth) + rs.weight_form(lbar_v, lbar_v) / Rational(2 * m)) / Rational(m);

  QCharacter num(n, hw.level, Rational(depth));
  std::map<Weight, FiniteCharacter> cache;
  for (const Coweight& v : shifted_lattice_vectors_below(rs, c, bound, cap)) {
    const Coweight gamma = v - c;
    Rational q = Rational(m) * rs.coweight_form(gamma, gamma) / 2;
    for (int i = 0; i < n; ++i) q += gamma[static_cast<std::size_t>(i)] * Rational(lbar[i]);
    if (q > depth) continue;
    const Weight xi = lbar + m * iota_packed(rs, gamma);
    int parity = 0;
    const Weight dom = rs.dominant_part(xi, &parity);
    bool singular = false;
    for (int i = 0; i < n; ++i) singular = singular || dom[i] == 0;
    if (singular) continue;
    auto it = cache.find(dom);
    if (it == cache.end()) it = cache.emplace(dom, finite_weyl_character(rs, dom - rho)).first;
    const int sign = parity ? -1 : 1;
    for (const auto& [w, mult] : it->second) num.add_term(w, q, sign * mult);
  }
  return num;
}

QCharacter weyl_kac_character(const RootSystem& rs, const AffineDominantWeight& hw, std::int64_t depth,
                              std::size_t cap) {
  return weyl_kac_character(rs, hw, depth, inverse_denominator(rs, depth), cap);
}

QCharacter weyl_kac_character(const RootSystem& rs, const AffineDominantWeight& hw, std::int64_t depth,
                              const QCharacter& inv_denominator, std::size_t cap) {
  if (inv_denominator.depth() != Rational(depth) || inv_denominator.rank() != rs.rank())
    throw InputError("inverse denominator was built for a different depth or rank");
  QCharacter num = weyl_kac_numerator(rs, hw, depth, cap);
  QCharacter out = qchar_mul(num, inv_denominator);
  out.normalize();
  for (const auto& [q, layer] : out.layers())
    for (const auto& [w, mult] : layer)
      if (mult < 0)
        throw std::logic_error("negative coefficient in a Weyl-Kac character at q=" + to_string(q) + " weight " +
                               format_weight(w, rs.rank()));
  return out;
}

}  // namespace affchar
