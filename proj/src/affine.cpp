#include "affchar/affine.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace affchar {

namespace {

void check_node(const RootSystem& rs, int node) {
  if (node < 0 || node > rs.rank())
    throw InputError("node index " + std::to_string(node) + " outside 0.." + std::to_string(rs.rank()));
}

WeightVec to_weightvec(const std::vector<std::int64_t>& v) { return WeightVec::from_ints(v); }

// (a, a)* for a finite root given in simple-root coordinates; throws unless
// +-a is a root.
Rational finite_root_norm(const RootSystem& rs, const std::vector<std::int64_t>& a) {
  std::vector<std::int64_t> pos = a;
  if (std::all_of(a.begin(), a.end(), [](auto x) { return x <= 0; }))
    for (auto& x : pos) x = -x;
  const int idx = rs.root_index(pos);
  if (idx < 0) throw InputError("finite part is not a root");
  return rs.root_norm(static_cast<std::size_t>(idx));
}

}  // namespace

bool AffineRoot::is_real() const {
  return std::any_of(finite.begin(), finite.end(), [](auto x) { return x != 0; });
}

bool AffineRoot::is_positive(const RootSystem& rs) const {
  (void)rs;
  if (n != 0) return n > 0;
  return is_real() && std::all_of(finite.begin(), finite.end(), [](auto x) { return x >= 0; });
}

AffineRoot affine_simple_root(const RootSystem& rs, int node) {
  check_node(rs, node);
  AffineRoot r{0, std::vector<std::int64_t>(static_cast<std::size_t>(rs.rank()), 0)};
  if (node == 0) {
    r.n = 1;
    for (int j = 0; j < rs.rank(); ++j) r.finite[j] = -rs.marks()[j];
  } else {
    r.finite[node - 1] = 1;
  }
  return r;
}

AffineCoroot affine_simple_coroot(const RootSystem& rs, int node) {
  check_node(rs, node);
  AffineCoroot c{Rational(0), Coweight(static_cast<std::size_t>(rs.rank()))};
  if (node == 0) {
    c.k_coeff = 1;
    c.finite = -Coweight::from_ints(rs.comarks());
  } else {
    c.finite[node - 1] = 1;
  }
  return c;
}

Rational pair(const RootSystem& rs, const AffineWeight& w, const AffineCoroot& c) {
  return Rational(w.level) * c.k_coeff + rs.pair(c.finite, w.finite);
}

Rational pair(const RootSystem& rs, const AffineRoot& r, const AffineCoroot& c) {
  return rs.pair(c.finite, r.finite);
}

AffineRoot reflect(const RootSystem& rs, const AffineRoot& r, int node) {
  const Rational m = pair(rs, r, affine_simple_coroot(rs, node));
  const AffineRoot s = affine_simple_root(rs, node);
  const std::int64_t k = m.numerator();  // integral on the root lattice
  AffineRoot out = r;
  out.n -= k * s.n;
  for (std::size_t j = 0; j < out.finite.size(); ++j) out.finite[j] -= k * s.finite[j];
  return out;
}

AffineCoroot reflect(const RootSystem& rs, const AffineCoroot& c, int node) {
  const Rational m = pair(rs, affine_simple_root(rs, node), c);
  const AffineCoroot s = affine_simple_coroot(rs, node);
  return {c.k_coeff - m * s.k_coeff, c.finite - m * s.finite};
}

AffineWeight reflect(const RootSystem& rs, const AffineWeight& w, int node) {
  const Rational m = pair(rs, w, affine_simple_coroot(rs, node));
  const AffineRoot s = affine_simple_root(rs, node);
  return {w.level, w.finite - m * to_weightvec(s.finite), w.delta - m * Rational(s.n)};
}

AffineCoroot affine_coroot(const RootSystem& rs, const AffineRoot& root) {
  if (!root.is_real()) throw InputError("imaginary roots have no coroot");
  const Rational norm = finite_root_norm(rs, root.finite);
  Coweight co(root.finite.size());
  for (int j = 0; j < rs.rank(); ++j) co[j] = Rational(root.finite[j]) * rs.simple_root_norm(j + 1) / norm;
  return {Rational(2 * root.n) / norm, co};
}

AffineWeight fixed_point_weight(const RootSystem& rs, const Coweight& mu, std::int64_t k) {
  return {k, -Rational(k) * iota(rs, mu), -Rational(k) * rs.coweight_form(mu, mu) / 2};
}

CurveData curve_data(const RootSystem& rs, const Coweight& lambda, const AffineRoot& root) {
  if (!root.is_real()) throw InputError("curve direction must be a real root");
  const Rational norm = finite_root_norm(rs, root.finite);
  const Rational m = rs.pair(lambda, root.finite) - Rational(root.n);
  if (m <= 0)
    throw InputError("degenerate orbit: n >= <lambda, alpha> leaves the fixed point unchanged");
  const AffineCoroot co = affine_coroot(rs, AffineRoot{0, root.finite});
  return {2 * m / norm, lambda, lambda - m * co.finite};
}

AffineWeylElement AffineWeylElement::identity(const RootSystem& rs) {
  const auto n = static_cast<std::size_t>(rs.rank());
  AffineWeylElement x;
  x.finite_.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) x.finite_[i][i] = 1;
  x.translation_ = Coweight(n);
  return x;
}

AffineWeylElement AffineWeylElement::simple_reflection(const RootSystem& rs, int node) {
  check_node(rs, node);
  AffineWeylElement x = identity(rs);
  const auto n = static_cast<std::size_t>(rs.rank());
  if (node > 0) {
    // s_i(c) = c - <c, alpha_i> e_i
    for (std::size_t k = 0; k < n; ++k) x.finite_[node - 1][k] -= rs.cartan()[k][node - 1];
    return x;
  }
  // r_0 = t_theta s_theta
  const auto& theta = rs.comarks();
  const auto& theta_root = rs.marks();
  for (std::size_t k = 0; k < n; ++k) {
    std::int64_t pk = 0;  // <e_k, theta_root>
    for (std::size_t j = 0; j < n; ++j) pk += rs.cartan()[k][j] * theta_root[j];
    for (std::size_t i = 0; i < n; ++i) x.finite_[i][k] -= theta[i] * pk;
  }
  x.translation_ = Coweight::from_ints(theta);
  return x;
}

AffineWeylElement AffineWeylElement::translation(const RootSystem& rs, const Coweight& t) {
  AffineWeylElement x = identity(rs);
  x.translation_ = t;
  return x;
}

AffineWeylElement AffineWeylElement::from_word(const RootSystem& rs, const std::vector<int>& word) {
  AffineWeylElement x = identity(rs);
  for (int i : word) x = x * simple_reflection(rs, i);
  return x;
}

AffineWeylElement AffineWeylElement::operator*(const AffineWeylElement& o) const {
  const auto n = finite_.size();
  AffineWeylElement r;
  r.finite_.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (finite_[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) r.finite_[i][j] += finite_[i][k] * o.finite_[k][j];
  r.translation_ = apply(o.translation_);
  return r;
}

Coweight AffineWeylElement::apply(const Coweight& v) const {
  Coweight out = translation_;
  for (std::size_t i = 0; i < finite_.size(); ++i)
    for (std::size_t j = 0; j < finite_.size(); ++j)
      if (finite_[i][j] != 0) out[i] += Rational(finite_[i][j]) * v[j];
  return out;
}

std::int64_t length(const RootSystem& rs, const AffineWeylElement& x) {
  // An interior point of the fundamental alcove.
  Coweight p(static_cast<std::size_t>(rs.rank()));
  for (int i = 1; i <= rs.rank(); ++i) p += rs.fundamental_coweight(i);
  p = Rational(1, rs.coxeter_number()) * p;
  const Coweight image = x.apply(p);
  std::int64_t len = 0;
  for (const auto& root : rs.positive_roots()) {
    const Rational b = rs.pair(image, root);
    if (is_integer(b)) throw std::logic_error("alcove point landed on a wall");
    len += std::abs(floor(b));
  }
  return len;
}

std::vector<int> translation_reduced_word(const RootSystem& rs, const Coweight& lambda) {
  if (!rs.in_coroot_lattice(lambda))
    throw InputError("translation word requires lambda in the coroot lattice");
  const AffineWeylElement target = AffineWeylElement::translation(rs, lambda);
  const AffineWeylElement id = AffineWeylElement::identity(rs);
  AffineWeylElement x = target;
  std::int64_t len = length(rs, x);
  std::vector<int> word;
  while (!(x == id)) {
    bool stepped = false;
    for (int i = 0; i <= rs.rank() && !stepped; ++i) {
      AffineWeylElement y = AffineWeylElement::simple_reflection(rs, i) * x;
      const std::int64_t ly = length(rs, y);
      if (ly < len) {
        word.push_back(i);
        x = std::move(y);
        len = ly;
        stepped = true;
      }
    }
    if (!stepped) throw std::logic_error("no descent found for a non-identity element");
  }
  if (!(AffineWeylElement::from_word(rs, word) == target))
    throw std::logic_error("reduced word does not reproduce the translation");
  return word;
}

std::vector<Coweight> fixed_point_support(const RootSystem& rs, const Coweight& lambda, std::size_t cap) {
  std::set<Coweight> support;
  for (const auto& mu : dominant_coweights_below(rs, lambda)) {
    for (auto& v : weyl_orbit(rs, mu, cap)) support.insert(std::move(v));
    if (support.size() > cap) throw CapExceeded("fixed-point support too large", cap);
  }
  return {support.begin(), support.end()};
}

}  // namespace affchar
