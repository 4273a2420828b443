#include "affchar/fock.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace affchar {

std::vector<BigInt> multipartition_counts(int colors, int max_d) {
  if (colors < 0 || max_d < 0) throw InputError("multipartition counts need non-negative arguments");
  std::vector<BigInt> p(static_cast<std::size_t>(max_d) + 1, 0);
  p[0] = 1;
  // Multiply by 1/(1-q^n) once per color and part size.
  for (int n = 1; n <= max_d; ++n)
    for (int c = 0; c < colors; ++c)
      for (int d = n; d <= max_d; ++d) p[static_cast<std::size_t>(d)] += p[static_cast<std::size_t>(d - n)];
  return p;
}

QCharacter fock_character(const RootSystem& rs, const Coweight& lambda, std::int64_t k, const Rational& depth) {
  if (k < 1) throw InputError("level must be at least 1");
  if (!rs.in_coweight_lattice(lambda)) throw InputError("lambda is not in the coweight lattice");
  QCharacter chi(rs.rank(), k, depth);
  const Rational offset = Rational(k) * rs.coweight_form(lambda, lambda) / 2;
  const Weight w = k * iota_packed(rs, lambda);
  if (offset > depth) {
    chi.add_term(w, offset, 1);  // flags truncation
    return chi;
  }
  const std::int64_t max_d = floor(depth - offset);
  const auto p = multipartition_counts(rs.rank(), static_cast<int>(max_d));
  for (std::int64_t d = 0; d <= max_d; ++d) chi.add_term(w, offset + Rational(d), p[static_cast<std::size_t>(d)]);
  chi.add_term(w, offset + Rational(max_d + 1), 1);  // the next layer is nonzero: flag it
  return chi;
}

std::vector<Coweight> coset_vectors_below(const RootSystem& rs, const LatticeCoset& coset, const Rational& bound,
                                          std::size_t cap) {
  if (static_cast<int>(coset.shift.size()) != rs.rank()) throw InputError("coset shift has the wrong rank");
  if (!rs.in_coweight_lattice(coset.shift)) throw InputError("coset shift is not in the coweight lattice");
  return shifted_lattice_vectors_below(rs, coset.shift, bound, cap);
}

std::vector<Coweight> shifted_lattice_vectors_below(const RootSystem& rs, const Coweight& origin,
                                                    const Rational& bound, std::size_t cap) {
  const int n = rs.rank();
  if (static_cast<int>(origin.size()) != n) throw InputError("shift has the wrong rank");
  const LatticeCoset coset{origin};

  // Gram = U^T D U with U unit upper triangular (Fincke-Pohst).
  const auto& gram = rs.coweight_gram();
  std::vector<std::vector<double>> u(n, std::vector<double>(n, 0.0));
  std::vector<double> diag(n, 0.0);
  auto g = [&](int i, int j) {
    const Rational& r = gram[i][j];
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
  };
  for (int i = 0; i < n; ++i) {
    double d = g(i, i);
    for (int k = 0; k < i; ++k) d -= diag[k] * u[k][i] * u[k][i];
    if (d <= 0) throw InputError("form is not positive definite");
    diag[i] = d;
    u[i][i] = 1.0;
    for (int j = i + 1; j < n; ++j) {
      double s = g(i, j);
      for (int k = 0; k < i; ++k) s -= diag[k] * u[k][i] * u[k][j];
      u[i][j] = s / d;
    }
  }

  std::vector<double> shift(n);
  for (int i = 0; i < n; ++i)
    shift[i] = static_cast<double>(coset.shift[i].numerator()) / static_cast<double>(coset.shift[i].denominator());
  const double budget = 2.0 * static_cast<double>(bound.numerator()) / static_cast<double>(bound.denominator());
  constexpr double kSlack = 1e-7;

  std::vector<std::int64_t> m(n, 0);  // integer part
  std::vector<double> y(n, 0.0);      // m + shift
  std::vector<Coweight> out;

  std::function<void(int, double)> descend = [&](int i, double remaining) {
    if (i < 0) {
      Coweight v = coset.shift;
      for (int j = 0; j < n; ++j) v[j] += Rational(m[j]);
      if (rs.coweight_form(v, v) / 2 <= bound) {
        out.push_back(std::move(v));
        if (out.size() > cap) throw CapExceeded("too many lattice vectors", cap);
      }
      return;
    }
    double t = 0;
    for (int j = i + 1; j < n; ++j) t += u[i][j] * y[j];
    const double r = std::sqrt(std::max(0.0, remaining / diag[i])) + kSlack;
    // y_i = m_i + shift_i in [-t - r, -t + r]
    const auto lo = static_cast<std::int64_t>(std::ceil(-t - r - shift[i]));
    const auto hi = static_cast<std::int64_t>(std::floor(-t + r - shift[i]));
    for (std::int64_t mi = lo; mi <= hi; ++mi) {
      m[i] = mi;
      y[i] = static_cast<double>(mi) + shift[i];
      const double e = y[i] + t;
      descend(i - 1, remaining - diag[i] * e * e + kSlack);
    }
  };
  descend(n - 1, budget + kSlack);
  std::sort(out.begin(), out.end());
  return out;
}

Rational coset_min_norm(const RootSystem& rs, const LatticeCoset& coset) {
  const Rational start = rs.coweight_form(coset.shift, coset.shift) / 2;
  Rational best = start;
  for (const auto& v : coset_vectors_below(rs, coset, start)) best = std::min(best, rs.coweight_form(v, v) / 2);
  return best;
}

QCharacter lattice_character(const RootSystem& rs, const LatticeCoset& coset, const Rational& depth, std::int64_t k,
                             std::size_t cap) {
  if (depth < 0) throw InputError("depth must be non-negative");
  if (k < 1) throw InputError("level must be at least 1");
  const Rational base = coset_min_norm(rs, coset);
  const Rational shift = Rational(k) * base;
  // Absolute q of pi^k_lambda is k (lambda,lambda)/2; keep it within shift + depth.
  const Rational abs_depth = shift + depth;
  QCharacter total(rs.rank(), k, abs_depth);
  for (const auto& v : coset_vectors_below(rs, coset, base + depth / Rational(k), cap))
    total += fock_character(rs, v, k, abs_depth);
  // Vectors just past the bound exist, so the sum is always a truncation.
  QCharacter out(rs.rank(), k, depth);
  for (const auto& [q, layer] : total.layers())
    for (const auto& [w, c] : layer) out.add_term(w, q - shift, c);
  out.add_term(Weight{}, depth + 1, 1);
  return out;
}

}  // namespace affchar
