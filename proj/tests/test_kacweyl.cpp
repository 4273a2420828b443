#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affchar/fock.hpp"
#include "affchar/kacweyl.hpp"
#include "oracles.hpp"

using namespace affchar;

namespace {

Weight wt(std::initializer_list<int> xs) {
  Weight w;
  int i = 0;
  for (int x : xs) w[i++] = x;
  return w;
}

// sum over w = t_gamma u of sign(u) e^{w(k Lambda + nu + rho^) - rho^}, by
// brute force over the finite Weyl group and a box of translations.
QCharacter brute_numerator(const RootSystem& rs, const AffineDominantWeight& hw, int depth, int box) {
  const int n = rs.rank();
  const Weight rho = rs.rho();
  const Weight lbar = hw.finite + rho;
  const std::int64_t m = hw.level + rs.dual_coxeter_number();
  QCharacter out(n, hw.level, Rational(depth));
  oracle::for_each_weyl_element(rs, [&](const std::vector<int>& word, int sign) {
    const Weight ul = oracle::apply_word(rs, word, lbar);
    std::vector<std::int64_t> g(static_cast<std::size_t>(n), -box);
    for (;;) {
      const Coweight gamma = Coweight::from_ints(g);
      Rational q = Rational(m) * rs.coweight_form(gamma, gamma) / 2;
      for (int i = 0; i < n; ++i) q += Rational(g[static_cast<std::size_t>(i)] * ul[i]);
      if (q <= depth) out.add_term(ul + m * iota_packed(rs, gamma) - rho, q, sign);
      int j = 0;
      while (j < n && ++g[static_cast<std::size_t>(j)] > box) g[static_cast<std::size_t>(j++)] = -box;
      if (j == n) break;
    }
  });
  return out;
}

// prod_{alpha>0} (1 - e^{-alpha}) prod_{n=1..N} (1-q^n)^rank prod_{alpha} (1 - q^n e^alpha).
QCharacter full_denominator(const RootSystem& rs, int depth) {
  const int r = rs.rank();
  const Rational d(depth);
  QCharacter den = QCharacter::unit(r, d);
  auto factor = [&](const Weight& w, int n) {
    QCharacter f = QCharacter::unit(r, d);
    f.add_term(w, n, -1);
    den = qchar_mul(den, f);
  };
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) factor(-rs.positive_root_weight(k), 0);
  for (int n = 1; n <= depth; ++n) {
    for (int c = 0; c < r; ++c) factor(Weight{}, n);
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
      factor(rs.positive_root_weight(k), n);
      factor(-rs.positive_root_weight(k), n);
    }
  }
  return den;
}

}  // namespace

TEST_CASE("validate") {
  const auto a2 = build_root_system('A', 2);
  CHECK_NOTHROW(validate(a2, {1, wt({1, 0})}));
  CHECK_THROWS_AS(validate(a2, {1, wt({1, 1})}), InputError);
  CHECK_THROWS_AS(validate(a2, {1, wt({-1, 0})}), InputError);
  CHECK_THROWS_AS(validate(a2, {0, wt({0, 0})}), InputError);
  CHECK_NOTHROW(validate(a2, {2, wt({1, 1})}));
}

TEST_CASE("A1 basic representation") {
  const auto a1 = build_root_system('A', 1);
  const QCharacter chi = weyl_kac_character(a1, {1, Weight{}}, 3);
  CHECK(chi.layer(0) == FiniteCharacter{{wt({0}), 1}});
  CHECK(chi.coefficient(wt({0}), 1) == 1);
  CHECK(chi.coefficient(wt({0}), 2) == 2);
  CHECK(chi.coefficient(wt({0}), 3) == 3);
  CHECK(dimension(chi.layer(1)) == 3);
  CHECK(chi.truncated());
}

TEST_CASE("inverse denominator inverts the denominator") {
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'G', 2}}) {
    const auto rs = build_root_system(t, r);
    QCharacter den = QCharacter::unit(r, Rational(3));
    for (int n = 1; n <= 3; ++n) {
      auto factor = [&](const Weight& w) {
        QCharacter f = QCharacter::unit(r, Rational(3));
        f.add_term(w, n, -1);
        den = qchar_mul(den, f);
      };
      for (int c = 0; c < r; ++c) factor(Weight{});
      for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
        factor(rs.positive_root_weight(k));
        factor(-rs.positive_root_weight(k));
      }
    }
    const QCharacter prod = qchar_mul(den, inverse_denominator(rs, 3));
    CHECK(equal_up_to_common_depth(prod, QCharacter::unit(r, Rational(3))));
  }
}

TEST_CASE("agrees with the brute-force Weyl-Kac numerator") {
  struct Case {
    char type;
    int rank;
    AffineDominantWeight hw;
    int depth;
  };
  const std::vector<Case> cases = {
      {'A', 1, {1, wt({0})}, 4}, {'A', 1, {1, wt({1})}, 4}, {'A', 1, {3, wt({2})}, 3},
      {'A', 2, {1, wt({0, 0})}, 3}, {'A', 2, {1, wt({0, 1})}, 3}, {'A', 2, {2, wt({1, 1})}, 2},
      {'C', 2, {1, wt({0, 0})}, 2}, {'C', 2, {1, wt({0, 1})}, 2}, {'G', 2, {1, wt({0, 0})}, 2},
      {'B', 3, {1, wt({0, 0, 1})}, 1},
  };
  for (const auto& c : cases) {
    const auto rs = build_root_system(c.type, c.rank);
    INFO(rs.label(), " depth ", c.depth);
    const QCharacter chi = weyl_kac_character(rs, c.hw, c.depth);
    const QCharacter lhs = qchar_mul(chi, full_denominator(rs, c.depth));
    CHECK(equal_up_to_common_depth(lhs, brute_numerator(rs, c.hw, c.depth, c.depth + 1)));
    CHECK(is_weyl_invariant(rs, chi));
  }
}

TEST_CASE("level-one layer structure") {
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'C', 2}, {'G', 2}, {'D', 4}, {'B', 3}}) {
    const auto rs = build_root_system(t, r);
    const QCharacter chi = weyl_kac_character(rs, {1, Weight{}}, 2);
    CHECK(chi.layer(0) == FiniteCharacter{{Weight{}, 1}});
    // The first layer is the adjoint representation.
    CHECK(chi.layer(1) == finite_weyl_character(rs, rs.highest_root_weight()));
    CHECK(is_weyl_invariant(rs, chi));
  }
}

TEST_CASE("disjoint supports for different classes at level one") {
  const auto a2 = build_root_system('A', 2);
  const QCharacter c0 = weyl_kac_character(a2, {1, wt({0, 0})}, 3);
  const QCharacter c1 = weyl_kac_character(a2, {1, wt({1, 0})}, 3);
  const QCharacter c2 = weyl_kac_character(a2, {1, wt({0, 1})}, 3);
  auto key = [](const Weight& w) { return ((w[0] - w[1]) % 3 + 3) % 3; };
  for (const auto& [chi, expected] : std::vector<std::pair<const QCharacter*, int>>{{&c0, 0}, {&c1, 1}, {&c2, 2}})
    for (const auto& [q, layer] : chi->layers())
      for (const auto& [w, m] : layer) CHECK(key(w) == expected);
}

TEST_CASE("precomputed inverse denominator and caps") {
  const auto d4 = build_root_system('D', 4);
  const QCharacter p = inverse_denominator(d4, 2);
  CHECK(weyl_kac_character(d4, {1, Weight{}}, 2, p) == weyl_kac_character(d4, {1, Weight{}}, 2));
  CHECK_THROWS_AS(weyl_kac_character(d4, {1, Weight{}}, 3, p), InputError);
  CHECK_THROWS_AS(weyl_kac_character(d4, {1, Weight{}}, 4, 3), CapExceeded);
}
