#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "affchar/fock.hpp"
#include "oracles.hpp"

using namespace affchar;

namespace {

Weight wt(std::initializer_list<int> xs) {
  Weight w;
  int i = 0;
  for (int x : xs) w[i++] = x;
  return w;
}

// All coset vectors with coordinates in a box, filtered by norm.
std::vector<Coweight> brute_vectors(const RootSystem& rs, const Coweight& shift, const Rational& bound, int box) {
  std::vector<Coweight> out;
  const int n = rs.rank();
  std::vector<int> m(n, -box);
  for (;;) {
    Coweight v = shift;
    for (int j = 0; j < n; ++j) v[j] += Rational(m[j]);
    if (rs.coweight_form(v, v) / 2 <= bound) out.push_back(v);
    int j = 0;
    while (j < n && ++m[j] > box) m[j++] = -box;
    if (j == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("multipartition counts") {
  CHECK(multipartition_counts(1, 6) == std::vector<BigInt>{1, 1, 2, 3, 5, 7, 11});
  for (int colors = 0; colors <= 4; ++colors) {
    const auto p = multipartition_counts(colors, 8);
    for (int d = 0; d <= 8; ++d) CHECK(p[static_cast<std::size_t>(d)] == oracle::colored_partitions_brute(colors, d));
  }
}

TEST_CASE("fock_character") {
  const auto a1 = build_root_system('A', 1);
  const QCharacter f0 = fock_character(a1, Coweight(1), 1, 3);
  CHECK(f0.coefficient(wt({0}), 0) == 1);
  CHECK(f0.coefficient(wt({0}), 1) == 1);
  CHECK(f0.coefficient(wt({0}), 2) == 2);
  CHECK(f0.coefficient(wt({0}), 3) == 3);
  CHECK(f0.term_count() == 4);
  CHECK(f0.truncated());

  const Coweight alpha = a1.coweight_from_fundamental(std::vector<std::int64_t>{2});
  const QCharacter fa = fock_character(a1, alpha, 1, 3);
  CHECK(fa.min_q() == 1);
  CHECK(fa.coefficient(wt({2}), 1) == 1);
  for (const auto& [q, layer] : fa.layers()) {
    CHECK(layer.size() == 1);
    CHECK(layer.begin()->first == wt({2}));
  }

  const auto d4 = build_root_system('D', 4);
  const QCharacter f2 = fock_character(d4, d4.fundamental_coweight(1), 2, 4);
  CHECK(f2.min_q() == 1);  // 2 * (omega1, omega1) / 2
  CHECK(f2.coefficient(wt({2, 0, 0, 0}), 2) == 4);
  CHECK_THROWS_AS(fock_character(d4, Coweight(4), 0, 4), InputError);
}

TEST_CASE("coset enumeration matches a box search") {
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'C', 3}, {'G', 2}, {'D', 4}}) {
    const auto rs = build_root_system(t, r);
    for (const auto& m : minuscule_reps(rs))
      for (const Rational bound : {Rational(0), Rational(1), Rational(5, 2), Rational(4)}) {
        const auto fast = coset_vectors_below(rs, LatticeCoset{m.coweight}, bound);
        CHECK_MESSAGE(fast == brute_vectors(rs, m.coweight, bound, r <= 2 ? 8 : 5), rs.label());
      }
    if (rs.simply_laced())
      for (const auto& v : coset_vectors_below(rs, LatticeCoset{Coweight(static_cast<std::size_t>(r))}, 6))
        CHECK(is_integer(rs.coweight_form(v, v) / 2));
  }
  const auto a1 = build_root_system('A', 1);
  CHECK_THROWS_AS(coset_vectors_below(a1, LatticeCoset{Coweight(1)}, 1000, 10), CapExceeded);
}

TEST_CASE("coset minimal norms") {
  const auto a2 = build_root_system('A', 2);
  CHECK(coset_min_norm(a2, LatticeCoset{Coweight(2)}) == 0);
  CHECK(coset_min_norm(a2, LatticeCoset{a2.fundamental_coweight(1)}) == Rational(1, 3));
  // A non-minimal representative of the same coset.
  Coweight far = a2.fundamental_coweight(1);
  far[0] += 3;
  far[1] -= 2;
  CHECK(coset_min_norm(a2, LatticeCoset{far}) == Rational(1, 3));
}

TEST_CASE("lattice_character: A1") {
  const auto a1 = build_root_system('A', 1);
  const QCharacter l3 = lattice_character(a1, LatticeCoset{Coweight(1)}, 3);
  CHECK(l3.coefficient(wt({0}), 0) == 1);
  CHECK(l3.coefficient(wt({0}), 1) == 1);
  CHECK(l3.coefficient(wt({0}), 2) == 2);
  CHECK(l3.coefficient(wt({0}), 3) == 3);
  CHECK(l3.truncated());
  const QCharacter l1 = lattice_character(a1, LatticeCoset{Coweight(1)}, 1);
  CHECK(l1.coefficient(wt({2}), 1) == 1);
  CHECK(l1.coefficient(wt({-2}), 1) == 1);

  // Odd coset: shells at (omega,omega)/2 = 1/4 and 9/4, i.e. q^0 and q^2.
  const QCharacter odd = lattice_character(a1, LatticeCoset{a1.fundamental_coweight(1)}, 2);
  CHECK(odd.layer(0) == FiniteCharacter{{wt({-1}), 1}, {wt({1}), 1}});
  CHECK(odd.layer(1) == FiniteCharacter{{wt({-1}), 1}, {wt({1}), 1}});
  CHECK(odd.coefficient(wt({3}), 2) == 1);
  CHECK(odd.coefficient(wt({1}), 2) == 2);
}

TEST_CASE("lattice_character: properties") {
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'D', 4}, {'C', 2}, {'G', 2}}) {
    const auto rs = build_root_system(t, r);
    for (const auto& m : minuscule_reps(rs)) {
      const QCharacter chi = lattice_character(rs, LatticeCoset{m.coweight}, 4);
      CHECK(chi.min_q() == 0);
      CHECK(is_weyl_invariant(rs, chi));

      // Theta series times the multipartition series.
      const Rational base = coset_min_norm(rs, LatticeCoset{m.coweight});
      QCharacter theta(rs.rank(), 0, Rational(4));
      for (const auto& v : coset_vectors_below(rs, LatticeCoset{m.coweight}, base + 4))
        theta.add_term(iota_packed(rs, v), rs.coweight_form(v, v) / 2 - base, 1);
      QCharacter heis(rs.rank(), 1, Rational(4));
      const auto p = multipartition_counts(rs.rank(), 4);
      for (int d = 0; d <= 4; ++d) heis.add_term(Weight{}, d, p[static_cast<std::size_t>(d)]);
      CHECK(equal_up_to_common_depth(qchar_mul(theta, heis), chi));
    }
    if (rs.simply_laced()) {
      const QCharacter chi = lattice_character(rs, LatticeCoset{Coweight(static_cast<std::size_t>(r))}, 1);
      CHECK(dimension(chi.layer(1)) == BigInt(r + 2 * static_cast<int>(rs.positive_roots().size())));
    }
  }
}
