#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#ifdef AFFCHAR_HAVE_OPENMP
#include <omp.h>
#endif

#include "affchar/affine.hpp"
#include "affchar/qcharacter.hpp"

using namespace affchar;

namespace {

Weight wt(std::initializer_list<int> xs) {
  Weight w;
  int i = 0;
  for (int x : xs) w[i++] = x;
  return w;
}

QCharacter random_character(const RootSystem& rs, std::mt19937& rng, std::int64_t level, int terms = 6) {
  std::uniform_int_distribution<int> coord(-3, 3), qd(0, 2), cd(-2, 3);
  QCharacter chi(rs.rank(), level);
  for (int t = 0; t < terms; ++t) {
    Weight w;
    for (int i = 0; i < rs.rank(); ++i) w[i] = coord(rng);
    chi.add_term(w, Rational(qd(rng)), cd(rng));
  }
  return chi;
}

// Coxeter exponent m_ij of the affine diagram, 0 for infinity.
int coxeter_m(const RootSystem& rs, int i, int j) {
  const auto aij = pair(rs, affine_simple_root(rs, j), affine_simple_coroot(rs, i));
  const auto aji = pair(rs, affine_simple_root(rs, i), affine_simple_coroot(rs, j));
  const auto p = (aij * aji).numerator();
  switch (p) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

QCharacter apply_word(const RootSystem& rs, const std::vector<int>& word, QCharacter chi) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) chi = demazure_op(rs, *it, chi);
  return chi;
}

}  // namespace

TEST_CASE("qchar_mul: examples") {
  const auto a1 = build_root_system('A', 1);
  std::mt19937 rng(1);
  const QCharacter a = random_character(a1, rng, 1);
  CHECK(qchar_mul(a, QCharacter::unit(1)) == a);

  const Rational n1(1);
  QCharacter x(1, 1, n1);
  x.add_term(wt({1}), 0, 1);
  x.add_term(wt({-1}), 1, 1);
  const QCharacter sq = qchar_mul(x, x);
  CHECK(sq.level() == 2);
  CHECK(sq.truncated());
  CHECK(sq.term_count() == 2);
  CHECK(sq.coefficient(wt({2}), 0) == 1);
  CHECK(sq.coefficient(wt({0}), 1) == 2);

  QCharacter y(1, 1, Rational(2));
  CHECK_THROWS_AS(qchar_mul(x, y), InputError);
}

TEST_CASE("qchar_mul: mass bound, distributivity, specialization") {
  std::mt19937 rng(2);
  const auto a2 = build_root_system('A', 2);
  for (int trial = 0; trial < 20; ++trial) {
    QCharacter a(2, 0, Rational(2)), b(2, 0, Rational(2)), c(2, 0, Rational(2));
    std::uniform_int_distribution<int> coord(-2, 2), qd(0, 3), cd(0, 3);
    for (auto* x : {&a, &b, &c})
      for (int t = 0; t < 5; ++t) x->add_term(wt({coord(rng), coord(rng)}), qd(rng), cd(rng));
    const QCharacter ab = qchar_mul(a, b);
    auto mass = [](const QCharacter& x) {
      BigInt s = 0;
      for (const auto& [q, l] : x.layers())
        for (const auto& [w, m] : l) s += m;
      return s;
    };
    CHECK(mass(ab) <= mass(a) * mass(b));
    CHECK(qchar_mul(a, b + c) == qchar_mul(a, b) + qchar_mul(a, c));
    CHECK(qchar_mul(a, b).layers() == qchar_mul(b, a).layers());
  }
  for (int trial = 0; trial < 10; ++trial) {
    const QCharacter a = random_character(a2, rng, 0), b = random_character(a2, rng, 0);
    CHECK(specialize_q1(qchar_mul(a, b)) == multiply(specialize_q1(a), specialize_q1(b)));
  }
}

TEST_CASE("demazure_op: single terms") {
  const auto a1 = build_root_system('A', 1);
  const QCharacter fixed = QCharacter::monomial(1, 1, wt({0}), 0);
  CHECK(demazure_op(a1, 1, fixed) == fixed);

  const QCharacter two = QCharacter::monomial(1, 1, wt({2}), 0);
  const QCharacter d = demazure_op(a1, 1, two);
  CHECK(d.term_count() == 3);
  CHECK(d.coefficient(wt({2}), 0) == 1);
  CHECK(d.coefficient(wt({0}), 0) == 1);
  CHECK(d.coefficient(wt({-2}), 0) == 1);

  CHECK(demazure_op(a1, 1, QCharacter::monomial(1, 1, wt({-1}), 0)).empty());

  const QCharacter neg = demazure_op(a1, 1, QCharacter::monomial(1, 1, wt({-3}), 0));
  CHECK(neg.coefficient(wt({-1}), 0) == -1);
  CHECK(neg.coefficient(wt({1}), 0) == -1);
  CHECK(neg.term_count() == 2);

  // Node 0 at level 1: <Lambda - 2 omega, K - theta> = 1 + 2.
  const QCharacter d0 = demazure_op(a1, 0, QCharacter::monomial(1, 1, wt({-2}), 0));
  CHECK(d0.term_count() == 4);
  CHECK(d0.coefficient(wt({0}), 1) == 1);
  CHECK(d0.coefficient(wt({2}), 2) == 1);
  CHECK(d0.coefficient(wt({4}), 3) == 1);
  CHECK(d0.level() == 1);

  QCharacter shallow(1, 1, Rational(1));
  shallow.add_term(wt({-2}), 0, 1);
  const QCharacter cut = demazure_op(a1, 0, shallow);
  CHECK(cut.truncated());
  CHECK(cut.term_count() == 2);
}

TEST_CASE("demazure_op: idempotence and braid relations") {
  std::mt19937 rng(3);
  for (auto [t, r] : std::vector<std::pair<char, int>>{{'A', 2}, {'C', 2}, {'G', 2}, {'D', 4}, {'B', 3}}) {
    const auto rs = build_root_system(t, r);
    for (int trial = 0; trial < 8; ++trial) {
      const QCharacter chi = random_character(rs, rng, 1 + trial % 2);
      for (int i = 0; i <= r; ++i) {
        const QCharacter once = demazure_op(rs, i, chi);
        CHECK(demazure_op(rs, i, once) == once);
        CHECK(once.level() == chi.level());
        for (int j = i + 1; j <= r; ++j) {
          const int m = coxeter_m(rs, i, j);
          if (m == 0) continue;
          std::vector<int> wi, wj;
          for (int k = 0; k < m; ++k) {
            wi.push_back(k % 2 ? j : i);
            wj.push_back(k % 2 ? i : j);
          }
          CHECK_MESSAGE(apply_word(rs, wi, chi) == apply_word(rs, wj, chi), rs.label(), " ", i, " ", j);
        }
      }
    }
  }
}

TEST_CASE("kernels: serial and parallel agree exactly") {
#ifdef AFFCHAR_HAVE_OPENMP
  omp_set_num_threads(4);
#endif
  std::mt19937 rng(4);
  const auto d4 = build_root_system('D', 4);
  for (int trial = 0; trial < 10; ++trial) {
    const QCharacter a = random_character(d4, rng, 1, 30), b = random_character(d4, rng, 1, 30);
    for (std::optional<Rational> bound : {std::optional<Rational>{}, std::optional<Rational>{Rational(2)}}) {
      kernels::Cutoff c1{bound}, c2{bound};
      CHECK(kernels::convolve_serial(a.layers(), b.layers(), c1) ==
            kernels::convolve_parallel(a.layers(), b.layers(), c2));
      CHECK(c1.dropped == c2.dropped);
      for (int node = 0; node <= 4; ++node) {
        const auto op = demazure_string(d4, node, 1);
        kernels::Cutoff d1{bound}, d2{bound};
        CHECK(kernels::demazure_serial(a.layers(), op, d1) == kernels::demazure_parallel(a.layers(), op, d2));
        CHECK(d1.dropped == d2.dropped);
      }
    }
  }
  const auto saved = kernels::mode();
  kernels::set_mode(kernels::Mode::Serial);
  CHECK(kernels::mode() == kernels::Mode::Serial);
  kernels::set_mode(saved);
}

TEST_CASE("specialize_q1 and Weyl invariance") {
  const auto a1 = build_root_system('A', 1);
  QCharacter chi(1, 1);
  chi.add_term(wt({0}), 0, 1);
  chi.add_term(wt({2}), 1, 1);
  chi.add_term(wt({0}), 1, 1);
  chi.add_term(wt({-2}), 1, 1);
  const FiniteCharacter q1 = specialize_q1(chi);
  CHECK(q1 == FiniteCharacter{{wt({-2}), 1}, {wt({0}), 2}, {wt({2}), 1}});
  CHECK(is_weyl_invariant(a1, chi));
  CHECK(is_weyl_invariant(a1, QCharacter::unit(1)));
  CHECK_FALSE(is_weyl_invariant(a1, QCharacter::monomial(1, 1, wt({1}), 0)));

  const auto b3 = build_root_system('B', 3);
  const QCharacter emb = QCharacter::from_finite(3, 1, finite_weyl_character(b3, wt({0, 1, 1})));
  CHECK(is_weyl_invariant(b3, emb));

  QCharacter trunc(1, 1, Rational(0));
  trunc.add_term(wt({0}), 1, 1);
  CHECK(trunc.truncated());
  CHECK_THROWS_AS(specialize_q1(trunc), InputError);
  CHECK_NOTHROW(specialize_q1(trunc, true));
}

TEST_CASE("truncation and comparison") {
  QCharacter deep(1, 1), shallow(1, 1, Rational(1));
  for (int q = 0; q <= 3; ++q) {
    deep.add_term(wt({0}), q, q + 1);
    shallow.add_term(wt({0}), q, q + 1);
  }
  CHECK(shallow.truncated());
  CHECK_FALSE(deep.truncated());
  CHECK(equal_up_to_common_depth(deep, shallow));
  CHECK_FALSE(deep == shallow);
  // Sticky through arithmetic.
  CHECK((shallow + shallow).truncated());

  QCharacter other = deep;
  other.add_term(wt({2}), 1, 1);
  const auto d = first_discrepancy(deep, other);
  REQUIRE(d);
  CHECK(d->q == 1);
  CHECK(d->weight == wt({2}));
  CHECK(d->lhs == 0);
  CHECK(d->rhs == 1);
  CHECK_FALSE(first_discrepancy(deep, deep));

  QCharacter shifted(1, 1);
  shifted.add_term(wt({1}), Rational(-3, 2), 2);
  shifted.add_term(wt({1}), Rational(1, 2), 1);
  shifted.normalize();
  CHECK(shifted.min_q() == 0);
  CHECK(shifted.coefficient(wt({1}), 2) == 1);
}

TEST_CASE("serialization") {
  QCharacter chi(2, 1);
  chi.add_term(wt({1, -1}), Rational(1, 2), 3);
  chi.add_term(wt({0, 0}), 0, 1);
  chi.add_term(wt({-1, 0}), 0, BigInt("123456789012345678901234567890"));
  const std::string text = serialize(chi);
  CHECK(text ==
        "w=(-1,0) q=0/1 coeff=123456789012345678901234567890\n"
        "w=(0,0) q=0/1 coeff=1\n"
        "w=(1,-1) q=1/2 coeff=3\n");
  CHECK(parse_qcharacter(text, 2, 1) == chi);
  CHECK(serialize(parse_qcharacter(text, 2, 1)) == text);
  CHECK_THROWS_AS(parse_qcharacter("w=(1) q=0/1 coeff=1\n", 2, 1), InputError);
  CHECK_THROWS_AS(parse_qcharacter("w=(1,0) q=x coeff=1\n", 2, 1), std::exception);
  CHECK_THROWS_AS(parse_qcharacter("garbage\n", 2, 1), InputError);
}
