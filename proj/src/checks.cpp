#include "affchar/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "affchar/demazure.hpp"
#include "affchar/fock.hpp"
#include "affchar/kacweyl.hpp"

namespace affchar {

namespace {

std::string big(const BigInt& v) { return to_string(v); }

ordered_json weight_json(const Weight& w, int rank) {
  ordered_json a = ordered_json::array();
  for (int i = 0; i < rank; ++i) a.push_back(w[i]);
  return a;
}

ordered_json rational_list_json(const std::vector<Rational>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

ordered_json discrepancy_json(const Discrepancy& d, int rank) {
  ordered_json j;
  j["weight"] = weight_json(d.weight, rank);
  j["q"] = to_string(d.q);
  j["lhs"] = big(d.lhs);
  j["rhs"] = big(d.rhs);
  return j;
}

// First weight where two finite characters differ.
std::optional<ordered_json> finite_discrepancy(const FiniteCharacter& a, const FiniteCharacter& b, int rank) {
  std::set<Weight> ws;
  for (const auto& [w, c] : a) ws.insert(w);
  for (const auto& [w, c] : b) ws.insert(w);
  for (const auto& w : ws) {
    const auto ia = a.find(w), ib = b.find(w);
    const BigInt ca = ia == a.end() ? BigInt(0) : ia->second;
    const BigInt cb = ib == b.end() ? BigInt(0) : ib->second;
    if (ca != cb) {
      ordered_json j;
      j["weight"] = weight_json(w, rank);
      j["q"] = "q=1 specialization";
      j["lhs"] = big(ca);
      j["rhs"] = big(cb);
      return j;
    }
  }
  return std::nullopt;
}

ordered_json layer_dims(const QCharacter& chi) {
  ordered_json j = ordered_json::object();
  for (const auto& [q, layer] : chi.layers()) j[to_string(q)] = big(dimension(layer));
  return j;
}

RootSystem system_of(const CheckParams& p) { return build_root_system(p.type, p.rank); }

Coweight coweight_arg(const RootSystem& rs, const std::optional<std::vector<std::int64_t>>& v, const char* flag) {
  if (!v) throw InputError(std::string(flag) + " is required for this check");
  if (static_cast<int>(v->size()) != rs.rank())
    throw InputError(std::string(flag) + " needs " + std::to_string(rs.rank()) + " coefficients");
  return rs.coweight_from_fundamental(*v);
}

Coweight dominant_arg(const RootSystem& rs, const std::optional<std::vector<std::int64_t>>& v, const char* flag) {
  const Coweight c = coweight_arg(rs, v, flag);
  if (!rs.is_dominant(c)) throw InputError(std::string(flag) + " must be dominant (non-negative coefficients)");
  return c;
}

MinusculeRep coset_arg(const RootSystem& rs, const CheckParams& p) {
  const int node = p.coset.value_or(0);
  for (const auto& m : minuscule_reps(rs))
    if (m.node == node) return m;
  std::string nodes;
  for (const auto& m : minuscule_reps(rs)) nodes += (nodes.empty() ? "" : ",") + std::to_string(m.node);
  throw InputError("--coset " + std::to_string(node) + " is not a minuscule node of " + rs.label() +
                   " (choose from " + nodes + ")");
}

void require_level(const CheckParams& p) {
  if (p.level < 1) throw InputError("--level must be at least 1");
}

void require_depth(const CheckParams& p) {
  if (p.depth < 0) throw InputError("--depth must be non-negative");
}

DemazureOptions demazure_options(const CheckParams& p) {
  DemazureOptions o;
  o.term_cap = p.caps.elements;
  return o;
}

// Demazure characters and inverse denominators are reused across checks.
std::mutex g_cache_mutex;
std::map<std::tuple<char, int, std::vector<Rational>, std::int64_t>, DemazureCharacter> g_demazure_cache;
std::map<std::tuple<char, int, std::int64_t>, QCharacter> g_denominator_cache;

DemazureCharacter demazure_cached(const RootSystem& rs, const Coweight& lambda, const CheckParams& p) {
  const auto key = std::make_tuple(rs.type(), rs.rank(), lambda.coords, p.level);
  {
    std::lock_guard lock(g_cache_mutex);
    const auto it = g_demazure_cache.find(key);
    if (it != g_demazure_cache.end()) return it->second;
  }
  DemazureCharacter dc = demazure_character(rs, lambda, p.level, demazure_options(p));
  std::lock_guard lock(g_cache_mutex);
  return g_demazure_cache.emplace(key, std::move(dc)).first->second;
}

QCharacter denominator_cached(const RootSystem& rs, std::int64_t depth) {
  const auto key = std::make_tuple(rs.type(), rs.rank(), depth);
  {
    std::lock_guard lock(g_cache_mutex);
    const auto it = g_denominator_cache.find(key);
    if (it != g_denominator_cache.end()) return it->second;
  }
  QCharacter p = inverse_denominator(rs, depth);
  std::lock_guard lock(g_cache_mutex);
  return g_denominator_cache.emplace(key, std::move(p)).first->second;
}

std::string coweight_text(const RootSystem& rs, const Coweight& c) {
  std::string s = "(";
  const auto f = rs.coweight_to_fundamental(c);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ',';
    s += is_integer(f[i]) ? std::to_string(f[i].numerator()) : to_string(f[i]);
  }
  return s + ")";
}

void fail(Report& r, ordered_json d) {
  r.status = Status::Fail;
  r.first_discrepancy = std::move(d);
}

// ---- checks ---------------------------------------------------------------

struct FksSides {
  QCharacter lhs, rhs;
};

FksSides fks_sides(const RootSystem& rs, const CheckParams& p, Report& r) {
  if (p.level != 1) throw InputError("the lattice comparison is a level-one statement; use --level 1");
  require_depth(p);
  const MinusculeRep rep = coset_arg(rs, p);
  const AffineDominantWeight hw{1, iota_packed(rs, rep.coweight)};
  QCharacter lhs = weyl_kac_character(rs, hw, p.depth, denominator_cached(rs, p.depth), p.caps.elements);
  QCharacter rhs = lattice_character(rs, LatticeCoset{rep.coweight}, Rational(p.depth), 1, p.caps.orbit);
  r.truncated = true;
  r.details["highest_weight"] = weight_json(hw.finite, rs.rank());
  r.details["coset_shift"] = coweight_text(rs, rep.coweight);
  r.details["lhs_layer_dims"] = layer_dims(lhs);
  r.details["rhs_layer_dims"] = layer_dims(rhs);
  return {std::move(lhs), std::move(rhs)};
}

void check_fks(const CheckParams& p, Report& r) {
  r.claim = "The basic representation L(Lambda + omega) and the lattice module of omega + R_G have equal graded "
            "characters (all simply-laced types)";
  const auto rs = system_of(p);
  const auto [lhs, rhs] = fks_sides(rs, p, r);
  if (const auto d = first_discrepancy(lhs, rhs)) fail(r, discrepancy_json(*d, rs.rank()));
}

void check_fks_control(const CheckParams& p, Report& r) {
  r.claim = "For a non-simply-laced type the lattice comparison must fail, with the irreducible module strictly "
            "larger than the lattice part";
  const auto rs = system_of(p);
  const auto [lhs, rhs] = fks_sides(rs, p, r);
  const auto d = first_discrepancy(lhs, rhs);
  if (!d) {
    ordered_json j;
    j["q"] = "none up to depth " + std::to_string(p.depth);
    j["lhs"] = "equal";
    j["rhs"] = "equal";
    fail(r, j);
    return;
  }
  r.details["first_failing_depth"] = to_string(d->q);
  r.details["observed_discrepancy"] = discrepancy_json(*d, rs.rank());
  if (d->lhs <= d->rhs) fail(r, discrepancy_json(*d, rs.rank()));
}

void check_tensor(const CheckParams& p, Report& r) {
  r.claim = "Demazure modules multiply: V_{lambda+mu} = V_lambda (x) V_mu as G-modules";
  require_level(p);
  const auto rs = system_of(p);
  const Coweight lam = dominant_arg(rs, p.lambda, "--lambda");
  const Coweight mu = p.mu ? dominant_arg(rs, p.mu, "--mu") : lam;
  const FiniteCharacter lhs = specialize_q1(demazure_cached(rs, lam + mu, p).character);
  const FiniteCharacter a = specialize_q1(demazure_cached(rs, lam, p).character);
  const FiniteCharacter b = specialize_q1(demazure_cached(rs, mu, p).character);
  const FiniteCharacter rhs = multiply(a, b);
  r.details["dim_lambda_plus_mu"] = big(dimension(lhs));
  r.details["dim_lambda"] = big(dimension(a));
  r.details["dim_mu"] = big(dimension(b));
  if (const auto d = finite_discrepancy(lhs, rhs, rs.rank())) fail(r, *d);
}

void check_borel_weil(const CheckParams& p, Report& r) {
  r.claim = "Demazure modules of n*theta + omega exhaust L(k Lambda + k omega): their characters stabilize to the "
            "Weyl-Kac character and grow monotonically in n";
  require_level(p);
  require_depth(p);
  const auto rs = system_of(p);
  const MinusculeRep rep = coset_arg(rs, p);
  const Coweight theta = Coweight::from_ints(rs.comarks());
  const std::int64_t n_max = p.depth + 3;
  const Rational depth(p.depth);

  std::optional<QCharacter> kw;
  std::optional<QCharacter> prev;
  ordered_json agree = ordered_json::object();
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const Coweight lam = Rational(n) * theta + rep.coweight;
    const DemazureCharacter dc = demazure_cached(rs, lam, p);
    if (!kw) {
      const AffineDominantWeight hw{p.level, rs.to_packed(dc.base_weight.finite)};
      kw = weyl_kac_character(rs, hw, p.depth, denominator_cached(rs, p.depth), p.caps.elements);
      r.details["highest_weight"] = weight_json(hw.finite, rs.rank());
    }
    const auto d = first_discrepancy(dc.character, *kw);
    agree[std::to_string(n)] = !d;
    if (n > p.depth && d && !r.first_discrepancy) {
      ordered_json j = discrepancy_json(*d, rs.rank());
      j["n"] = n;
      j["comparison"] = "Demazure vs Weyl-Kac";
      fail(r, j);
    }
    if (prev)
      for (const auto& [q, layer] : prev->layers()) {
        if (q > depth) break;
        for (const auto& [w, c] : layer) {
          const BigInt now = dc.character.coefficient(w, q);
          if (now < c && !r.first_discrepancy) {
            ordered_json j;
            j["weight"] = weight_json(w, rs.rank());
            j["q"] = to_string(q);
            j["lhs"] = big(now);
            j["rhs"] = big(c);
            j["n"] = n;
            j["comparison"] = "coefficient at n below coefficient at n-1";
            fail(r, j);
          }
        }
      }
    prev = dc.character;
  }
  r.details["n_range"] = ordered_json::array({1, n_max});
  r.details["agrees_up_to_depth"] = agree;
  r.truncated = true;
}

void check_smooth_locus(const CheckParams& p, Report& r) {
  r.claim = "Fixed-point multiplicity is 1 exactly on W lambda and greater than 1 on every smaller stratum, so the "
            "smooth locus is the open orbit (types A and D, and the listed E cases)";
  require_level(p);
  const auto rs = system_of(p);
  const Coweight lam = dominant_arg(rs, p.lambda, "--lambda");
  const DemazureCharacter dc = demazure_cached(rs, lam, p);
  std::size_t points = 0, strata = 0;
  for (const auto& mu : dominant_coweights_below(rs, lam)) {
    const bool top = mu == lam;
    if (!top) ++strata;
    for (const auto& v : weyl_orbit(rs, mu, p.caps.orbit)) {
      ++points;
      const Weight w = -(p.level * iota_packed(rs, v));
      const BigInt m = finite_multiplicity(dc, w);
      if ((top ? m != 1 : m <= 1) && !r.first_discrepancy) {
        ordered_json j;
        j["coweight"] = coweight_text(rs, v);
        j["weight"] = weight_json(w, rs.rank());
        j["lhs"] = big(m);
        j["rhs"] = top ? "1" : ">1";
        fail(r, j);
      }
    }
  }
  r.details["fixed_points_checked"] = points;
  r.details["smaller_strata"] = strata;
  r.details["dimension"] = big(dimension(specialize_q1(dc.character)));
}

void check_fixed_support(const CheckParams& p, Report& r) {
  r.claim = "The weights of V_lambda are exactly iota of the torus-fixed points of the Schubert variety";
  require_level(p);
  const auto rs = system_of(p);
  const Coweight lam = dominant_arg(rs, p.lambda, "--lambda");
  const DemazureCharacter dc = demazure_cached(rs, lam, p);
  const FiniteCharacter ch = specialize_q1(dc.character);
  std::set<Weight> expected;
  for (const auto& v : fixed_point_support(rs, lam, p.caps.orbit)) expected.insert(-(p.level * iota_packed(rs, v)));
  std::set<Weight> all = expected;
  for (const auto& [w, c] : ch) all.insert(w);
  for (const auto& w : all) {
    const bool in_support = expected.count(w) > 0;
    const auto it = ch.find(w);
    const bool present = it != ch.end() && it->second > 0;
    if (present != in_support) {
      ordered_json j;
      j["weight"] = weight_json(w, rs.rank());
      j["lhs"] = it == ch.end() ? "0" : big(it->second);
      j["rhs"] = in_support ? "fixed point (multiplicity > 0)" : "not a fixed point (multiplicity 0)";
      fail(r, j);
      break;
    }
  }
  r.details["fixed_points"] = expected.size();
  r.details["weights"] = ch.size();
}

void check_minuscule(const CheckParams& p, Report& r) {
  r.claim = "For minuscule omega the Schubert variety is G/P and V_omega is the single irreducible layer "
            "V(iota omega) (weights negated, the library's sign convention) of dimension |W omega|";
  require_level(p);
  const auto rs = system_of(p);
  Coweight om;
  if (p.lambda) {
    om = dominant_arg(rs, p.lambda, "--lambda");
    bool found = false;
    for (const auto& m : minuscule_reps(rs)) found = found || (m.node != 0 && m.coweight == om);
    if (!found) throw InputError("--lambda is not a minuscule coweight");
  } else {
    const MinusculeRep rep = coset_arg(rs, p);
    if (rep.node == 0) throw InputError("choose a nontrivial minuscule class with --coset");
    om = rep.coweight;
  }
  const DemazureCharacter dc = demazure_cached(rs, om, p);
  // Weights sit at -k iota(w omega), so the layer is V(k iota omega) up to
  // the sign flip of every weight, i.e. its dual.
  const Weight top = -(p.level * iota_packed(rs, om));
  const FiniteCharacter expected = finite_weyl_character(rs, rs.dominant_part(top));
  r.details["layer_highest_weight"] = weight_json(rs.dominant_part(top), rs.rank());
  const std::size_t orbit = weyl_orbit(rs, om, p.caps.orbit).size();
  r.details["layers"] = dc.character.layers().size();
  r.details["dimension"] = big(dimension(specialize_q1(dc.character)));
  r.details["orbit_size"] = orbit;
  if (dc.character.layers().size() != 1) {
    ordered_json j;
    j["q"] = to_string(dc.character.max_q());
    j["lhs"] = std::to_string(dc.character.layers().size()) + " layers";
    j["rhs"] = "1 layer";
    fail(r, j);
    return;
  }
  if (const auto d = finite_discrepancy(dc.character.layers().begin()->second, expected, rs.rank())) {
    fail(r, *d);
    return;
  }
  if (p.level == 1 && dimension(expected) != BigInt(orbit)) {
    ordered_json j;
    j["lhs"] = big(dimension(expected));
    j["rhs"] = std::to_string(orbit) + " (orbit size)";
    fail(r, j);
  }
}

void check_curves(const CheckParams& p, Report& r) {
  r.claim = "The basic line bundle has degree 2(<lambda,alpha> - n)/(alpha,alpha) on the T-curve through lambda in "
            "direction n delta + alpha; degree 1 for long roots with <lambda,alpha> = 1";
  const auto rs = system_of(p);
  const Coweight lam = dominant_arg(rs, p.lambda, "--lambda");
  const auto support = fixed_point_support(rs, lam, p.caps.orbit);
  ordered_json listed = ordered_json::array();
  std::size_t curves = 0, long_unit = 0;
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
    const auto& alpha = rs.positive_roots()[k];
    const Rational pl = rs.pair(lam, alpha);
    for (std::int64_t n = 0; Rational(n) < pl; ++n) {
      const CurveData cd = curve_data(rs, lam, AffineRoot{n, alpha});
      ++curves;
      // Degree read off the fixed-point weights at the two ends.
      const AffineWeight wf = fixed_point_weight(rs, cd.from, 1), wt = fixed_point_weight(rs, cd.to, 1);
      const WeightVec diff = wt.finite - wf.finite;
      std::optional<Rational> ratio;
      bool proportional = true;
      for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0) {
          proportional = proportional && diff[i] == 0;
          continue;
        }
        const Rational x = diff[i] / Rational(alpha[i]);
        if (ratio && *ratio != x) proportional = false;
        ratio = x;
      }
      const Rational closed = Rational(2) * (pl - Rational(n)) / rs.root_norm(k);
      const bool delta_ok = wt.delta - wf.delta == cd.degree * Rational(n);
      const bool ends_ok = std::binary_search(support.begin(), support.end(), cd.to);
      const bool lemma_ok = !(rs.is_long(k) && pl == 1 && n == 0) || cd.degree == 1;
      if (rs.is_long(k) && pl == 1 && n == 0) ++long_unit;
      if (listed.size() < 64) {
        ordered_json e;
        ordered_json root = ordered_json::array();
        for (auto x : alpha) root.push_back(x);
        e["root"] = root;
        e["n"] = n;
        e["degree"] = to_string(cd.degree);
        listed.push_back(e);
      }
      if (!(proportional && ratio && *ratio == cd.degree && closed == cd.degree && delta_ok && ends_ok && lemma_ok) &&
          !r.first_discrepancy) {
        ordered_json j;
        ordered_json root = ordered_json::array();
        for (auto x : alpha) root.push_back(x);
        j["root"] = root;
        j["n"] = n;
        j["lhs"] = to_string(cd.degree);
        j["rhs"] = ratio ? to_string(*ratio) : "not proportional";
        fail(r, j);
      }
    }
  }
  r.details["curves_checked"] = curves;
  r.details["long_roots_with_pairing_one"] = long_unit;
  r.details["degrees"] = listed;
}

void check_coroots(const CheckParams& p, Report& r) {
  r.claim = "The coroot of n delta + alpha is (2n/(alpha,alpha)) K + alpha-check; in particular the coroot of "
            "delta - theta is K - theta";
  const auto rs = system_of(p);
  std::vector<std::int64_t> neg(rs.marks().size());
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -rs.marks()[i];
  const AffineCoroot c0 = affine_coroot(rs, AffineRoot{1, neg});
  r.details["alpha0_coroot_K"] = to_string(c0.k_coeff);
  r.details["alpha0_coroot_finite"] = rational_list_json(c0.finite.coords);
  if (!(c0 == affine_simple_coroot(rs, 0))) {
    ordered_json j;
    j["root"] = "delta - theta";
    j["lhs"] = to_string(c0.k_coeff) + " K + " + coweight_text(rs, c0.finite);
    j["rhs"] = "K - theta";
    fail(r, j);
    return;
  }
  std::size_t checked = 0;
  for (std::int64_t n = -2; n <= 2; ++n)
    for (const auto& pos : rs.positive_roots())
      for (int sgn : {1, -1}) {
        AffineRoot root{n, pos};
        for (auto& x : root.finite) x *= sgn;
        const AffineCoroot co = affine_coroot(rs, root);
        for (int i = 0; i <= rs.rank(); ++i) {
          ++checked;
          if (!(affine_coroot(rs, reflect(rs, root, i)) == reflect(rs, co, i)) && !r.first_discrepancy) {
            ordered_json j;
            ordered_json fr = ordered_json::array();
            for (auto x : root.finite) fr.push_back(x);
            j["root"] = {{"n", n}, {"finite", fr}};
            j["node"] = i;
            j["lhs"] = "coroot of reflected root";
            j["rhs"] = "reflected coroot";
            fail(r, j);
          }
        }
      }
  r.details["equivariance_checks"] = checked;
}

void check_domination(const CheckParams& p, Report& r) {
  r.claim = "Restriction to a smaller Schubert variety is surjective, so V_mu is a summand of V_lambda for mu <= lambda";
  require_level(p);
  const auto rs = system_of(p);
  const Coweight lam = dominant_arg(rs, p.lambda, "--lambda");
  std::vector<Coweight> mus;
  if (p.mu) {
    const Coweight mu = dominant_arg(rs, p.mu, "--mu");
    if (!dominance_leq(rs, mu, lam)) throw InputError("--mu must be <= --lambda in dominance order");
    mus.push_back(mu);
  } else {
    mus = dominant_coweights_below(rs, lam);
  }
  const FiniteCharacter big_ch = specialize_q1(demazure_cached(rs, lam, p).character);
  for (const auto& mu : mus) {
    const FiniteCharacter small = specialize_q1(demazure_cached(rs, mu, p).character);
    for (const auto& [w, c] : small) {
      const auto it = big_ch.find(w);
      const BigInt b = it == big_ch.end() ? BigInt(0) : it->second;
      if (b < c && !r.first_discrepancy) {
        ordered_json j;
        j["mu"] = coweight_text(rs, mu);
        j["weight"] = weight_json(w, rs.rank());
        j["lhs"] = big(b);
        j["rhs"] = big(c);
        fail(r, j);
      }
    }
  }
  r.details["mu_checked"] = mus.size();
}

void check_boundary(const CheckParams& p, Report& r) {
  r.claim = "(interpretation-dependent) type D: dim V_{omega_i} = dim V(iota omega_i) + dim V_{omega_{i-2}}, "
            "reading the boundary ideal as that of the Schubert variety of omega_{i-2}";
  require_level(p);
  const auto rs = system_of(p);
  if (rs.type() != 'D') throw InputError("the boundary check is stated for type D only");
  if (!p.lambda) throw InputError("--lambda is required for this check");
  int node = 0;
  for (int i = 0; i < rs.rank(); ++i) {
    const auto x = (*p.lambda)[static_cast<std::size_t>(i)];
    if (x == 1 && node == 0)
      node = i + 1;
    else if (x != 0)
      node = -1;
  }
  if (static_cast<int>(p.lambda->size()) != rs.rank() || node < 2 || node > rs.rank() - 2)
    throw InputError("--lambda must be a fundamental coweight omega_i with 2 <= i <= rank-2");
  const Coweight lam = rs.fundamental_coweight(node);
  const Coweight lower = node == 2 ? Coweight(static_cast<std::size_t>(rs.rank())) : rs.fundamental_coweight(node - 2);
  const BigInt lhs = dimension(specialize_q1(demazure_cached(rs, lam, p).character));
  const BigInt top = dimension(finite_weyl_character(rs, p.level * iota_packed(rs, lam)));
  const BigInt rest = dimension(specialize_q1(demazure_cached(rs, lower, p).character));
  r.details["interpretation"] = "interpretation-dependent";
  r.details["dim_V_lambda"] = big(lhs);
  r.details["dim_irreducible"] = big(top);
  r.details["dim_V_lower"] = big(rest);
  if (lhs != top + rest) {
    ordered_json j;
    j["lhs"] = big(lhs);
    j["rhs"] = big(top + rest);
    fail(r, j);
  }
}

void check_hand_oracle(const CheckParams& p, Report& r) {
  r.claim = "Type A1, lambda = alpha, level 1: V_alpha has dimension 4 and weight 0 occurs twice";
  (void)p;
  // Worked by hand: the raising word is (1, 0), D_0 e^Lambda = e^Lambda + q e^alpha,
  // and D_1 spreads the q-layer over the alpha-string.
  const std::string frozen =
      "w=(0) q=0/1 coeff=1\n"
      "w=(-2) q=1/1 coeff=1\n"
      "w=(0) q=1/1 coeff=1\n"
      "w=(2) q=1/1 coeff=1\n";
  const auto rs = build_root_system('A', 1);
  CheckParams q = p;
  q.level = 1;
  const DemazureCharacter dc = demazure_cached(rs, rs.coweight_from_fundamental(std::vector<std::int64_t>{2}), q);
  const std::string got = serialize(dc.character);
  const BigInt dim = dimension(specialize_q1(dc.character));
  const BigInt zero = finite_multiplicity(dc, Weight{});
  r.details["dimension"] = big(dim);
  r.details["weight_zero_multiplicity"] = big(zero);
  r.details["word"] = dc.word;
  if (got != frozen || dim != 4 || zero != 2 || dc.word != std::vector<int>{1, 0}) {
    ordered_json j;
    j["lhs"] = got;
    j["rhs"] = frozen;
    fail(r, j);
  }
}

void check_operators(const CheckParams& p, Report& r) {
  r.claim = "Demazure operators, including the affine node, are idempotent, satisfy the braid relations, and give "
            "word-independent Demazure characters";
  const auto rs = system_of(p);
  std::mt19937 rng(20240601);
  const int n = rs.rank();
  auto coxeter_m = [&](int i, int j) {
    const auto prod = (pair(rs, affine_simple_root(rs, j), affine_simple_coroot(rs, i)) *
                       pair(rs, affine_simple_root(rs, i), affine_simple_coroot(rs, j)))
                          .numerator();
    return prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : prod == 3 ? 6 : 0;
  };
  auto apply = [&](const std::vector<int>& word, QCharacter chi) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) chi = demazure_op(rs, *it, chi);
    return chi;
  };
  std::size_t idem = 0, braids = 0;
  std::uniform_int_distribution<int> coord(-3, 3), qd(0, 2), cd(-2, 3), lev(1, 2);
  for (int t = 0; t < 100; ++t) {
    QCharacter chi(n, lev(rng));
    for (int s = 0; s < 6; ++s) {
      Weight w;
      for (int i = 0; i < n; ++i) w[i] = coord(rng);
      chi.add_term(w, Rational(qd(rng)), cd(rng));
    }
    for (int i = 0; i <= n; ++i) {
      const QCharacter once = demazure_op(rs, i, chi);
      ++idem;
      if (!(demazure_op(rs, i, once) == once) && !r.first_discrepancy)
        fail(r, ordered_json{{"character", t}, {"nodes", {i}}, {"lhs", "D_i D_i"}, {"rhs", "D_i"}});
      for (int j = i + 1; j <= n; ++j) {
        const int m = coxeter_m(i, j);
        if (m == 0) continue;
        std::vector<int> wi, wj;
        for (int k = 0; k < m; ++k) {
          wi.push_back(k % 2 ? j : i);
          wj.push_back(k % 2 ? i : j);
        }
        ++braids;
        if (!(apply(wi, chi) == apply(wj, chi)) && !r.first_discrepancy)
          fail(r, ordered_json{{"character", t}, {"nodes", {i, j}}, {"lhs", "braid word starting at i"},
                               {"rhs", "braid word starting at j"}});
      }
    }
  }
  std::size_t words = 0;
  std::uniform_int_distribution<int> lc(0, n > 2 ? 1 : 2);
  for (int t = 0; t < 20; ++t) {
    std::vector<std::int64_t> f(static_cast<std::size_t>(n));
    for (auto& x : f) x = lc(rng);
    const Coweight lam = rs.coweight_from_fundamental(f);
    DemazureOptions opts = demazure_options(p);
    const DemazureCharacter ref = demazure_character(rs, lam, 1, opts);
    for (int variant = 0; variant < 2; ++variant) {
      opts.order = variant == 0 ? RaisingOrder::LargestNode : RaisingOrder::Random;
      opts.seed = static_cast<unsigned>(t + 1);
      const DemazureCharacter other = demazure_character(rs, lam, 1, opts);
      ++words;
      if (!(other.character == ref.character) && !r.first_discrepancy) {
        const auto d = first_discrepancy(other.character, ref.character);
        ordered_json j = d ? discrepancy_json(*d, n) : ordered_json{{"lhs", "flags differ"}, {"rhs", ""}};
        j["lambda"] = coweight_text(rs, lam);
        fail(r, j);
      }
    }
  }
  r.details["idempotence_checks"] = idem;
  r.details["braid_checks"] = braids;
  r.details["word_pairs"] = words;
}

using CheckFn = void (*)(const CheckParams&, Report&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> checks = {
      {"fks", check_fks},
      {"fks-control", check_fks_control},
      {"tensor", check_tensor},
      {"borel-weil", check_borel_weil},
      {"smooth-locus", check_smooth_locus},
      {"fixed-support", check_fixed_support},
      {"minuscule", check_minuscule},
      {"curves", check_curves},
      {"coroots", check_coroots},
      {"domination", check_domination},
      {"boundary", check_boundary},
      {"hand-oracle", check_hand_oracle},
      {"operators", check_operators},
  };
  return checks;
}

std::size_t env_cap(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    std::size_t pos = 0;
    const unsigned long long x = std::stoull(v, &pos);
    if (pos != std::string(v).size() || x == 0) throw std::invalid_argument(v);
    return static_cast<std::size_t>(x);
  } catch (const std::exception&) {
    throw InputError(std::string(name) + " must be a positive integer, got '" + v + "'");
  }
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
  }
  return "?";
}

Caps caps_from_env(Caps base) {
  base.orbit = env_cap("AFFCHAR_CAP_ORBIT", base.orbit);
  base.elements = env_cap("AFFCHAR_CAP_ELEMENTS", base.elements);
  return base;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

Report run_verification(const std::string& check, const CheckParams& params) {
  const auto& reg = registry();
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& e) { return e.first == check; });
  if (it == reg.end()) {
    std::string known;
    for (const auto& n : check_names()) known += (known.empty() ? "" : ", ") + n;
    throw InputError("unknown check '" + check + "' (known: " + known + ")");
  }
  Report r;
  r.check = check;
  r.params = params;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    it->second(params, r);
  } catch (const CapExceeded& e) {
    r.status = Status::Skipped;
    r.reason = e.what();
    r.first_discrepancy.reset();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

ordered_json params_json(const CheckParams& p) {
  ordered_json j;
  j["type"] = std::string(1, p.type);
  j["rank"] = p.rank;
  if (p.lambda) j["lambda"] = *p.lambda;
  if (p.mu) j["mu"] = *p.mu;
  if (p.coset) j["coset"] = *p.coset;
  j["level"] = p.level;
  j["depth"] = p.depth;
  j["cap_orbit"] = p.caps.orbit;
  j["cap_elements"] = p.caps.elements;
  return j;
}

ordered_json report_json(const Report& r) {
  ordered_json j;
  j["check"] = r.check;
  j["params"] = params_json(r.params);
  j["status"] = to_string(r.status);
  if (r.status == Status::Fail && r.first_discrepancy) j["first_discrepancy"] = *r.first_discrepancy;
  j["elapsed_ms"] = std::round(r.elapsed_ms * 1000.0) / 1000.0;
  j["engine_version"] = kEngineVersion;
  j["claim"] = r.claim;
  j["truncated"] = r.truncated;
  if (r.status == Status::Skipped) j["reason"] = r.reason;
  j["details"] = r.details;
  return j;
}

std::string report_text(const Report& r) {
  std::vector<std::pair<std::string, std::string>> rows;
  const ordered_json pj = params_json(r.params);
  std::string params;
  for (const auto& [k, v] : pj.items()) {
    if (!params.empty()) params += ' ';
    params += k + "=" + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  rows.emplace_back("check", r.check);
  rows.emplace_back("params", params);
  rows.emplace_back("status", to_string(r.status));
  if (r.status == Status::Fail && r.first_discrepancy) rows.emplace_back("first_discrepancy", r.first_discrepancy->dump());
  if (r.status == Status::Skipped) rows.emplace_back("reason", r.reason);
  rows.emplace_back("claim", r.claim);
  rows.emplace_back("truncated", r.truncated ? "yes" : "no");
  for (const auto& [k, v] : r.details.items()) rows.emplace_back("details." + k, v.is_string() ? v.get<std::string>() : v.dump());
  std::ostringstream ms;
  ms << std::fixed << std::setprecision(3) << r.elapsed_ms;
  rows.emplace_back("elapsed_ms", ms.str());
  rows.emplace_back("engine_version", kEngineVersion);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::string out;
  for (const auto& [k, v] : rows) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  return out;
}

void emit_report(const Report& r, Format format, const std::string& path) {
  const std::string body = format == Format::Json ? report_json(r).dump(2) + "\n" : report_text(r);
  if (path.empty() || path == "-") {
    std::cout << body << std::flush;
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << body;
    out.flush();
    if (!out) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, target);
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(part, &pos);
      if (pos != part.size()) throw std::invalid_argument(part);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("expected comma-separated integers, got '" + text + "'");
    }
  }
  if (out.empty()) throw InputError("expected comma-separated integers, got an empty list");
  return out;
}

namespace {

struct Item {
  std::string check;
  CheckParams params;
  bool optional = false;  // SKIPPED is acceptable
};

CheckParams make(char type, int rank, const Caps& caps) {
  CheckParams p;
  p.type = type;
  p.rank = rank;
  p.caps = caps;
  return p;
}

// Dominant coefficient vectors with entry sum <= s.
std::vector<std::vector<std::int64_t>> lambdas_up_to(int rank, int s) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> v(static_cast<std::size_t>(rank), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == rank) {
      out.push_back(v);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      v[static_cast<std::size_t>(i)] = x;
      rec(i + 1, left - x);
    }
    v[static_cast<std::size_t>(i)] = 0;
  };
  rec(0, s);
  return out;
}

std::vector<std::int64_t> unit(int rank, int node) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(rank), 0);
  v[static_cast<std::size_t>(node - 1)] = 1;
  return v;
}

std::vector<std::int64_t> theta_of(char type, int rank) {
  const auto rs = build_root_system(type, rank);
  // theta in fundamental-coweight coordinates: <theta, alpha_i>.
  const Coweight th = Coweight::from_ints(rs.comarks());
  std::vector<std::int64_t> out;
  for (const auto& x : rs.coweight_to_fundamental(th)) out.push_back(x.numerator());
  return out;
}

Criterion run_items(int id, std::string title, const std::vector<Item>& items) {
  Criterion c;
  c.id = id;
  c.title = std::move(title);
  std::size_t pass = 0, failed = 0, skipped = 0;
  for (const auto& item : items) {
    Report r = run_verification(item.check, item.params);
    c.elapsed_ms += r.elapsed_ms;
    if (r.status == Status::Pass) {
      ++pass;
    } else if (r.status == Status::Skipped) {
      ++skipped;
      if (!item.optional) c.status = Status::Fail;
    } else {
      ++failed;
      c.status = Status::Fail;
    }
    c.reports.push_back(std::move(r));
  }
  c.summary = std::to_string(items.size()) + " reports: " + std::to_string(pass) + " PASS, " +
              std::to_string(failed) + " FAIL, " + std::to_string(skipped) + " SKIPPED";
  return c;
}

void time_limit(Criterion& c, double ms) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(1) << c.elapsed_ms / 1000.0 << " s (limit " << ms / 1000.0 << " s)";
  c.summary += "; " + s.str();
  if (c.elapsed_ms >= ms) c.status = Status::Fail;
}

}  // namespace

std::vector<Criterion> run_acceptance_battery(const Caps& caps) {
  std::vector<Criterion> out;

  {
    std::vector<Item> items;
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 3}, {'D', 4}})
      for (const auto& rep : minuscule_reps(build_root_system(t, n))) {
        CheckParams p = make(t, n, caps);
        p.coset = rep.node;
        p.depth = 8;
        items.push_back({"fks", p});
      }
    Criterion c = run_items(1, "lattice construction of the level-one modules, simply-laced, depth 8", items);
    time_limit(c, 60000);
    out.push_back(std::move(c));
  }

  {
    std::vector<Item> items;
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'C', 2}, {'G', 2}})
      for (const auto& rep : minuscule_reps(build_root_system(t, n))) {
        CheckParams p = make(t, n, caps);
        p.coset = rep.node;
        p.depth = 8;
        items.push_back({"fks-control", p});
      }
    Criterion c = run_items(2, "non-simply-laced negative control, depth 8", items);
    std::string depths;
    for (const auto& r : c.reports)
      if (r.details.contains("first_failing_depth"))
        depths += (depths.empty() ? "" : ", ") + std::string(1, r.params.type) + std::to_string(r.params.rank) +
                  " coset " + std::to_string(r.params.coset.value_or(0)) + " at q=" +
                  r.details["first_failing_depth"].get<std::string>();
    c.summary += "; first failing depth: " + depths;
    out.push_back(std::move(c));
  }

  {
    std::vector<Item> items;
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'D', 4}, {'C', 2}}) {
      CheckParams p = make(t, n, caps);
      p.lambda = theta_of(t, n);
      items.push_back({"tensor", p});
    }
    CheckParams p = make('A', 1, caps);
    p.lambda = theta_of('A', 1);
    p.level = 2;
    items.push_back({"tensor", p});
    Criterion c = run_items(3, "tensor multiplicativity of Demazure modules", items);
    time_limit(c, 60000);
    out.push_back(std::move(c));
  }

  out.push_back(run_items(4, "hand-computed A1 oracle", {{"hand-oracle", make('A', 1, caps)}}));

  {
    std::vector<Item> support, smooth;
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'D', 4}})
      for (const auto& lam : lambdas_up_to(n, 3)) {
        CheckParams p = make(t, n, caps);
        p.lambda = lam;
        support.push_back({"fixed-support", p});
        smooth.push_back({"smooth-locus", p});
      }
    out.push_back(run_items(5, "weights of V_lambda equal the torus-fixed points", support));
    for (auto [t, n, node] : std::vector<std::tuple<char, int, int>>{{'E', 6, 3}, {'E', 6, 5}, {'E', 7, 2}, {'E', 7, 6}, {'E', 8, 1}}) {
      CheckParams p = make(t, n, caps);
      p.lambda = unit(n, node);
      smooth.push_back({"smooth-locus", p, true});
    }
    out.push_back(run_items(6, "smooth locus is the open orbit", smooth));
  }

  {
    std::vector<Item> items;
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}}) {
      CheckParams p = make(t, n, caps);
      p.depth = 3;
      items.push_back({"borel-weil", p});
    }
    out.push_back(run_items(7, "Demazure characters stabilize to the basic representation", items));
  }

  {
    std::vector<Item> items;
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'D', 4}, {'E', 6}})
      for (const auto& rep : minuscule_reps(build_root_system(t, n))) {
        if (rep.node == 0) continue;
        CheckParams p = make(t, n, caps);
        p.coset = rep.node;
        items.push_back({"minuscule", p, t == 'E'});
      }
    out.push_back(run_items(8, "minuscule Demazure modules are a single layer", items));
  }

  {
    std::vector<Item> items;
    for (auto [t, n] : std::vector<std::pair<char, int>>{
             {'A', 1}, {'A', 2}, {'A', 3}, {'B', 3}, {'C', 2}, {'C', 3}, {'D', 4}, {'G', 2}, {'F', 4}, {'E', 6}})
      items.push_back({"coroots", make(t, n, caps)});
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'B', 3}, {'C', 2}, {'D', 4}, {'G', 2}}) {
      CheckParams p = make(t, n, caps);
      p.lambda = theta_of(t, n);
      items.push_back({"curves", p});
    }
    CheckParams p = make('A', 3, caps);
    p.lambda = std::vector<std::int64_t>{0, 1, 0};
    items.push_back({"curves", p});
    Criterion c = run_items(9, "affine coroots and curve degrees", items);
    // A1, lambda = alpha: the curve in direction alpha (n = 0) has degree 2.
    bool spot = false;
    for (const auto& r : c.reports)
      if (r.check == "curves" && r.params.type == 'A' && r.params.rank == 1)
        for (const auto& e : r.details["degrees"])
          if (e["n"] == 0 && e["degree"] == to_string(Rational(2))) spot = true;
    c.summary += spot ? "; A1 lambda=alpha n=0 degree 2" : "; A1 lambda=alpha n=0 degree is not 2";
    if (!spot) c.status = Status::Fail;
    out.push_back(std::move(c));
  }

  {
    std::vector<Item> items;
    for (auto [t, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'C', 2}, {'D', 4}})
      items.push_back({"operators", make(t, n, caps)});
    out.push_back(run_items(10, "Demazure operator algebra", items));
  }
  return out;
}

}  // namespace affchar
