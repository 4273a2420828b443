#include "affchar/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace affchar {

namespace {

struct Diagram {
  std::vector<std::pair<int, int>> edges;  // 1-based node pairs
  std::vector<Rational> norms;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

Diagram make_diagram(char type, int rank) {
  Diagram d;
  d.norms.assign(static_cast<std::size_t>(rank), Rational(2));
  auto chain = [&](int first, int last) {
    for (int i = first; i < last; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (type) {
    case 'A':
      require(rank >= 1, "type A requires rank >= 1");
      chain(1, rank);
      break;
    case 'B':
      require(rank >= 2, "type B requires rank >= 2");
      chain(1, rank);
      d.norms[rank - 1] = Rational(1);
      break;
    case 'C':
      require(rank >= 2, "type C requires rank >= 2");
      chain(1, rank);
      for (int i = 0; i < rank - 1; ++i) d.norms[i] = Rational(1);
      break;
    case 'D':
      require(rank >= 3, "type D requires rank >= 3");
      chain(1, rank - 1);
      d.edges.emplace_back(rank - 2, rank);
      break;
    case 'E':
      require(rank >= 6 && rank <= 8, "type E requires rank in {6,7,8}");
      d.edges.emplace_back(1, 3);
      d.edges.emplace_back(2, 4);
      chain(3, rank);
      break;
    case 'F':
      require(rank == 4, "type F requires rank 4");
      chain(1, 4);
      d.norms[2] = d.norms[3] = Rational(1);
      break;
    case 'G':
      require(rank == 2, "type G requires rank 2");
      chain(1, 2);
      d.norms[0] = Rational(2, 3);
      break;
    default:
      throw InputError(std::string("unknown type label '") + type + "' (expected one of A,B,C,D,E,F,G)");
  }
  require(rank <= kMaxRank, "rank exceeds the supported maximum of " + std::to_string(kMaxRank));
  return d;
}

// Gauss-Jordan over the rationals; returns the determinant.
Rational invert(const IntMatrix& a, RatMatrix& inv) {
  const auto n = a.size();
  RatMatrix m(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
    m[i][n + i] = Rational(1);
  }
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("singular Cartan matrix");
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    const Rational p = m[col][col];
    det *= p;
    for (auto& x : m[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  inv.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return det;
}

std::int64_t to_int(const Rational& r, const char* what) {
  if (r.denominator() != 1) throw std::logic_error(std::string("non-integral ") + what);
  return r.numerator();
}

}  // namespace

RootSystem RootSystem::build(char type, int rank) {
  const Diagram diag = make_diagram(type, rank);
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.simple_norms_ = diag.norms;

  const auto n = static_cast<std::size_t>(rank);
  RatMatrix inner(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inner[i][i] = diag.norms[i];
  for (auto [a, b] : diag.edges) {
    const Rational v = -std::max(diag.norms[a - 1], diag.norms[b - 1]) / 2;
    inner[a - 1][b - 1] = inner[b - 1][a - 1] = v;
  }
  rs.cartan_.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rs.cartan_[i][j] = to_int(2 * inner[i][j] / diag.norms[i], "Cartan entry");

  rs.det_ = to_int(invert(rs.cartan_, rs.inv_cartan_), "Cartan determinant");

  rs.simple_root_weights_.resize(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) rs.simple_root_weights_[j].c[i] = static_cast<std::int32_t>(rs.cartan_[i][j]);

  // Positive roots by alpha-string closure, height by height.
  std::set<std::vector<std::int64_t>> known;
  std::vector<std::vector<std::int64_t>> layer;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  std::vector<std::vector<std::int64_t>> all;
  while (!layer.empty()) {
    std::set<std::vector<std::int64_t>> next;
    for (const auto& beta : layer) {
      all.push_back(beta);
      for (std::size_t j = 0; j < n; ++j) {
        int p = 0;
        auto down = beta;
        while (true) {
          down[j] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        std::int64_t pairing = 0;
        for (std::size_t i = 0; i < n; ++i) pairing += rs.cartan_[j][i] * beta[i];
        if (p - pairing > 0) {
          auto up = beta;
          up[j] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    for (const auto& r : next) known.insert(r);
    layer.assign(next.begin(), next.end());
  }
  auto height = [](const std::vector<std::int64_t>& r) { return std::accumulate(r.begin(), r.end(), std::int64_t{0}); };
  std::sort(all.begin(), all.end(), [&](const auto& a, const auto& b) {
    const auto ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
  rs.pos_roots_ = all;
  for (const auto& beta : all) {
    Rational norm(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) norm += Rational(beta[i] * beta[j]) * inner[i][j];
    rs.root_norms_.push_back(norm);
    std::vector<std::int64_t> co(n);
    for (std::size_t j = 0; j < n; ++j) co[j] = to_int(Rational(beta[j]) * diag.norms[j] / norm, "coroot coordinate");
    rs.pos_coroots_.push_back(co);
    Weight w;
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < n; ++j) s += rs.cartan_[i][j] * beta[j];
      w.c[i] = static_cast<std::int32_t>(s);
    }
    rs.pos_root_weights_.push_back(w);
  }
  rs.highest_ = all.size() - 1;

  rs.coweight_gram_.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rs.coweight_gram_[i][j] = Rational(2 * rs.cartan_[i][j]) / diag.norms[j];
  return rs;
}

RootSystem build_root_system(char type, int rank) { return RootSystem::build(type, rank); }

std::string RootSystem::label() const { return std::string(1, type_) + std::to_string(rank_); }

bool RootSystem::simply_laced() const { return type_ == 'A' || type_ == 'D' || type_ == 'E'; }

int RootSystem::root_index(std::span<const std::int64_t> root) const {
  const std::vector<std::int64_t> key(root.begin(), root.end());
  auto it = std::find(pos_roots_.begin(), pos_roots_.end(), key);
  return it == pos_roots_.end() ? -1 : static_cast<int>(it - pos_roots_.begin());
}

int RootSystem::coxeter_number() const {
  return 1 + static_cast<int>(std::accumulate(marks().begin(), marks().end(), std::int64_t{0}));
}

int RootSystem::dual_coxeter_number() const {
  return 1 + static_cast<int>(std::accumulate(comarks().begin(), comarks().end(), std::int64_t{0}));
}

Weight RootSystem::rho() const {
  Weight w;
  for (int i = 0; i < rank_; ++i) w.c[i] = 1;
  return w;
}

Coweight RootSystem::fundamental_coweight(int i) const { return Coweight(inv_cartan_[i - 1]); }

Coweight RootSystem::coweight_from_fundamental(std::span<const std::int64_t> f) const {
  if (f.size() != static_cast<std::size_t>(rank_))
    throw InputError("expected " + std::to_string(rank_) + " fundamental coordinates, got " + std::to_string(f.size()));
  Coweight c(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i)
    for (int k = 0; k < rank_; ++k) c[k] += Rational(f[i]) * inv_cartan_[i][k];
  return c;
}

std::vector<Rational> RootSystem::coweight_to_fundamental(const Coweight& c) const {
  std::vector<Rational> f(static_cast<std::size_t>(rank_), Rational(0));
  for (int j = 0; j < rank_; ++j)
    for (int k = 0; k < rank_; ++k) f[j] += c[k] * Rational(cartan_[k][j]);
  return f;
}

WeightVec RootSystem::weight_from_fundamental(std::span<const Rational> f) const {
  WeightVec y(static_cast<std::size_t>(rank_));
  for (int j = 0; j < rank_; ++j)
    for (int i = 0; i < rank_; ++i) y[j] += inv_cartan_[j][i] * f[i];
  return y;
}

std::vector<Rational> RootSystem::weight_to_fundamental(const WeightVec& w) const {
  std::vector<Rational> x(static_cast<std::size_t>(rank_), Rational(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) x[i] += Rational(cartan_[i][j]) * w[j];
  return x;
}

Weight RootSystem::to_packed(const WeightVec& w) const {
  Weight out;
  const auto f = weight_to_fundamental(w);
  for (int i = 0; i < rank_; ++i) out.c[i] = static_cast<std::int32_t>(to_int(f[i], "weight coordinate"));
  return out;
}

WeightVec RootSystem::from_packed(const Weight& w) const {
  std::vector<Rational> f(static_cast<std::size_t>(rank_));
  for (int i = 0; i < rank_; ++i) f[i] = Rational(w[i]);
  return weight_from_fundamental(f);
}

Rational RootSystem::pair(const Coweight& c, const WeightVec& w) const {
  Rational s(0);
  for (int k = 0; k < rank_; ++k)
    for (int j = 0; j < rank_; ++j)
      if (cartan_[k][j] != 0) s += c[k] * Rational(cartan_[k][j]) * w[j];
  return s;
}

Rational RootSystem::pair(const Coweight& c, std::span<const std::int64_t> root) const {
  Rational s(0);
  for (int k = 0; k < rank_; ++k)
    for (int j = 0; j < rank_; ++j) s += c[k] * Rational(cartan_[k][j] * root[j]);
  return s;
}

Rational RootSystem::pair_simple(const Coweight& c, int i) const {
  Rational s(0);
  for (int k = 0; k < rank_; ++k) s += c[k] * Rational(cartan_[k][i - 1]);
  return s;
}

Rational RootSystem::coweight_form(const Coweight& a, const Coweight& b) const {
  Rational s(0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (coweight_gram_[i][j] != 0) s += a[i] * coweight_gram_[i][j] * b[j];
  return s;
}

Rational RootSystem::weight_form(const WeightVec& a, const WeightVec& b) const {
  Rational s(0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (cartan_[i][j] != 0) s += a[i] * b[j] * simple_norms_[i] * Rational(cartan_[i][j]) / 2;
  return s;
}

Coweight RootSystem::reflect(const Coweight& c, int i) const {
  Coweight out = c;
  out[i - 1] -= pair_simple(c, i);
  return out;
}

Weight RootSystem::reflect(const Weight& w, int i) const {
  return w - static_cast<std::int64_t>(w[i - 1]) * simple_root_weights_[i - 1];
}

bool RootSystem::is_dominant(const Coweight& c) const {
  for (int i = 1; i <= rank_; ++i)
    if (pair_simple(c, i) < 0) return false;
  return true;
}

bool RootSystem::is_dominant(const Weight& w) const {
  for (int i = 0; i < rank_; ++i)
    if (w[i] < 0) return false;
  return true;
}

Coweight RootSystem::dominant_part(const Coweight& c) const {
  Coweight v = c;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 1; i <= rank_; ++i) {
      if (pair_simple(v, i) < 0) {
        v = reflect(v, i);
        moved = true;
        break;
      }
    }
  }
  return v;
}

Weight RootSystem::dominant_part(const Weight& w, int* parity) const {
  Weight v = w;
  int count = 0;
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < rank_; ++i) {
      if (v[i] < 0) {
        v = reflect(v, i + 1);
        ++count;
        moved = true;
        break;
      }
    }
  }
  if (parity) *parity = count & 1;
  return v;
}

std::vector<int> RootSystem::longest_element_word() const {
  std::vector<int> word;
  Weight v = -rho();
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < rank_; ++i) {
      if (v[i] < 0) {
        v = reflect(v, i + 1);
        word.push_back(i + 1);
        moved = true;
        break;
      }
    }
  }
  return word;
}

bool RootSystem::in_coweight_lattice(const Coweight& c) const {
  for (const auto& f : coweight_to_fundamental(c))
    if (f.denominator() != 1) return false;
  return true;
}

std::vector<Rational> RootSystem::coset_key(const Coweight& c) const {
  std::vector<Rational> key;
  key.reserve(c.size());
  for (const auto& x : c.coords) key.push_back(x - Rational(floor(x)));
  return key;
}

WeightVec iota(const RootSystem& rs, const Coweight& c) {
  WeightVec w(c.size());
  for (int i = 1; i <= rs.rank(); ++i) w[i - 1] = c[i - 1] * 2 / rs.simple_root_norm(i);
  return w;
}

Weight iota_packed(const RootSystem& rs, const Coweight& c) { return rs.to_packed(iota(rs, c)); }

bool dominance_leq(const RootSystem& rs, const Coweight& mu, const Coweight& lambda) {
  (void)rs;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const Rational d = lambda[i] - mu[i];
    if (d < 0 || d.denominator() != 1) return false;
  }
  return true;
}

std::vector<Coweight> weyl_orbit(const RootSystem& rs, const Coweight& c, std::size_t cap) {
  std::set<Coweight> seen{c};
  std::deque<Coweight> queue{c};
  while (!queue.empty()) {
    const Coweight v = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rs.rank(); ++i) {
      if (rs.pair_simple(v, i) == 0) continue;
      Coweight r = rs.reflect(v, i);
      if (seen.insert(r).second) {
        if (seen.size() > cap) throw CapExceeded("Weyl orbit too large", cap);
        queue.push_back(std::move(r));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w, std::size_t cap) {
  std::unordered_set<Weight, WeightHash> seen{w};
  std::vector<Weight> order{w};
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Weight v = order[head];
    for (int i = 0; i < rs.rank(); ++i) {
      if (v[i] == 0) continue;
      Weight r = rs.reflect(v, i + 1);
      if (seen.insert(r).second) {
        if (seen.size() > cap) throw CapExceeded("Weyl orbit too large", cap);
        order.push_back(r);
      }
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<Coweight> dominant_coweights_below(const RootSystem& rs, const Coweight& lambda) {
  if (!rs.is_dominant(lambda)) throw InputError("dominant coweight required");
  std::set<Coweight> seen{lambda};
  std::deque<Coweight> queue{lambda};
  while (!queue.empty()) {
    const Coweight v = queue.front();
    queue.pop_front();
    for (const auto& co : rs.positive_coroots()) {
      Coweight next = v;
      for (std::size_t k = 0; k < co.size(); ++k) next[k] -= Rational(co[k]);
      if (rs.is_dominant(next) && seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<MinusculeRep> minuscule_reps(const RootSystem& rs) {
  std::vector<MinusculeRep> reps;
  reps.push_back({rs.coset_key(Coweight(static_cast<std::size_t>(rs.rank()))), Coweight(static_cast<std::size_t>(rs.rank())), 0});
  for (int i = 1; i <= rs.rank(); ++i) {
    if (rs.marks()[i - 1] != 1) continue;
    Coweight w = rs.fundamental_coweight(i);
    reps.push_back({rs.coset_key(w), w, i});
  }
  return reps;
}

FiniteCharacter finite_dominant_multiplicities(const RootSystem& rs, const Weight& highest) {
  if (!rs.is_dominant(highest)) throw InputError("finite character requires a dominant highest weight");
  const int n = rs.rank();
  struct Entry {
    Weight mu;
    std::vector<std::int64_t> depth;  // highest - mu in simple-root coordinates
    std::int64_t height = 0;
  };
  std::vector<Entry> entries{{highest, std::vector<std::int64_t>(static_cast<std::size_t>(n), 0), 0}};
  std::unordered_map<Weight, std::size_t, WeightHash> index{{highest, 0}};
  for (std::size_t head = 0; head < entries.size(); ++head) {
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
      const Weight next = entries[head].mu - rs.positive_root_weight(k);
      if (!rs.is_dominant(next) || index.count(next)) continue;
      Entry e{next, entries[head].depth, entries[head].height};
      for (int j = 0; j < n; ++j) {
        e.depth[j] += rs.positive_roots()[k][j];
        e.height += rs.positive_roots()[k][j];
      }
      index.emplace(next, entries.size());
      entries.push_back(std::move(e));
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.height != b.height ? a.height < b.height : a.mu > b.mu;
  });

  // Forms scaled by 6 so that (root, weight)* is integral for every type.
  std::vector<std::int64_t> scaled_norm(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) scaled_norm[j] = to_int(3 * rs.simple_root_norm(j + 1), "scaled norm");
  std::vector<std::int64_t> scaled_root_norm;
  for (std::size_t k = 0; k < rs.positive_roots().size(); ++k)
    scaled_root_norm.push_back(to_int(3 * rs.root_norm(k), "scaled norm"));

  FiniteCharacter mult;
  mult[highest] = 1;
  const Weight rho = rs.rho();
  for (std::size_t e = 1; e < entries.size(); ++e) {
    const Weight& mu = entries[e].mu;
    const Weight sum = highest + mu + 2 * rho;
    std::int64_t denom = 0;
    for (int j = 0; j < n; ++j) denom += entries[e].depth[j] * scaled_norm[j] * sum[j];
    BigInt numer = 0;
    for (std::size_t k = 0; k < rs.positive_roots().size(); ++k) {
      const auto& co = rs.positive_coroots()[k];
      std::int64_t base = 0;
      for (int i = 0; i < n; ++i) base += co[i] * mu[i];
      Weight shifted = mu;
      for (std::int64_t j = 1;; ++j) {
        shifted += rs.positive_root_weight(k);
        const auto it = mult.find(rs.dominant_part(shifted));
        if (it == mult.end()) break;
        numer += it->second * (scaled_root_norm[k] * (base + 2 * j));
      }
    }
    numer *= 2;
    if (denom <= 0 || numer % denom != 0) throw std::logic_error("Freudenthal recursion produced a non-integral multiplicity");
    BigInt m = numer / denom;
    if (m != 0) mult[mu] = std::move(m);
  }
  return mult;
}

FiniteCharacter finite_weyl_character(const RootSystem& rs, const Weight& highest) {
  FiniteCharacter out;
  for (const auto& [mu, m] : finite_dominant_multiplicities(rs, highest))
    for (const auto& w : weyl_orbit(rs, mu)) out.emplace(w, m);
  return out;
}

}  // namespace affchar
