#include "affchar/qcharacter.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace affchar {

namespace {

bool beyond(const std::optional<Rational>& depth, const Rational& q) { return depth && q > *depth; }

std::optional<Rational> common_depth(const QCharacter& a, const QCharacter& b) {
  if (!a.depth()) return b.depth();
  if (!b.depth()) return a.depth();
  return std::min(*a.depth(), *b.depth());
}

}  // namespace

QCharacter::QCharacter(int rank, std::int64_t level, std::optional<Rational> depth)
    : rank_(rank), level_(level), depth_(depth) {
  if (rank < 1 || rank > kMaxRank) throw InputError("rank must lie in 1..8");
}

QCharacter QCharacter::unit(int rank, std::optional<Rational> depth) {
  return monomial(rank, 0, Weight{}, Rational(0), depth);
}

QCharacter QCharacter::monomial(int rank, std::int64_t level, const Weight& w, const Rational& q,
                                std::optional<Rational> depth) {
  QCharacter c(rank, level, depth);
  c.add_term(w, q, 1);
  return c;
}

QCharacter QCharacter::from_finite(int rank, std::int64_t level, const FiniteCharacter& ch,
                                   std::optional<Rational> depth) {
  QCharacter c(rank, level, depth);
  for (const auto& [w, m] : ch) c.add_term(w, Rational(0), m);
  return c;
}

QCharacter QCharacter::from_layers(int rank, std::int64_t level, LayerMap layers,
                                   std::optional<Rational> depth, bool truncated) {
  QCharacter c(rank, level, depth);
  c.layers_ = std::move(layers);
  c.truncated_ = truncated;
  if (depth) c.truncate(*depth);
  for (auto it = c.layers_.begin(); it != c.layers_.end();) {
    std::erase_if(it->second, [](const auto& kv) { return kv.second == 0; });
    it = it->second.empty() ? c.layers_.erase(it) : std::next(it);
  }
  return c;
}

std::size_t QCharacter::term_count() const {
  std::size_t n = 0;
  for (const auto& [q, l] : layers_) n += l.size();
  return n;
}

BigInt QCharacter::coefficient(const Weight& w, const Rational& q) const {
  const auto it = layers_.find(q);
  if (it == layers_.end()) return 0;
  const auto jt = it->second.find(w);
  return jt == it->second.end() ? BigInt(0) : jt->second;
}

FiniteCharacter QCharacter::layer(const Rational& q) const {
  const auto it = layers_.find(q);
  return it == layers_.end() ? FiniteCharacter{} : it->second;
}

Rational QCharacter::min_q() const {
  if (layers_.empty()) throw InputError("zero character has no q-range");
  return layers_.begin()->first;
}

Rational QCharacter::max_q() const {
  if (layers_.empty()) throw InputError("zero character has no q-range");
  return layers_.rbegin()->first;
}

void QCharacter::add_term(const Weight& w, const Rational& q, const BigInt& c) {
  if (c == 0) return;
  if (beyond(depth_, q)) {
    truncated_ = true;
    return;
  }
  auto& l = layers_[q];
  auto [it, fresh] = l.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) l.erase(it);
  }
  if (l.empty()) layers_.erase(q);
}

void QCharacter::normalize() {
  if (layers_.empty() || layers_.begin()->first == 0) return;
  const Rational shift = layers_.begin()->first;
  LayerMap moved;
  for (auto& [q, l] : layers_) moved.emplace(q - shift, std::move(l));
  layers_ = std::move(moved);
  if (depth_) truncate(*depth_);
}

void QCharacter::truncate(const Rational& depth) {
  if (!depth_ || depth < *depth_) depth_ = depth;
  auto it = layers_.upper_bound(*depth_);
  if (it != layers_.end()) {
    truncated_ = true;
    layers_.erase(it, layers_.end());
  }
}

void QCharacter::check_compatible(const QCharacter& o) const {
  if (rank_ != o.rank_) throw InputError("rank mismatch");
  if (level_ != o.level_) throw InputError("level mismatch");
}

QCharacter& QCharacter::operator+=(const QCharacter& o) {
  check_compatible(o);
  truncated_ = truncated_ || o.truncated_;
  for (const auto& [q, l] : o.layers_)
    for (const auto& [w, c] : l) add_term(w, q, c);
  return *this;
}

QCharacter& QCharacter::operator-=(const QCharacter& o) {
  check_compatible(o);
  truncated_ = truncated_ || o.truncated_;
  for (const auto& [q, l] : o.layers_)
    for (const auto& [w, c] : l) add_term(w, q, -c);
  return *this;
}

QCharacter qchar_mul(const QCharacter& a, const QCharacter& b) {
  if (a.rank() != b.rank()) throw InputError("rank mismatch");
  if (a.depth() != b.depth()) throw InputError("truncation depths differ");
  kernels::Cutoff cut{a.depth(), false};
  LayerMap prod = kernels::convolve(a.layers(), b.layers(), cut);
  return QCharacter::from_layers(a.rank(), a.level() + b.level(), std::move(prod), a.depth(),
                                 a.truncated() || b.truncated() || cut.dropped);
}

kernels::StringOp demazure_string(const RootSystem& rs, int node, std::int64_t level) {
  if (node < 0 || node > rs.rank()) throw InputError("node index outside 0..rank");
  kernels::StringOp op;
  if (node > 0) {
    op.pairing[static_cast<std::size_t>(node - 1)] = 1;
    op.step = rs.simple_root_weight(node);
    op.q_step = 0;
  } else {
    for (int j = 0; j < rs.rank(); ++j) op.pairing[static_cast<std::size_t>(j)] = -rs.comarks()[j];
    op.pairing_const = level;
    op.step = -rs.highest_root_weight();
    op.q_step = 1;
  }
  return op;
}

QCharacter demazure_op(const RootSystem& rs, int node, const QCharacter& chi) {
  if (chi.rank() != rs.rank()) throw InputError("rank mismatch");
  kernels::Cutoff cut{chi.depth(), false};
  LayerMap out = kernels::demazure(chi.layers(), demazure_string(rs, node, chi.level()), cut);
  return QCharacter::from_layers(chi.rank(), chi.level(), std::move(out), chi.depth(),
                                 chi.truncated() || cut.dropped);
}

FiniteCharacter specialize_q1(const QCharacter& chi, bool allow_truncated) {
  if (chi.truncated() && !allow_truncated)
    throw InputError("specializing a truncated character gives only a lower bound");
  FiniteCharacter out;
  for (const auto& [q, l] : chi.layers())
    for (const auto& [w, c] : l) out[w] += c;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

bool is_weyl_invariant(const RootSystem& rs, const QCharacter& chi) {
  for (const auto& [q, l] : chi.layers())
    for (const auto& [w, c] : l)
      for (int i = 1; i <= rs.rank(); ++i) {
        const auto it = l.find(rs.reflect(w, i));
        if (it == l.end() || it->second != c) return false;
      }
  return true;
}

std::optional<Discrepancy> first_discrepancy(const QCharacter& lhs, const QCharacter& rhs) {
  const auto depth = common_depth(lhs, rhs);
  std::set<Rational> qs;
  for (const auto& [q, l] : lhs.layers()) qs.insert(q);
  for (const auto& [q, l] : rhs.layers()) qs.insert(q);
  for (const auto& q : qs) {
    if (beyond(depth, q)) break;
    const FiniteCharacter a = lhs.layer(q), b = rhs.layer(q);
    std::set<Weight> ws;
    for (const auto& [w, c] : a) ws.insert(w);
    for (const auto& [w, c] : b) ws.insert(w);
    for (const auto& w : ws) {
      const auto ia = a.find(w), ib = b.find(w);
      const BigInt ca = ia == a.end() ? BigInt(0) : ia->second;
      const BigInt cb = ib == b.end() ? BigInt(0) : ib->second;
      if (ca != cb) return Discrepancy{w, q, ca, cb};
    }
  }
  return std::nullopt;
}

bool equal_up_to_common_depth(const QCharacter& a, const QCharacter& b) {
  return a.rank() == b.rank() && !first_discrepancy(a, b);
}

std::string serialize(const QCharacter& chi) {
  std::string out;
  for (const auto& [q, l] : chi.layers())
    for (const auto& [w, c] : l) {
      out += "w=" + format_weight(w, chi.rank()) + " q=" + to_string(q) + " coeff=" + to_string(c);
      out += '\n';
    }
  return out;
}

QCharacter parse_qcharacter(std::string_view text, int rank, std::int64_t level,
                            std::optional<Rational> depth) {
  QCharacter chi(rank, level, depth);
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto fail = [&](const std::string& why) {
      return InputError("line " + std::to_string(lineno) + ": " + why);
    };
    std::istringstream fields(line);
    std::string wtok, qtok, ctok;
    if (!(fields >> wtok >> qtok >> ctok)) throw fail("expected three fields");
    if (wtok.rfind("w=(", 0) != 0 || wtok.back() != ')') throw fail("bad weight field");
    if (qtok.rfind("q=", 0) != 0) throw fail("bad q field");
    if (ctok.rfind("coeff=", 0) != 0) throw fail("bad coeff field");
    Weight w;
    int n = 0;
    std::istringstream coords(wtok.substr(3, wtok.size() - 4));
    std::string part;
    while (std::getline(coords, part, ',')) {
      if (n >= rank) throw fail("too many weight coordinates");
      try {
        w[n++] = std::stoi(part);
      } catch (const std::exception&) {
        throw fail("bad weight coordinate '" + part + "'");
      }
    }
    if (n != rank) throw fail("expected " + std::to_string(rank) + " weight coordinates");
    BigInt c;
    try {
      c = BigInt(ctok.substr(6));
    } catch (const std::exception&) {
      throw fail("bad coefficient");
    }
    chi.add_term(w, parse_rational(qtok.substr(2)), c);
  }
  return chi;
}

}  // namespace affchar
