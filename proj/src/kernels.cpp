#include "affchar/kernels.hpp"

#include <atomic>
#include <set>
#include <vector>

#ifdef AFFCHAR_HAVE_OPENMP
#include <omp.h>
#endif

namespace affchar::kernels {

namespace {

std::atomic<Mode> g_mode{
#ifdef AFFCHAR_HAVE_OPENMP
    Mode::Parallel
#else
    Mode::Serial
#endif
};

bool beyond(const Cutoff& cut, const Rational& q) { return cut.bound && q > *cut.bound; }

void accumulate(FiniteCharacter& dst, const FiniteCharacter& a, const FiniteCharacter& b) {
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) dst[wa + wb] += ca * cb;
}

void prune(FiniteCharacter& layer) {
  std::erase_if(layer, [](const auto& kv) { return kv.second == 0; });
}

void prune(LayerMap& m) {
  for (auto it = m.begin(); it != m.end();) {
    prune(it->second);
    it = it->second.empty() ? m.erase(it) : std::next(it);
  }
}

// Output of one input layer under a string operator.
void string_layer(const Rational& q, const FiniteCharacter& layer, const StringOp& op, LayerMap& out,
                  Cutoff& cut) {
  for (const auto& [mu, c] : layer) {
    std::int64_t m = op.pairing_const;
    for (int j = 0; j < kMaxRank; ++j) m += op.pairing[static_cast<std::size_t>(j)] * mu[j];
    if (m == -1) continue;
    if (m >= 0) {
      Weight w = mu;
      Rational p = q;
      for (std::int64_t j = 0; j <= m; ++j) {
        if (beyond(cut, p)) {
          cut.dropped = true;
          if (op.q_step >= 0) break;
        } else {
          out[p][w] += c;
        }
        w -= op.step;
        p += op.q_step;
      }
    } else {
      Weight w = mu;
      Rational p = q;
      for (std::int64_t j = 1; j <= -m - 1; ++j) {
        w += op.step;
        p -= op.q_step;
        if (beyond(cut, p)) {
          cut.dropped = true;
          continue;
        }
        out[p][w] -= c;
      }
    }
  }
}

}  // namespace

void set_mode(Mode m) { g_mode = m; }
Mode mode() { return g_mode; }

bool parallel_available() {
#ifdef AFFCHAR_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

LayerMap convolve_serial(const LayerMap& a, const LayerMap& b, Cutoff& cut) {
  LayerMap out;
  for (const auto& [qa, la] : a)
    for (const auto& [qb, lb] : b) {
      const Rational q = qa + qb;
      if (beyond(cut, q)) {
        cut.dropped = true;
        continue;
      }
      accumulate(out[q], la, lb);
    }
  prune(out);
  return out;
}

LayerMap convolve_parallel(const LayerMap& a, const LayerMap& b, Cutoff& cut) {
  std::set<Rational> keys;
  for (const auto& [qa, la] : a)
    for (const auto& [qb, lb] : b) {
      const Rational q = qa + qb;
      if (beyond(cut, q))
        cut.dropped = true;
      else
        keys.insert(q);
    }
  const std::vector<Rational> qs(keys.begin(), keys.end());
  std::vector<FiniteCharacter> layers(qs.size());
  const auto n = static_cast<std::int64_t>(qs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < n; ++t) {
    const Rational& q = qs[static_cast<std::size_t>(t)];
    auto& dst = layers[static_cast<std::size_t>(t)];
    for (const auto& [qa, la] : a) {
      const auto it = b.find(q - qa);
      if (it != b.end()) accumulate(dst, la, it->second);
    }
    prune(dst);
  }
  LayerMap out;
  for (std::size_t t = 0; t < qs.size(); ++t)
    if (!layers[t].empty()) out.emplace(qs[t], std::move(layers[t]));
  return out;
}

LayerMap convolve(const LayerMap& a, const LayerMap& b, Cutoff& cut) {
  return mode() == Mode::Parallel ? convolve_parallel(a, b, cut) : convolve_serial(a, b, cut);
}

LayerMap demazure_serial(const LayerMap& in, const StringOp& op, Cutoff& cut) {
  LayerMap out;
  for (const auto& [q, layer] : in) string_layer(q, layer, op, out, cut);
  prune(out);
  return out;
}

LayerMap demazure_parallel(const LayerMap& in, const StringOp& op, Cutoff& cut) {
  std::vector<const std::pair<const Rational, FiniteCharacter>*> items;
  for (const auto& kv : in) items.push_back(&kv);
  std::vector<LayerMap> partial(items.size());
  std::vector<char> dropped(items.size(), 0);
  const auto n = static_cast<std::int64_t>(items.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t t = 0; t < n; ++t) {
    const auto i = static_cast<std::size_t>(t);
    Cutoff local{cut.bound, false};
    string_layer(items[i]->first, items[i]->second, op, partial[i], local);
    dropped[i] = local.dropped;
  }
  LayerMap out;
  for (std::size_t i = 0; i < partial.size(); ++i) {
    cut.dropped = cut.dropped || dropped[i];
    for (auto& [q, layer] : partial[i]) {
      auto& dst = out[q];
      if (dst.empty()) {
        dst = std::move(layer);
        continue;
      }
      for (auto& [w, c] : layer) dst[w] += c;
    }
  }
  prune(out);
  return out;
}

LayerMap demazure(const LayerMap& in, const StringOp& op, Cutoff& cut) {
  return mode() == Mode::Parallel ? demazure_parallel(in, op, cut) : demazure_serial(in, op, cut);
}

}  // namespace affchar::kernels
