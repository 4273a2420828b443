#pragma once

// Hot loops of the character ring, each in a serial reference version and
// an OpenMP version. Both produce identical layer maps; the dispatching
// entry points pick one according to the process-wide mode.

#include <array>
#include <cstdint>
#include <map>
#include <optional>

#include "affchar/weight.hpp"

namespace affchar::kernels {

/// q-exponent -> finite character of that layer.
using LayerMap = std::map<Rational, FiniteCharacter>;

enum class Mode { Serial, Parallel };

void set_mode(Mode m);
Mode mode();
/// True when the library was built with OpenMP.
bool parallel_available();

/// Truncation bound; terms with q > *cutoff are dropped.
struct Cutoff {
  std::optional<Rational> bound;
  bool dropped = false;  // set when anything nonzero was dropped
};

LayerMap convolve_serial(const LayerMap& a, const LayerMap& b, Cutoff& cut);
LayerMap convolve_parallel(const LayerMap& a, const LayerMap& b, Cutoff& cut);
LayerMap convolve(const LayerMap& a, const LayerMap& b, Cutoff& cut);

/// One Demazure operator in linear form. For a term e^mu q^p the pairing is
/// m = pairing_const + sum pairing[j] * mu[j], and the j-th string element
/// is e^{mu - j*step} q^{p + j*q_step}.
struct StringOp {
  std::array<std::int64_t, kMaxRank> pairing{};
  std::int64_t pairing_const = 0;
  Weight step;
  Rational q_step;
};

LayerMap demazure_serial(const LayerMap& in, const StringOp& op, Cutoff& cut);
LayerMap demazure_parallel(const LayerMap& in, const StringOp& op, Cutoff& cut);
LayerMap demazure(const LayerMap& in, const StringOp& op, Cutoff& cut);

}  // namespace affchar::kernels
