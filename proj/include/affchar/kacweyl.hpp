#pragma once

// Truncated Weyl-Kac characters of integrable highest-weight modules
// L(k Lambda + nu) of the untwisted affine algebra.

#include <cstdint>

#include "affchar/qcharacter.hpp"

namespace affchar {

/// k Lambda + nu, nu dominant (fundamental coordinates) with <nu, theta> <= k.
struct AffineDominantWeight {
  std::int64_t level = 1;
  Weight finite;
};

/// Checks the integrability bound; throws InputError naming the violation.
void validate(const RootSystem& rs, const AffineDominantWeight& hw);

/// prod_{n=1..N} (1-q^n)^{-rank} prod_{alpha in Delta} (1-q^n e^alpha)^{-1}, truncated at N.
QCharacter inverse_denominator(const RootSystem& rs, std::int64_t depth);

/// The alternating numerator with the finite Weyl group summed out: for
/// every coroot translation gamma, xi = nu + rho + (k + h^vee) iota(gamma)
/// contributes sign * ch V(dom(xi) - rho) at q^{<gamma, nu+rho> + (k+h^vee)(gamma,gamma)/2}.
QCharacter weyl_kac_numerator(const RootSystem& rs, const AffineDominantWeight& hw, std::int64_t depth,
                              std::size_t cap = kDefaultOrbitCap);

/// The character up to q^depth; every coefficient is checked non-negative.
QCharacter weyl_kac_character(const RootSystem& rs, const AffineDominantWeight& hw, std::int64_t depth,
                              std::size_t cap = kDefaultOrbitCap);
/// Same, reusing a precomputed inverse_denominator(rs, depth).
QCharacter weyl_kac_character(const RootSystem& rs, const AffineDominantWeight& hw, std::int64_t depth,
                              const QCharacter& inv_denominator, std::size_t cap = kDefaultOrbitCap);

}  // namespace affchar
