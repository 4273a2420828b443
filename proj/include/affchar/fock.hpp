#pragma once

// Heisenberg Fock modules and lattice (coset) characters.

#include <cstdint>
#include <vector>

#include "affchar/qcharacter.hpp"

namespace affchar {

/// Number of multipartitions of d into `colors` colors, for d = 0..max_d.
std::vector<BigInt> multipartition_counts(int colors, int max_d);

/// pi^k_lambda: the weight k iota(lambda) at q = k (lambda,lambda)/2 + d
/// with multiplicity p_rank(d); terms with q > depth are dropped.
QCharacter fock_character(const RootSystem& rs, const Coweight& lambda, std::int64_t k, const Rational& depth);

/// The lattice shift + R_G.
struct LatticeCoset {
  Coweight shift;
};

/// Vectors shift + n, n in the coroot lattice, with (v,v)/2 <= bound,
/// sorted. The shift may be any rational coweight.
std::vector<Coweight> shifted_lattice_vectors_below(const RootSystem& rs, const Coweight& shift,
                                                    const Rational& bound, std::size_t cap = kDefaultOrbitCap);

/// Lattice vectors of the coset with (lambda,lambda)/2 <= bound, sorted.
std::vector<Coweight> coset_vectors_below(const RootSystem& rs, const LatticeCoset& coset, const Rational& bound,
                                          std::size_t cap = kDefaultOrbitCap);

/// Smallest (lambda,lambda)/2 over the coset.
Rational coset_min_norm(const RootSystem& rs, const LatticeCoset& coset);

/// Sum of the level-k Fock characters over the coset, normalized to start
/// at q^0 and kept to depth N after normalization.
QCharacter lattice_character(const RootSystem& rs, const LatticeCoset& coset, const Rational& depth,
                             std::int64_t k = 1, std::size_t cap = kDefaultOrbitCap);

}  // namespace affchar
