#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "affchar/numeric.hpp"

namespace affchar {

inline constexpr int kMaxRank = 8;

/// Integral weight in fundamental-weight coordinates. Entries past the
/// rank of the owning root system are always zero, so the lexicographic
/// order and the hash only see meaningful coordinates.
struct Weight {
  std::array<std::int32_t, kMaxRank> c{};

  std::int32_t& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  std::int32_t operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  Weight& operator+=(const Weight& o) {
    for (int i = 0; i < kMaxRank; ++i) c[i] += o.c[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (int i = 0; i < kMaxRank; ++i) c[i] -= o.c[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) {
    for (auto& x : a.c) x = -x;
    return a;
  }
  friend Weight operator*(std::int64_t s, Weight a) {
    for (auto& x : a.c) x = static_cast<std::int32_t>(s * x);
    return a;
  }
  bool is_zero() const {
    for (auto x : c)
      if (x != 0) return false;
    return true;
  }

  auto operator<=>(const Weight&) const = default;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : w.c) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// "(c1,...,cl)"
std::string format_weight(const Weight& w, int rank);

/// Weight multiplicity map of a finite-dimensional module.
using FiniteCharacter = std::map<Weight, BigInt>;

/// Character product (convolution of weight maps).
FiniteCharacter multiply(const FiniteCharacter& a, const FiniteCharacter& b);
BigInt dimension(const FiniteCharacter& ch);

}  // namespace affchar
