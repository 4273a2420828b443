#include "affchar/weight.hpp"

namespace affchar {

std::string format_weight(const Weight& w, int rank) {
  std::string out = "(";
  for (int i = 0; i < rank; ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  out += ')';
  return out;
}

FiniteCharacter multiply(const FiniteCharacter& a, const FiniteCharacter& b) {
  FiniteCharacter out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) out[wa + wb] += ca * cb;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

BigInt dimension(const FiniteCharacter& ch) {
  BigInt total = 0;
  for (const auto& [w, c] : ch) total += c;
  return total;
}

}  // namespace affchar
