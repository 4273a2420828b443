#include "affchar/numeric.hpp"

#include <charconv>
#include <sstream>

namespace affchar {

std::int64_t floor(const Rational& r) {
  const auto n = r.numerator();
  const auto d = r.denominator();
  auto q = n / d;
  if ((n % d != 0) && (n < 0)) --q;
  return q;
}

std::int64_t ceil(const Rational& r) { return -floor(-r); }

bool is_integer(const Rational& r) { return r.denominator() == 1; }

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {
std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InputError("malformed integer '" + std::string(s) + "'");
  return v;
}
}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const auto den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace affchar
