#include "distvar/domain.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "distvar/errors.h"

namespace distvar {
namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::int64_t parse_integer(std::string_view text) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("not an integer: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw RangeError("modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw RangeError("inverse of zero in " + name());
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return from_int(t);
}

PrimeField::Element PrimeField::parse(std::string_view text) const {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_int(parse_integer(text));
  const Element num = from_int(parse_integer(text.substr(0, slash)));
  const Element den = from_int(parse_integer(text.substr(slash + 1)));
  if (den == 0) throw ParseError("denominator vanishes modulo " + std::to_string(p_));
  return div(num, den);
}

RationalField::Element RationalField::inv(const Element& a) const {
  if (a == 0) throw RangeError("inverse of zero in QQ");
  return Element(1) / a;
}

std::string RationalField::format(const Element& a) const {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(a) == 1) return numerator(a).str();
  return numerator(a).str() + "/" + denominator(a).str();
}

RationalField::Element RationalField::parse(std::string_view text) const {
  try {
    const auto slash = text.find('/');
    using boost::multiprecision::cpp_int;
    if (slash == std::string_view::npos) return Element(cpp_int(std::string(text)));
    cpp_int den(std::string(text.substr(slash + 1)));
    if (den == 0) throw ParseError("zero denominator");
    return Element(cpp_int(std::string(text.substr(0, slash)))) / Element(den);
  } catch (const std::runtime_error& e) {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
}

RealField::Element RealField::inv(Element a) const {
  if (a == 0.0) throw RangeError("inverse of zero in RR64");
  return 1.0 / a;
}

std::string RealField::format(Element a) const {
  char buf[64];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, a);
    if (std::strtod(buf, nullptr) == a) break;
  }
  return buf;
}

RealField::Element RealField::parse(std::string_view text) const {
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) {
    // Allow rational notation for convenience.
    const auto slash = s.find('/');
    if (slash != std::string::npos) return parse(s.substr(0, slash)) / parse(s.substr(slash + 1));
    throw ParseError("not a number: '" + s + "'");
  }
  return v;
}

}  // namespace distvar
