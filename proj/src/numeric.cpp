#include "epsmult/numeric.hpp"

#include <stdexcept>

namespace epsmult {

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  const Integer den = denominator_of(q);
  if (den == 1) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + den.str();
}

std::string to_decimal(const Rational& q, int digits) {
  if (digits < 0) throw std::invalid_argument("to_decimal: negative digits");
  const bool negative = q < 0;
  const Integer num = boost::multiprecision::abs(numerator_of(q));
  const Integer den = denominator_of(q);
  const Integer scale = ipow(Integer(10), static_cast<unsigned>(digits));
  // round half away from zero
  Integer scaled = (2 * num * scale + den) / (2 * den);
  const Integer whole = scaled / scale;
  const Integer frac = scaled % scale;

  std::string out = negative && scaled != 0 ? "-" : "";
  out += whole.str();
  if (digits > 0) {
    std::string f = frac.str();
    out += '.';
    out.append(static_cast<std::size_t>(digits) - f.size(), '0');
    out += f;
  }
  return out;
}

Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer ipow(const Integer& base, unsigned exp) {
  Integer result = 1;
  Integer b = base;
  while (exp) {
    if (exp & 1u) result *= b;
    exp >>= 1u;
    if (exp) b *= b;
  }
  return result;
}

}  // namespace epsmult
