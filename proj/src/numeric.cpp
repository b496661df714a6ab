#include "hfgrade/numeric.hpp"

#include <stdexcept>

namespace hfgrade {

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  if (canonical.get_den() == 1) return canonical.get_num().get_str();
  return canonical.get_num().get_str() + "/" + canonical.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  auto valid_integer = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

bool is_integral(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_den() == 1;
}

Integer reduce_mod(const Integer& a, const Integer& m) {
  if (m == 0) return a;
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (r < 0) r += abs(m);
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace hfgrade
