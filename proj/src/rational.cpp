#include "planemld/rational.hpp"

#include <cctype>

namespace planemld {

namespace {

bool is_int_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

// mpz rejects an explicit leading '+'.
Integer to_integer(const std::string& s) {
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

std::string strip(const std::string& s) {
  std::string out;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::string s = strip(text);
  const size_t slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_int_token(s)) throw std::invalid_argument("bad rational: " + text);
    return Rational(to_integer(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!is_int_token(num) || !is_int_token(den))
    throw std::invalid_argument("bad rational: " + text);
  Integer d = to_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + text);
  Rational q(to_integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

long long to_ll(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer too large");
  return static_cast<long long>(z.get_si());
}

}  // namespace planemld
