#include "desing/rational.hpp"

#include "desing/errors.hpp"

namespace desing {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s.empty()) throw ParameterError("empty rational");
  auto valid_int = [](const std::string& t) {
    size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw ParameterError("not a rational: " + text);
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw ParameterError("zero denominator: " + text);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational rational_pow(const Rational& q, long k) {
  if (k == 0) return 1;
  if (k < 0) {
    if (q == 0) throw ParameterError("0 raised to a negative power");
    return rational_pow(Rational(1) / q, -k);
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(k));
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(k));
  r.canonicalize();
  return r;
}

}  // namespace desing
