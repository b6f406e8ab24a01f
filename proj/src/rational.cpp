#include "ordalab/rational.hpp"

#include <ostream>

namespace ordalab {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  std::string s = text;
  // Trim surrounding whitespace; GMP rejects embedded spaces anyway.
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) throw std::invalid_argument("Rational: empty literal");
  s = s.substr(b, e - b + 1);
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw std::invalid_argument("Rational: bad literal '" + text + "'");
  if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
  v.canonicalize();
  return Rational(std::move(v));
}

std::string Rational::str() const {
  return v_.get_str();
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace ordalab
