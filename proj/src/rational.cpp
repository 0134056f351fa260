#include "zetagap/rational.hpp"

#include <vector>

namespace zetagap {

ExactRational ExactRational::from_string(const std::string& s) {
  auto slash = s.find('/');
  mpz_class num, den(1);
  try {
    if (slash == std::string::npos) {
      num = mpz_class(s);
    } else {
      num = mpz_class(s.substr(0, slash));
      den = mpz_class(s.substr(slash + 1));
    }
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("ExactRational: cannot parse \"" + s + "\"");
  }
  if (den == 0) throw std::invalid_argument("ExactRational: zero denominator in \"" + s + "\"");
  return ExactRational(num, den);
}

std::string ExactRational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

mpz_class factorial_z(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class parse_factored_integer(const std::string& s) {
  mpz_class v(1);
  size_t pos = 0;
  while (pos < s.size()) {
    size_t star = s.find('*', pos);
    std::string tok = s.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
    if (tok.empty()) throw std::invalid_argument("parse_factored_integer: empty factor in \"" + s + "\"");
    size_t caret = tok.find('^');
    mpz_class base, term;
    try {
      if (caret == std::string::npos) {
        term = mpz_class(tok);
      } else {
        base = mpz_class(tok.substr(0, caret));
        unsigned long e = std::stoul(tok.substr(caret + 1));
        mpz_pow_ui(term.get_mpz_t(), base.get_mpz_t(), e);
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_factored_integer: bad factor \"" + tok + "\"");
    }
    v *= term;
    if (star == std::string::npos) break;
    pos = star + 1;
  }
  return v;
}

}  // namespace zetagap
