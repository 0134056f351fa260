// Exact rational arithmetic used by the moment-constant computations.
// Thin wrapper over GMP's mpq_class: always canonical (lowest terms,
// positive denominator), arithmetic exact.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace zetagap {

class ExactRational {
 public:
  ExactRational() : q_(0) {}
  ExactRational(long n) : q_(n) {}  // NOLINT: implicit by design
  ExactRational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("ExactRational: zero denominator");
    q_.canonicalize();
  }
  explicit ExactRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  explicit ExactRational(const mpz_class& num, const mpz_class& den = 1) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("ExactRational: zero denominator");
    q_.canonicalize();
  }

  // Parses "num", "num/den" (arbitrary precision, base 10).
  static ExactRational from_string(const std::string& s);

  std::string numerator_str() const { return q_.get_num().get_str(); }
  std::string denominator_str() const { return q_.get_den().get_str(); }
  std::string to_string() const;  // "num/den", or "num" when den == 1

  const mpz_class& numerator() const { return q_.get_num(); }
  const mpz_class& denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  double to_double() const { return q_.get_d(); }
  bool is_zero() const { return q_ == 0; }
  bool is_positive() const { return q_ > 0; }

  ExactRational operator-() const { return ExactRational(mpq_class(-q_)); }
  ExactRational& operator+=(const ExactRational& o) { q_ += o.q_; return *this; }
  ExactRational& operator-=(const ExactRational& o) { q_ -= o.q_; return *this; }
  ExactRational& operator*=(const ExactRational& o) { q_ *= o.q_; return *this; }
  ExactRational& operator/=(const ExactRational& o) {
    if (o.q_ == 0) throw std::invalid_argument("ExactRational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const ExactRational& a, const ExactRational& b) { return a.q_ != b.q_; }
  friend bool operator<(const ExactRational& a, const ExactRational& b) { return a.q_ < b.q_; }
  friend bool operator>(const ExactRational& a, const ExactRational& b) { return a.q_ > b.q_; }
  friend bool operator<=(const ExactRational& a, const ExactRational& b) { return a.q_ <= b.q_; }
  friend bool operator>=(const ExactRational& a, const ExactRational& b) { return a.q_ >= b.q_; }

 private:
  mpq_class q_;
};

// n! as an exact integer.
mpz_class factorial_z(unsigned long n);

// Parses a factored integer like "2^20*3^10*11*13" (also plain "31").
mpz_class parse_factored_integer(const std::string& s);

}  // namespace zetagap
