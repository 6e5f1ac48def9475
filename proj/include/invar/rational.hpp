#ifndef INVAR_RATIONAL_HPP
#define INVAR_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace invar {

// Exact rational scalar. Always held in canonical form: reduced fraction,
// positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design (scalar literals)
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);

  // Accepts "p", "-p" or "p/q" with decimal digits and q > 0.
  static Rational from_string(const std::string& text);

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws DomainError on zero
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  bool operator==(const Rational& o) const;
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_one() const;
  bool is_integer() const;
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  std::string str() const;  // "p" or "p/q"

 private:
  mpq_class v_;
};

Rational abs(const Rational& a);
Rational pow(const Rational& base, int exponent);  // exponent >= 0

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace invar

#endif
