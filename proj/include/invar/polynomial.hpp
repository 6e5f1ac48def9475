#ifndef INVAR_POLYNOMIAL_HPP
#define INVAR_POLYNOMIAL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invar/rational.hpp"

namespace invar {

class RationalMatrix;

// Exponent vector of a monomial; length equals the ambient variable count.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);
Exponents add_exponents(const Exponents& a, const Exponents& b);
Exponents sub_exponents(const Exponents& a, const Exponents& b);
bool dominates(const Exponents& a, const Exponents& b);  // a >= b entrywise

// Graded lexicographic term order arranged so that map iteration yields the
// canonical printing order: higher total degree first, ties broken
// lexicographically with x1 > x2 > ...
struct TermOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariants: no stored coefficient is zero, keys all have the ambient
// length, term order is canonical.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, TermOrder>;

  explicit Polynomial(int variable_count);
  static Polynomial constant(int variable_count, const Rational& c);
  static Polynomial variable(int variable_count, int index);  // 0-based
  static Polynomial monomial(Exponents exponents, const Rational& coeff);

  int variable_count() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Stored coefficient of x^mu, exact zero if absent.
  Rational coefficient(const Exponents& mu) const;
  Rational constant_term() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(int e) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // p(M x): substitute x_i <- sum_v M[i][v] * x_v.
  Polynomial substituted(const RationalMatrix& m) const;
  // Substitute a single variable by a polynomial in the same ring.
  Polynomial substituted_var(int var, const Polynomial& replacement) const;
  Polynomial derivative(int var) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  // Degree when homogeneous; std::nullopt for inhomogeneous or zero input.
  std::optional<int> homogeneous_degree() const;

  // Accumulates c * x^e, purging the term if the sum vanishes.
  void add_term(const Exponents& e, const Rational& c);

  // Canonical text form: graded-lex term order, "p/q" coefficients,
  // explicit '*' and '^'. Variables print as x1..xn.
  std::string str() const;

  // Deterministic total order, usable as a map key comparator.
  static int compare(const Polynomial& a, const Polynomial& b);

 private:
  int nvars_;
  TermMap terms_;
};

struct PolynomialLess {
  bool operator()(const Polynomial& a, const Polynomial& b) const {
    return Polynomial::compare(a, b) < 0;
  }
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace invar

#endif
