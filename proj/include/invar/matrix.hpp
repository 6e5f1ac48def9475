#ifndef INVAR_MATRIX_HPP
#define INVAR_MATRIX_HPP

#include <string>
#include <vector>

#include "invar/rational.hpp"

namespace invar {

// Square matrix of exact rationals.
class RationalMatrix {
 public:
  explicit RationalMatrix(int n);
  static RationalMatrix identity(int n);

  int dimension() const { return n_; }
  Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
  const Rational& at(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * n_ + j];
  }

  RationalMatrix operator*(const RationalMatrix& o) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  // Exact determinant by fraction-free (Bareiss) elimination.
  Rational determinant() const;

  bool is_identity() const;
  bool operator==(const RationalMatrix& o) const;
  bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

  // Entrywise deterministic total order (dimension first).
  static int compare(const RationalMatrix& a, const RationalMatrix& b);

  std::string str() const;  // e.g. [[0, -1], [1, -1]]

 private:
  int n_;
  std::vector<Rational> e_;
};

struct MatrixLess {
  bool operator()(const RationalMatrix& a, const RationalMatrix& b) const {
    return RationalMatrix::compare(a, b) < 0;
  }
};

}  // namespace invar

#endif
