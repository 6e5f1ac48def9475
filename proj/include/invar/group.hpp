#ifndef INVAR_GROUP_HPP
#define INVAR_GROUP_HPP

#include <vector>

#include "invar/matrix.hpp"
#include "invar/polynomial.hpp"

namespace invar {

// A finite group of invertible rational matrices, held as the full element
// list. Element order is canonical: breadth-first products starting from the
// identity, multiplying on the right by the generators in the order given,
// deduplicated by exact entries. The identity is always element 1.
class MatrixGroup {
 public:
  static constexpr int kDefaultClosureCap = 10000;

  // dimension_hint lets an empty generator list denote the trivial group.
  static MatrixGroup closure(const std::vector<RationalMatrix>& generators,
                             int cap = kDefaultClosureCap,
                             int dimension_hint = -1);

  int dimension() const { return n_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<RationalMatrix>& elements() const { return elements_; }
  const RationalMatrix& element(int k) const { return elements_[k]; }  // 0-based

 private:
  MatrixGroup(int n, std::vector<RationalMatrix> elems)
      : n_(n), elements_(std::move(elems)) {}
  int n_;
  std::vector<RationalMatrix> elements_;
};

// Group action on polynomials: (g . p)(x) = p(g x).
Polynomial act(const RationalMatrix& g, const Polynomial& p);

}  // namespace invar

#endif
