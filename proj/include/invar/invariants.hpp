#ifndef INVAR_INVARIANTS_HPP
#define INVAR_INVARIANTS_HPP

#include <map>
#include <optional>
#include <vector>

#include "invar/group.hpp"
#include "invar/polynomial.hpp"

namespace invar {

// Averaging projection onto the invariant ring: (1/h) * sum_k p(A_k x).
Polynomial reynolds(const MatrixGroup& g, const Polynomial& p);

// Exact invariance under every group element (generators alone would not be
// a proof). On failure, *witness receives the 1-based index of the first
// moving element.
bool is_invariant(const MatrixGroup& g, const Polynomial& p,
                  int* witness = nullptr);

// J[mu] = sum_k prod_i ((A_k x)_i)^(mu_i), an invariant homogeneous of
// degree |mu|. Requires |mu| >= 1.
struct OrbitPowerSum {
  Exponents mu;
  Polynomial value;
};
OrbitPowerSum orbit_power_sum(const MatrixGroup& g, const Exponents& mu);

// The finite generating system of orbit power sums J[mu], 1 <= |mu| <= h,
// enumerated by ascending total degree, lexicographically descending within
// a degree. Zero and repeated values are kept and flagged; duplicate_of
// names the first key carrying the same value.
struct GeneratorEntry {
  Exponents mu;
  Polynomial value;
  bool is_zero = false;
  std::optional<Exponents> duplicate_of;
};
std::vector<GeneratorEntry> orbit_sum_system(const MatrixGroup& g);

// --- combined ring -------------------------------------------------------
//
// Resolvent computations run in the ring Q[z, u_1..u_n, x_1..x_n] with the
// fixed variable layout below (index 0 is z, then the u block, then the x
// block).
inline int combined_ring_vars(int n) { return 2 * n + 1; }
inline int combined_z_index() { return 0; }
inline int combined_u_index(int i) { return i; }            // 1-based i
inline int combined_x_index(int n, int v) { return n + v; }  // 1-based v

// xi_k = sum_i u_i * (A_k x)_i, the linear form attached to element k
// (1-based), bilinear in u and x.
Polynomial conjugate_linear_form(const MatrixGroup& g, int k);

// prod_k (z + xi_k), monic of degree h in z.
Polynomial resolvent_product(const MatrixGroup& g);

// Coefficient table of the resolvent: key (alpha, alphas) with
// alpha + |alphas| = h and alpha != h maps to the coefficient of
// z^alpha * u^alphas, a polynomial in x, invariant and homogeneous of degree
// |alphas|. Zero coefficients are not stored. Iteration order is canonical:
// alpha descending, then alphas lexicographically descending.
struct ResolventKey {
  int alpha;
  Exponents alphas;
};

struct ResolventKeyOrder {
  bool operator()(const ResolventKey& a, const ResolventKey& b) const;
};

class ResolventTable {
 public:
  using EntryMap = std::map<ResolventKey, Polynomial, ResolventKeyOrder>;

  ResolventTable(int n, int h) : n_(n), h_(h) {}
  int dimension() const { return n_; }
  int group_order() const { return h_; }
  const EntryMap& entries() const { return entries_; }
  const Polynomial* find(int alpha, const Exponents& alphas) const;
  void accumulate(int alpha, const Exponents& alphas, const Exponents& xexp,
                  const Rational& c);

  // Sum of entries * z^alpha * u^alphas plus the leading z^h, assembled in
  // the combined ring without polynomial multiplication.
  Polynomial reconstruct() const;

 private:
  int n_;
  int h_;
  EntryMap entries_;
};

ResolventTable galois_resolvent(const MatrixGroup& g);

// The bracket [dPhi/du_i - (A_k x)_i * dPhi/dz] at z = -xi_k, in the
// combined ring. Identically zero; exposed so the identity is runnable
// rather than trusted. Indices are 1-based.
Polynomial resolvent_derivative_identity(const MatrixGroup& g, int i, int k);

// A quotient of polynomials that is invariant as a function:
// num(A_k x) * den(x) = num(x) * den(A_k x) for every k.
struct RationalInvariant {
  Polynomial num;
  Polynomial den;
};

// Expands the quotient by all conjugates of the denominator. The result has
// numerator and denominator each invariant as polynomials; no common-factor
// cancellation is attempted.
RationalInvariant rationalize_invariant(const MatrixGroup& g,
                                        const RationalInvariant& w);

}  // namespace invar

#endif
