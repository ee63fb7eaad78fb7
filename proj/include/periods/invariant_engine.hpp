#ifndef PERIODS_INVARIANT_ENGINE_HPP
#define PERIODS_INVARIANT_ENGINE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "periods/rational_matrix.hpp"

namespace periods::invariant {

enum class Sign { Plus, Minus };

// Equivariance weights of a polynomial f on d x d matrices:
//   f(p x g) = lambda1(p) f(x) lambda2(g)
// for p in the block lower parabolic of the partition (lambda1 = product of
// diagonal-block determinants to the block_weights) and g in
// GL(d_plus) x GL(d_minus) block diagonal (lambda2 = det^k_plus . det^k_minus).
struct AdmissibilityType {
  std::vector<int> block_weights;  // a_1, ..., a_m, one per block
  std::vector<int> partition;      // s_1, ..., s_m, positive, summing to d
  std::pair<int, int> right_weights;  // (k_plus, k_minus)
  std::pair<int, int> split;          // (d_plus, d_minus)

  int dimension() const {
    int d = 0;
    for (int s : partition) d += s;
    return d;
  }

  // Necessary for a nonzero polynomial of this type to exist:
  // sum a_i s_i = k+ d+ + k- d-.
  bool degree_balanced() const;

  // block_weights expanded to one entry per row (a_i repeated s_i times).
  std::vector<int> row_weights() const;

  bool operator==(const AdmissibilityType&) const = default;
};

AdmissibilityType type_of_det(const std::vector<int>& partition,
                              std::pair<int, int> split);

// Upper-left (Plus) / upper-right (Minus) corner minor of size d_plus/d_minus.
// Requires a block prefix summing exactly to that size.
AdmissibilityType type_of_corner(const std::vector<int>& partition,
                                 std::pair<int, int> split, Sign sign);

// Pointwise product of polynomials adds types; same partition/split required.
AdmissibilityType multiply_types(const AdmissibilityType& t1,
                                 const AdmissibilityType& t2);

// Type of the finer invariant c_p on rank-n period matrices:
// weights (2 x p, 1 x (n-2p), 0 x p), right weights (1,1), all-ones partition.
// Requires 1 <= p <= min(d+, d-) - 1. The two-argument form uses the balanced
// split (ceil(n/2), floor(n/2)).
AdmissibilityType type_of_cp(int n, int p);
AdmissibilityType type_of_cp(int n, int p, std::pair<int, int> split);

// Nonnegative integer d x d exponent matrix, compared row-major
// lexicographically. Keys of the monomial support of an InvariantPolynomial.
struct ExponentMatrix {
  int d = 0;
  std::vector<int> e;  // row-major, size d*d

  int at(int i, int j) const { return e[static_cast<std::size_t>(i) * d + j]; }
  int& at(int i, int j) { return e[static_cast<std::size_t>(i) * d + j]; }

  auto operator<=>(const ExponentMatrix&) const = default;
};

// Polynomial in the entries of a d x d matrix with exact rational
// coefficients, stored by exponent matrix. Normalized so the lexicographically
// smallest exponent matrix has coefficient 1.
struct InvariantPolynomial {
  int d = 0;
  AdmissibilityType type;
  std::map<ExponentMatrix, Rational> terms;

  std::size_t term_count() const { return terms.size(); }
};

// Builds the unique polynomial of the given type, if it exists:
// enumerate exponent matrices with the torus-forced multidegrees (row sums
// from row_weights, column sums k+/k- per split side), then cut by the
// first-order conditions of all unipotent generators of the left parabolic
// and the right block group, and solve the exact nullspace.
// Throws NoSuchInvariantError (dim 0), NotUniqueError (dim >= 2),
// ValidationError (degree imbalance).
InvariantPolynomial construct_invariant(const AdmissibilityType& t);

Rational evaluate(const InvariantPolynomial& f, const RationalMatrix& x);

InvariantPolynomial multiply(const InvariantPolynomial& f, const InvariantPolynomial& g);

struct EquivarianceReport {
  bool pass = true;
  int samples = 0;
  // First counterexample, if any.
  std::optional<int> failed_sample;
  std::optional<Rational> lhs, rhs;
};

// Samples `samples` random triples (p, x, gamma) with exact rational entries
// and checks f(p x gamma) = lambda1(p) f(x) lambda2(gamma) exactly.
EquivarianceReport check_equivariance(const InvariantPolynomial& f,
                                      const AdmissibilityType& t, int samples,
                                      std::uint64_t seed, int bound = 10);

}  // namespace periods::invariant

#endif
