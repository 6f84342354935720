#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "unicas/exact/polynomial.hpp"
#include "unicas/exact/rational.hpp"
#include "unicas/rootdata/algebra.hpp"

namespace unicas::pp {
class YoungDiagram;
}

namespace unicas::rootdata {

using IntMatrix = std::vector<std::vector<int>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Dominant integral weight, coordinates in the fundamental-weight basis.
class Weight {
 public:
  /// Throws std::invalid_argument on a coordinate count other than the rank
  /// or on a negative coordinate.
  Weight(AlgebraId algebra, std::vector<int> coords);

  static Weight zero(AlgebraId algebra);
  /// omega_index, 1-based.
  static Weight fundamental(AlgebraId algebra, int index);

  /// "[1,0,1,0,0]" or a sum of fundamentals such as "2w1+w3" (also "ω"
  /// and "omega" spellings). Throws ParseError.
  static Weight parse(AlgebraId algebra, std::string_view text);

  const AlgebraId& algebra() const { return algebra_; }
  const std::vector<int>& coords() const { return coords_; }
  int operator[](int index) const { return coords_[static_cast<std::size_t>(index - 1)]; }

  Weight operator+(const Weight& other) const;
  Weight scaled(int factor) const;
  bool is_zero() const;

  /// "2w1+w3"; "0" for the zero weight.
  std::string str() const;

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  AlgebraId algebra_;
  std::vector<int> coords_;
};

/// Concrete root data for one simple Lie algebra, normalized so that long
/// roots have squared length 2.
///
/// Dynkin labeling: A/B/C/D chains with the special node last (B: short
/// alpha_n, C: long alpha_n, D: nodes n-1 and n forked off n-2); E_r is a
/// chain 1..r-1 with node r attached to node 3; F4 has alpha_1, alpha_2
/// long; G2 has alpha_1 short.
struct RootDatum {
  AlgebraId algebra;
  /// cartan[i][j] = 2(alpha_i, alpha_j)/(alpha_j, alpha_j); row i lists the
  /// Dynkin labels of alpha_i.
  IntMatrix cartan;
  std::vector<Rational> root_norms;
  /// gram[i][j] = (omega_i, omega_j).
  RationalMatrix gram;
  /// Simple-root coordinates, ordered by height then lexicographically.
  std::vector<std::vector<int>> positive_roots;
  Weight rho;

  int rank() const { return algebra.rank(); }
  int dimension() const { return static_cast<int>(2 * positive_roots.size()) + rank(); }

  /// (omega_i, alpha_j) for simple alpha_j; equals delta_ij (alpha_j, alpha_j)/2.
  Rational weight_root_pairing(int i, int j) const;
  /// (lambda, alpha) for alpha given in simple-root coordinates.
  Rational pair_with_root(const std::vector<int>& lambda, const std::vector<int>& root) const;
};

/// Builds from scratch; throws std::invalid_argument on an invalid algebra.
RootDatum build_root_datum(const AlgebraId& algebra);
/// Memoized build, safe to call concurrently.
std::shared_ptr<const RootDatum> root_datum(const AlgebraId& algebra);

/// Sum_ij u_i v_j (omega_i, omega_j). Throws std::invalid_argument when the
/// weights belong to another algebra.
Rational inner(const RootDatum& datum, const Weight& u, const Weight& v);

/// (lambda, lambda + 2 rho); 2t on the adjoint in this normalization.
Rational casimir2(const RootDatum& datum, const Weight& lambda);

/// (k l1 + n l2, k l1 + n l2 + 2 rho) as a polynomial in symbols k and n.
Polynomial casimir_poly_kn(const RootDatum& datum, const Weight& lambda1, const Weight& lambda2);

/// Weyl dimension formula prod_{alpha>0} (lambda+rho, alpha)/(rho, alpha).
BigInt weyl_dim(const RootDatum& datum, const Weight& lambda);

/// Highest weights of X2, the non-adjoint summand of the exterior square of
/// the adjoint: two weights for A_N, one otherwise. Throws
/// std::invalid_argument below the validated rank.
std::vector<Weight> x2_weight(const AlgebraId& algebra);
Weight adjoint_weight(const AlgebraId& algebra);

/// Tensor-representation highest weight of a Young diagram for B, C, D:
/// a_i = l_i - l_{i+1}, with a_n = 2 l_n for B and a_n = l_n for C.
/// Throws std::invalid_argument for other families and for diagrams with too
/// many rows (D: rank-2, B/C: rank).
Weight weight_from_partition(const AlgebraId& algebra, const pp::YoungDiagram& diagram);
/// Inverse of weight_from_partition on its image.
pp::YoungDiagram partition_from_weight(const Weight& weight);

}  // namespace unicas::rootdata
