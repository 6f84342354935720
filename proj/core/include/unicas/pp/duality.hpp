#pragma once

#include <stdexcept>
#include <vector>

#include "unicas/exact/polynomial.hpp"
#include "unicas/pp/spectrum.hpp"
#include "unicas/pp/young.hpp"

namespace unicas::pp {

/// c2_closed(so, (A,B))(n) + c2_closed(sp, (B,A))(-n); zero when the
/// so(2n)/sp(-2n) duality holds for the second Casimir.
Polynomial duality_check_c2(const ABProfile& p);

/// Same residual for symbolic corner coordinates.
Polynomial duality_check_c2(std::span<const Polynomial> a, std::span<const Polynomial> b);

/// Profile A=[1,3], B=[k,2k] of the diagram (2k,k,k) with symbolic k.
std::pair<std::vector<Polynomial>, std::vector<Polynomial>> symbolic_2kkk_profile();

class OutOfScopeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct SeriesDualityResult {
  bool experimental;  // diagram outside the rectangular scope
  /// residual[p] = C_p^sp(d)(n) + (-1)^p C_p^so(d')(-n), p = 0..order.
  std::vector<Polynomial> residuals;

  bool all_zero() const;
};

inline constexpr int kMaxSeriesDualityOrder = 6;

/// Full-series duality C_sp(d, z) = -C_so(d', -z) with n -> -n, compared on
/// calibrated coefficients. Non-rectangular diagrams throw OutOfScopeError
/// unless `experimental` is set. Throws std::invalid_argument for order
/// outside [3, 6].
SeriesDualityResult duality_check_series(const YoungDiagram& d, int order, bool experimental = false);

}  // namespace unicas::pp
