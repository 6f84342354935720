#include "unicas/pp/duality.hpp"

#include <algorithm>

namespace unicas::pp {

namespace {

Polynomial negate_n(const Polynomial& p) { return p.substitute("n", -Polynomial::variable("n")); }

}  // namespace

Polynomial duality_check_c2(std::span<const Polynomial> a, std::span<const Polynomial> b) {
  return c2_closed(PPFamily::so, a, b) + negate_n(c2_closed(PPFamily::sp, b, a));
}

Polynomial duality_check_c2(const ABProfile& p) {
  return c2_closed(PPFamily::so, p) + negate_n(c2_closed(PPFamily::sp, p.swapped()));
}

std::pair<std::vector<Polynomial>, std::vector<Polynomial>> symbolic_2kkk_profile() {
  const Polynomial k = Polynomial::variable("k");
  return {{Polynomial(1), Polynomial(3)}, {k, Polynomial(2) * k}};
}

bool SeriesDualityResult::all_zero() const {
  return std::all_of(residuals.begin(), residuals.end(), [](const Polynomial& r) { return r.is_zero(); });
}

SeriesDualityResult duality_check_series(const YoungDiagram& d, int order, bool experimental) {
  if (order < 3 || order > kMaxSeriesDualityOrder) {
    throw std::invalid_argument("series duality order must lie in [3, " + std::to_string(kMaxSeriesDualityOrder) +
                                "], got " + std::to_string(order));
  }
  const bool outside = !d.is_rectangular();
  if (outside && !experimental) {
    throw OutOfScopeError("diagram " + d.str() +
                          " is beyond the asserted scope of the series duality (rectangular diagrams only); "
                          "rerun with the experimental flag");
  }
  const auto sp_side = pp_series(PPFamily::sp, ab_from_diagram(d), order);
  const auto so_side = pp_series(PPFamily::so, ab_from_diagram(conjugate(d)), order);
  SeriesDualityResult result{outside, {}};
  const int top = std::min(order, std::min(sp_side.max_calibrated_order(), so_side.max_calibrated_order()));
  const int offset = series_calibration().offset;
  for (int p = 0; p <= top; ++p) {
    // The z-parity follows the raw Laurent exponent.
    const int exponent = p + offset;
    Polynomial so_term = negate_n(so_side.calibrated(p));
    if (exponent % 2 != 0) so_term = -so_term;
    result.residuals.push_back(sp_side.calibrated(p) + so_term);
  }
  return result;
}

}  // namespace unicas::pp
