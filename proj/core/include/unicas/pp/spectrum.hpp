#pragma once

#include <span>
#include <string>
#include <vector>

#include "unicas/exact/laurent.hpp"
#include "unicas/exact/polynomial.hpp"
#include "unicas/pp/young.hpp"

namespace unicas::pp {

enum class PPFamily { so, sp };

std::string family_name(PPFamily f);
/// Killing-form factor between the fundamental-trace convention and the
/// Cartan-Killing one: 2 for so(2n), 4 for sp(2n).
int normalization_factor(PPFamily f);

/// Linear factors of the Perelomov-Popov generating function of `family` at
/// profile p, with the rank symbol n kept symbolic. The full function is
/// (1/z) * prod (1 - c z)^{sign}.
std::vector<LinearFactor> pp_factors(PPFamily family, const ABProfile& p);

/// Raw Laurent expansion of the generating function through z^order.
LaurentSeries pp_raw_series(PPFamily family, const ABProfile& p, int order);

/// How Casimir values sit in the raw expansion:
///   C_p = sign * (raw_{p + offset}(profile) - raw_{p + offset}(empty profile)).
/// Fixed once by anchoring the so(2n) adjoint profile A=[2], B=[1] to the
/// Cartan-Killing oracle 2 * 2t = 8n - 8.
struct SeriesCalibration {
  int offset;
  int sign;
};
const SeriesCalibration& series_calibration();

/// Expansion of the generating function for one highest weight.
struct CasimirSpectrum {
  PPFamily family;
  ABProfile profile;
  LaurentSeries series;     // raw, from z^-1
  LaurentSeries vacuum;     // raw expansion for the empty profile
  Polynomial c2;            // calibrated second Casimir, polynomial in n

  /// Calibrated C_p for p in [0, series.truncation_order() - offset].
  Polynomial calibrated(int p) const;
  int max_calibrated_order() const;
};

/// Throws std::invalid_argument when order < 3.
CasimirSpectrum pp_series(PPFamily family, const ABProfile& p, int order);

/// Closed-form second Casimir (fundamental-trace normalization) with explicit
/// boundary values A_0, B_0; entries may be symbolic polynomials. `a` and `b`
/// list A_1..A_k and B_1..B_k.
Polynomial c2_closed(PPFamily family, std::span<const Polynomial> a, std::span<const Polynomial> b,
                     const Polynomial& a0 = Polynomial(), const Polynomial& b0 = Polynomial());
Polynomial c2_closed(PPFamily family, const ABProfile& p);

/// Divides (to Cartan-Killing) or multiplies (to fundamental-trace) by the
/// family factor.
enum class Direction { MVtoCK, CKtoMV };
Polynomial normalization_convert(PPFamily family, const Polynomial& value, Direction direction);
Rational normalization_convert(PPFamily family, const Rational& value, Direction direction);

}  // namespace unicas::pp
