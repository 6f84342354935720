#pragma once

#include <span>
#include <string>
#include <vector>

#include "unicas/exact/polynomial.hpp"

namespace unicas {

/// Truncated Laurent series sum_{p=min_degree}^{truncation_order} c_p z^p with
/// polynomial coefficients. Every stored coefficient is exact; nothing beyond
/// truncation_order is known.
class LaurentSeries {
 public:
  /// Zero series in `variable` known exactly on [min_degree, truncation_order].
  LaurentSeries(std::string variable, int min_degree, int truncation_order);
  LaurentSeries(std::string variable, int min_degree, std::vector<Polynomial> coefficients);

  /// The constant c, exact to `truncation_order`.
  static LaurentSeries constant(std::string variable, const Polynomial& c, int truncation_order);

  const std::string& variable() const { return variable_; }
  int min_degree() const { return min_degree_; }
  int truncation_order() const { return min_degree_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Polynomial>& coefficients() const { return coeffs_; }

  /// Coefficient of z^p. Zero below min_degree; throws std::out_of_range past
  /// the truncation order.
  Polynomial coefficient(int p) const;

  /// Multiplies by z^shift.
  LaurentSeries shifted(int shift) const;
  /// Drops leading zero coefficients, raising min_degree accordingly.
  LaurentSeries normalized() const;
  LaurentSeries truncated(int order) const;

  /// Requires the lowest nonzero coefficient to be a nonzero constant; the
  /// z^m factor in front of it is extracted first.
  LaurentSeries inverse() const;

  LaurentSeries operator-() const;
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

  /// Applies z -> -z.
  LaurentSeries reflected() const;
  /// Applies a substitution to every coefficient.
  LaurentSeries map_coefficients(const std::map<std::string, Polynomial>& images) const;

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) = default;

 private:
  void require_compatible(const LaurentSeries& other) const;

  std::string variable_;
  int min_degree_;
  std::vector<Polynomial> coeffs_;
};

/// A factor (1 - c*z) raised to +1 (numerator) or -1 (denominator).
struct LinearFactor {
  int sign;
  Polynomial c;
};

/// prefactor * z^offset * prod (1 - c_i z)^{sign_i}, expanded exactly through
/// z^order. Denominator factors expand as geometric series sum c^p z^p.
LaurentSeries series_from_linear_factors(std::span<const LinearFactor> factors, const Polynomial& constant_prefactor,
                                         int z_power_offset, int order, const std::string& variable = "z");

}  // namespace unicas
