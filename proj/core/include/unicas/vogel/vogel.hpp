#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "unicas/exact/polynomial.hpp"
#include "unicas/exact/rational.hpp"
#include "unicas/rootdata/algebra.hpp"

namespace unicas::vogel {

enum class Slot { Alpha, Beta, Gamma };

inline constexpr std::array<Slot, 3> kSlots{Slot::Alpha, Slot::Beta, Slot::Gamma};

std::string slot_name(Slot s);

/// Raised when a universal formula is evaluated on one of its poles.
class PoleError : public std::domain_error {
 public:
  PoleError(const std::string& formula, const std::string& factor)
      : std::domain_error(formula + " has a pole: factor " + factor + " vanishes"), factor_(factor) {}
  /// The vanishing denominator factor, e.g. "alpha-beta".
  const std::string& factor() const noexcept { return factor_; }

 private:
  std::string factor_;
};

/// Point (alpha, beta, gamma) of the Vogel plane; t = alpha + beta + gamma.
struct VogelPoint {
  Rational alpha;
  Rational beta;
  Rational gamma;

  Rational t() const { return alpha + beta + gamma; }
  const Rational& at(Slot s) const;

  /// Same point with slot `a` and slot `b` exchanged.
  VogelPoint swapped(Slot a, Slot b) const;
  VogelPoint scaled(const Rational& factor) const;
  /// Equal up to a nonzero rescaling and a permutation of the parameters.
  bool equivalent(const VogelPoint& other) const;

  /// "(-2, 2, 3)"
  std::string str() const;

  friend bool operator==(const VogelPoint&, const VogelPoint&) = default;
};

/// Family line with polynomial parameters, e.g. so_N = (-2, 4, N-4).
struct VogelLine {
  std::string name;
  std::string symbol;
  Polynomial alpha;
  Polynomial beta;
  Polynomial gamma;
  /// Linear relation c_a alpha + c_b beta + c_g gamma = 0 holding on the line.
  std::array<Rational, 3> relation;

  Polynomial t() const { return alpha + beta + gamma; }
  VogelPoint at(const Rational& value) const;
  /// "(-2, 4, N - 4)"
  std::string str() const;
  /// Evaluates the line relation at a point; zero iff the point lies on it.
  Rational relation_value(const VogelPoint& p) const;
  /// "2*alpha + beta = 0"
  std::string relation_str() const;
};

VogelLine sl_line();
VogelLine so_line();
VogelLine sp_line();
/// (-2, n+4, 2n+4), gamma = 2(alpha+beta).
VogelLine exceptional_line();

/// Line parameter of an exceptional algebra: G2 -2/3, F4 1, E6 2, E7 4, E8 8.
Rational exceptional_parameter(const rootdata::AlgebraId& algebra);

/// Parameters in the alpha = -2 normalization, ordered so that
/// alpha, beta, gamma give the Casimir values 4t-2alpha, 4t-2beta, 4t-2gamma
/// of Y2(alpha), Y2(beta), Y2(gamma).
VogelPoint vogel_params(const rootdata::AlgebraId& algebra);
/// Line the algebra belongs to (sl, so, sp or exceptional).
VogelLine line_of(const rootdata::AlgebraId& algebra);

/// (alpha-2t)(beta-2t)(gamma-2t) / (alpha beta gamma).
Rational dim_adjoint_universal(const VogelPoint& p);

/// dim Y2 in the given slot; zero is a legitimate value.
Rational dim_y2_universal(const VogelPoint& p, Slot slot);

/// Casimir 4t - 2*(slot parameter) of Y2(slot).
Rational casimir_y2(const VogelPoint& p, Slot slot);

/// alpha(3k - 3k^2 + n - n^2 - 3kn) + t(4k + 2n).
Rational universal_casimir_kn(const VogelPoint& p, const Rational& k, const Rational& n);
/// Same formula with arbitrary polynomial parameters (e.g. symbolic k, n, N).
Polynomial universal_casimir_kn(const Polynomial& alpha, const Polynomial& t, const Polynomial& k,
                                const Polynomial& n);

/// Universal value rescaled so that the adjoint has Casimir 1, i.e. divided
/// by 2t. Throws ZeroDivisionError when t = 0.
Rational casimir_scaled(const VogelPoint& p, const Rational& k, const Rational& n);

/// Cohen-de Man closed forms in a = 1/t.
struct CohenDeMan {
  Rational h;  // 4 + 6a, Cartan square of X2
  Rational c;  // 3 + 3a, X2 times adjoint
  Rational g;  // 4 + 8a, X2 times adjoint squared
};
CohenDeMan cohen_de_man(const Rational& a);

std::ostream& operator<<(std::ostream& os, const VogelPoint& p);

}  // namespace unicas::vogel
