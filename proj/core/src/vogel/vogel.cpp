#include "unicas/vogel/vogel.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

namespace unicas::vogel {

using rootdata::AlgebraId;
using rootdata::Family;

std::string slot_name(Slot s) {
  switch (s) {
    case Slot::Alpha: return "alpha";
    case Slot::Beta: return "beta";
    case Slot::Gamma: return "gamma";
  }
  return "?";
}

const Rational& VogelPoint::at(Slot s) const {
  switch (s) {
    case Slot::Alpha: return alpha;
    case Slot::Beta: return beta;
    case Slot::Gamma: return gamma;
  }
  return alpha;
}

VogelPoint VogelPoint::swapped(Slot a, Slot b) const {
  std::array<Rational, 3> v{alpha, beta, gamma};
  std::swap(v[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(b)]);
  return {v[0], v[1], v[2]};
}

VogelPoint VogelPoint::scaled(const Rational& factor) const {
  return {alpha * factor, beta * factor, gamma * factor};
}

bool VogelPoint::equivalent(const VogelPoint& other) const {
  std::array<Rational, 3> mine{alpha, beta, gamma};
  std::array<Rational, 3> theirs{other.alpha, other.beta, other.gamma};
  std::sort(theirs.begin(), theirs.end());
  do {
    std::optional<Rational> scale;
    bool ok = true;
    for (std::size_t i = 0; i < 3 && ok; ++i) {
      if (theirs[i].is_zero() || mine[i].is_zero()) {
        ok = theirs[i].is_zero() && mine[i].is_zero();
        continue;
      }
      Rational s = mine[i] / theirs[i];
      if (scale && *scale != s) ok = false;
      scale = s;
    }
    if (ok) return true;
  } while (std::next_permutation(theirs.begin(), theirs.end()));
  return false;
}

std::string VogelPoint::str() const { return "(" + alpha.str() + ", " + beta.str() + ", " + gamma.str() + ")"; }

std::ostream& operator<<(std::ostream& os, const VogelPoint& p) { return os << p.str(); }

VogelPoint VogelLine::at(const Rational& value) const {
  const std::map<std::string, Rational> env{{symbol, value}};
  return {alpha.evaluate(env), beta.evaluate(env), gamma.evaluate(env)};
}

std::string VogelLine::str() const { return "(" + alpha.str() + ", " + beta.str() + ", " + gamma.str() + ")"; }

Rational VogelLine::relation_value(const VogelPoint& p) const {
  return relation[0] * p.alpha + relation[1] * p.beta + relation[2] * p.gamma;
}

std::string VogelLine::relation_str() const {
  const Polynomial lhs = Polynomial(relation[0]) * Polynomial::variable("alpha") +
                         Polynomial(relation[1]) * Polynomial::variable("beta") +
                         Polynomial(relation[2]) * Polynomial::variable("gamma");
  return lhs.str() + " = 0";
}

namespace {

Polynomial sym(const std::string& s) { return Polynomial::variable(s); }

}  // namespace

VogelLine sl_line() { return {"sl_N", "N", Polynomial(-2), Polynomial(2), sym("N"), {1, 1, 0}}; }

VogelLine so_line() { return {"so_N", "N", Polynomial(-2), Polynomial(4), sym("N") - Polynomial(4), {2, 1, 0}}; }

VogelLine sp_line() {
  return {"sp_N", "N", Polynomial(-2), Polynomial(1), sym("N") / Rational(2) + Polynomial(2), {1, 2, 0}};
}

VogelLine exceptional_line() {
  return {"Exc(n)",
          "n",
          Polynomial(-2),
          sym("n") + Polynomial(4),
          Polynomial(2) * sym("n") + Polynomial(4),
          {-2, -2, 1}};
}

Rational exceptional_parameter(const AlgebraId& algebra) {
  switch (algebra.family()) {
    case Family::G: return Rational(-2, 3);
    case Family::F: return 1;
    case Family::E:
      if (algebra.rank() == 6) return 2;
      if (algebra.rank() == 7) return 4;
      return 8;
    default: throw std::invalid_argument(algebra.str() + " is not exceptional");
  }
}

VogelLine line_of(const AlgebraId& algebra) {
  switch (algebra.family()) {
    case Family::A: return sl_line();
    case Family::B:
    case Family::D: return so_line();
    case Family::C: return sp_line();
    default: return exceptional_line();
  }
}

VogelPoint vogel_params(const AlgebraId& algebra) {
  const VogelLine line = line_of(algebra);
  return line.at(algebra.is_classical() ? Rational(algebra.defining_dimension()) : exceptional_parameter(algebra));
}

Rational dim_adjoint_universal(const VogelPoint& p) {
  for (Slot s : kSlots) {
    if (p.at(s).is_zero()) throw PoleError("dim g", slot_name(s));
  }
  const Rational two_t = p.t() * 2;
  return (p.alpha - two_t) * (p.beta - two_t) * (p.gamma - two_t) / (p.alpha * p.beta * p.gamma);
}

Rational dim_y2_universal(const VogelPoint& p, Slot slot) {
  // The formula for the alpha slot is symmetric in (beta, gamma); rotate the
  // requested slot into first position.
  Slot b = Slot::Beta;
  Slot c = Slot::Gamma;
  if (slot == Slot::Beta) b = Slot::Alpha;
  if (slot == Slot::Gamma) c = Slot::Alpha;
  const Rational& x = p.at(slot);
  const Rational& y = p.at(b);
  const Rational& w = p.at(c);
  const std::string formula = "dim Y2(" + slot_name(slot) + ")";
  if (x.is_zero()) throw PoleError(formula, slot_name(slot));
  if (y.is_zero()) throw PoleError(formula, slot_name(b));
  if (w.is_zero()) throw PoleError(formula, slot_name(c));
  if (x == y) throw PoleError(formula, slot_name(slot) + "-" + slot_name(b));
  if (x == w) throw PoleError(formula, slot_name(slot) + "-" + slot_name(c));
  const Rational t = p.t();
  const Rational num = (2 * t - 3 * x) * (y - 2 * t) * (w - 2 * t) * t * (y + t) * (w + t);
  const Rational den = x * x * (x - y) * y * (x - w) * w;
  return num / den;
}

Rational casimir_y2(const VogelPoint& p, Slot slot) { return 4 * p.t() - 2 * p.at(slot); }

Rational universal_casimir_kn(const VogelPoint& p, const Rational& k, const Rational& n) {
  return p.alpha * (3 * k - 3 * k * k + n - n * n - 3 * k * n) + p.t() * (4 * k + 2 * n);
}

Polynomial universal_casimir_kn(const Polynomial& alpha, const Polynomial& t, const Polynomial& k,
                                const Polynomial& n) {
  const Polynomial three(3);
  return alpha * (three * k - three * k * k + n - n * n - three * k * n) + t * (Polynomial(4) * k + Polynomial(2) * n);
}

Rational casimir_scaled(const VogelPoint& p, const Rational& k, const Rational& n) {
  const Rational t = p.t();
  if (t.is_zero()) throw ZeroDivisionError("Casimir scaling needs t != 0");
  return universal_casimir_kn(p, k, n) / (2 * t);
}

CohenDeMan cohen_de_man(const Rational& a) { return {4 + 6 * a, 3 + 3 * a, 4 + 8 * a}; }

}  // namespace unicas::vogel
