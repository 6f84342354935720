#include "unicas/vogel/deligne.hpp"

#include <stdexcept>

namespace unicas::vogel {

namespace {

std::string parts_str(const std::vector<int>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

}  // namespace

Character trivial_character(int m) {
  Character chi;
  for (const auto& c : symmetric_class_sizes(m)) chi.emplace(c.parts, Rational(1));
  return chi;
}

Character sign_character(int m) {
  Character chi;
  for (const auto& c : symmetric_class_sizes(m)) {
    // sign = (-1)^(m - cycles)
    chi.emplace(c.parts, Rational((m - c.cycle_count()) % 2 == 0 ? 1 : -1));
  }
  return chi;
}

Rational deligne_rhs(const Rational& dim_v, const Rational& trace_c2_v, const Character& character, int m) {
  Rational sum;
  for (const auto& cls : symmetric_class_sizes(m)) {
    auto it = character.find(cls.parts);
    if (it == character.end()) {
      throw std::invalid_argument("character has no value on cycle type " + parts_str(cls.parts));
    }
    sum += Rational(cls.class_size) * it->second * Rational(cls.squared_length_sum()) *
           dim_v.pow(cls.cycle_count() - 1) * trace_c2_v;
  }
  return sum / Rational(factorial(static_cast<unsigned>(m)));
}

Rational deligne_s2_check(const VogelPoint& p) {
  const Rational dim_g = dim_adjoint_universal(p);
  Rational lhs;  // the trivial summand contributes 1 * C2(1) = 0
  for (Slot s : kSlots) lhs += dim_y2_universal(p, s) * casimir_y2(p, s);
  return lhs - (2 + dim_g) * dim_g * (2 * p.t());
}

Rational deligne_lambda2_check(const VogelPoint& p) {
  const Rational dim_g = dim_adjoint_universal(p);
  const Rational dim_x2 = dim_g * (dim_g - 3) / 2;
  const Rational lhs = dim_g * (2 * p.t()) + dim_x2 * universal_casimir_kn(p, 1, 0);
  return lhs - deligne_rhs(dim_g, dim_g * (2 * p.t()), sign_character(2), 2);
}

Polynomial deligne_s2_cleared() {
  const Polynomial a = Polynomial::variable("alpha");
  const Polynomial b = Polynomial::variable("beta");
  const Polynomial g = Polynomial::variable("gamma");
  const Polynomial t = a + b + g;
  const Polynomial two(2);
  const Polynomial abg = a * b * g;

  // Y2(x) with partners (y, w): numerator over x^2 (x-y) y (x-w) w.
  auto y2_num = [&](const Polynomial& x, const Polynomial& y, const Polynomial& w) {
    return (two * t - Polynomial(3) * x) * (y - two * t) * (w - two * t) * t * (y + t) * (w + t);
  };
  auto y2_den = [&](const Polynomial& x, const Polynomial& y, const Polynomial& w) {
    return x * x * (x - y) * y * (x - w) * w;
  };
  const Polynomial common = a.pow(2) * b.pow(2) * g.pow(2) * (a - b) * (a - g) * (b - g);
  struct Term {
    Polynomial num, den, cofactor, casimir;
  };
  const Term terms[] = {
      {y2_num(a, b, g), y2_den(a, b, g), b * g * (b - g), Polynomial(4) * t - two * a},
      {y2_num(b, a, g), y2_den(b, a, g), -(a * g * (a - g)), Polynomial(4) * t - two * b},
      {y2_num(g, a, b), y2_den(g, a, b), a * b * (a - b), Polynomial(4) * t - two * g},
  };
  // Everything is multiplied by common * alpha beta gamma; dim g carries one
  // factor 1/(alpha beta gamma) and appears squared on the right-hand side.
  Polynomial lhs;
  for (const auto& term : terms) {
    if (term.cofactor * term.den != common) throw std::logic_error("Y2 cofactor does not clear the denominator");
    lhs += term.num * term.cofactor * abg * term.casimir;
  }
  const Polynomial dim_num = (a - two * t) * (b - two * t) * (g - two * t);
  const Polynomial rhs = (two * abg + dim_num) * dim_num * two * t * abg * (a - b) * (a - g) * (b - g);
  return lhs - rhs;
}

}  // namespace unicas::vogel
