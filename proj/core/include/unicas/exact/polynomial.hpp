#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unicas/exact/rational.hpp"

namespace unicas {

/// Global symbol priority: k < n < N < z, then every other name in byte order.
/// Monomials compare graded-lexicographically under this order, and the text
/// form groups by the highest-priority symbol present.
bool symbol_less(const std::string& a, const std::string& b);

class UnboundSymbolError : public std::invalid_argument {
 public:
  explicit UnboundSymbolError(const std::string& symbol)
      : std::invalid_argument("unbound symbol '" + symbol + "'"), symbol_(symbol) {}
  const std::string& symbol() const noexcept { return symbol_; }

 private:
  std::string symbol_;
};

/// Multivariate polynomial over Rational in named indeterminates.
///
/// Stored canonically: only indeterminates that occur are kept, sorted by
/// symbol_less; no zero coefficients. Two polynomials are equal iff their
/// canonical forms are identical.
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT

  static Polynomial variable(const std::string& name);

  const std::vector<std::string>& variables() const { return vars_; }
  /// Terms in descending graded-lex order; exponent vectors align with variables().
  std::vector<std::pair<Exponents, Rational>> terms() const;
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  /// Throws std::logic_error unless is_constant().
  Rational constant_value() const;

  int degree() const;
  int degree(const std::string& var) const;
  /// Coefficient of var^power, as a polynomial in the remaining symbols.
  Polynomial coefficient(const std::string& var, int power) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  /// Division by a nonzero rational scalar.
  friend Polynomial operator/(const Polynomial& a, const Rational& b);

  Polynomial pow(int exponent) const;

  /// Replaces each mapped symbol by its image; unmapped symbols stay.
  Polynomial substitute(const std::map<std::string, Polynomial>& images) const;
  Polynomial substitute(const std::string& var, const Polynomial& image) const;
  /// Full evaluation; throws UnboundSymbolError naming the first missing symbol.
  Rational evaluate(const std::map<std::string, Rational>& values) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Recursive grouped form, e.g. "6*k^2 + (8*N - 10)*k".
  std::string str() const;

 private:
  struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  Polynomial(std::vector<std::string> vars, TermMap terms);
  static TermMap remap(const TermMap& terms, const std::vector<std::string>& from,
                       const std::vector<std::string>& to);
  void widen_to(const std::vector<std::string>& vars);
  void normalize();
  void str_pieces(std::vector<std::string>& out) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Lagrange interpolation through (x_i, y_i) in the given variable; the x_i
/// must be distinct.
Polynomial interpolate(const std::string& var, std::span<const std::pair<Rational, Polynomial>> samples);

}  // namespace unicas
