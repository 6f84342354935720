#include "unicas/exact/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace unicas {

LaurentSeries::LaurentSeries(std::string variable, int min_degree, int truncation_order)
    : variable_(std::move(variable)), min_degree_(min_degree) {
  if (truncation_order < min_degree) throw std::invalid_argument("truncation order below minimum degree");
  coeffs_.resize(static_cast<std::size_t>(truncation_order - min_degree + 1));
}

LaurentSeries::LaurentSeries(std::string variable, int min_degree, std::vector<Polynomial> coefficients)
    : variable_(std::move(variable)), min_degree_(min_degree), coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

LaurentSeries LaurentSeries::constant(std::string variable, const Polynomial& c, int truncation_order) {
  LaurentSeries s(std::move(variable), 0, truncation_order);
  s.coeffs_[0] = c;
  return s;
}

Polynomial LaurentSeries::coefficient(int p) const {
  if (p < min_degree_) return {};
  if (p > truncation_order()) {
    throw std::out_of_range("coefficient z^" + std::to_string(p) + " is past truncation order " +
                            std::to_string(truncation_order()));
  }
  return coeffs_[static_cast<std::size_t>(p - min_degree_)];
}

LaurentSeries LaurentSeries::shifted(int shift) const {
  LaurentSeries out = *this;
  out.min_degree_ += shift;
  return out;
}

LaurentSeries LaurentSeries::normalized() const {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Polynomial& c) { return !c.is_zero(); });
  if (first == coeffs_.end() || first == coeffs_.begin()) return *this;
  auto skip = static_cast<int>(first - coeffs_.begin());
  return LaurentSeries(variable_, min_degree_ + skip, std::vector<Polynomial>(first, coeffs_.end()));
}

LaurentSeries LaurentSeries::truncated(int order) const {
  if (order > truncation_order()) throw std::out_of_range("cannot extend a truncated series");
  if (order < min_degree_) throw std::invalid_argument("truncation below minimum degree");
  return LaurentSeries(variable_, min_degree_,
                       std::vector<Polynomial>(coeffs_.begin(), coeffs_.begin() + (order - min_degree_ + 1)));
}

LaurentSeries LaurentSeries::inverse() const {
  LaurentSeries s = normalized();
  const Polynomial& lead = s.coeffs_.front();
  if (lead.is_zero()) throw ZeroDivisionError("inverse of a series with no known nonzero coefficient");
  if (!lead.is_constant()) throw std::domain_error("series inverse needs a constant leading coefficient, got " + lead.str());
  const Rational inv = lead.constant_value().inverse();
  // s = z^m * u with u(0) = lead; 1/s = z^{-m} / u, exact through (T - m) - m.
  const int m = s.min_degree_;
  const int len = static_cast<int>(s.coeffs_.size());
  std::vector<Polynomial> out(static_cast<std::size_t>(len));
  out[0] = Polynomial(inv);
  for (int p = 1; p < len; ++p) {
    Polynomial acc;
    for (int j = 1; j <= p; ++j) acc += s.coeffs_[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(p - j)];
    out[static_cast<std::size_t>(p)] = -acc * Polynomial(inv);
  }
  return LaurentSeries(variable_, -m, std::move(out));
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

void LaurentSeries::require_compatible(const LaurentSeries& other) const {
  if (variable_ != other.variable_) {
    throw std::invalid_argument("series in different variables: " + variable_ + ", " + other.variable_);
  }
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  a.require_compatible(b);
  const int lo = std::min(a.min_degree_, b.min_degree_);
  const int hi = std::min(a.truncation_order(), b.truncation_order());
  if (hi < lo) throw std::invalid_argument("sum has no exactly known coefficients");
  LaurentSeries out(a.variable_, lo, hi);
  for (int p = lo; p <= hi; ++p) out.coeffs_[static_cast<std::size_t>(p - lo)] = a.coefficient(p) + b.coefficient(p);
  return out;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  a.require_compatible(b);
  const int lo = a.min_degree_ + b.min_degree_;
  const int hi = std::min(a.truncation_order() + b.min_degree_, b.truncation_order() + a.min_degree_);
  LaurentSeries out(a.variable_, lo, hi);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      const auto p = static_cast<int>(i + j);
      if (lo + p > hi) break;
      out.coeffs_[static_cast<std::size_t>(p)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

LaurentSeries LaurentSeries::reflected() const {
  LaurentSeries out = *this;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
    if ((min_degree_ + static_cast<int>(i)) % 2 != 0) out.coeffs_[i] = -out.coeffs_[i];
  }
  return out;
}

LaurentSeries LaurentSeries::map_coefficients(const std::map<std::string, Polynomial>& images) const {
  LaurentSeries out = *this;
  for (auto& c : out.coeffs_) c = c.substitute(images);
  return out;
}

LaurentSeries series_from_linear_factors(std::span<const LinearFactor> factors, const Polynomial& constant_prefactor,
                                         int z_power_offset, int order, const std::string& variable) {
  if (order < z_power_offset) throw std::invalid_argument("series order below the z-power offset");
  // Expand the power series part through z^(order - offset), then shift.
  const int len = order - z_power_offset + 1;
  std::vector<Polynomial> acc(static_cast<std::size_t>(len));
  acc[0] = constant_prefactor;
  for (const auto& f : factors) {
    if (f.sign != 1 && f.sign != -1) throw std::invalid_argument("factor exponent must be +1 or -1");
    if (f.sign == 1) {
      for (int p = len - 1; p >= 1; --p) acc[static_cast<std::size_t>(p)] -= f.c * acc[static_cast<std::size_t>(p - 1)];
    } else {
      // Dividing by (1 - cz): a_p += c * a_{p-1}, running forwards.
      for (int p = 1; p < len; ++p) acc[static_cast<std::size_t>(p)] += f.c * acc[static_cast<std::size_t>(p - 1)];
    }
  }
  return LaurentSeries(variable, z_power_offset, std::move(acc));
}

}  // namespace unicas
