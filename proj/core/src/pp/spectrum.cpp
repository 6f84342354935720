#include "unicas/pp/spectrum.hpp"

#include <stdexcept>

#include "unicas/vogel/vogel.hpp"

namespace unicas::pp {

std::string family_name(PPFamily f) { return f == PPFamily::so ? "so" : "sp"; }

int normalization_factor(PPFamily f) { return f == PPFamily::so ? 2 : 4; }

namespace {

const Polynomial& n_sym() {
  static const Polynomial n = Polynomial::variable("n");
  return n;
}

Polynomial constant(int v) { return Polynomial(v); }

}  // namespace

std::vector<LinearFactor> pp_factors(PPFamily family, const ABProfile& p) {
  const Polynomial& n = n_sym();
  const int k = p.corners();
  std::vector<LinearFactor> f;
  if (family == PPFamily::so) {
    // (1 - zn)(2 - z(4n-3)) / [z (1 - z(n-1)) (2 - z(4n-2))]
    f.push_back({1, n});
    f.push_back({1, (Polynomial(4) * n - constant(3)) / Rational(2)});
    f.push_back({-1, n - constant(1)});
    f.push_back({-1, Polynomial(2) * n - constant(1)});
    for (int i = 0; i <= k; ++i) {
      f.push_back({1, constant(-p.a(k - i) + p.b(i) - 1) + Polynomial(2) * n});
      f.push_back({-1, constant(p.a(k - i) - p.b(i))});
    }
    for (int i = 1; i <= k; ++i) {
      f.push_back({1, constant(p.a(k - i + 1) - p.b(i))});
      f.push_back({-1, constant(-p.a(k - i + 1) + p.b(i) - 1) + Polynomial(2) * n});
    }
  } else {
    // (1 - zn)(2 - z(4n+3)) / [z (1 - z(n+1)) (2 - z(4n+2))]
    f.push_back({1, n});
    f.push_back({1, (Polynomial(4) * n + constant(3)) / Rational(2)});
    f.push_back({-1, n + constant(1)});
    f.push_back({-1, Polynomial(2) * n + constant(1)});
    for (int i = 0; i <= k; ++i) {
      f.push_back({1, constant(p.b(k - i) - p.a(i) + 1) + Polynomial(2) * n});
      f.push_back({-1, constant(-p.b(k - i) + p.a(i))});
    }
    for (int i = 1; i <= k; ++i) {
      f.push_back({1, constant(-p.b(k - i + 1) + p.a(i))});
      f.push_back({-1, constant(p.b(k - i + 1) - p.a(i) + 1) + Polynomial(2) * n});
    }
  }
  return f;
}

LaurentSeries pp_raw_series(PPFamily family, const ABProfile& p, int order) {
  const auto factors = pp_factors(family, p);
  return series_from_linear_factors(factors, Polynomial(1), -1, order);
}

const SeriesCalibration& series_calibration() {
  static const SeriesCalibration calibration = [] {
    // Anchor: adjoint of so(2n), Cartan-Killing value 2t with t = N - 2 at
    // N = 2n, converted to the generating function's normalization.
    const auto line = vogel::so_line();
    const Polynomial two_t = (Polynomial(2) * line.t()).substitute("N", Polynomial(2) * n_sym());
    const Polynomial anchor = normalization_convert(PPFamily::so, two_t, Direction::CKtoMV);
    constexpr int kSearchOrder = 4;
    const auto adj = pp_raw_series(PPFamily::so, ABProfile({2}, {1}), kSearchOrder);
    const auto vac = pp_raw_series(PPFamily::so, ABProfile(), kSearchOrder);
    for (int pos = adj.min_degree(); pos <= kSearchOrder; ++pos) {
      const Polynomial diff = adj.coefficient(pos) - vac.coefficient(pos);
      for (int sign : {1, -1}) {
        if (Polynomial(sign) * diff == anchor) return SeriesCalibration{pos - 2, sign};
      }
    }
    throw std::logic_error("no coefficient of the so(2n) adjoint expansion matches " + anchor.str());
  }();
  return calibration;
}

Polynomial CasimirSpectrum::calibrated(int p) const {
  const auto& cal = series_calibration();
  return Polynomial(cal.sign) * (series.coefficient(p + cal.offset) - vacuum.coefficient(p + cal.offset));
}

int CasimirSpectrum::max_calibrated_order() const { return series.truncation_order() - series_calibration().offset; }

CasimirSpectrum pp_series(PPFamily family, const ABProfile& p, int order) {
  if (order < 3) throw std::invalid_argument("series order must be at least 3, got " + std::to_string(order));
  CasimirSpectrum s{family, p, pp_raw_series(family, p, order), pp_raw_series(family, ABProfile(), order), {}};
  s.c2 = s.calibrated(2);
  return s;
}

Polynomial c2_closed(PPFamily family, std::span<const Polynomial> a, std::span<const Polynomial> b,
                     const Polynomial& a0, const Polynomial& b0) {
  if (a.size() != b.size()) throw std::invalid_argument("closed form needs |A| = |B|");
  const int k = static_cast<int>(a.size());
  std::vector<Polynomial> A{a0};
  std::vector<Polynomial> B{b0};
  A.insert(A.end(), a.begin(), a.end());
  B.insert(B.end(), b.begin(), b.end());
  auto at = [](const std::vector<Polynomial>& v, int i) -> const Polynomial& { return v[static_cast<std::size_t>(i)]; };
  const Polynomial& n = n_sym();
  const Polynomial two(2);
  const Polynomial four(4);
  const Polynomial half(Rational(1, 2));
  const Polynomial& A0 = A[0];
  const Polynomial& B0 = B[0];
  const Polynomial& Ak = at(A, k);
  const Polynomial& Bk = at(B, k);

  Polynomial sum;
  if (family == PPFamily::so) {
    for (int i = 1; i <= k; ++i) {
      const Polynomial& Ai = at(A, i);
      const Polynomial& Bi = at(B, i);
      const Polynomial dB = at(B, k - i + 1) - at(B, k - i);
      const Polynomial dA = at(A, k - i + 1) - at(A, k - i);
      sum += four * n * Ai * dB - two * Ai * Ai * dB - two * Ai * dB + two * Bi * Bi * dA;
    }
    return sum - four * n * A0 * Bk + A0 * A0 * (two * Bk + four * B0) + two * A0 * (Bk - B0) -
           B0 * B0 * (two * Ak + four * A0) - n * (A0 - B0) + two * n * (A0 * A0 + B0 * B0) +
           two * (B0.pow(3) - A0.pow(3)) + half * (A0 - B0);
  }
  for (int i = 1; i <= k; ++i) {
    const Polynomial& Ai = at(A, i);
    const Polynomial& Bi = at(B, i);
    const Polynomial dB = at(B, k - i + 1) - at(B, k - i);
    const Polynomial dA = at(A, k - i + 1) - at(A, k - i);
    sum += -four * n * Bi * dA + two * Ai * Ai * dB - two * Bi * Bi * dA - two * Bi * dA;
  }
  return -sum - four * n * B0 * Ak + A0 * A0 * (two * Bk + four * B0) - two * B0 * (Ak - A0) -
         B0 * B0 * (two * Ak + four * A0) - n * (B0 - A0) + two * n * (A0 * A0 + B0 * B0) + half * (A0 - B0) -
         two * (A0.pow(3) - B0.pow(3));
}

Polynomial c2_closed(PPFamily family, const ABProfile& p) {
  std::vector<Polynomial> a(p.A.begin(), p.A.end());
  std::vector<Polynomial> b(p.B.begin(), p.B.end());
  return c2_closed(family, a, b);
}

Polynomial normalization_convert(PPFamily family, const Polynomial& value, Direction direction) {
  const int f = normalization_factor(family);
  return direction == Direction::MVtoCK ? value / Rational(f) : value * Polynomial(f);
}

Rational normalization_convert(PPFamily family, const Rational& value, Direction direction) {
  const int f = normalization_factor(family);
  return direction == Direction::MVtoCK ? value / Rational(f) : value * Rational(f);
}

}  // namespace unicas::pp
