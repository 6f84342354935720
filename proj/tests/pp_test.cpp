#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "unicas/pp/duality.hpp"
#include "unicas/pp/spectrum.hpp"
#include "unicas/pp/young.hpp"
#include "unicas/rootdata/root_datum.hpp"

using namespace unicas;
using namespace unicas::pp;

namespace {

const Polynomial n = Polynomial::variable("n");

Polynomial poly(int c1, int c0) { return Polynomial(c1) * n + Polynomial(c0); }

using Series = std::vector<Rational>;

// Truncated power series over Q, with plain convolution and long division.
Series mul(const Series& a, const Series& b) {
  Series r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Series div(const Series& a, const Series& b) {
  Series q(a.size());
  Series rem = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    q[i] = rem[i] / b[0];
    for (std::size_t j = 0; i + j < a.size(); ++j) rem[i + j] -= q[i] * b[j];
  }
  return q;
}

Series lin(std::size_t len, const Rational& c0, const Rational& c1) {
  Series s(len);
  s[0] = c0;
  if (len > 1) s[1] = c1;
  return s;
}

// Generating function times z, expanded directly from the product formula at
// a numeric rank.
Series naive_generating(PPFamily fam, const ABProfile& p, long rank, std::size_t len) {
  const Rational N(rank);
  const int k = p.corners();
  Series num = lin(len, 1, 0);
  Series den = lin(len, 1, 0);
  auto times = [&](Series& s, const Rational& c0, const Rational& c1) { s = mul(s, lin(len, c0, c1)); };
  if (fam == PPFamily::so) {
    times(num, 1, -N);
    times(num, 2, -(4 * N - 3));
    times(den, 1, -(N - 1));
    times(den, 2, -(4 * N - 2));
    for (int i = 0; i <= k; ++i) {
      times(num, 1, -(Rational(-p.a(k - i) + p.b(i)) + 2 * N - 1));
      times(den, 1, -Rational(p.a(k - i) - p.b(i)));
    }
    for (int i = 1; i <= k; ++i) {
      times(num, 1, -Rational(p.a(k - i + 1) - p.b(i)));
      times(den, 1, -(Rational(-p.a(k - i + 1) + p.b(i)) + 2 * N - 1));
    }
  } else {
    times(num, 1, -N);
    times(num, 2, -(4 * N + 3));
    times(den, 1, -(N + 1));
    times(den, 2, -(4 * N + 2));
    for (int i = 0; i <= k; ++i) {
      times(num, 1, -(Rational(p.b(k - i) - p.a(i)) + 2 * N + 1));
      times(den, 1, -Rational(-p.b(k - i) + p.a(i)));
    }
    for (int i = 1; i <= k; ++i) {
      times(num, 1, -Rational(-p.b(k - i + 1) + p.a(i)));
      times(den, 1, -(Rational(p.b(k - i + 1) - p.a(i)) + 2 * N + 1));
    }
  }
  return div(num, den);
}

// Orthonormal-basis Casimir of a tensor weight, Cartan-Killing normalization.
Rational casimir_orthonormal(PPFamily fam, const YoungDiagram& d, int rank) {
  Rational c;
  for (int i = 1; i <= d.row_count(); ++i) {
    const Rational l(d.row(i - 1));
    if (fam == PPFamily::so) {
      c += l * (l + 2 * rank - 2 * i);
    } else {
      c += l * (l + 2 * rank + 2 - 2 * i) / 2;
    }
  }
  return c;
}

void for_each_diagram(int max_rows, int max_cols, const std::function<void(const YoungDiagram&)>& f) {
  std::vector<int> rows;
  std::function<void(int)> rec = [&](int bound) {
    f(YoungDiagram(rows));
    if (static_cast<int>(rows.size()) == max_rows) return;
    for (int r = 1; r <= bound; ++r) {
      rows.push_back(r);
      rec(r);
      rows.pop_back();
    }
  };
  rec(max_cols);
}

}  // namespace

TEST_CASE("Young diagram parsing and validation") {
  CHECK(YoungDiagram::parse("[2,1,1]").rows() == std::vector<int>{2, 1, 1});
  CHECK(YoungDiagram::parse("[]").empty());
  CHECK(YoungDiagram::parse(" [3, 1] ").str() == "[3,1]");
  CHECK_THROWS(YoungDiagram::parse("[1,2]"));
  CHECK_THROWS(YoungDiagram::parse("[2,0]"));
  CHECK_THROWS(YoungDiagram::parse("2,1"));
  CHECK(YoungDiagram::rectangle(2, 3) == YoungDiagram({3, 3}));
  CHECK(YoungDiagram({3, 3}).is_rectangular());
  CHECK_FALSE(YoungDiagram({3, 1}).is_rectangular());
}

TEST_CASE("conjugation") {
  CHECK(conjugate(YoungDiagram({2, 1, 1})) == YoungDiagram({3, 1}));
  CHECK(conjugate(YoungDiagram({4, 2, 2})) == YoungDiagram({3, 3, 1, 1}));
  CHECK(conjugate(YoungDiagram()) == YoungDiagram());
  CHECK(conjugate(YoungDiagram::rectangle(2, 5)) == YoungDiagram::rectangle(5, 2));
}

TEST_CASE("corner coordinates") {
  CHECK(ab_from_diagram(YoungDiagram({2, 1, 1})) == ABProfile({1, 3}, {1, 2}));
  CHECK(ab_from_diagram(YoungDiagram({3, 1})) == ABProfile({1, 2}, {1, 3}));
  CHECK(ab_from_diagram(YoungDiagram({1, 1})) == ABProfile({2}, {1}));
  CHECK(ab_from_diagram(YoungDiagram()) == ABProfile());
  CHECK(diagram_from_ab(ABProfile({2}, {1})) == YoungDiagram({1, 1}));
  for (int k = 1; k <= 6; ++k) {
    CHECK(ab_from_diagram(YoungDiagram({2 * k, k, k})) == ABProfile({1, 3}, {k, 2 * k}));
  }
  CHECK(ABProfile({1, 3}, {1, 2}).str() == "A=[1,3];B=[1,2]");
  CHECK(ABProfile::parse("A=[1,3];B=[1,2]") == ABProfile({1, 3}, {1, 2}));
  CHECK_THROWS(ABProfile({1, 1}, {1, 2}));
  CHECK_THROWS(ABProfile({1}, {1, 2}));
  CHECK_THROWS(ABProfile({0}, {1}));
}

TEST_CASE("corner round trip inside a 12x12 box") {
  int count = 0;
  for_each_diagram(12, 12, [&](const YoungDiagram& d) {
    const auto p = ab_from_diagram(d);
    if (p.corners() > 6) return;
    ++count;
    REQUIRE(diagram_from_ab(p) == d);
    REQUIRE(ab_from_diagram(conjugate(d)) == p.swapped());
  });
  CHECK(count > 0);
}

TEST_CASE("series calibration") {
  const auto& cal = series_calibration();
  CHECK(cal.offset == 0);
  CHECK(cal.sign == -1);
}

TEST_CASE("second Casimir from the generating function") {
  CHECK(pp_series(PPFamily::so, ABProfile(), 4).c2.is_zero());
  CHECK(pp_series(PPFamily::so, ABProfile({2}, {1}), 4).c2 == poly(8, -8));
  CHECK(pp_series(PPFamily::so, ab_from_diagram(YoungDiagram({2, 1, 1})), 4).c2 == poly(16, -16));
  CHECK(pp_series(PPFamily::sp, ab_from_diagram(YoungDiagram({3, 1})), 4).c2 == poly(16, 16));
  CHECK(pp_series(PPFamily::sp, ab_from_diagram(YoungDiagram({2})), 4).c2 == poly(8, 8));
  CHECK_THROWS_AS(pp_series(PPFamily::so, ABProfile(), 2), std::invalid_argument);
  for (int p = 0; p <= 4; ++p) CHECK(pp_series(PPFamily::sp, ABProfile(), 4).calibrated(p).is_zero());
}

TEST_CASE("series agrees with a naive expansion at concrete ranks") {
  const std::vector<YoungDiagram> diagrams{YoungDiagram({1}), YoungDiagram({2, 1, 1}), YoungDiagram({3, 1}),
                                           YoungDiagram({4, 2, 2, 1}), YoungDiagram::rectangle(3, 2)};
  for (auto fam : {PPFamily::so, PPFamily::sp}) {
    for (const auto& d : diagrams) {
      const auto p = ab_from_diagram(d);
      const auto s = pp_series(fam, p, 6);
      for (long rank : {5L, 7L, 11L}) {
        const auto raw = naive_generating(fam, p, rank, 8);
        const auto vac = naive_generating(fam, ABProfile(), rank, 8);
        for (int q = 0; q <= 6; ++q) {
          const Rational expected = -(raw[static_cast<std::size_t>(q + 1)] - vac[static_cast<std::size_t>(q + 1)]);
          CHECK(s.calibrated(q).evaluate({{"n", Rational(rank)}}) == expected);
        }
      }
    }
  }
}

TEST_CASE("closed second Casimir") {
  CHECK(c2_closed(PPFamily::so, ab_from_diagram(YoungDiagram({2, 1, 1}))) == poly(16, -16));
  CHECK(c2_closed(PPFamily::sp, ab_from_diagram(YoungDiagram({3, 1}))) == poly(16, 16));
  CHECK(c2_closed(PPFamily::so, ABProfile()).is_zero());
  const auto [a, b] = symbolic_2kkk_profile();
  CHECK(c2_closed(PPFamily::so, a, b).str() == "12*k^2 + (16*n - 28)*k");
  CHECK(c2_closed(PPFamily::sp, b, a).str() == "-12*k^2 + (16*n + 28)*k");
  std::vector<Polynomial> one{Polynomial(1)};
  CHECK_THROWS(c2_closed(PPFamily::so, one, std::span<const Polynomial>()));
}

TEST_CASE("closed form agrees with the series coefficient") {
  for_each_diagram(4, 4, [](const YoungDiagram& d) {
    const auto p = ab_from_diagram(d);
    for (auto fam : {PPFamily::so, PPFamily::sp}) {
      REQUIRE(c2_closed(fam, p) == pp_series(fam, p, 3).c2);
    }
  });
}

TEST_CASE("normalization conversion") {
  CHECK(normalization_convert(PPFamily::so, poly(16, -16), Direction::MVtoCK) == poly(8, -8));
  CHECK(normalization_convert(PPFamily::sp, poly(16, 16), Direction::MVtoCK) == poly(4, 4));
  CHECK(normalization_convert(PPFamily::sp, poly(4, 4), Direction::CKtoMV) == poly(16, 16));
  CHECK(normalization_convert(PPFamily::so, Rational(3), Direction::MVtoCK) == Rational(3, 2));
}

TEST_CASE("second Casimir duality") {
  CHECK(duality_check_c2(ABProfile({1, 3}, {1, 2})).is_zero());
  std::mt19937_64 rng(20240517);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 4);
    auto pick = [&] {
      std::vector<int> all(10);
      for (int i = 0; i < 10; ++i) all[static_cast<std::size_t>(i)] = i + 1;
      std::shuffle(all.begin(), all.end(), rng);
      std::vector<int> v(all.begin(), all.begin() + k);
      std::sort(v.begin(), v.end());
      return v;
    };
    const ABProfile p(pick(), pick());
    CHECK_MESSAGE(duality_check_c2(p).is_zero(), p.str());
  }
  const auto [a, b] = symbolic_2kkk_profile();
  CHECK(duality_check_c2(a, b).is_zero());
}

TEST_CASE("series duality for rectangles") {
  for (int h = 1; h <= 4; ++h) {
    for (int l = 1; l <= 4; ++l) {
      const auto r = duality_check_series(YoungDiagram::rectangle(h, l), kMaxSeriesDualityOrder);
      CHECK_FALSE(r.experimental);
      CHECK(r.residuals.size() == 7);
      CHECK_MESSAGE(r.all_zero(), h << "x" << l);
    }
  }
  CHECK_THROWS_AS(duality_check_series(YoungDiagram({2, 1}), 4), OutOfScopeError);
  CHECK_THROWS_AS(duality_check_series(YoungDiagram({2}), 7), std::invalid_argument);
  CHECK_THROWS_AS(duality_check_series(YoungDiagram({2}), 2), std::invalid_argument);
  const auto e = duality_check_series(YoungDiagram({3, 1}), 5, true);
  CHECK(e.experimental);
  CHECK(e.all_zero());
}

TEST_CASE("(2k,k,k) so value equals minus twice the sp value of the conjugate at -n") {
  for (int k = 1; k <= 4; ++k) {
    const YoungDiagram d({2 * k, k, k});
    const auto so_ck = normalization_convert(PPFamily::so, c2_closed(PPFamily::so, ab_from_diagram(d)), Direction::MVtoCK);
    const auto sp_ck = normalization_convert(PPFamily::sp, c2_closed(PPFamily::sp, ab_from_diagram(conjugate(d))),
                                             Direction::MVtoCK);
    CHECK(so_ck == Polynomial(-2) * sp_ck.substitute("n", -n));
  }
}

TEST_CASE("triangulation against root data and the orthonormal basis") {
  struct Case {
    PPFamily fam;
    rootdata::AlgebraId alg;
  };
  using rootdata::Family;
  const std::vector<Case> cases{{PPFamily::so, {Family::D, 5}}, {PPFamily::so, {Family::D, 6}},
                                {PPFamily::sp, {Family::C, 3}}, {PPFamily::sp, {Family::C, 4}}};
  for (const auto& c : cases) {
    const int rank = c.alg.rank();
    const auto datum = rootdata::root_datum(c.alg);
    for_each_diagram(rank - 2, 4, [&](const YoungDiagram& d) {
      const Rational closed = normalization_convert(c.fam, c2_closed(c.fam, ab_from_diagram(d)), Direction::MVtoCK)
                                  .evaluate({{"n", Rational(rank)}});
      const auto w = rootdata::weight_from_partition(c.alg, d);
      REQUIRE(rootdata::partition_from_weight(w) == d);
      CHECK(closed == rootdata::casimir2(*datum, w));
      CHECK(closed == casimir_orthonormal(c.fam, d, rank));
    });
  }
}
