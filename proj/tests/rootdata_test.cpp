#include <doctest.h>

#include <map>

#include "unicas/pp/young.hpp"
#include "unicas/rootdata/root_datum.hpp"

using namespace unicas;
using namespace unicas::rootdata;

namespace {

AlgebraId id(const char* s) { return AlgebraId::parse(s); }

std::vector<AlgebraId> algebras_through_rank(int max_rank) {
  std::vector<AlgebraId> out;
  for (int r = 1; r <= max_rank; ++r) out.emplace_back(Family::A, r);
  for (int r = 2; r <= max_rank; ++r) out.emplace_back(Family::B, r);
  for (int r = 2; r <= max_rank; ++r) out.emplace_back(Family::C, r);
  for (int r = 3; r <= max_rank; ++r) out.emplace_back(Family::D, r);
  for (int r = 6; r <= 8; ++r) out.emplace_back(Family::E, r);
  out.emplace_back(Family::F, 4);
  out.emplace_back(Family::G, 2);
  return out;
}

// Classical count of positive roots.
int expected_positive_roots(const AlgebraId& a) {
  const int r = a.rank();
  switch (a.family()) {
    case Family::A: return r * (r + 1) / 2;
    case Family::B:
    case Family::C: return r * r;
    case Family::D: return r * (r - 1);
    case Family::E: return r == 6 ? 36 : r == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return -1;
}

}  // namespace

TEST_CASE("algebra names parse in both spellings") {
  CHECK(id("A4") == AlgebraId(Family::A, 4));
  CHECK(id("so(10)") == AlgebraId(Family::D, 5));
  CHECK(id("so(9)") == AlgebraId(Family::B, 4));
  CHECK(id("sp(6)") == AlgebraId(Family::C, 3));
  CHECK(id("sl(3)") == AlgebraId(Family::A, 2));
  CHECK(id("E8").str() == "E8");
  CHECK(id("g2") == AlgebraId(Family::G, 2));
  CHECK(id("D5").classical_name() == "so(10)");
  CHECK_THROWS_AS(id("E9"), ParseError);
  CHECK_THROWS_AS(id("sp(7)"), ParseError);
  CHECK_THROWS_AS(id("Q3"), ParseError);
  CHECK_THROWS_AS(AlgebraId(Family::D, 2), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraId(Family::F, 5), std::invalid_argument);
}

TEST_CASE("Gram matrix entries pinned by hand computations") {
  for (int N = 3; N <= 8; ++N) {
    const auto d = root_datum(AlgebraId(Family::A, N));
    CHECK(d->gram[0][0] == Rational(N, N + 1));
  }
  const auto g2 = root_datum(id("G2"));
  CHECK(g2->gram[0][0] == Rational(2, 3));
  CHECK(g2->gram[0][1] == Rational(1));

  const auto e8 = root_datum(id("E8"));
  CHECK(e8->gram[5][5] == Rational(6));
  Rational row6;
  for (const auto& x : e8->gram[5]) row6 += x;
  CHECK(row6 == Rational(57));

  // E7: F22 = 6 and row 2 sums to 9 + 14 + 10.
  const auto e7 = root_datum(id("E7"));
  CHECK(e7->gram[1][1] == Rational(6));
  Rational row2;
  for (const auto& x : e7->gram[1]) row2 += x;
  CHECK(row2 == Rational(33));
}

TEST_CASE("inner products reproduce the worked sums") {
  const auto f4 = root_datum(id("F4"));
  const Weight w2 = Weight::fundamental(f4->algebra, 2);
  CHECK(inner(*f4, w2, w2) == Rational(6));
  CHECK(inner(*f4, w2, w2) + 2 * inner(*f4, f4->rho, w2) == Rational(36));
  CHECK(inner(*f4, w2, Weight::zero(f4->algebra)).is_zero());

  const auto e7 = root_datum(id("E7"));
  const Weight e7w2 = Weight::fundamental(e7->algebra, 2);
  CHECK(inner(*e7, e7w2, e7w2) + 2 * inner(*e7, e7->rho, e7w2) == Rational(72));

  const auto d5 = root_datum(id("D5"));
  CHECK_THROWS_AS(inner(*d5, Weight::zero(id("B5")), Weight::zero(id("B5"))), std::invalid_argument);
}

TEST_CASE("Casimir eigenvalues on named weights") {
  for (int N = 4; N <= 9; ++N) {
    const AlgebraId d(Family::D, N);
    CHECK(casimir2(*root_datum(d), adjoint_weight(d)) == Rational(2 * (2 * N - 2)));
  }
  for (int N = 4; N <= 9; ++N) {
    const AlgebraId b(Family::B, N);
    CHECK(casimir2(*root_datum(b), Weight::parse(b, "w1+w3")) == Rational(8 * N - 4));
  }
  CHECK(casimir2(*root_datum(id("E6")), Weight::parse(id("E6"), "w3")) == Rational(48));
  CHECK(casimir2(*root_datum(id("E8")), Weight::parse(id("E8"), "ω6")) == Rational(120));
  CHECK(casimir2(*root_datum(id("G2")), Weight::parse(id("G2"), "3w1")) == Rational(16));
}

TEST_CASE("Casimir polynomial in k, n matches the per-family rows") {
  const Polynomial k = Polynomial::variable("k");
  const Polynomial n = Polynomial::variable("n");
  for (int N = 4; N <= 8; ++N) {
    const AlgebraId b(Family::B, N);
    const auto d = root_datum(b);
    const Polynomial expected = Polynomial(6) * k * k + Polynomial(8 * N - 10) * k +
                                Polynomial(2) * n * (n + Polynomial(2 * N - 2)) + Polynomial(6) * k * n;
    CHECK(casimir_poly_kn(*d, x2_weight(b)[0], adjoint_weight(b)) == expected);
  }
  for (int N = 3; N <= 7; ++N) {
    const AlgebraId c(Family::C, N);
    const auto d = root_datum(c);
    const Polynomial expected = Polynomial(5) * k * k + Polynomial(4 * N - 1) * k +
                                Polynomial(2) * n * (n + Polynomial(N)) + Polynomial(6) * k * n;
    CHECK(casimir_poly_kn(*d, x2_weight(c)[0], adjoint_weight(c)) == expected);
  }
  const auto e8 = root_datum(id("E8"));
  const Polynomial p = casimir_poly_kn(*e8, x2_weight(id("E8"))[0], adjoint_weight(id("E8")));
  CHECK(p.evaluate({{"k", 0}, {"n", 0}}).is_zero());
  CHECK(p.evaluate({{"k", 1}, {"n", 0}}) == Rational(120));
  CHECK(p.evaluate({{"k", 0}, {"n", 1}}) == Rational(60));
}

TEST_CASE("casimir_poly_kn agrees with casimir2 of the combined weight") {
  for (const auto& a : {id("A5"), id("B4"), id("C4"), id("D6"), id("F4"), id("E7")}) {
    const auto d = root_datum(a);
    const Weight x2 = x2_weight(a)[0];
    const Weight adj = adjoint_weight(a);
    const Polynomial p = casimir_poly_kn(*d, x2, adj);
    for (int kk = 0; kk <= 3; ++kk) {
      for (int nn = 0; nn <= 3; ++nn) {
        CHECK(p.evaluate({{"k", kk}, {"n", nn}}) == casimir2(*d, x2.scaled(kk) + adj.scaled(nn)));
      }
    }
  }
}

TEST_CASE("Weyl dimensions") {
  CHECK(weyl_dim(*root_datum(id("A2")), adjoint_weight(id("A2"))) == 8);
  CHECK(weyl_dim(*root_datum(id("E8")), adjoint_weight(id("E8"))) == 248);
  // dim X2 = dim(exterior square) - dim g for D5: 45 * 44 / 2 - 45 = 945.
  CHECK(weyl_dim(*root_datum(id("D5")), Weight::parse(id("D5"), "w1+w3")) == 945);
  CHECK(weyl_dim(*root_datum(id("E8")), x2_weight(id("E8"))[0]) == 30380);
  CHECK(weyl_dim(*root_datum(id("G2")), Weight::parse(id("G2"), "w1")) == 7);
  CHECK(weyl_dim(*root_datum(id("F4")), Weight::parse(id("F4"), "w4")) == 26);
  CHECK(weyl_dim(*root_datum(id("E6")), Weight::parse(id("E6"), "w1")) == 27);
  CHECK(weyl_dim(*root_datum(id("E7")), Weight::parse(id("E7"), "w6")) == 56);
}

TEST_CASE("root data invariants through rank 8 and the exceptional algebras") {
  for (const auto& a : algebras_through_rank(8)) {
    CAPTURE(a.str());
    const auto d = root_datum(a);
    const int r = a.rank();
    CHECK(static_cast<int>(d->positive_roots.size()) == expected_positive_roots(a));

    // (omega_i, alpha_j) * 2 / (alpha_j, alpha_j) = delta_ij with alpha_j = sum_l A_jl omega_l.
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        Rational pairing;
        for (int l = 0; l < r; ++l) pairing += Rational(d->cartan[j][l]) * d->gram[i][l];
        CHECK(pairing * 2 / d->root_norms[j] == Rational(i == j ? 1 : 0));
      }
    }
    // Symmetric, long roots at 2.
    Rational longest;
    for (int i = 0; i < r; ++i) {
      longest = std::max(longest, d->root_norms[i]);
      for (int j = 0; j < r; ++j) CHECK(d->gram[i][j] == d->gram[j][i]);
    }
    CHECK(longest == Rational(2));
    // Positive definite: all leading principal minors positive (Sylvester), via elimination.
    auto m = d->gram;
    for (int c = 0; c < r; ++c) {
      CHECK(m[c][c] > Rational(0));
      for (int row = c + 1; row < r; ++row) {
        const Rational f = m[row][c] / m[c][c];
        for (int j = c; j < r; ++j) m[row][j] -= f * m[c][j];
      }
    }
    CHECK(weyl_dim(*d, adjoint_weight(a)) == 2 * expected_positive_roots(a) + r);
  }
}

TEST_CASE("X2 and adjoint weights follow the labeling table") {
  CHECK(x2_weight(id("C5"))[0].str() == "2w1+w2");
  CHECK(adjoint_weight(id("C5")).str() == "2w1");
  CHECK(x2_weight(id("E8"))[0].str() == "w6");
  CHECK(adjoint_weight(id("E8")).str() == "w7");
  const auto a4 = x2_weight(id("A4"));
  REQUIRE(a4.size() == 2);
  CHECK(a4[0].str() == "2w1+w3");
  CHECK(a4[1].str() == "w2+2w4");
  CHECK_THROWS_AS(x2_weight(id("A2")), std::invalid_argument);
  CHECK_THROWS_AS(x2_weight(id("B3")), std::invalid_argument);
  CHECK_THROWS_AS(x2_weight(id("D4")), std::invalid_argument);
  CHECK_NOTHROW(x2_weight(id("C3")));
}

TEST_CASE("A_N X2 summands share one Casimir value") {
  for (int N = 3; N <= 9; ++N) {
    const AlgebraId a(Family::A, N);
    const auto d = root_datum(a);
    const auto ws = x2_weight(a);
    CHECK(casimir2(*d, ws[0]) == Rational(4 * N + 4));
    CHECK(casimir2(*d, ws[1]) == Rational(4 * N + 4));
  }
}

TEST_CASE("weights from partitions") {
  using unicas::pp::YoungDiagram;
  CHECK(weight_from_partition(id("D6"), YoungDiagram({2, 1, 1})).str() == "w1+w3");
  CHECK(weight_from_partition(id("C4"), YoungDiagram({3, 1})).str() == "2w1+w2");
  // (3^k, 1^k) -> 2 w_k + w_{2k}.
  for (int k = 1; k <= 3; ++k) {
    std::vector<int> rows(static_cast<std::size_t>(k), 3);
    rows.insert(rows.end(), static_cast<std::size_t>(k), 1);
    const AlgebraId c(Family::C, 2 * k + 1);
    const Weight expected = Weight::fundamental(c, k).scaled(2) + Weight::fundamental(c, 2 * k);
    CHECK(weight_from_partition(c, YoungDiagram(rows)) == expected);
  }
  CHECK(weight_from_partition(id("B3"), YoungDiagram({1, 1, 1})).str() == "2w3");
  CHECK_THROWS_AS(weight_from_partition(id("D5"), YoungDiagram({1, 1, 1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(weight_from_partition(id("A5"), YoungDiagram({1})), std::invalid_argument);
  CHECK_THROWS_AS(partition_from_weight(Weight::parse(id("B3"), "w3")), std::invalid_argument);

  for (const char* alg : {"B4", "C4", "D6"}) {
    const AlgebraId a = id(alg);
    const int max_rows = a.family() == Family::D ? a.rank() - 2 : a.rank();
    for (const auto& rows : std::vector<std::vector<int>>{{}, {1}, {3, 3, 1}, {4, 2, 2, 1}, {2, 2}}) {
      if (static_cast<int>(rows.size()) > max_rows) continue;
      const YoungDiagram dgm(rows);
      CHECK(partition_from_weight(weight_from_partition(a, dgm)) == dgm);
    }
  }
}

TEST_CASE("weight parsing") {
  const AlgebraId d5 = id("D5");
  CHECK(Weight::parse(d5, "[1,0,1,0,0]") == Weight::parse(d5, "w1 + w3"));
  CHECK(Weight::parse(d5, "2omega1").str() == "2w1");
  CHECK(Weight::parse(d5, "0").is_zero());
  CHECK_THROWS_AS(Weight::parse(d5, "[1,0]"), ParseError);
  CHECK_THROWS_AS(Weight::parse(d5, "w9"), ParseError);
  CHECK_THROWS_AS(Weight::parse(d5, "[1,-1,0,0,0]"), ParseError);
}
