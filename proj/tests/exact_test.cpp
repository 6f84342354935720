#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "unicas/exact/laurent.hpp"
#include "unicas/exact/polynomial.hpp"
#include "unicas/exact/rational.hpp"
#include "unicas/exact/symmetric.hpp"

using namespace unicas;

namespace {

Polynomial var(const char* s) { return Polynomial::variable(s); }

Rational random_rational(std::mt19937_64& rng) {
  const long long num = static_cast<long long>(rng() % 201) - 100;
  const long long den = static_cast<long long>(rng() % 30) + 1;
  return Rational(num, den);
}

Polynomial random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars) {
  Polynomial p;
  const int terms = static_cast<int>(rng() % 5);
  for (int t = 0; t < terms; ++t) {
    Polynomial mono(random_rational(rng));
    for (const auto& v : vars) mono *= var(v.c_str()).pow(static_cast<int>(rng() % 3));
    p += mono;
  }
  return p;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and reduced") {
  CHECK((Rational(1, 2) + Rational(1, 3)).str() == "5/6");
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational::parse("-12/8") == Rational(-3, 2));
  CHECK(Rational::parse("7").str() == "7");
  CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK(Rational(3, 4) < Rational(4, 5));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("(6N+6)/(N+1) at N=3 reduces to 6") {
  const Polynomial N = var("N");
  const Rational num = (Polynomial(6) * N + Polynomial(6)).evaluate({{"N", 3}});
  const Rational den = (N + Polynomial(1)).evaluate({{"N", 3}});
  CHECK((num / den).str() == "6");
}

TEST_CASE("division by zero is an explicit error") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), ZeroDivisionError);
  CHECK_THROWS_AS(Rational(0).inverse(), ZeroDivisionError);
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), ZeroDivisionError);
}

TEST_CASE("rational field axioms on random triples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    const Rational c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}

TEST_CASE("polynomial text form groups by leading symbol") {
  const Polynomial k = var("k");
  const Polynomial N = var("N");
  const Polynomial p = Polynomial(6) * k * k + (Polynomial(8) * N - Polynomial(10)) * k;
  CHECK(p.str() == "6*k^2 + (8*N - 10)*k");
  CHECK((Polynomial(16) * var("n") - Polynomial(16)).str() == "16*n - 16");
  CHECK(Polynomial().str() == "0");
  CHECK((-var("n")).str() == "-n");
  CHECK((var("n") / Rational(2) - Polynomial(Rational(3, 2))).str() == "1/2*n - 3/2");
}

TEST_CASE("polynomial identities") {
  const Polynomial k = var("k");
  const Polynomial n = var("n");
  CHECK((k + n).pow(2) == k * k + Polynomial(2) * k * n + n * n);
  CHECK((k + n).pow(2).str() == "k^2 + 2*n*k + n^2");
  const Polynomial p = Polynomial(3) * k * n - Polynomial(Rational(1, 2));
  CHECK(p * Polynomial(1) == p);
  CHECK((p - p).is_zero());
  CHECK((p - p).variables().empty());
}

TEST_CASE("substitute n -> -n then negate maps 16n+16 to 16n-16") {
  const Polynomial n = var("n");
  const Polynomial sp = Polynomial(16) * n + Polynomial(16);
  CHECK((-sp.substitute("n", -n)).str() == "16*n - 16");
}

TEST_CASE("evaluation with an unbound symbol names it") {
  const Polynomial p = var("k") * var("N");
  try {
    (void)p.evaluate({{"k", 2}});
    FAIL("expected UnboundSymbolError");
  } catch (const UnboundSymbolError& e) {
    CHECK(e.symbol() == "N");
  }
}

TEST_CASE("evaluate after substitute equals substitute-then-evaluate") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const Polynomial p = random_poly(rng, {"k", "n", "N"});
    const Polynomial img_k = random_poly(rng, {"n"});
    const Polynomial img_N = random_poly(rng, {"n", "z"});
    const Rational nv = random_rational(rng);
    const Rational zv = random_rational(rng);
    const std::map<std::string, Rational> env{{"n", nv}, {"z", zv}};
    const Rational kv = img_k.evaluate(env);
    const Rational Nv = img_N.evaluate(env);
    const Rational lhs = p.substitute({{"k", img_k}, {"N", img_N}}).evaluate(env);
    const Rational rhs = p.evaluate({{"k", kv}, {"n", nv}, {"N", Nv}});
    CHECK(lhs == rhs);
  }
}

TEST_CASE("interpolation recovers a polynomial in N") {
  const Polynomial k = var("k");
  const Polynomial N = var("N");
  const Polynomial target = Polynomial(6) * k * k + (Polynomial(8) * N - Polynomial(10)) * k;
  std::vector<std::pair<Rational, Polynomial>> samples;
  for (int v = 4; v <= 8; ++v) samples.emplace_back(v, target.substitute("N", Polynomial(v)));
  CHECK(interpolate("N", samples) == target);
}

TEST_CASE("geometric series from a single denominator factor") {
  const Polynomial c = var("c");
  const LinearFactor f[] = {{-1, c}};
  const auto s = series_from_linear_factors(f, Polynomial(1), 0, 2);
  CHECK(s.coefficient(0) == Polynomial(1));
  CHECK(s.coefficient(1) == c);
  CHECK(s.coefficient(2) == c * c);
  CHECK_THROWS_AS((void)s.coefficient(3), std::out_of_range);
  CHECK(s.coefficient(-1).is_zero());
}

TEST_CASE("F * (1/F) equals the prefactor alone") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<LinearFactor> f;
    std::vector<LinearFactor> inv;
    const int count = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < count; ++i) {
      const int sign = rng() % 2 ? 1 : -1;
      const Polynomial c = Polynomial(random_rational(rng)) + Polynomial(static_cast<int>(rng() % 3)) * var("n");
      f.push_back({sign, c});
      inv.push_back({-sign, c});
    }
    const Polynomial pre = Polynomial(random_rational(rng)) + var("n");
    const int order = 5;
    const auto fs = series_from_linear_factors(f, pre, -1, order);
    const auto is = series_from_linear_factors(inv, Polynomial(1), 0, order + 1);
    const auto prod = fs * is;
    const auto expected = series_from_linear_factors({}, pre, -1, order);
    for (int p = -1; p <= order; ++p) CHECK(prod.coefficient(p) == expected.coefficient(p));
  }
}

TEST_CASE("series inverse extracts the monomial factor") {
  // z^-1 (2 - 3z) has inverse z / (2 - 3z) = z (1/2 + 3/4 z + 9/8 z^2 + ...).
  LaurentSeries s("z", -2, std::vector<Polynomial>{Polynomial(0), Polynomial(2), Polynomial(-3), Polynomial(0), Polynomial(0)});
  const auto inv = s.inverse();
  CHECK(inv.min_degree() == 1);
  CHECK(inv.coefficient(1) == Polynomial(Rational(1, 2)));
  CHECK(inv.coefficient(2) == Polynomial(Rational(3, 4)));
  CHECK(inv.coefficient(3) == Polynomial(Rational(9, 8)));
  const auto one = s * inv;
  CHECK(one.coefficient(0) == Polynomial(1));
  CHECK(one.coefficient(1).is_zero());
  LaurentSeries bad("z", 0, std::vector<Polynomial>{var("n"), Polynomial(1)});
  CHECK_THROWS_AS((void)bad.inverse(), std::domain_error);
}

TEST_CASE("class sizes for small symmetric groups") {
  auto s2 = symmetric_class_sizes(2);
  REQUIRE(s2.size() == 2);
  CHECK(s2[0].parts == std::vector<int>{2});
  CHECK(s2[0].class_size == 1);
  CHECK(s2[1].parts == std::vector<int>{1, 1});
  CHECK(s2[1].class_size == 1);

  std::map<std::vector<int>, BigInt> s3;
  for (const auto& c : symmetric_class_sizes(3)) s3[c.parts] = c.class_size;
  CHECK(s3.at({1, 1, 1}) == 1);
  CHECK(s3.at({2, 1}) == 3);
  CHECK(s3.at({3}) == 2);

  CHECK_THROWS_AS(symmetric_class_sizes(0), std::out_of_range);
  CHECK_THROWS_AS(symmetric_class_sizes(9), std::out_of_range);
}

TEST_CASE("class sizes agree with enumeration of all permutations") {
  for (int m = 1; m <= 6; ++m) {
    std::vector<int> perm(static_cast<std::size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    std::map<std::vector<int>, long> counted;
    do {
      std::vector<bool> seen(perm.size(), false);
      std::vector<int> cycle_type;
      for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (auto j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
          seen[j] = true;
          ++len;
        }
        cycle_type.push_back(len);
      }
      std::sort(cycle_type.rbegin(), cycle_type.rend());
      ++counted[cycle_type];
    } while (std::next_permutation(perm.begin(), perm.end()));

    const auto classes = symmetric_class_sizes(m);
    BigInt total = 0;
    for (const auto& c : classes) {
      CHECK(counted.at(c.parts) == c.class_size.get_si());
      total += c.class_size;
    }
    CHECK(classes.size() == counted.size());
    CHECK(total == factorial(static_cast<unsigned>(m)));
  }
}
