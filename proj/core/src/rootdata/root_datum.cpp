#include "unicas/rootdata/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace unicas::rootdata {

namespace {

IntMatrix chain(int rank) {
  IntMatrix a(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 0));
  for (int i = 0; i < rank; ++i) {
    a[i][i] = 2;
    if (i + 1 < rank) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

void link(IntMatrix& a, int i, int j) { a[i][j] = a[j][i] = -1; }
void unlink(IntMatrix& a, int i, int j) { a[i][j] = a[j][i] = 0; }

/// Bond of multiplicity m between a long node and a short node (0-based).
void bond(IntMatrix& a, int long_node, int short_node, int m) {
  a[long_node][short_node] = -m;
  a[short_node][long_node] = -1;
}

IntMatrix cartan_matrix(const AlgebraId& id) {
  const int r = id.rank();
  IntMatrix a = chain(r);
  switch (id.family()) {
    case Family::A: break;
    case Family::B: bond(a, r - 2, r - 1, 2); break;
    case Family::C: bond(a, r - 1, r - 2, 2); break;
    case Family::D:
      unlink(a, r - 2, r - 1);
      link(a, r - 3, r - 1);
      break;
    case Family::E:
      unlink(a, r - 2, r - 1);
      link(a, 2, r - 1);
      break;
    case Family::F: bond(a, 1, 2, 2); break;
    case Family::G: bond(a, 1, 0, 3); break;
  }
  return a;
}

/// Squared lengths from A_ij / A_ji = (a_i, a_i)/(a_j, a_j), long roots at 2.
std::vector<Rational> root_norms_from(const IntMatrix& a) {
  const auto r = a.size();
  std::vector<Rational> norm(r);
  std::vector<bool> seen(r, false);
  std::deque<std::size_t> todo{0};
  norm[0] = 1;
  seen[0] = true;
  while (!todo.empty()) {
    auto i = todo.front();
    todo.pop_front();
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j || a[i][j] == 0 || seen[j]) continue;
      norm[j] = norm[i] * Rational(a[j][i], a[i][j]);
      seen[j] = true;
      todo.push_back(j);
    }
  }
  Rational longest = *std::max_element(norm.begin(), norm.end());
  for (auto& n : norm) n = n * 2 / longest;
  return norm;
}

RationalMatrix invert(const IntMatrix& a) {
  const auto r = a.size();
  RationalMatrix m(r, std::vector<Rational>(2 * r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) m[i][j] = a[i][j];
    m[i][r + i] = 1;
  }
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t pivot = col;
    while (pivot < r && m[pivot][col].is_zero()) ++pivot;
    if (pivot == r) throw std::logic_error("singular Cartan matrix");
    std::swap(m[pivot], m[col]);
    const Rational inv = m[col][col].inverse();
    for (auto& x : m[col]) x *= inv;
    for (std::size_t row = 0; row < r; ++row) {
      if (row == col || m[row][col].is_zero()) continue;
      const Rational f = m[row][col];
      for (std::size_t j = 0; j < 2 * r; ++j) m[row][j] -= f * m[col][j];
    }
  }
  RationalMatrix out(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) out[i][j] = m[i][r + j];
  }
  return out;
}

/// <beta, alpha_i^vee> for beta in simple-root coordinates.
int coroot_pairing(const IntMatrix& a, const std::vector<int>& beta, std::size_t i) {
  int s = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) s += beta[j] * a[j][i];
  return s;
}

std::vector<std::vector<int>> positive_roots_of(const IntMatrix& a) {
  const auto r = a.size();
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> layer;
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  std::vector<std::vector<int>> all;
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end(), std::greater<>());
    all.insert(all.end(), layer.begin(), layer.end());
    std::set<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < r; ++i) {
        // alpha_i-string through beta: p - q = <beta, alpha_i^vee>.
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          --down[i];
          if (!known.contains(down)) break;
          ++p;
        }
        const int q = p - coroot_pairing(a, beta, i);
        if (q > 0) {
          std::vector<int> up = beta;
          ++up[i];
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    known.insert(next.begin(), next.end());
  }
  return all;
}

void require_same(const RootDatum& datum, const Weight& w) {
  if (w.algebra() != datum.algebra) {
    throw std::invalid_argument("weight of " + w.algebra().str() + " used with root datum of " + datum.algebra.str());
  }
}

}  // namespace

Rational RootDatum::weight_root_pairing(int i, int j) const {
  return i == j ? root_norms[static_cast<std::size_t>(j)] / 2 : Rational(0);
}

Rational RootDatum::pair_with_root(const std::vector<int>& lambda, const std::vector<int>& root) const {
  Rational s;
  for (std::size_t j = 0; j < root.size(); ++j) {
    if (root[j] != 0 && lambda[j] != 0) s += Rational(lambda[j] * root[j]) * root_norms[j] / 2;
  }
  return s;
}

RootDatum build_root_datum(const AlgebraId& algebra) {
  IntMatrix cartan = cartan_matrix(algebra);
  std::vector<Rational> norms = root_norms_from(cartan);
  // alpha_i = sum_j A_ij omega_j, so (omega_i, omega_j) = (A^{-1})_ij (alpha_j, alpha_j)/2.
  RationalMatrix gram = invert(cartan);
  for (auto& row : gram) {
    for (std::size_t j = 0; j < row.size(); ++j) row[j] *= norms[j] / 2;
  }
  auto roots = positive_roots_of(cartan);
  return RootDatum{algebra,
                   std::move(cartan),
                   std::move(norms),
                   std::move(gram),
                   std::move(roots),
                   Weight(algebra, std::vector<int>(static_cast<std::size_t>(algebra.rank()), 1))};
}

std::shared_ptr<const RootDatum> root_datum(const AlgebraId& algebra) {
  static std::mutex mutex;
  static std::map<AlgebraId, std::shared_ptr<const RootDatum>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(algebra); it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const RootDatum>(build_root_datum(algebra));
  std::lock_guard lock(mutex);
  return cache.emplace(algebra, std::move(built)).first->second;
}

Rational inner(const RootDatum& datum, const Weight& u, const Weight& v) {
  require_same(datum, u);
  require_same(datum, v);
  Rational s;
  const auto& a = u.coords();
  const auto& b = v.coords();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) s += Rational(a[i] * b[j]) * datum.gram[i][j];
    }
  }
  return s;
}

Rational casimir2(const RootDatum& datum, const Weight& lambda) {
  return inner(datum, lambda, lambda + datum.rho.scaled(2));
}

Polynomial casimir_poly_kn(const RootDatum& datum, const Weight& lambda1, const Weight& lambda2) {
  const Polynomial k = Polynomial::variable("k");
  const Polynomial n = Polynomial::variable("n");
  const Weight two_rho = datum.rho.scaled(2);
  return k * k * Polynomial(inner(datum, lambda1, lambda1)) + n * n * Polynomial(inner(datum, lambda2, lambda2)) +
         Polynomial(2) * k * n * Polynomial(inner(datum, lambda1, lambda2)) +
         k * Polynomial(inner(datum, lambda1, two_rho)) + n * Polynomial(inner(datum, lambda2, two_rho));
}

BigInt weyl_dim(const RootDatum& datum, const Weight& lambda) {
  require_same(datum, lambda);
  const Weight shifted = lambda + datum.rho;
  Rational dim(1);
  for (const auto& alpha : datum.positive_roots) {
    dim *= datum.pair_with_root(shifted.coords(), alpha) / datum.pair_with_root(datum.rho.coords(), alpha);
  }
  return dim.to_integer();
}

}  // namespace unicas::rootdata
