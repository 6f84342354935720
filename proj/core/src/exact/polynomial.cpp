#include "unicas/exact/polynomial.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace unicas {

namespace {

constexpr std::array<std::string_view, 4> kPrioritySymbols{"k", "n", "N", "z"};

int priority(const std::string& s) {
  for (std::size_t i = 0; i < kPrioritySymbols.size(); ++i) {
    if (s == kPrioritySymbols[i]) return static_cast<int>(i);
  }
  return static_cast<int>(kPrioritySymbols.size());
}

int total_degree(const Polynomial::Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), symbol_less);
  return out;
}

}  // namespace

bool symbol_less(const std::string& a, const std::string& b) {
  int pa = priority(a);
  int pb = priority(b);
  if (pa != pb) return pa < pb;
  return a < b;
}

bool Polynomial::GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  int da = total_degree(a);
  int db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

Polynomial::Polynomial(std::vector<std::string> vars, TermMap terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
  normalize();
}

Polynomial Polynomial::variable(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty symbol name");
  TermMap t;
  t.emplace(Exponents{1}, Rational(1));
  return Polynomial({name}, std::move(t));
}

std::vector<std::pair<Polynomial::Exponents, Rational>> Polynomial::terms() const {
  return {terms_.begin(), terms_.end()};
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial " + str() + " is not constant");
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.begin()->first);
}

int Polynomial::degree(const std::string& var) const {
  if (terms_.empty()) return -1;
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return 0;
  auto idx = static_cast<std::size_t>(it - vars_.begin());
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
  return d;
}

Polynomial Polynomial::coefficient(const std::string& var, int power) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return power == 0 ? *this : Polynomial();
  auto idx = static_cast<std::size_t>(it - vars_.begin());
  std::vector<std::string> rest = vars_;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(idx));
  TermMap out;
  for (const auto& [e, c] : terms_) {
    if (e[idx] != power) continue;
    Exponents r = e;
    r.erase(r.begin() + static_cast<std::ptrdiff_t>(idx));
    out.emplace(std::move(r), c);
  }
  return Polynomial(std::move(rest), std::move(out));
}

Polynomial::TermMap Polynomial::remap(const TermMap& terms, const std::vector<std::string>& from,
                                      const std::vector<std::string>& to) {
  std::vector<std::size_t> pos(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    pos[i] = static_cast<std::size_t>(std::find(to.begin(), to.end(), from[i]) - to.begin());
  }
  TermMap out;
  for (const auto& [e, c] : terms) {
    Exponents w(to.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) w[pos[i]] = e[i];
    out.emplace(std::move(w), c);
  }
  return out;
}

void Polynomial::widen_to(const std::vector<std::string>& vars) {
  if (vars == vars_) return;
  terms_ = remap(terms_, vars_, vars);
  vars_ = vars;
}

void Polynomial::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] != 0;
  }
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (used[i]) kept.push_back(vars_[i]);
  }
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponents r;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (used[i]) r.push_back(e[i]);
    }
    out.emplace(std::move(r), c);
  }
  vars_ = std::move(kept);
  terms_ = std::move(out);
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  auto vars = merge_vars(vars_, rhs.vars_);
  widen_to(vars);
  const TermMap other = rhs.vars_ == vars ? rhs.terms_ : remap(rhs.terms_, rhs.vars_, vars);
  for (const auto& [e, c] : other) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) it->second += c;
  }
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto vars = merge_vars(a.vars_, b.vars_);
  const auto ta = a.vars_ == vars ? a.terms_ : Polynomial::remap(a.terms_, a.vars_, vars);
  const auto tb = b.vars_ == vars ? b.terms_ : Polynomial::remap(b.terms_, b.vars_, vars);
  Polynomial::TermMap out;
  for (const auto& [ea, ca] : ta) {
    for (const auto& [eb, cb] : tb) {
      Polynomial::Exponents e(vars.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.emplace(std::move(e), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  return Polynomial(std::move(vars), std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial operator/(const Polynomial& a, const Rational& b) {
  Rational inv = b.inverse();
  Polynomial out = a;
  for (auto& [e, c] : out.terms_) c *= inv;
  return out;
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative polynomial power");
  Polynomial result(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& images) const {
  std::vector<Polynomial> var_images;
  var_images.reserve(vars_.size());
  for (const auto& v : vars_) {
    auto it = images.find(v);
    var_images.push_back(it != images.end() ? it->second : variable(v));
  }
  // Cache powers per variable; substitution images are typically tiny.
  std::vector<std::vector<Polynomial>> powers(vars_.size(), std::vector<Polynomial>{Polynomial(1)});
  auto power_of = [&](std::size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * var_images[i]);
    return cache[static_cast<std::size_t>(e)];
  };
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    Polynomial term(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term *= power_of(i, e[i]);
    }
    out += term;
  }
  return out;
}

Polynomial Polynomial::substitute(const std::string& var, const Polynomial& image) const {
  return substitute(std::map<std::string, Polynomial>{{var, image}});
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& values) const {
  std::vector<const Rational*> vals;
  for (const auto& v : vars_) {
    auto it = values.find(v);
    if (it == values.end()) throw UnboundSymbolError(v);
    vals.push_back(&it->second);
  }
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) term *= vals[i]->pow(e[i]);
    }
    sum += term;
  }
  return sum;
}

void Polynomial::str_pieces(std::vector<std::string>& out) const {
  if (is_constant()) {
    out.push_back(constant_value().str());
    return;
  }
  const std::string& x = vars_.front();
  for (int e = degree(x); e >= 0; --e) {
    Polynomial c = coefficient(x, e);
    if (c.is_zero()) continue;
    if (e == 0) {
      c.str_pieces(out);
      continue;
    }
    std::string xs = e == 1 ? x : x + "^" + std::to_string(e);
    if (c.term_count() > 1) {
      out.push_back("(" + c.str() + ")*" + xs);
      continue;
    }
    std::string cs = c.str();
    if (cs == "1") {
      out.push_back(xs);
    } else if (cs == "-1") {
      out.push_back("-" + xs);
    } else {
      out.push_back(cs + "*" + xs);
    }
  }
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::vector<std::string> pieces;
  str_pieces(pieces);
  std::string s = pieces.front();
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (pieces[i].front() == '-') {
      s += " - " + pieces[i].substr(1);
    } else {
      s += " + " + pieces[i];
    }
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

Polynomial interpolate(const std::string& var, std::span<const std::pair<Rational, Polynomial>> samples) {
  const Polynomial x = Polynomial::variable(var);
  Polynomial out;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    Polynomial basis(1);
    Rational denom(1);
    for (std::size_t j = 0; j < samples.size(); ++j) {
      if (j == i) continue;
      if (samples[i].first == samples[j].first) throw std::invalid_argument("interpolation nodes must be distinct");
      basis *= x - Polynomial(samples[j].first);
      denom *= samples[i].first - samples[j].first;
    }
    out += samples[i].second * basis / denom;
  }
  return out;
}

}  // namespace unicas
