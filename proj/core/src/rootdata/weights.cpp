#include <cctype>
#include <charconv>
#include <stdexcept>

#include "unicas/pp/young.hpp"
#include "unicas/rootdata/root_datum.hpp"

namespace unicas::rootdata {

Weight::Weight(AlgebraId algebra, std::vector<int> coords) : algebra_(algebra), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != algebra_.rank()) {
    throw std::invalid_argument("weight of " + algebra_.str() + " needs " + std::to_string(algebra_.rank()) +
                                " coordinates, got " + std::to_string(coords_.size()));
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] < 0) {
      throw std::invalid_argument("weight is not dominant: label " + std::to_string(coords_[i]) + " at node " +
                                  std::to_string(i + 1));
    }
  }
}

Weight Weight::zero(AlgebraId algebra) {
  return Weight(algebra, std::vector<int>(static_cast<std::size_t>(algebra.rank()), 0));
}

Weight Weight::fundamental(AlgebraId algebra, int index) {
  if (index < 1 || index > algebra.rank()) {
    throw std::invalid_argument("no fundamental weight w" + std::to_string(index) + " in " + algebra.str());
  }
  std::vector<int> c(static_cast<std::size_t>(algebra.rank()), 0);
  c[static_cast<std::size_t>(index - 1)] = 1;
  return Weight(algebra, std::move(c));
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("cannot parse weight '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Weight Weight::parse(AlgebraId algebra, std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  const std::string_view whole = text;
  try {
    if (!s.empty() && s.front() == '[') {
      if (s.back() != ']') throw ParseError("cannot parse weight '" + std::string(whole) + "'");
      std::vector<int> coords;
      std::string_view body(s);
      body = body.substr(1, body.size() - 2);
      while (!body.empty()) {
        auto comma = body.find(',');
        coords.push_back(parse_int(body.substr(0, comma), whole));
        if (comma == std::string_view::npos) break;
        body = body.substr(comma + 1);
      }
      return Weight(algebra, std::move(coords));
    }
    if (s == "0") return zero(algebra);
    // Normalize the omega spellings to a single 'w'.
    for (const std::string from : {"omega", "ω", "W"}) {
      for (auto pos = s.find(from); pos != std::string::npos; pos = s.find(from)) s.replace(pos, from.size(), "w");
    }
    Weight sum = zero(algebra);
    std::string_view rest(s);
    while (!rest.empty()) {
      auto plus = rest.find('+');
      std::string_view term = rest.substr(0, plus);
      auto w = term.find('w');
      if (w == std::string_view::npos) throw ParseError("cannot parse weight '" + std::string(whole) + "'");
      std::string_view coeff = term.substr(0, w);
      if (!coeff.empty() && coeff.back() == '*') coeff.remove_suffix(1);
      const int c = coeff.empty() ? 1 : parse_int(coeff, whole);
      std::string_view index = term.substr(w + 1);
      if (!index.empty() && index.front() == '_') index.remove_prefix(1);
      sum = sum + fundamental(algebra, parse_int(index, whole)).scaled(c);
      if (plus == std::string_view::npos) break;
      rest = rest.substr(plus + 1);
    }
    return sum;
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Weight Weight::operator+(const Weight& other) const {
  if (other.algebra_ != algebra_) throw std::invalid_argument("adding weights of different algebras");
  std::vector<int> c = coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
  return Weight(algebra_, std::move(c));
}

Weight Weight::scaled(int factor) const {
  if (factor < 0) throw std::invalid_argument("negative multiple of a dominant weight");
  std::vector<int> c = coords_;
  for (auto& x : c) x *= factor;
  return Weight(algebra_, std::move(c));
}

bool Weight::is_zero() const {
  for (int c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

std::string Weight::str() const {
  std::string s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (coords_[i] != 1) s += std::to_string(coords_[i]);
    s += "w" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

std::vector<Weight> x2_weight(const AlgebraId& algebra) {
  if (!algebra.x2_validated()) {
    throw std::invalid_argument("X2 highest weight of " + algebra.str() + " is outside the validated ranks (" +
                                family_letter(algebra.family()) + " needs rank >= " +
                                std::to_string(min_x2_rank(algebra.family())) + ")");
  }
  const int r = algebra.rank();
  auto w = [&](int i) { return Weight::fundamental(algebra, i); };
  switch (algebra.family()) {
    case Family::A: return {w(1).scaled(2) + w(r - 1), w(2) + w(r).scaled(2)};
    case Family::B:
    case Family::D: return {w(1) + w(3)};
    case Family::C: return {w(1).scaled(2) + w(2)};
    case Family::G: return {w(1).scaled(3)};
    case Family::F: return {w(2)};
    case Family::E:
      if (r == 6) return {w(3)};
      if (r == 7) return {w(2)};
      return {w(6)};
  }
  throw std::logic_error("unreachable");
}

Weight adjoint_weight(const AlgebraId& algebra) {
  const int r = algebra.rank();
  auto w = [&](int i) { return Weight::fundamental(algebra, i); };
  switch (algebra.family()) {
    case Family::A: return r == 1 ? w(1).scaled(2) : w(1) + w(r);
    case Family::B: return r == 2 ? w(2).scaled(2) : w(2);
    case Family::C: return w(1).scaled(2);
    case Family::D: return r == 3 ? w(2) + w(3) : w(2);
    case Family::G: return w(2);
    case Family::F: return w(1);
    case Family::E:
      if (r == 6) return w(6);
      if (r == 7) return w(1);
      return w(7);
  }
  throw std::logic_error("unreachable");
}

Weight weight_from_partition(const AlgebraId& algebra, const pp::YoungDiagram& diagram) {
  const int r = algebra.rank();
  int max_rows = 0;
  switch (algebra.family()) {
    case Family::B:
    case Family::C: max_rows = r; break;
    case Family::D: max_rows = r - 2; break;
    default:
      throw std::invalid_argument("partition weights are defined for B, C, D only, not " + algebra.str());
  }
  if (diagram.row_count() > max_rows) {
    throw std::invalid_argument("diagram " + diagram.str() + " has more than " + std::to_string(max_rows) +
                                " rows, not a tensor representation of " + algebra.str() + " handled here");
  }
  std::vector<int> a(static_cast<std::size_t>(r), 0);
  for (int i = 0; i + 1 < r; ++i) a[static_cast<std::size_t>(i)] = diagram.row(i) - diagram.row(i + 1);
  const int last = diagram.row(r - 1);
  a[static_cast<std::size_t>(r - 1)] = algebra.family() == Family::B ? 2 * last : last;
  return Weight(algebra, std::move(a));
}

pp::YoungDiagram partition_from_weight(const Weight& weight) {
  const auto& id = weight.algebra();
  const int r = id.rank();
  const auto& a = weight.coords();
  int last = a.back();
  switch (id.family()) {
    case Family::B:
      if (last % 2 != 0) throw std::invalid_argument("spinor weight " + weight.str() + " has no partition");
      last /= 2;
      break;
    case Family::C: break;
    case Family::D:
      if (a[static_cast<std::size_t>(r - 2)] != 0 || last != 0) {
        throw std::invalid_argument("weight " + weight.str() + " of " + id.str() + " is outside the handled range");
      }
      break;
    default: throw std::invalid_argument("partition weights are defined for B, C, D only");
  }
  std::vector<int> rows(static_cast<std::size_t>(r), 0);
  rows[static_cast<std::size_t>(r - 1)] = last;
  for (int i = r - 2; i >= 0; --i) rows[static_cast<std::size_t>(i)] = rows[static_cast<std::size_t>(i + 1)] + a[static_cast<std::size_t>(i)];
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return pp::YoungDiagram(std::move(rows));
}

}  // namespace unicas::rootdata
