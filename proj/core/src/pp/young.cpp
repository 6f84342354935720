#include "unicas/pp/young.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "unicas/exact/rational.hpp"

namespace unicas::pp {

namespace {

std::string join(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<int> parse_int_list(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ParseError("expected a bracketed list like [2,1,1], got '" + std::string(text) + "'");
  }
  text = trim(text.substr(1, text.size() - 2));
  std::vector<int> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = trim(text.substr(0, comma));
    int v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size()) {
      throw ParseError("bad list entry '" + std::string(item) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return out;
}

bool strictly_increasing_positive(const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] <= 0 || (i > 0 && v[i] <= v[i - 1])) return false;
  }
  return true;
}

}  // namespace

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) throw std::invalid_argument("Young diagram rows must be positive: " + join(rows_));
    if (i > 0 && rows_[i] > rows_[i - 1]) {
      throw std::invalid_argument("Young diagram rows must be weakly decreasing: " + join(rows_));
    }
  }
}

YoungDiagram YoungDiagram::parse(std::string_view text) { return YoungDiagram(parse_int_list(text)); }

YoungDiagram YoungDiagram::rectangle(int height, int length) {
  if (height < 0 || length < 0) throw std::invalid_argument("negative rectangle side");
  if (height == 0 || length == 0) return {};
  return YoungDiagram(std::vector<int>(static_cast<std::size_t>(height), length));
}

int YoungDiagram::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

bool YoungDiagram::is_rectangular() const {
  return std::adjacent_find(rows_.begin(), rows_.end(), std::not_equal_to<>()) == rows_.end();
}

std::string YoungDiagram::str() const { return join(rows_); }

YoungDiagram conjugate(const YoungDiagram& d) {
  std::vector<int> cols(static_cast<std::size_t>(d.column_count()), 0);
  for (int r : d.rows()) {
    for (int j = 0; j < r; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return YoungDiagram(std::move(cols));
}

ABProfile::ABProfile(std::vector<int> a, std::vector<int> b) : A(std::move(a)), B(std::move(b)) {
  if (A.size() != B.size()) throw std::invalid_argument("profile needs |A| = |B|: " + str());
  if (!strictly_increasing_positive(A) || !strictly_increasing_positive(B)) {
    throw std::invalid_argument("profile entries must be positive and strictly increasing: " + str());
  }
}

std::string ABProfile::str() const { return "A=" + join(A) + ";B=" + join(B); }

ABProfile ABProfile::parse(std::string_view text) {
  text = trim(text);
  auto semi = text.find(';');
  if (semi == std::string_view::npos) throw ParseError("profile must look like A=[1,3];B=[1,2]");
  auto part = [](std::string_view s, char name) {
    s = trim(s);
    if (s.size() < 2 || s[0] != name || s[1] != '=') {
      throw ParseError(std::string("expected ") + name + "=[...] in profile");
    }
    return parse_int_list(s.substr(2));
  };
  return ABProfile(part(text.substr(0, semi), 'A'), part(text.substr(semi + 1), 'B'));
}

ABProfile ab_from_diagram(const YoungDiagram& d) {
  std::vector<int> rows = d.rows();
  std::vector<int> cols = conjugate(d).rows();
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  return ABProfile(std::move(cols), std::move(rows));
}

YoungDiagram diagram_from_ab(const ABProfile& p) {
  const int k = p.corners();
  std::vector<int> rows;
  for (int j = 1; j <= k; ++j) {
    rows.insert(rows.end(), static_cast<std::size_t>(p.a(j) - p.a(j - 1)), p.b(k + 1 - j));
  }
  return YoungDiagram(std::move(rows));
}

std::ostream& operator<<(std::ostream& os, const YoungDiagram& d) { return os << d.str(); }
std::ostream& operator<<(std::ostream& os, const ABProfile& p) { return os << p.str(); }

}  // namespace unicas::pp
