#include "unicas/harness/tables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "unicas/pp/spectrum.hpp"
#include "unicas/rootdata/root_datum.hpp"
#include "unicas/vogel/vogel.hpp"

namespace unicas::harness {

using rootdata::AlgebraId;
using rootdata::Family;
using rootdata::Weight;

namespace {

const Family kClassical[] = {Family::A, Family::B, Family::C, Family::D};

std::vector<AlgebraId> exceptionals() {
  return {AlgebraId(Family::G, 2), AlgebraId(Family::F, 4), AlgebraId(Family::E, 6), AlgebraId(Family::E, 7),
          AlgebraId(Family::E, 8)};
}

std::string lower_name(const AlgebraId& a) {
  std::string s = a.str();
  s[0] = static_cast<char>(s[0] - 'A' + 'a');
  return s;
}

// Fits f(rank) over `count` consecutive ranks starting at `first` as a
// polynomial in `symbol`.
template <typename F>
Polynomial fit_in_rank(Family family, int first, int count, const std::string& symbol, F f) {
  std::vector<std::pair<Rational, Polynomial>> samples;
  for (int r = first; r < first + count; ++r) samples.emplace_back(Rational(r), f(AlgebraId(family, r)));
  return interpolate(symbol, samples);
}

int low_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::B:
    case Family::C: return 2;
    default: return 3;
  }
}

Table table1() {
  Table t{1, "Vogel's parameters for simple Lie algebras", {"Root system", "Lie algebra", "alpha", "beta", "gamma", "t"}, {}, {}};
  for (Family f : kClassical) {
    const int r0 = low_rank(f);
    auto component = [&](auto get) {
      return fit_in_rank(f, r0, 3, "n", [&](const AlgebraId& a) { return Polynomial(get(vogel::vogel_params(a))); }).str();
    };
    const Polynomial dim = fit_in_rank(f, r0, 3, "n", [](const AlgebraId& a) { return Polynomial(a.defining_dimension()); });
    const std::string prefix = f == Family::A ? "sl" : f == Family::C ? "sp" : "so";
    t.rows.push_back({std::string(1, rootdata::family_letter(f)) + "_n", prefix + "(" + dim.str() + ")",
                      component([](const vogel::VogelPoint& p) { return p.alpha; }),
                      component([](const vogel::VogelPoint& p) { return p.beta; }),
                      component([](const vogel::VogelPoint& p) { return p.gamma; }),
                      component([](const vogel::VogelPoint& p) { return p.t(); })});
  }
  for (const auto& a : exceptionals()) {
    const auto p = vogel::vogel_params(a);
    t.rows.push_back({a.str(), lower_name(a), p.alpha.str(), p.beta.str(), p.gamma.str(), p.t().str()});
  }
  return t;
}

Table table2() {
  Table t{2, "Vogel's parameters for simple Lie algebras: lines", {"Algebra", "alpha", "beta", "gamma", "t", "Line"}, {}, {}};
  for (const auto& line : {vogel::sl_line(), vogel::so_line(), vogel::sp_line(), vogel::exceptional_line()}) {
    t.rows.push_back({line.name, line.alpha.str(), line.beta.str(), line.gamma.str(), line.t().str(), line.relation_str()});
  }
  const auto exc = vogel::exceptional_line();
  // The line's beta is n + 4, so n is recovered from beta directly.
  auto parameter = [&](const AlgebraId& a) {
    const auto p = vogel::vogel_params(a);
    const Rational shift = exc.beta.evaluate({{exc.symbol, Rational(0)}});
    const Rational slope = exc.beta.evaluate({{exc.symbol, Rational(1)}}) - shift;
    return (p.beta - shift) / slope;
  };
  std::vector<AlgebraId> on_line = exceptionals();
  on_line.insert(on_line.begin() + 1, AlgebraId(Family::D, 4));
  std::string values;
  std::string names;
  for (const auto& a : on_line) {
    if (!exc.relation_value(vogel::vogel_params(a)).is_zero()) continue;
    values += (values.empty() ? "" : ", ") + parameter(a).str();
    names += (names.empty() ? "" : ", ") + lower_name(a);
  }
  t.note = "Exceptional line: n = " + values + " for " + names + ".";
  return t;
}

// Writes a weight with labels relative to the rank where moving from rank r
// to r+1 shifts the node.
std::string relative_weight(const Weight& at_r, const Weight& at_next) {
  const int r = at_r.algebra().rank();
  std::vector<std::pair<int, int>> u;
  std::vector<std::pair<int, int>> v;
  for (int i = 1; i <= r; ++i)
    if (at_r[i] != 0) u.emplace_back(i, at_r[i]);
  for (int i = 1; i <= r + 1; ++i)
    if (at_next[i] != 0) v.emplace_back(i, at_next[i]);
  if (u.size() != v.size()) throw std::logic_error("weights at consecutive ranks do not align: " + at_r.str());
  std::string out;
  for (std::size_t j = 0; j < u.size(); ++j) {
    const auto [i, c] = u[j];
    if (c != v[j].second) throw std::logic_error("weights at consecutive ranks do not align: " + at_r.str());
    std::string label;
    if (v[j].first == i) {
      label = "w" + std::to_string(i);
    } else {
      const int off = r - i;
      label = off == 0 ? "wN" : "w(N-" + std::to_string(off) + ")";
    }
    if (!out.empty()) out += "+";
    if (c != 1) out += std::to_string(c);
    out += label;
  }
  return out.empty() ? "0" : out;
}

std::string join_weights(const std::vector<std::string>& ws) {
  std::string s;
  for (const auto& w : ws) s += (s.empty() ? "" : " (+) ") + w;
  return s;
}

std::string family_row(Family f) {
  return std::string(1, rootdata::family_letter(f)) + "_N, N>=" + std::to_string(rootdata::min_x2_rank(f));
}

Table table3() {
  Table t{3, "Highest weights of X2 and g representations", {"", "lambda_X2", "lambda_g"}, {}, {}};
  for (Family f : kClassical) {
    const int r = rootdata::min_x2_rank(f) + 1;
    const AlgebraId a(f, r);
    const AlgebraId b(f, r + 1);
    const auto xa = rootdata::x2_weight(a);
    const auto xb = rootdata::x2_weight(b);
    std::vector<std::string> x2;
    for (std::size_t i = 0; i < xa.size(); ++i) x2.push_back(relative_weight(xa[i], xb[i]));
    t.rows.push_back({family_row(f), join_weights(x2),
                      relative_weight(rootdata::adjoint_weight(a), rootdata::adjoint_weight(b))});
  }
  for (const auto& a : exceptionals()) {
    std::vector<std::string> x2;
    for (const auto& w : rootdata::x2_weight(a)) x2.push_back(w.str());
    t.rows.push_back({a.str(), join_weights(x2), rootdata::adjoint_weight(a).str()});
  }
  t.note = "Labels w(N-j) count back from the last node of the rank-N diagram.";
  return t;
}

std::vector<std::string> split_kn(const Polynomial& full) {
  const Polynomial ck = full.substitute("n", Polynomial());
  const Polynomial cn = full.substitute("k", Polynomial());
  return {ck.str(), cn.str(), (full - ck - cn).str(), full.str()};
}

Polynomial x2_casimir_kn(const AlgebraId& a) {
  return rootdata::casimir_poly_kn(*rootdata::root_datum(a), rootdata::x2_weight(a).front(), rootdata::adjoint_weight(a));
}

Table table4() {
  Table t{4, "Casimir eigenvalues", {"", "C_kX2", "C_ng", "2kn(X2,g)", "C_kn"}, {}, {}};
  for (Family f : kClassical) {
    const Polynomial full = fit_in_rank(f, rootdata::min_x2_rank(f), 5, "N", x2_casimir_kn);
    auto row = split_kn(full);
    row.insert(row.begin(), family_row(f));
    t.rows.push_back(std::move(row));
  }
  for (const auto& a : exceptionals()) {
    auto row = split_kn(x2_casimir_kn(a));
    row.insert(row.begin(), a.str());
    t.rows.push_back(std::move(row));
  }
  auto row = split_kn(vogel::universal_casimir_kn(Polynomial::variable("alpha"), Polynomial::variable("t"),
                                                  Polynomial::variable("k"), Polynomial::variable("n")));
  row.insert(row.begin(), "Universal Form");
  t.rows.push_back(std::move(row));
  t.note = "Classical rows interpolated in N over five ranks; A_N uses the first X2 summand.";
  return t;
}

Table table5() {
  Table t{5, "Casimir eigenvalues", {"", "a", "gamma(H)=4+6a", "gamma(C)=3+3a", "gamma(G)=4+8a", "t", "C_{2,0}", "C_{1,1}", "C_{1,2}"}, {}, {}};
  const std::vector<AlgebraId> algebras{AlgebraId(Family::A, 1), AlgebraId(Family::A, 2), AlgebraId(Family::G, 2),
                                        AlgebraId(Family::D, 4), AlgebraId(Family::F, 4), AlgebraId(Family::E, 6),
                                        AlgebraId(Family::E, 7), AlgebraId(Family::E, 8)};
  for (const auto& a : algebras) {
    const auto p = vogel::vogel_params(a);
    const Rational inv_t = p.t().inverse();
    const auto cdm = vogel::cohen_de_man(inv_t);
    t.rows.push_back({a.str(), inv_t.str(), cdm.h.str(), cdm.c.str(), cdm.g.str(), p.t().str(),
                      vogel::casimir_scaled(p, 2, 0).str(), vogel::casimir_scaled(p, 1, 1).str(),
                      vogel::casimir_scaled(p, 1, 2).str()});
  }
  return t;
}

Table table6() {
  Table t{6, "Comparison", {"Algebra", "Diagram", "A,B", "C_2(A,B)", "C_2"}, {}, {}};
  const std::pair<pp::PPFamily, pp::YoungDiagram> rows[] = {{pp::PPFamily::so, pp::YoungDiagram({2, 1, 1})},
                                                            {pp::PPFamily::sp, pp::YoungDiagram({3, 1})}};
  for (const auto& [fam, d] : rows) {
    const auto profile = pp::ab_from_diagram(d);
    const Polynomial mv = pp::c2_closed(fam, profile);
    t.rows.push_back({pp::family_name(fam) + "(2n)", d.str(), profile.str(), mv.str(),
                      pp::normalization_convert(fam, mv, pp::Direction::MVtoCK).str()});
  }
  return t;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

}  // namespace

Table build_table(int id) {
  switch (id) {
    case 1: return table1();
    case 2: return table2();
    case 3: return table3();
    case 4: return table4();
    case 5: return table5();
    case 6: return table6();
    default: throw std::out_of_range("no table " + std::to_string(id) + " (1.." + std::to_string(kTableCount) + ")");
  }
}

std::string render_table(const Table& table, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json: {
      nlohmann::ordered_json j;
      j["table"] = table.id;
      j["caption"] = table.caption;
      j["headers"] = table.headers;
      j["rows"] = table.rows;
      if (!table.note.empty()) j["note"] = table.note;
      os << j.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
        os << '\n';
      };
      line(table.headers);
      for (const auto& r : table.rows) line(r);
      break;
    }
    case Format::Text: {
      std::vector<std::size_t> width(table.headers.size());
      for (std::size_t c = 0; c < width.size(); ++c) {
        width[c] = table.headers[c].size();
        for (const auto& r : table.rows) width[c] = std::max(width[c], r[c].size());
      }
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) {
          s += c ? " | " : "";
          s += cells[c] + std::string(width[c] - cells[c].size(), ' ');
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        os << s << '\n';
      };
      os << "Table " << table.id << ": " << table.caption << '\n';
      line(table.headers);
      std::string rule;
      for (std::size_t c = 0; c < width.size(); ++c) rule += (c ? "-+-" : "") + std::string(width[c], '-');
      os << rule << '\n';
      for (const auto& r : table.rows) line(r);
      if (!table.note.empty()) os << table.note << '\n';
      break;
    }
  }
  return os.str();
}

}  // namespace unicas::harness
