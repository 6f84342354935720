#include "unicas/harness/suites.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "unicas/pp/duality.hpp"
#include "unicas/pp/spectrum.hpp"
#include "unicas/rootdata/root_datum.hpp"
#include "unicas/vogel/deligne.hpp"
#include "unicas/vogel/vogel.hpp"

#ifndef UNICAS_VERSION
#define UNICAS_VERSION "0.0.0"
#endif

namespace unicas::harness {

using rootdata::AlgebraId;
using rootdata::Family;
using rootdata::Weight;
using Tasks = std::vector<std::pair<std::string, CheckTask>>;

std::string tool_version() { return UNICAS_VERSION; }

std::set<Family> parse_scope(const std::string& text) {
  std::set<Family> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty()) continue;
    if (item == "A" || item == "sl") {
      out.insert(Family::A);
    } else if (item == "B") {
      out.insert(Family::B);
    } else if (item == "C" || item == "sp") {
      out.insert(Family::C);
    } else if (item == "D") {
      out.insert(Family::D);
    } else if (item == "so") {
      out.insert({Family::B, Family::D});
    } else if (item == "E") {
      out.insert(Family::E);
    } else if (item == "F") {
      out.insert(Family::F);
    } else if (item == "G") {
      out.insert(Family::G);
    } else if (item == "exc") {
      out.insert({Family::E, Family::F, Family::G});
    } else {
      throw std::invalid_argument("unknown family '" + item + "' in scope (A,B,C,D,E,F,G,sl,so,sp,exc)");
    }
  }
  return out;
}

namespace {

bool in_scope(const std::set<Family>& scope, Family f) { return scope.empty() || scope.count(f) != 0; }

std::vector<AlgebraId> exceptionals() {
  return {AlgebraId(Family::G, 2), AlgebraId(Family::F, 4), AlgebraId(Family::E, 6), AlgebraId(Family::E, 7),
          AlgebraId(Family::E, 8)};
}

// Zero-padded so that lexical check_id order matches numeric order.
std::string padded(int i, int width = 3) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%0*d", width, i);
  return buf;
}

std::string id_of(const AlgebraId& a) {
  // Two-digit rank keeps B10 after B9 in check_id order.
  return std::string(1, rootdata::family_letter(a.family())) + padded(a.rank(), 2);
}

Polynomial k_sym() { return Polynomial::variable("k"); }
Polynomial n_sym() { return Polynomial::variable("n"); }

Polynomial x2_casimir_kn(const AlgebraId& a) {
  return rootdata::casimir_poly_kn(*rootdata::root_datum(a), rootdata::x2_weight(a).front(), rootdata::adjoint_weight(a));
}

template <typename F>
Polynomial fit_in_rank(Family family, int first, int count, const std::string& symbol, F f) {
  std::vector<std::pair<Rational, Polynomial>> samples;
  for (int r = first; r < first + count; ++r) samples.emplace_back(Rational(r), f(AlgebraId(family, r)));
  return interpolate(symbol, samples);
}

// ---- casimir -------------------------------------------------------------

void casimir_tasks(const VerifyOptions& o, Tasks& tasks) {
  for (const auto& a : sweep_algebras(o.scope)) {
    tasks.emplace_back("casimir.x2." + id_of(a), [a] {
      const auto d = rootdata::root_datum(a);
      const Rational four_t = 4 * vogel::vogel_params(a).t();
      std::string actual;
      for (const auto& w : rootdata::x2_weight(a)) {
        const std::string v = rootdata::casimir2(*d, w).str();
        if (actual.empty()) {
          actual = v;
        } else if (actual != v) {
          actual += " / " + v;  // summands disagree
        }
      }
      return std::vector{compare("casimir.x2." + id_of(a), a.str(), four_t.str(), actual)};
    });
    tasks.emplace_back("casimir.adjoint." + id_of(a), [a] {
      const auto d = rootdata::root_datum(a);
      return std::vector{compare("casimir.adjoint." + id_of(a), a.str(), (2 * vogel::vogel_params(a).t()).str(),
                                 rootdata::casimir2(*d, rootdata::adjoint_weight(a)).str())};
    });
  }

  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    if (!in_scope(o.scope, f)) continue;
    const std::string id = std::string("casimir.kn.") + rootdata::family_letter(f) + "_N";
    tasks.emplace_back(id, [f, id] {
      const int r0 = rootdata::min_x2_rank(f);
      const Polynomial direct = fit_in_rank(f, r0, 5, "N", x2_casimir_kn);
      const Polynomial dim = fit_in_rank(f, r0, 3, "N", [](const AlgebraId& a) { return Polynomial(a.defining_dimension()); });
      const auto line = vogel::line_of(AlgebraId(f, r0));
      const Polynomial universal =
          vogel::universal_casimir_kn(line.alpha, line.t(), k_sym(), n_sym()).substitute(line.symbol, dim);
      const std::string subject = std::string(1, rootdata::family_letter(f)) + "_N";
      if (f != Family::C) return std::vector{compare(id, subject, universal.str(), direct.str())};
      std::vector<CheckResult> out;
      out.push_back(compare(id + ".k2", subject, "5", direct.coefficient("k", 2).str()));
      for (int k = 0; k <= 1; ++k) {
        const Polynomial kk(k);
        out.push_back(compare(id + ".k" + std::to_string(k), subject, universal.substitute("k", kk).str(),
                              direct.substitute("k", kk).str()));
      }
      out.push_back(skipped(id + ".universal", subject,
                            "universal Cartan-power formula exempts C_N, whose k^2 term is 5k^2 (except for the $C_N$)"));
      return out;
    });
  }
  for (const auto& a : exceptionals()) {
    if (!in_scope(o.scope, a.family())) continue;
    const std::string id = "casimir.kn." + id_of(a);
    tasks.emplace_back(id, [a, id] {
      const auto p = vogel::vogel_params(a);
      const Polynomial universal =
          vogel::universal_casimir_kn(Polynomial(p.alpha), Polynomial(p.t()), k_sym(), n_sym());
      return std::vector{compare(id, a.str(), universal.str(), x2_casimir_kn(a).str())};
    });
  }

  // Scaled values at k X2 + n g against the Cohen-de Man closed forms, and
  // against root data wherever X2 is available.
  const std::vector<AlgebraId> scaled{AlgebraId(Family::A, 1), AlgebraId(Family::A, 2), AlgebraId(Family::G, 2),
                                      AlgebraId(Family::D, 4), AlgebraId(Family::F, 4), AlgebraId(Family::E, 6),
                                      AlgebraId(Family::E, 7), AlgebraId(Family::E, 8)};
  for (const auto& a : scaled) {
    if (!in_scope(o.scope, a.family())) continue;
    const std::string id = "casimir.scaled." + id_of(a);
    tasks.emplace_back(id, [a, id] {
      const auto p = vogel::vogel_params(a);
      const auto cdm = vogel::cohen_de_man(p.t().inverse());
      const std::pair<std::string, std::pair<int, int>> reps[] = {{"2,0", {2, 0}}, {"1,1", {1, 1}}, {"1,2", {1, 2}}};
      const Rational cdm_value[] = {cdm.h, cdm.c, cdm.g};
      std::vector<CheckResult> out;
      for (int i = 0; i < 3; ++i) {
        const auto [k, n] = reps[i].second;
        const Rational value = vogel::casimir_scaled(p, k, n);
        out.push_back(compare(id + "." + reps[i].first, a.str(), cdm_value[i].str(), value.str()));
        if (a.x2_validated()) {
          const auto d = rootdata::root_datum(a);
          const Weight w = rootdata::x2_weight(a).front().scaled(k) + rootdata::adjoint_weight(a).scaled(n);
          const Rational direct = rootdata::casimir2(*d, w) / (2 * p.t());
          out.push_back(compare(id + "." + reps[i].first + ".rootdata", a.str(), direct.str(), value.str()));
        }
      }
      return out;
    });
  }
}

// ---- vogel ---------------------------------------------------------------

void vogel_tasks(const VerifyOptions& o, Tasks& tasks) {
  for (const auto& a : table_points()) {
    if (!in_scope(o.scope, a.family())) continue;
    const std::string id = "vogel." + id_of(a);
    tasks.emplace_back(id, [a, id] {
      const auto p = vogel::vogel_params(a);
      const auto d = rootdata::root_datum(a);
      const Weight adj = rootdata::adjoint_weight(a);
      std::vector<CheckResult> out;
      out.push_back(compare(id + ".line", a.str(), "0", vogel::line_of(a).relation_value(p).str()));
      out.push_back(compare(id + ".t", a.str(), (rootdata::casimir2(*d, adj) / 2).str(), p.t().str()));
      const Rational dim_g = vogel::dim_adjoint_universal(p);
      out.push_back(compare(id + ".dim_g", a.str(), Rational(rootdata::weyl_dim(*d, adj)).str(), dim_g.str()));
      Rational s2 = 1;
      for (auto s : vogel::kSlots) s2 += vogel::dim_y2_universal(p, s);
      out.push_back(compare(id + ".dim_s2", a.str(), (dim_g * (dim_g + 1) / 2).str(), s2.str()));
      return out;
    });
  }
  if (in_scope(o.scope, Family::A)) {
    tasks.emplace_back("vogel.A02.y2_beta", [] {
      const auto p = vogel::vogel_params(AlgebraId(Family::A, 2));
      return std::vector{compare("vogel.A02.y2_beta", p.str(), "0", vogel::dim_y2_universal(p, vogel::Slot::Beta).str())};
    });
  }
}

// ---- deligne -------------------------------------------------------------

void deligne_tasks(const VerifyOptions& o, Tasks& tasks) {
  for (const auto& a : table_points()) {
    if (!in_scope(o.scope, a.family())) continue;
    const std::string id = "deligne." + id_of(a);
    tasks.emplace_back(id, [a, id] {
      const auto p = vogel::vogel_params(a);
      return std::vector{compare(id + ".s2", a.str(), "0", vogel::deligne_s2_check(p).str()),
                         compare(id + ".lambda2", a.str(), "0", vogel::deligne_lambda2_check(p).str())};
    });
  }
  tasks.emplace_back("deligne.s2.cleared", [] {
    return std::vector{compare("deligne.s2.cleared", "(alpha, beta, gamma)", "0", vogel::deligne_s2_cleared().str())};
  });
  const auto seed = o.seed;
  tasks.emplace_back("deligne.s2.random", [seed] {
    std::mt19937_64 rng(seed ^ 0x5deece66dULL);
    std::vector<CheckResult> out;
    int i = 0;
    while (i < 20) {
      auto draw = [&] { return Rational(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 6)); };
      const vogel::VogelPoint p{draw(), draw(), draw()};
      try {
        const Rational r = vogel::deligne_s2_check(p);
        out.push_back(compare("deligne.s2.random." + padded(i), p.str(), "0", r.str()));
        ++i;
      } catch (const vogel::PoleError&) {
        // resample off the pole locus
      }
    }
    return out;
  });
}

// ---- duality -------------------------------------------------------------

// Portable draw: k distinct values from 1..10, ascending.
std::vector<int> draw_corners(std::mt19937_64& rng, int k) {
  std::vector<int> pool(10);
  for (int i = 0; i < 10; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  for (int i = 0; i < k; ++i) {
    const auto j = static_cast<std::size_t>(i) + static_cast<std::size_t>(rng() % static_cast<unsigned>(10 - i));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
  }
  std::vector<int> v(pool.begin(), pool.begin() + k);
  std::sort(v.begin(), v.end());
  return v;
}

void for_each_diagram(int max_rows, int max_cols, std::vector<int>& rows, std::vector<pp::YoungDiagram>& out) {
  out.emplace_back(rows);
  if (static_cast<int>(rows.size()) == max_rows) return;
  const int bound = rows.empty() ? max_cols : rows.back();
  for (int r = 1; r <= bound; ++r) {
    rows.push_back(r);
    for_each_diagram(max_rows, max_cols, rows, out);
    rows.pop_back();
  }
}

void duality_tasks(const VerifyOptions& o, Tasks& tasks) {
  const bool so = in_scope(o.scope, Family::D);
  const bool sp = in_scope(o.scope, Family::C);
  if (!so && !sp) return;

  if (so && sp) {
    std::mt19937_64 rng(o.seed);
    std::vector<pp::ABProfile> profiles;
    for (int i = 0; i < o.profiles; ++i) {
      const int k = 1 + static_cast<int>(rng() % 4);
      auto a = draw_corners(rng, k);
      auto b = draw_corners(rng, k);
      profiles.emplace_back(std::move(a), std::move(b));
    }
    const int width = std::max(3, static_cast<int>(std::to_string(o.profiles).size()));
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      const std::string id = "duality.c2.random." + padded(static_cast<int>(i), width);
      tasks.emplace_back(id, [p = profiles[i], id] {
        return std::vector{compare(id, p.str(), "0", pp::duality_check_c2(p).str())};
      });
    }
    tasks.emplace_back("duality.c2.2kkk", [] {
      const auto [a, b] = pp::symbolic_2kkk_profile();
      return std::vector{
          compare("duality.c2.2kkk", "(2k,k,k)", "0", pp::duality_check_c2(a, b).str()),
          compare("duality.c2.2kkk.so", "(2k,k,k)", "12*k^2 + (16*n - 28)*k", pp::c2_closed(pp::PPFamily::so, a, b).str()),
          compare("duality.c2.2kkk.sp", "(2k,k,k)'", "-12*k^2 + (16*n + 28)*k",
                  pp::c2_closed(pp::PPFamily::sp, b, a).str())};
    });
    for (int h = 1; h <= 4; ++h) {
      for (int l = 1; l <= 4; ++l) {
        const std::string id = "duality.series." + std::to_string(h) + "x" + std::to_string(l);
        tasks.emplace_back(id, [h, l, id, order = o.order] {
          const auto d = pp::YoungDiagram::rectangle(h, l);
          const auto r = pp::duality_check_series(d, order);
          std::string actual;
          for (std::size_t p = 0; p < r.residuals.size(); ++p) {
            if (!r.residuals[p].is_zero()) actual += (actual.empty() ? "" : "; ") + ("C" + std::to_string(p) + ": " + r.residuals[p].str());
          }
          return std::vector{compare(id, d.str() + " through order " + std::to_string(order), "0", actual.empty() ? "0" : actual)};
        });
      }
    }
  }

  tasks.emplace_back("duality.table6", [so, sp] {
    std::vector<CheckResult> out;
    if (so) {
      const auto v = pp::c2_closed(pp::PPFamily::so, pp::ab_from_diagram(pp::YoungDiagram({2, 1, 1})));
      out.push_back(compare("duality.table6.so", "so(2n) [2,1,1]", "16*n - 16", v.str()));
      out.push_back(compare("duality.table6.so.ck", "so(2n) [2,1,1]", "8*n - 8",
                            pp::normalization_convert(pp::PPFamily::so, v, pp::Direction::MVtoCK).str()));
    }
    if (sp) {
      const auto v = pp::c2_closed(pp::PPFamily::sp, pp::ab_from_diagram(pp::YoungDiagram({3, 1})));
      out.push_back(compare("duality.table6.sp", "sp(2n) [3,1]", "16*n + 16", v.str()));
      out.push_back(compare("duality.table6.sp.ck", "sp(2n) [3,1]", "4*n + 4",
                            pp::normalization_convert(pp::PPFamily::sp, v, pp::Direction::MVtoCK).str()));
    }
    return out;
  });

  std::vector<AlgebraId> tri;
  if (so)
    for (int r : {5, 6, 7}) tri.emplace_back(Family::D, r);
  if (sp)
    for (int r : {3, 4, 5}) tri.emplace_back(Family::C, r);
  for (const auto& a : tri) {
    const std::string id = "duality.triangulation." + id_of(a);
    tasks.emplace_back(id, [a, id] {
      const auto fam = a.family() == Family::D ? pp::PPFamily::so : pp::PPFamily::sp;
      const auto d = rootdata::root_datum(a);
      std::vector<pp::YoungDiagram> diagrams;
      std::vector<int> rows;
      for_each_diagram(a.rank() - 2, 4, rows, diagrams);
      int mismatches = 0;
      std::string first;
      for (const auto& y : diagrams) {
        const Rational closed =
            pp::normalization_convert(fam, pp::c2_closed(fam, pp::ab_from_diagram(y)), pp::Direction::MVtoCK)
                .evaluate({{"n", Rational(a.rank())}});
        const Rational direct = rootdata::casimir2(*d, rootdata::weight_from_partition(a, y));
        if (closed != direct) {
          if (mismatches++ == 0) first = " (first " + y.str() + ": " + closed.str() + " vs " + direct.str() + ")";
        }
      }
      const std::string total = std::to_string(diagrams.size());
      return std::vector{compare(id, a.classical_name(), "0 mismatches in " + total,
                                 std::to_string(mismatches) + " mismatches in " + total + first)};
    });
  }
}

}  // namespace

std::vector<AlgebraId> sweep_algebras(const std::set<Family>& scope) {
  std::vector<AlgebraId> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    if (!in_scope(scope, f)) continue;
    const int r0 = rootdata::min_x2_rank(f);
    for (int r = r0; r < r0 + 5; ++r) out.emplace_back(f, r);
  }
  for (const auto& a : exceptionals())
    if (in_scope(scope, a.family())) out.push_back(a);
  return out;
}

std::vector<AlgebraId> table_points() {
  return {AlgebraId(Family::A, 2), AlgebraId(Family::B, 4), AlgebraId(Family::C, 3),
          AlgebraId(Family::D, 5), AlgebraId(Family::G, 2), AlgebraId(Family::F, 4),
          AlgebraId(Family::E, 6), AlgebraId(Family::E, 7), AlgebraId(Family::E, 8)};
}

Report run_verify(const VerifyOptions& options) {
  const auto& names = kSuites;
  if (std::find(std::begin(names), std::end(names), options.suite) == std::end(names)) {
    throw std::invalid_argument("unknown suite '" + options.suite + "' (all, casimir, vogel, deligne, duality)");
  }
  if (options.order < 3 || options.order > pp::kMaxSeriesDualityOrder) {
    throw std::invalid_argument("--order must lie in [3, " + std::to_string(pp::kMaxSeriesDualityOrder) + "]");
  }
  if (options.profiles < 0) throw std::invalid_argument("--profiles must be non-negative");

  Tasks tasks;
  const bool all = options.suite == "all";
  if (all || options.suite == "casimir") casimir_tasks(options, tasks);
  if (all || options.suite == "vogel") vogel_tasks(options, tasks);
  if (all || options.suite == "deligne") deligne_tasks(options, tasks);
  if (all || options.suite == "duality") duality_tasks(options, tasks);

  Report report;
  report.version = tool_version();
  report.suite = options.suite;
  report.seed = options.seed;
  report.results = run_checks(tasks, options.workers);
  return report;
}

}  // namespace unicas::harness
