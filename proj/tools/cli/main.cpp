#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "unicas/harness/suites.hpp"
#include "unicas/harness/tables.hpp"
#include "unicas/pp/duality.hpp"
#include "unicas/pp/spectrum.hpp"
#include "unicas/rootdata/root_datum.hpp"
#include "unicas/vogel/vogel.hpp"

using namespace unicas;
using harness::Format;
using nlohmann::ordered_json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Key/value output shared by the single-object subcommands.
struct Record {
  std::vector<std::pair<std::string, std::string>> fields;
  void add(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }

  std::string render(Format f) const {
    std::ostringstream os;
    if (f == Format::Json) {
      ordered_json j;
      for (const auto& [k, v] : fields) j[k] = v;
      os << j.dump(2) << '\n';
    } else if (f == Format::Csv) {
      os << "key,value\n";
      for (const auto& [k, v] : fields) {
        os << k << ',' << (v.find(',') == std::string::npos ? v : "\"" + v + "\"") << '\n';
      }
    } else {
      for (const auto& [k, v] : fields) os << k << ": " << v << '\n';
    }
    return os.str();
  }
};

std::pair<int, int> parse_kn(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("--kn expects k,n");
  const int k = std::stoi(text.substr(0, comma));
  const int n = std::stoi(text.substr(comma + 1));
  if (k < 0 || n < 0) throw std::invalid_argument("--kn needs non-negative k and n");
  return {k, n};
}

pp::PPFamily pp_family(const std::string& name) {
  if (name == "so") return pp::PPFamily::so;
  if (name == "sp") return pp::PPFamily::sp;
  throw std::invalid_argument("family must be so or sp, got '" + name + "'");
}

int cmd_casimir(const std::string& algebra_text, const std::string& kn, const std::string& weight_text,
                const std::string& diagram_text, Format fmt) {
  const auto a = rootdata::AlgebraId::parse(algebra_text);
  const auto d = rootdata::root_datum(a);
  std::optional<rootdata::Weight> w;
  std::string how;
  if (!kn.empty()) {
    const auto [k, n] = parse_kn(kn);
    w = rootdata::x2_weight(a).front().scaled(k) + rootdata::adjoint_weight(a).scaled(n);
    how = "k X2 + n g with (k, n) = (" + std::to_string(k) + ", " + std::to_string(n) + ")";
  } else if (!weight_text.empty()) {
    w = rootdata::Weight::parse(a, weight_text);
  } else {
    const auto y = pp::YoungDiagram::parse(diagram_text);
    w = rootdata::weight_from_partition(a, y);
    how = "diagram " + y.str();
  }
  const Rational ck = rootdata::casimir2(*d, *w);
  const auto p = vogel::vogel_params(a);

  Record r;
  r.add("algebra", a.classical_name());
  if (!how.empty()) r.add("representation", how);
  r.add("weight", w->str());
  r.add("Cartan-Killing", ck.str());
  if (a.family() == rootdata::Family::B || a.family() == rootdata::Family::D) {
    r.add("MV", pp::normalization_convert(pp::PPFamily::so, ck, pp::Direction::CKtoMV).str());
  } else if (a.family() == rootdata::Family::C) {
    r.add("MV", pp::normalization_convert(pp::PPFamily::sp, ck, pp::Direction::CKtoMV).str());
  }
  r.add("Cohen-de Man", (ck / (2 * p.t())).str());
  r.add("dimension", rootdata::weyl_dim(*d, *w).get_str());
  std::cout << r.render(fmt);
  return 0;
}

int cmd_dims(const std::string& algebra_text, Format fmt) {
  const auto a = rootdata::AlgebraId::parse(algebra_text);
  const auto p = vogel::vogel_params(a);
  const auto d = rootdata::root_datum(a);
  Record r;
  r.add("algebra", a.str());
  r.add("point", p.str());
  r.add("t", p.t().str());
  const Rational dim_g = vogel::dim_adjoint_universal(p);
  r.add("dim g (universal)", dim_g.str());
  r.add("dim g (Weyl)", rootdata::weyl_dim(*d, rootdata::adjoint_weight(a)).get_str());
  Rational s2 = 1;
  for (auto s : vogel::kSlots) {
    const std::string key = "dim Y2(" + vogel::slot_name(s) + ")";
    try {
      const Rational v = vogel::dim_y2_universal(p, s);
      s2 += v;
      r.add(key, v.str());
    } catch (const vogel::PoleError& e) {
      r.add(key, std::string("pole (") + e.factor() + ")");
    }
    r.add("C2 Y2(" + vogel::slot_name(s) + ")", vogel::casimir_y2(p, s).str());
  }
  r.add("1 + sum dim Y2", s2.str());
  r.add("dim S2 g", (dim_g * (dim_g + 1) / 2).str());
  std::cout << r.render(fmt);
  return 0;
}

int cmd_duality(const std::string& diagram_text, const std::string& profile_text, int order, bool experimental,
                Format fmt) {
  const pp::ABProfile profile =
      profile_text.empty() ? pp::ab_from_diagram(pp::YoungDiagram::parse(diagram_text)) : pp::ABProfile::parse(profile_text);
  const auto y = pp::diagram_from_ab(profile);
  Record r;
  r.add("diagram", y.str());
  r.add("profile", profile.str());
  r.add("so C2(A,B)", pp::c2_closed(pp::PPFamily::so, profile).str());
  r.add("sp C2(B,A)", pp::c2_closed(pp::PPFamily::sp, profile.swapped()).str());
  const Polynomial residual = pp::duality_check_c2(profile);
  r.add("closed-form C2 residual", residual.str());
  bool ok = residual.is_zero();
  if (order > 0) {
    if (!y.is_rectangular() && !experimental) {
      r.add("series", "skipped: non-rectangular diagram (pass --experimental)");
    } else {
      const auto s = pp::duality_check_series(y, order, experimental);
      for (std::size_t p = 0; p < s.residuals.size(); ++p) r.add("C" + std::to_string(p) + " residual", s.residuals[p].str());
      if (s.experimental) r.add("series", "experimental");
      ok = ok && s.all_zero();
    }
  }
  std::cout << r.render(fmt);
  return ok ? 0 : kExitFailure;
}

int cmd_series(const std::string& family, const std::string& diagram_text, int order, Format fmt) {
  const auto fam = pp_family(family);
  const auto y = pp::YoungDiagram::parse(diagram_text);
  const auto s = pp::pp_series(fam, pp::ab_from_diagram(y), order);
  Record r;
  r.add("family", pp::family_name(fam) + "(2n)");
  r.add("diagram", y.str());
  r.add("profile", s.profile.str());
  for (int p = 0; p <= std::min(order, s.max_calibrated_order()); ++p) r.add("C" + std::to_string(p), s.calibrated(p).str());
  r.add("C2 Cartan-Killing", pp::normalization_convert(fam, s.c2, pp::Direction::MVtoCK).str());
  std::cout << r.render(fmt);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of universal Casimir formulas for simple Lie algebras"};
  app.set_version_flag("--version", harness::tool_version());
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  auto* tables = app.add_subcommand("tables", "Render a reference table (1-6) from first principles");
  int table_id = 0;
  tables->add_option("id", table_id, "Table number")->required()->check(CLI::Range(1, harness::kTableCount));

  auto* verify = app.add_subcommand("verify", "Run the cross-check matrix");
  harness::VerifyOptions vopt;
  std::string scope;
  verify->add_option("suite", vopt.suite, "all, casimir, vogel, deligne or duality")
      ->check(CLI::IsMember({"all", "casimir", "vogel", "deligne", "duality"}))
      ->capture_default_str();
  verify->add_option("--seed", vopt.seed, "Seed for randomized checks")->capture_default_str();
  verify->add_option("--profiles", vopt.profiles, "Random (A,B) profiles for the duality suite")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify->add_option("--order", vopt.order, "Series order for duality checks")
      ->check(CLI::Range(3, pp::kMaxSeriesDualityOrder))
      ->capture_default_str();
  verify->add_option("--scope", scope, "Comma-separated families, e.g. A,B,exc");
  verify->add_option("--jobs", vopt.workers, "Worker threads (0 = all cores)")->capture_default_str();

  auto* casimir = app.add_subcommand("casimir", "Second Casimir of one highest weight");
  std::string algebra;
  std::string kn;
  std::string weight;
  std::string diagram;
  casimir->add_option("algebra", algebra, "E8, D5, so(10), sp(6), ...")->required();
  auto* kn_opt = casimir->add_option("--kn", kn, "Cartan product k X2 + n g, as k,n");
  auto* w_opt = casimir->add_option("--weight", weight, "Dynkin labels [1,0,...] or a sum like 2w1+w3");
  auto* d_opt = casimir->add_option("--diagram", diagram, "Young diagram [3,1] (B, C, D only)");
  kn_opt->excludes(w_opt)->excludes(d_opt);
  w_opt->excludes(d_opt);

  auto* dims = app.add_subcommand("dims", "Universal dimensions at an algebra's Vogel point");
  std::string dims_algebra;
  dims->add_option("algebra", dims_algebra)->required();

  auto* duality = app.add_subcommand("duality", "so(2n) / sp(-2n) duality for one diagram");
  std::string dual_diagram;
  std::string dual_profile;
  int dual_order = 0;
  bool experimental = false;
  auto* dd = duality->add_option("--diagram", dual_diagram, "Young diagram, e.g. [2,2]");
  auto* dp = duality->add_option("--profile", dual_profile, "Corner profile, e.g. A=[1,3];B=[1,2]");
  dd->excludes(dp);
  duality->add_option("--order", dual_order, "Also compare series coefficients through this order")
      ->check(CLI::Range(3, pp::kMaxSeriesDualityOrder));
  duality->add_flag("--experimental", experimental, "Allow non-rectangular diagrams in the series check");

  auto* series = app.add_subcommand("series", "Calibrated Casimir series of one diagram");
  std::string series_family;
  std::string series_diagram;
  int series_order = 4;
  series->add_option("family", series_family, "so or sp")->required()->check(CLI::IsMember({"so", "sp"}));
  series->add_option("diagram", series_diagram, "Young diagram, e.g. [2,1,1]")->required();
  series->add_option("--order", series_order, "Highest power of z")->check(CLI::Range(3, 12))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const Format fmt = harness::parse_format(format_name);
    if (*tables) {
      std::cout << harness::render_table(harness::build_table(table_id), fmt);
      return 0;
    }
    if (*verify) {
      vopt.scope = harness::parse_scope(scope);
      const auto report = harness::run_verify(vopt);
      std::cout << harness::render_report(report, fmt);
      return report.ok() ? 0 : kExitFailure;
    }
    if (*casimir) {
      if (kn.empty() && weight.empty() && diagram.empty()) {
        std::cerr << "casimir: one of --kn, --weight, --diagram is required\n";
        return kExitUsage;
      }
      return cmd_casimir(algebra, kn, weight, diagram, fmt);
    }
    if (*dims) return cmd_dims(dims_algebra, fmt);
    if (*duality) {
      if (dual_diagram.empty() && dual_profile.empty()) {
        std::cerr << "duality: one of --diagram, --profile is required\n";
        return kExitUsage;
      }
      return cmd_duality(dual_diagram, dual_profile, dual_order, experimental, fmt);
    }
    if (*series) return cmd_series(series_family, series_diagram, series_order, fmt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
