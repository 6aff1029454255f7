// hilb2_main.cpp -- command line front end for the hilb2 library.
//
// Subcommands: hilbert, ideal, betti (expected|validate|show), bwb
// (gr|quadric), gn, degrees, mukai, selftest.  Output formats: text (default),
// json, csv.  Exit codes: 0 success, 2 invalid input, 3 mathematical
// inconsistency (failed validation or selftest).
//
// Part of hilb2.  SPDX-License-Identifier: MIT
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilb2/betti.hpp"
#include "hilb2/bott.hpp"
#include "hilb2/errors.hpp"
#include "hilb2/gn_complex.hpp"
#include "hilb2/hilbert_series.hpp"
#include "hilb2/intersection.hpp"
#include "hilb2/mukai.hpp"
#include "hilb2/selftest.hpp"

namespace {

using hilb2::Int;
using json = nlohmann::json;

long square_to_d(long square) {
  if (square < 2 || square % 2 != 0) {
    throw hilb2::InvalidInput("--square must be a positive even integer");
  }
  return square / 2;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

/// Key/value rows rendered as aligned text, a json object, or csv.  Values
/// are kept as strings; `json_raw` keys carry pre-rendered json.
struct Report {
  std::vector<std::pair<std::string, std::string>> rows;
  std::vector<std::pair<std::string, json>> json_rows;

  void put(const std::string& key, const std::string& value) {
    rows.emplace_back(key, value);
    json_rows.emplace_back(key, value);
  }
  void put(const std::string& key, long value) {
    rows.emplace_back(key, std::to_string(value));
    json_rows.emplace_back(key, value);
  }
  void put(const std::string& key, const Int& value) {
    rows.emplace_back(key, value.str());
    json_rows.emplace_back(key, value.str());
  }

  std::string render(const std::string& fmt) const {
    std::ostringstream os;
    if (fmt == "json") {
      json j = json::object();
      for (const auto& [k, v] : json_rows) j[k] = v;
      os << j.dump() << "\n";
    } else if (fmt == "csv") {
      os << "key,value\n";
      for (const auto& [k, v] : rows) os << k << "," << csv_quote(v) << "\n";
    } else {
      for (const auto& [k, v] : rows) os << k << " = " << v << "\n";
    }
    return os.str();
  }
};

void put_cohomology(Report& rep, const std::map<int, Int>& h) {
  for (const auto& [i, v] : h) rep.put("h" + std::to_string(i), v);
}

// ---------------------------------------------------------------------------
// Subcommand runners (each prints to stdout and returns the exit code).

int run_hilbert(long square, long max_degree, const std::string& fmt) {
  const long d = square_to_d(square);
  if (max_degree < 0 || max_degree > 40) {
    throw hilb2::InvalidInput("--max-degree must lie in [0, 40]");
  }
  Report rep;
  rep.put("square", square);
  rep.put("n", hilb2::hilbert::embedding_dimension(d));
  for (long e = 0; e <= max_degree; ++e) {
    rep.put("h0(" + std::to_string(e) + ")", hilb2::hilbert::h0_power(d, e));
  }
  rep.put("degree", hilb2::hilbert::degree_from_hilbert(d));
  std::cout << rep.render(fmt);
  return 0;
}

int run_ideal(long square, long degree, const std::string& fmt) {
  const long d = square_to_d(square);
  if (degree < 0) throw hilb2::InvalidInput("--degree must be nonnegative");
  Report rep;
  rep.put("square", square);
  rep.put("n", hilb2::hilbert::embedding_dimension(d));
  rep.put("degree", degree);
  rep.put("ideal_dim", hilb2::hilbert::ideal_dimension(d, degree));
  std::cout << rep.render(fmt);
  return 0;
}

hilb2::betti::TableFormat table_format(const std::string& fmt) {
  if (fmt == "json") return hilb2::betti::TableFormat::Json;
  if (fmt == "csv") return hilb2::betti::TableFormat::Csv;
  return hilb2::betti::TableFormat::Text;
}

int run_betti_expected(long square, const std::string& fmt) {
  const long d = square_to_d(square);
  std::cout << hilb2::betti::render_table(hilb2::betti::expected_betti(d),
                                          table_format(fmt));
  return 0;
}

int run_betti_show(const std::string& fixture, const std::string& fmt) {
  const auto f = hilb2::betti::fixture_from_name(fixture);
  std::cout << hilb2::betti::render_table(hilb2::betti::reference_table(f),
                                          table_format(fmt));
  return 0;
}

int run_betti_validate(const std::string& fixture, const std::string& file,
                       long square, const std::string& fmt) {
  hilb2::betti::BettiTable table;
  long sq = square;
  std::string source;
  if (!fixture.empty() && file.empty()) {
    const auto f = hilb2::betti::fixture_from_name(fixture);
    table = hilb2::betti::reference_table(f);
    sq = hilb2::betti::fixture_square(f);
    source = fixture;
  } else if (fixture.empty() && !file.empty()) {
    std::ifstream in(file);
    if (!in) throw hilb2::InvalidInput("cannot open table file: " + file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    table = hilb2::betti::table_from_json(buffer.str());
    if (sq == 0) {
      throw hilb2::InvalidInput("--square is required with --file");
    }
    source = file;
  } else {
    throw hilb2::InvalidInput("pass exactly one of --fixture and --file");
  }
  const long d = square_to_d(sq);
  const auto report = hilb2::betti::validate_table(table, d);
  Report rep;
  rep.put("table", source);
  rep.put("square", sq);
  rep.put("antidiagonals_checked", report.antidiagonals_checked);
  rep.put("issues", static_cast<long>(report.issues.size()));
  for (std::size_t idx = 0; idx < report.issues.size(); ++idx) {
    const auto& issue = report.issues[idx];
    rep.put("issue" + std::to_string(idx),
            issue.check + " at (" + std::to_string(issue.i) + "," +
                std::to_string(issue.j) + "): " + issue.detail);
  }
  rep.put("validation", std::string(report.pass ? "pass" : "fail"));
  std::cout << rep.render(fmt);
  return report.pass ? 0 : 3;
}

int run_bwb_gr(int k, int n, const std::vector<long>& quot,
               const std::vector<long>& sub, long twist,
               const std::string& fmt) {
  const auto ambient = hilb2::bott::Ambient::gr(k, n);
  hilb2::bott::Summand s;
  s.descriptor = hilb2::bott::GrPattern{quot, sub};
  s.twist = twist;
  hilb2::bott::HomogBundle bundle{ambient, {s}};
  const auto coh = hilb2::bott::cohomology(bundle);
  Report rep;
  rep.put("ambient", ambient.name());
  rep.put("rank", hilb2::bott::bundle_rank(bundle));
  put_cohomology(rep, coh.h);
  rep.put("chi", hilb2::bott::euler_characteristic(bundle));
  std::cout << rep.render(fmt);
  return 0;
}

int run_bwb_quadric(int m, bool spinor, const std::vector<long>& weight,
                    long twist, const std::string& fmt) {
  const auto ambient = hilb2::bott::Ambient::quadric(m);
  hilb2::bott::HomogBundle bundle{ambient, {}};
  if (spinor) {
    if (!weight.empty()) {
      throw hilb2::InvalidInput("--spinor and --weight are exclusive");
    }
    bundle = hilb2::bott::spinor(ambient, twist);
  } else {
    std::vector<long long> twice(m + 1, 0);
    if (!weight.empty()) {
      if (static_cast<int>(weight.size()) != m + 1) {
        throw hilb2::InvalidInput("--weight needs m+1 entries");
      }
      for (int i = 0; i <= m; ++i) twice[i] = 2 * weight[i];
    }
    bundle = hilb2::bott::quadric_bundle(ambient, twice, twist);
  }
  const auto coh = hilb2::bott::cohomology(bundle);
  Report rep;
  rep.put("ambient", ambient.name());
  rep.put("rank", hilb2::bott::bundle_rank(bundle));
  put_cohomology(rep, coh.h);
  rep.put("chi", hilb2::bott::euler_characteristic(bundle));
  std::cout << rep.render(fmt);
  return 0;
}

int run_gn(const std::string& case_name, long degree, const std::string& fmt) {
  const auto c = hilb2::gn::case_from_name(case_name);
  const auto data = hilb2::gn::case_data(c);
  const auto h = hilb2::gn::ideal_cohomology(c, degree);
  Report rep;
  rep.put("case", hilb2::gn::case_name(c));
  rep.put("ambient", data.ambient.name());
  rep.put("degree", degree);
  put_cohomology(rep, h);
  std::cout << rep.render(fmt);
  return 0;
}

void put_degrees(Report& rep, const hilb2::intersect::SigmaDecomposition& sd) {
  rep.put("g", sd.g);
  rep.put("sigma", sd.total);
  rep.put("y0", sd.y0);
  rep.put("y_top", sd.y_top);
  rep.put("residual", sd.residual);
}

std::string degrees_line(const hilb2::intersect::SigmaDecomposition& sd) {
  return "sigma=" + sd.total.str() + " y0=" + sd.y0.str() +
         " y_top=" + sd.y_top.str() + " residual=" + sd.residual.str();
}

std::pair<long, long> parse_sweep(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) {
    throw hilb2::InvalidInput("--sweep expects the form A..B");
  }
  long a = 0, b = 0;
  try {
    a = std::stol(text.substr(0, pos));
    b = std::stol(text.substr(pos + 2));
  } catch (const std::exception&) {
    throw hilb2::InvalidInput("--sweep expects integers in A..B");
  }
  if (a > b) throw hilb2::InvalidInput("--sweep range is empty");
  return {a, b};
}

int run_degrees(long genus, const std::string& sweep, const std::string& fmt) {
  if ((genus != 0) == (!sweep.empty())) {
    throw hilb2::InvalidInput("pass exactly one of --genus and --sweep");
  }
  if (sweep.empty()) {
    const auto sd = hilb2::intersect::sigma_decomposition(genus);
    if (fmt == "text") {
      std::cout << degrees_line(sd) << "\n";
    } else {
      Report rep;
      put_degrees(rep, sd);
      std::cout << rep.render(fmt);
    }
    return 0;
  }
  const auto [a, b] = parse_sweep(sweep);
  if (fmt == "json") {
    json arr = json::array();
    for (long g = a; g <= b; ++g) {
      const auto sd = hilb2::intersect::sigma_decomposition(g);
      json j;
      j["g"] = g;
      j["sigma"] = sd.total.str();
      j["y0"] = sd.y0.str();
      j["y_top"] = sd.y_top.str();
      j["residual"] = sd.residual.str();
      arr.push_back(j);
    }
    std::cout << arr.dump() << "\n";
  } else if (fmt == "csv") {
    std::cout << "g,sigma,y0,y_top,residual\n";
    for (long g = a; g <= b; ++g) {
      const auto sd = hilb2::intersect::sigma_decomposition(g);
      std::cout << g << "," << sd.total.str() << "," << sd.y0.str() << ","
                << sd.y_top.str() << "," << sd.residual.str() << "\n";
    }
  } else {
    for (long g = a; g <= b; ++g) {
      const auto sd = hilb2::intersect::sigma_decomposition(g);
      std::cout << "g=" << g << " " << degrees_line(sd) << "\n";
    }
  }
  return 0;
}

int run_mukai(long genus, long a, long b, bool have_class,
              const std::string& fmt) {
  Report rep;
  rep.put("g", genus);
  if (have_class) {
    const auto cls = hilb2::mukai::hilb2_class(genus, a, b);
    rep.put("class", std::to_string(a) + "*L2 - " + std::to_string(b) + "*delta");
    rep.put("square", cls.square);
    rep.put("divisibility", cls.divisibility);
  } else {
    for (const auto& e : hilb2::mukai::inequality_catalog(genus)) {
      rep.put(e.name, e.value.str() +
                          (e.satisfied ? " satisfied" : " violated"));
    }
  }
  std::cout << rep.render(fmt);
  return 0;
}

int run_selftest(const std::string& chern_file, const std::string& fmt) {
  hilb2::selftest::Options opts;
  if (!chern_file.empty()) {
    std::ifstream in(chern_file);
    if (!in) throw hilb2::InvalidInput("cannot open chern file: " + chern_file);
    std::array<Int, 3> c;
    if (!(in >> c[0] >> c[1] >> c[2])) {
      throw hilb2::InvalidInput("chern file must hold three integers c1 c2 c3");
    }
    opts.spinor_override = c;
  }
  const auto checks = hilb2::selftest::run_all(opts);
  const auto summary = hilb2::selftest::summarize(checks);
  int failed = 0;
  for (const auto& c : checks) {
    if (!c.pass) ++failed;
  }
  if (fmt == "json") {
    json arr = json::array();
    for (const auto& c : checks) {
      json j;
      j["name"] = c.name;
      j["expected"] = c.expected;
      j["got"] = c.got;
      j["pass"] = c.pass;
      arr.push_back(j);
    }
    std::cout << arr.dump() << "\n";
  } else if (fmt == "csv") {
    std::cout << "name,expected,got,pass\n";
    for (const auto& c : checks) {
      std::cout << c.name << "," << csv_quote(c.expected) << ","
                << csv_quote(c.got) << "," << (c.pass ? "true" : "false")
                << "\n";
    }
  } else {
    for (const auto& s : summary) {
      std::cout << "criterion " << s.criterion << ": "
                << (s.pass ? "PASS" : "FAIL") << "  " << s.title << " ("
                << s.checks << " checks)\n";
    }
    for (const auto& c : checks) {
      if (!c.pass) {
        std::cout << "  FAIL " << c.name << ": expected '" << c.expected
                  << "', got '" << c.got << "'\n";
      }
    }
    std::cout << "selftest: " << (failed == 0 ? "PASS" : "FAIL") << " ("
              << checks.size() << " checks, " << failed << " failed)\n";
  }
  return failed == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of Hilbert squares of K3 surfaces"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  // hilbert
  auto* cmd_hilbert =
      app.add_subcommand("hilbert", "section counts of polarization powers");
  cmd_hilbert->fallthrough();
  long h_square = 0, h_max = 6;
  cmd_hilbert->add_option("--square", h_square, "Beauville-Bogomolov square 2d")
      ->required();
  cmd_hilbert->add_option("--max-degree", h_max, "largest power listed");

  // ideal
  auto* cmd_ideal =
      app.add_subcommand("ideal", "ideal dimension of the natural embedding");
  cmd_ideal->fallthrough();
  long i_square = 0, i_degree = 0;
  cmd_ideal->add_option("--square", i_square, "Beauville-Bogomolov square 2d")
      ->required();
  cmd_ideal->add_option("--degree", i_degree, "ideal degree")->required();

  // betti expected | validate | show
  auto* cmd_betti = app.add_subcommand("betti", "graded Betti tables");
  cmd_betti->fallthrough();
  cmd_betti->require_subcommand(1);
  auto* cmd_bexp = cmd_betti->add_subcommand(
      "expected", "single-strand expected table");
  cmd_bexp->fallthrough();
  long be_square = 0;
  cmd_bexp->add_option("--square", be_square, "Beauville-Bogomolov square 2d")
      ->required();
  auto* cmd_bval =
      cmd_betti->add_subcommand("validate", "consistency-check a table");
  cmd_bval->fallthrough();
  std::string bv_fixture, bv_file;
  long bv_square = 0;
  cmd_bval->add_option("--fixture", bv_fixture, "built-in table name");
  cmd_bval->add_option("--file", bv_file, "json table file");
  cmd_bval->add_option("--square", bv_square, "square 2d (with --file)");
  auto* cmd_bshow = cmd_betti->add_subcommand("show", "print a built-in table");
  cmd_bshow->fallthrough();
  std::string bs_fixture;
  cmd_bshow->add_option("--fixture", bs_fixture, "built-in table name")
      ->required();

  // bwb gr | quadric
  auto* cmd_bwb =
      app.add_subcommand("bwb", "cohomology of homogeneous bundles");
  cmd_bwb->fallthrough();
  cmd_bwb->require_subcommand(1);
  auto* cmd_gr = cmd_bwb->add_subcommand("gr", "on a Grassmannian");
  cmd_gr->fallthrough();
  int gr_k = 2, gr_n = 6;
  std::vector<long> gr_quot, gr_sub;
  long gr_twist = 0;
  cmd_gr->add_option("--k", gr_k, "subspace dimension");
  cmd_gr->add_option("--n", gr_n, "ambient dimension");
  cmd_gr->add_option("--quot", gr_quot, "pattern on the dual quotient")
      ->delimiter(',');
  cmd_gr->add_option("--sub", gr_sub, "pattern on the dual subbundle")
      ->delimiter(',');
  cmd_gr->add_option("--twist", gr_twist, "line-bundle twist");
  auto* cmd_quadric = cmd_bwb->add_subcommand("quadric", "on an even quadric");
  cmd_quadric->fallthrough();
  int q_m = 4;
  bool q_spinor = false;
  std::vector<long> q_weight;
  long q_twist = 0;
  cmd_quadric->add_option("--m", q_m, "half dimension of Q^{2m}");
  cmd_quadric->add_flag("--spinor", q_spinor, "the even half-spinor bundle");
  cmd_quadric->add_option("--weight", q_weight, "full integral weight (m+1 entries)")
      ->delimiter(',');
  cmd_quadric->add_option("--twist", q_twist, "line-bundle twist");

  // gn
  auto* cmd_gn =
      app.add_subcommand("gn", "ideal-sheaf cohomology from the resolution");
  cmd_gn->fallthrough();
  std::string gn_case;
  long gn_degree = 0;
  cmd_gn->add_option("--case", gn_case, "genus7 or genus8")->required();
  cmd_gn->add_option("--degree", gn_degree, "twist degree d")->required();

  // degrees
  auto* cmd_degrees =
      app.add_subcommand("degrees", "quadric rank stratum degrees");
  cmd_degrees->fallthrough();
  long d_genus = 0;
  std::string d_sweep;
  cmd_degrees->add_option("--genus", d_genus, "single genus");
  cmd_degrees->add_option("--sweep", d_sweep, "genus range A..B");

  // mukai
  auto* cmd_mukai =
      app.add_subcommand("mukai", "lattice catalog and Hilbert-square classes");
  cmd_mukai->fallthrough();
  long m_genus = 0, m_a = 0, m_b = 0;
  cmd_mukai->add_option("--genus", m_genus, "genus g")->required();
  auto* opt_a = cmd_mukai->add_option("--a", m_a, "L2 coefficient");
  auto* opt_b = cmd_mukai->add_option("--b", m_b, "delta coefficient");

  // selftest
  auto* cmd_selftest =
      app.add_subcommand("selftest", "run the full acceptance battery");
  cmd_selftest->fallthrough();
  std::string st_chern_file;
  cmd_selftest->add_option("--chern-file", st_chern_file,
                           "file with spinor c1 c2 c3 to compare");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_hilbert->parsed()) return run_hilbert(h_square, h_max, format);
    if (cmd_ideal->parsed()) return run_ideal(i_square, i_degree, format);
    if (cmd_betti->parsed()) {
      if (cmd_bexp->parsed()) return run_betti_expected(be_square, format);
      if (cmd_bval->parsed()) {
        return run_betti_validate(bv_fixture, bv_file, bv_square, format);
      }
      return run_betti_show(bs_fixture, format);
    }
    if (cmd_bwb->parsed()) {
      if (cmd_gr->parsed()) {
        return run_bwb_gr(gr_k, gr_n, gr_quot, gr_sub, gr_twist, format);
      }
      return run_bwb_quadric(q_m, q_spinor, q_weight, q_twist, format);
    }
    if (cmd_gn->parsed()) return run_gn(gn_case, gn_degree, format);
    if (cmd_degrees->parsed()) return run_degrees(d_genus, d_sweep, format);
    if (cmd_mukai->parsed()) {
      const bool have_class = opt_a->count() > 0 || opt_b->count() > 0;
      if (have_class && (opt_a->count() == 0 || opt_b->count() == 0)) {
        throw hilb2::InvalidInput("--a and --b must be passed together");
      }
      return run_mukai(m_genus, m_a, m_b, have_class, format);
    }
    if (cmd_selftest->parsed()) return run_selftest(st_chern_file, format);
    throw hilb2::InvalidInput("no subcommand selected");
  } catch (const hilb2::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hilb2::MathInconsistency& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
