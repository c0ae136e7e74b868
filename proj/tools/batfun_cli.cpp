#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "batfun/analysis.hpp"
#include "batfun/bateman.hpp"
#include "batfun/bounds.hpp"
#include "batfun/quadrature.hpp"

using json = nlohmann::ordered_json;
using namespace batfun;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string rat(const Rational& q) { return q.get_str(); }

std::string dec(const Rational& q, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << q.get_d();
  return os.str();
}

json enc_json(const Enclosure& e) {
  return json{{"lo", rat(e.lo)}, {"hi", rat(e.hi)}, {"mid", e.mid_double()}};
}

struct Output {
  std::string path;
  std::ostream& stream() {
    if (path.empty()) return std::cout;
    if (!file.is_open()) {
      file.open(path);
      if (!file) throw CLI::ValidationError("--out", "cannot open " + path);
    }
    return file;
  }
  std::ofstream file;
};

Rational parse_rational(const std::string& s) {
  try {
    return rational_from_string(s);
  } catch (const std::exception&) {
    throw CLI::ValidationError("rational", "cannot parse '" + s + "'");
  }
}

// ---------------------------------------------------------------- eval

int cmd_eval(int n, const std::string& ts, std::optional<long> alpha, int prec,
             const std::string& format, Output& out, int digits, bool intervals) {
  Rational t = parse_rational(ts);
  BatemanTable table;
  json rec;
  rec["n"] = n;
  rec["t"] = rat(t);
  rec["F"] = enc_json(table.fn(n).eval_enclosed(t, prec));
  if (n >= 1) {
    rec["Fprime"] = enc_json(table.fn_derivative(n).eval_enclosed(t, prec));
    rec["H"] = enc_json(table.h_fn(n).eval_enclosed(t, prec));
  }
  if (alpha) {
    rec["alpha"] = *alpha;
    rec["Falpha"] = enc_json(falpha(n, *alpha).eval_enclosed(t, prec));
  }
  auto& os = out.stream();
  if (format == "json") {
    os << rec.dump(2) << "\n";
  } else if (intervals) {
    os << "quantity,lo,hi\n";
    for (auto& [key, val] : rec.items())
      if (val.is_object())
        os << key << "," << val["lo"].get<std::string>() << ","
           << val["hi"].get<std::string>() << "\n";
  } else {
    os << "quantity,value\n";
    for (auto& [key, val] : rec.items())
      if (val.is_object())
        os << key << ","
           << dec(Rational(val["mid"].get<double>()), digits) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- poly

int cmd_poly(int n, const std::string& format, Output& out) {
  BatemanTable table;
  const RatPoly& p = table.poly(n);
  auto& os = out.stream();
  if (format == "json") {
    json rec;
    rec["n"] = n;
    json coeffs = json::array();
    for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(rat(p.coeff(k)));
    rec["coeffs"] = coeffs;
    os << rec.dump(2) << "\n";
  } else {
    os << "k,coeff\n";
    for (int k = 0; k <= p.degree(); ++k) os << k << "," << rat(p.coeff(k)) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- zeros

int cmd_zeros(int n_min, int n_max, const std::string& ws,
              const std::string& format, Output& out, int digits,
              bool intervals) {
  Rational width = parse_rational(ws);
  BatemanTable table;
  auto& os = out.stream();
  json list = json::array();
  for (int n = n_min; n <= n_max; ++n) {
    ZeroSet zs = zero_set(table, n, width);
    ExtremaReport ex = extrema(table, n, width);
    json rec;
    rec["n"] = n;
    json zeros = json::array();
    for (const auto& z : zs.zeros) zeros.push_back(enc_json(z));
    rec["zeros"] = zeros;
    rec["T_n"] = enc_json(zs.t_last);
    json crits = json::array();
    for (const auto& c : ex.critical_points) crits.push_back(enc_json(c));
    rec["critical_points"] = crits;
    rec["T_n_star"] = enc_json(ex.t_star);
    rec["max_abs"] = enc_json(ex.max_abs);
    list.push_back(std::move(rec));
  }
  if (format == "json") {
    os << list.dump(2) << "\n";
  } else {
    os << (intervals ? "n,kind,index,lo,hi\n" : "n,kind,index,value\n");
    for (const auto& rec : list) {
      auto row = [&](const char* kind, int idx, const json& e) {
        os << rec["n"].get<int>() << "," << kind << "," << idx << ",";
        if (intervals)
          os << e["lo"].get<std::string>() << "," << e["hi"].get<std::string>();
        else
          os << dec(Rational(e["mid"].get<double>()), digits);
        os << "\n";
      };
      int i = 0;
      for (const auto& z : rec["zeros"]) row("zero", i++, z);
      row("T_n", 0, rec["T_n"]);
      i = 0;
      for (const auto& c : rec["critical_points"]) row("critical", i++, c);
      row("T_n_star", 0, rec["T_n_star"]);
      row("max_abs", 0, rec["max_abs"]);
    }
  }
  return 0;
}

// ---------------------------------------------------------------- check

int cmd_check(int n_min, int n_max, std::vector<std::string> suites,
              std::vector<std::string> ids, int grid, Output& out) {
  if (suites.empty()) suites = {"identities", "integrals", "zero-bounds", "bounds"};
  if (ids.empty()) ids = bound_catalog_ids();
  BatemanTable table;
  bool all_pass = true;
  json report = json::array();

  for (const std::string& suite : suites) {
    if (suite == "identities") {
      for (int n = std::max(1, n_min); n <= n_max; ++n)
        for (long alpha : {-1L, 0L, 1L, 2L})
          for (const auto& r : identity_suite(table, n, alpha)) {
            all_pass = all_pass && r.pass;
            if (!r.pass || !r.detail.empty())
              report.push_back(json{{"suite", "identities"},
                                    {"id", r.id},
                                    {"n", r.n},
                                    {"alpha", r.alpha},
                                    {"pass", r.pass},
                                    {"detail", r.detail}});
          }
      report.push_back(json{{"suite", "identities"}, {"pass", all_pass}});
    } else if (suite == "integrals") {
      bool ok = true;
      for (int n = std::max(1, n_min); n <= n_max; ++n) {
        auto rec = exact_integrals(table, n, n + 2);
        ok = ok && rec.norm == 1 && sgn(rec.cross) == 0 &&
             rec.weighted == make_rational(2, n) &&
             rec.laplace_at_1 == rec.laplace_closed_at_1 &&
             abs(inner_product(table, n, n + 1)) == make_rational(1, 2);
      }
      all_pass = all_pass && ok;
      report.push_back(json{{"suite", "integrals"}, {"pass", ok}});
    } else if (suite == "zero-bounds") {
      for (int n = std::max(1, n_min); n <= n_max; ++n) {
        ZeroBoundReport r = zero_bound_checks(table, n, /*with_extrema=*/n <= 30);
        all_pass = all_pass && r.all_pass();
        json checks = json::array();
        for (const auto& c : r.checks)
          checks.push_back(json{{"id", c.id},
                                {"applicable", c.applicable},
                                {"pass", c.pass},
                                {"detail", c.detail}});
        report.push_back(
            json{{"suite", "zero-bounds"}, {"n", n}, {"checks", checks}});
      }
    } else if (suite == "bounds") {
      for (const std::string& id : ids) {
        SampleMode mode =
            id == "B39" ? SampleMode::CriticalPoints : SampleMode::Grid;
        int lo = std::max(n_min, id == "B44" ? 33 : (id == "B16" || id == "B17") ? 3 : 1);
        if (lo > n_max) continue;
        BoundReport r = verify_bound(table, id, lo, n_max, mode, grid);
        all_pass = all_pass && r.pass();
        json rec{{"suite", "bounds"},
                 {"id", id},
                 {"n_lo", r.n_lo},
                 {"n_hi", r.n_hi},
                 {"sampling", r.sampling},
                 {"samples", r.samples},
                 {"pass", r.pass()}};
        if (r.margin_set) rec["worst_margin"] = enc_json(r.worst_margin);
        json viols = json::array();
        for (const auto& v : r.violations)
          viols.push_back(json{
              {"n", v.n}, {"t", rat(v.t)}, {"lhs", v.lhs}, {"rhs", v.rhs}});
        rec["violations"] = viols;
        report.push_back(std::move(rec));
      }
    } else {
      throw CLI::ValidationError("--suite", "unknown suite " + suite);
    }
  }
  out.stream() << report.dump(2) << "\n";
  if (!all_pass) std::cerr << "check: verification failures (see report)\n";
  return all_pass ? 0 : kExitFail;
}

// ---------------------------------------------------------------- scan

json scan_json(const ScanRecord& r) {
  return json{{"n", r.n},          {"t_star", enc_json(r.t_star)},
              {"max_abs", enc_json(r.max_abs)}, {"margin", enc_json(r.margin)},
              {"method", r.method}, {"pass", r.pass}};
}

int cmd_scan(int max_n, bool fast_path, const std::string& out_path) {
  int start = 1;
  if (!out_path.empty()) {
    std::ifstream in(out_path);
    std::string line;
    while (std::getline(in, line)) {
      try {
        json rec = json::parse(line);
        if (rec.contains("n") && rec.contains("pass"))
          start = std::max(start, rec["n"].get<int>() + 1);
      } catch (const json::exception&) {
        // Partial trailing line from an interrupted run; rewritten below.
      }
    }
  }
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::app);
    if (!file) {
      std::cerr << "scan: cannot open " << out_path << "\n";
      return kExitUsage;
    }
  }
  std::ostream& os = out_path.empty() ? std::cout : file;

  BatemanTable table;
  table.extend(std::min(max_n, start + 32));
  bool all_pass = true;
  for (int n = start; n <= max_n; ++n) {
    ScanRecord rec = krzyz_scan_one(table, n, fast_path);
    all_pass = all_pass && rec.pass;
    os << scan_json(rec).dump() << "\n";
    os.flush();
    if (!rec.pass)
      std::cerr << "scan: verification failed at n = " << n
                << " max_abs = " << rec.max_abs.to_string() << "\n";
  }
  return all_pass ? 0 : kExitFail;
}

// ---------------------------------------------------------------- thresholds

int cmd_thresholds(Output& out) {
  ThresholdReport rep = solve_thresholds();
  json rec;
  rec["n0"] = enc_json(rep.n0);
  rec["E_crossing"] = json::array({rep.e_crossing.first, rep.e_crossing.second});
  out.stream() << rec.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------- figure

double mid_at(const ExpPoly& f, const Rational& t, int prec = 96) {
  return f.eval_enclosed(t, prec).mid_double();
}

int cmd_figure(int id, int samples, Output& out, int digits) {
  BatemanTable table;
  auto& os = out.stream();
  os.precision(digits);
  auto emit = [&](double v) { os << "," << v; };

  if (id == 1) {
    os << "t,F1,F2,F3,F4,F5\n";
    for (int j = 0; j <= samples; ++j) {
      Rational t = make_rational(12 * j, samples);
      os << dec(t, digits);
      for (int n = 1; n <= 5; ++n) emit(mid_at(table.fn(n), t));
      os << "\n";
    }
  } else if (id == 2) {
    // The weak bound sqrt(1-e^{-2t}) against sqrt(4t/(2n-t)) for n = 1..5.
    os << "t,b6,b26_n1,b26_n2,b26_n3,b26_n4,b26_n5\n";
    for (int j = 1; j <= samples; ++j) {
      Rational t = make_rational(12 * j, samples);
      double td = t.get_d();
      Enclosure ex = enclose_exp_neg(2 * t, 96);
      os << dec(t, digits) << "," << std::sqrt(1.0 - ex.mid_double());
      for (int n = 1; n <= 5; ++n) {
        if (t < 2 * n) emit(std::sqrt(4.0 * td / (2.0 * n - td)));
        else os << ",";
      }
      os << "\n";
    }
  } else if (id == 3) {
    // H-bound curves: 2/t, sqrt(2t), sqrt(4t/(2-t)) on (0,2), 1/sqrt(t(t-2)).
    os << "t,two_over_t,sqrt_2t,sqrt_4t_over_2mt,inv_sqrt_ttm2\n";
    for (int j = 1; j <= samples; ++j) {
      Rational t = make_rational(8 * j, samples);
      double td = t.get_d();
      os << dec(t, digits);
      emit(2.0 / td);
      emit(std::sqrt(2.0 * td));
      if (td < 2) emit(std::sqrt(4.0 * td / (2.0 - td)));
      else os << ",";
      if (td > 2) emit(1.0 / std::sqrt(td * (td - 2.0)));
      else os << ",";
      os << "\n";
    }
  } else if (id == 4 || id == 5) {
    os << "t";
    for (int n = 1; n <= 20; ++n) os << ",H" << n;
    os << "\n";
    Rational lo = id == 4 ? Rational(0) : make_rational(3, 2);
    Rational hi = id == 4 ? Rational(3) : Rational(2);
    for (int j = 0; j <= samples; ++j) {
      Rational t = lo + (hi - lo) * make_rational(j, samples);
      os << dec(t, digits);
      for (int n = 1; n <= 20; ++n) emit(mid_at(table.h_fn(n), t));
      os << "\n";
    }
  } else {
    throw CLI::ValidationError("--id", "figure id must be 1..5");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Bateman-function toolkit: evaluation, zero/extremum "
               "localization, inequality verification, and the 2/e scan"};
  app.require_subcommand(1);

  // Shared option storage.
  int n = 1, n_min = 1, n_max = 1, prec = 128, digits = 12, grid = 256;
  int fig_id = 1, samples = 512, max_n = 10;
  std::string t_str = "1", width_str, format, out_path;
  std::optional<long> alpha;
  bool fast_path = true, intervals = false;
  std::vector<std::string> suites, ids;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out_path, "output file (default stdout)");
    sub->add_option("--digits", digits, "decimal digits for midpoints");
    sub->add_flag("--intervals", intervals,
                  "CSV mode: exact lo/hi columns instead of decimal midpoints");
  };

  auto* eval = app.add_subcommand("eval", "enclosures of F_n, F_n', F_n^(alpha), H_n at t");
  eval->add_option("--n", n, "index")->required()->check(CLI::NonNegativeNumber);
  eval->add_option("--t", t_str, "evaluation point (rational or decimal)")->required();
  eval->add_option("--alpha", alpha, "also evaluate F_n^(alpha)");
  eval->add_option("--prec", prec, "working precision in bits")->check(CLI::Range(8, 1 << 20));
  add_common(eval);

  auto* poly = app.add_subcommand("poly", "exact coefficients of p_n (F_n = e^-t p_n)");
  poly->add_option("--n", n, "index")->required()->check(CLI::NonNegativeNumber);
  add_common(poly);

  auto* zeros = app.add_subcommand("zeros", "zero and extremum enclosures");
  zeros->add_option("--n", n_min, "single index")->check(CLI::PositiveNumber);
  zeros->add_option("--n-max", n_max, "range end (with --n as start)");
  zeros->add_option("--width", width_str, "target enclosure width (rational)");
  add_common(zeros);

  auto* check = app.add_subcommand("check", "identity / integral / zero / bound suites");
  check->add_option("--n-min", n_min, "first index");
  check->add_option("--n-max", n_max, "last index")->required();
  check->add_option("--suite", suites, "identities|integrals|zero-bounds|bounds (repeatable)");
  check->add_option("--id", ids, "bound ids for the bounds suite (repeatable)");
  check->add_option("--grid", grid, "grid points per unit t")->check(CLI::PositiveNumber);
  add_common(check);

  auto* scan = app.add_subcommand("scan", "Krzyz-bound scan max|F_n| <= 2/e");
  scan->add_option("--max-n", max_n, "scan 1..N")->required()->check(CLI::PositiveNumber);
  scan->add_flag("--fast-path,!--no-fast-path", fast_path,
                 "certify via T_n*/n >= e/sqrt2 when possible");
  scan->add_option("--out", out_path,
                   "append-only JSONL record stream (resumes after the last "
                   "completed n)");

  auto* thresholds = app.add_subcommand("thresholds", "n0 and the E(n) = 2/e crossing");
  add_common(thresholds);

  auto* figure = app.add_subcommand("figure", "plain-data emission for figures 1-5");
  figure->add_option("--id", fig_id, "figure id 1..5")->required()->check(CLI::Range(1, 5));
  figure->add_option("--samples", samples, "grid resolution")->check(CLI::PositiveNumber);
  add_common(figure);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    Output out{out_path};
    if (format.empty()) format = *figure ? "csv" : "json";
    if (*eval) return cmd_eval(n, t_str, alpha, prec, format, out, digits, intervals);
    if (*poly) return cmd_poly(n, format, out);
    if (*zeros) {
      int hi = zeros->count("--n-max") ? n_max : n_min;
      std::string w = width_str.empty() ? "1/1073741824" : width_str;
      return cmd_zeros(n_min, hi, w, format, out, digits, intervals);
    }
    if (*check) return cmd_check(n_min, n_max, suites, ids, grid, out);
    if (*scan) return cmd_scan(max_n, fast_path, out_path);
    if (*thresholds) return cmd_thresholds(out);
    if (*figure) return cmd_figure(fig_id, samples, out, digits);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
