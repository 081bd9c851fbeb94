#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end.
 *
 * Subcommands: verify, export, feasible, classify, bruteforce, spectrum,
 * construct {c51, c52, t11, t13}. Output is TSV (CSV for spectrum) unless
 * --json is given. Exit codes: 0 accepted/complete, 1 legitimate negative
 * (not a DSRG, empty enumeration, failed condition), 2 usage error.
 *
 * run() takes an argument vector and output streams so the whole surface can
 * be driven from tests.
 */

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dsrg/catalog.hpp"
#include "dsrg/dsrg_verify.hpp"
#include "dsrg/io.hpp"
#include "dsrg/spectrum.hpp"

namespace dsrg::cli {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// "1,2,2,3" -> {1,2,2,3}; the empty string (or "{}") is the empty list.
inline std::vector<int> parse_residues(std::string text) {
  if (text.size() >= 2 && text.front() == '{' && text.back() == '}') text = text.substr(1, text.size() - 2);
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw UsageError("malformed residue '" + item + "'");
    }
    if (pos != item.size()) throw UsageError("malformed residue '" + item + "'");
    out.push_back(value);
  }
  if (!text.empty() && text.back() == ',') throw UsageError("trailing comma in residue list");
  return out;
}

/// DSRG_TOLERANCE when set, else the per-modulus default.
inline double snapping_tolerance(int n) {
  const char* env = std::getenv("DSRG_TOLERANCE");
  if (!env || !*env) return default_tolerance(n);
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (*end != '\0' || !(v > 0)) throw UsageError(std::string("invalid DSRG_TOLERANCE '") + env + "'");
  return v;
}

namespace detail {

inline std::vector<int> shifted(std::vector<int> y, int b, int n) {
  for (int& e : y) e = mod(static_cast<long long>(e) + b, n);
  return y;
}

inline std::string format_double(double v) {
  if (std::abs(v) < 5e-10) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
};

inline void print_entries(Context& c, const std::vector<ClassificationEntry>& es, bool as_json) {
  if (as_json) {
    io::json arr = io::json::array();
    for (auto& e : es) arr.push_back(io::to_json(e));
    c.out << arr.dump(2) << '\n';
    return;
  }
  c.out << io::tsv_entry_header() << '\n';
  for (auto& e : es) c.out << io::to_tsv(e) << '\n';
}

inline int cmd_verify(Context& c, int n, const std::string& xs, const std::string& ys, std::optional<int> b_shift,
                      bool as_json) {
  auto y = parse_residues(ys);
  if (b_shift) y = shifted(y, *b_shift, n);
  const auto spec = DihedrantSpec::make(n, parse_residues(xs), y);
  if (spec.degree() < 1) throw UsageError("connection set is empty");

  const auto by_matrix = verify_matrix(spec);
  const auto by_ring = verify_group_ring(spec);
  if (accepted(by_matrix) != accepted(by_ring) ||
      (accepted(by_matrix) && std::get<DsrgParams>(by_matrix) != std::get<DsrgParams>(by_ring))) {
    c.err << "internal error: matrix and group-ring verifiers disagree on " << to_string(spec) << '\n';
    return 1;
  }
  if (!accepted(by_matrix)) {
    const auto& w = std::get<NotDsrg>(by_matrix);
    c.err << to_string(spec) << " is not a DSRG: " << w.kind << " fails at (" << w.row << "," << w.col
          << "): " << w.detail << '\n';
    return 1;
  }
  const auto p = std::get<DsrgParams>(by_matrix);
  const auto spectral = verify_spectral(spec, p, snapping_tolerance(n));
  std::optional<EigenData> eig;
  if (p.genuine()) eig = eigen_data(p);
  std::optional<ClassificationEntry> cls;
  if (spec.x == spec.y && p.genuine()) cls = structure_report(n, spec.x, p);

  if (as_json) {
    io::json j{{"n", n}, {"X", spec.x}, {"Y", spec.y}, {"params", io::to_json(p)}, {"genuine", p.genuine()}};
    j["eigen"] = eig ? io::to_json(*eig) : io::json(nullptr);
    j["votes"] = io::json{{"matrix", true}, {"group_ring", true}, {"spectral", spectral.ok}};
    j["classification"] = cls ? io::to_json(*cls) : io::json(nullptr);
    c.out << j.dump(2) << '\n';
  } else {
    c.out << "n\tX\tY\tN\tk\tmu\tlambda\tt\tgenuine\td\trho\tsigma\tm_rho\tm_sigma\tspectral\n";
    c.out << n << '\t' << format_set(spec.x) << '\t' << format_set(spec.y) << '\t' << io::tsv_params(p) << '\t'
          << (p.genuine() ? "yes" : "no");
    if (eig)
      c.out << '\t' << eig->d << '\t' << eig->rho << '\t' << eig->sigma << '\t' << eig->m_rho << '\t' << eig->m_sigma;
    else
      c.out << "\t-\t-\t-\t-\t-";
    c.out << '\t' << (spectral.ok ? "ok" : "fail") << '\n';
  }
  if (!p.genuine()) {
    c.err << to_string(spec) << " is a DSRG with parameters " << to_string(p) << " but not a genuine one\n";
    return 1;
  }
  return 0;
}

inline int cmd_export(Context& c, int n, const std::string& xs, const std::string& ys, const std::string& format,
                      const std::string& output) {
  const auto spec = DihedrantSpec::make(n, parse_residues(xs), parse_residues(ys));
  std::string text;
  if (format == "dot")
    text = io::to_dot(spec);
  else if (format == "json")
    text = io::adjacency_json(spec).dump(2) + "\n";
  else
    throw UsageError("unknown export format '" + format + "' (expected dot or json)");
  if (output.empty() || output == "-") {
    c.out << text;
  } else {
    std::ofstream f(output);
    if (!f) {
      c.err << "cannot open " << output << " for writing\n";
      return 2;
    }
    f << text;
  }
  return 0;
}

inline int cmd_feasible(Context& c, int vertices, bool as_json) {
  if (vertices < 2) throw UsageError("--vertices must be at least 2");
  const auto ps = feasible_params(vertices);
  if (as_json) {
    io::json arr = io::json::array();
    for (auto& p : ps) arr.push_back(io::json{{"params", io::to_json(p)}, {"eigen", io::to_json(eigen_data(p))}});
    c.out << arr.dump(2) << '\n';
  } else {
    c.out << "N\tk\tmu\tlambda\tt\td\trho\tsigma\tm_rho\tm_sigma\n";
    for (auto& p : ps) {
      const auto e = eigen_data(p);
      c.out << io::tsv_params(p) << '\t' << e.d << '\t' << e.rho << '\t' << e.sigma << '\t' << e.m_rho << '\t'
            << e.m_sigma << '\n';
    }
  }
  return ps.empty() ? 1 : 0;
}

inline int cmd_classify(Context& c, int n, bool as_json) {
  if (n < 3) throw UsageError("--n must be at least 3");
  const auto es = classify_xx(n);
  print_entries(c, es, as_json);
  return es.empty() ? 1 : 0;
}

inline int cmd_bruteforce(Context& c, int n, bool general_y, bool as_json, unsigned threads) {
  if (general_y) {
    if (n < 3 || n > 8) throw UsageError("--n must lie in [3, 8] with --general-y");
    const auto rs = brute_force_xy(n, threads);
    if (as_json) {
      io::json arr = io::json::array();
      for (auto& r : rs) arr.push_back(io::json{{"X", r.x}, {"Y", r.y}, {"params", io::to_json(r.params)}});
      c.out << arr.dump(2) << '\n';
    } else {
      c.out << "n\tX\tY\tN\tk\tmu\tlambda\tt\n";
      for (auto& r : rs)
        c.out << n << '\t' << format_set(r.x) << '\t' << format_set(r.y) << '\t' << io::tsv_params(r.params) << '\n';
    }
    return rs.empty() ? 1 : 0;
  }
  if (n < 3 || n > 16) throw UsageError("--n must lie in [3, 16]");
  const auto rs = brute_force_xx(n, threads);
  if (as_json) {
    io::json arr = io::json::array();
    for (auto& r : rs) arr.push_back(io::json{{"X", r.x}, {"params", io::to_json(r.params)}});
    c.out << arr.dump(2) << '\n';
  } else {
    c.out << "n\tX\tN\tk\tmu\tlambda\tt\n";
    for (auto& r : rs) c.out << n << '\t' << format_set(r.x) << '\t' << io::tsv_params(r.params) << '\n';
  }
  return rs.empty() ? 1 : 0;
}

inline int cmd_spectrum(Context& c, int n, const std::string& set, bool as_json) {
  if (n < 1) throw UsageError("--n must be positive");
  const auto m = ResidueMultiset::from_elements(n, parse_residues(set));
  const auto t = fourier(m, snapping_tolerance(n));
  if (as_json) {
    io::json arr = io::json::array();
    for (int z = 0; z < n; ++z) {
      const auto s = t.snapped(z);
      arr.push_back(io::json{{"z", z},
                             {"re", std::stod(format_double(t.values[z].real()))},
                             {"im", std::stod(format_double(t.values[z].imag()))},
                             {"snapped", s ? io::json(*s) : io::json(nullptr)}});
    }
    c.out << arr.dump(2) << '\n';
    return 0;
  }
  c.out << "z,re,im,snapped\n";
  for (int z = 0; z < n; ++z) {
    const auto s = t.snapped(z);
    c.out << z << ',' << format_double(t.values[z].real()) << ',' << format_double(t.values[z].imag()) << ','
          << (s ? std::to_string(*s) : "") << '\n';
  }
  return 0;
}

inline int report_generated(Context& c, const ClassificationEntry& e, bool as_json) {
  print_entries(c, {e}, as_json);
  return 0;
}

inline int cmd_construct_family(Context& c, const std::string& which, int n, int v, const std::string& ts,
                                 bool as_json) {
  const auto t = parse_residues(ts);
  try {
    if (which == "c51") {
      const auto g = gen_c51(n, v, t);
      auto sorted_t = t;
      std::sort(sorted_t.begin(), sorted_t.end());
      return report_generated(c, {CaseTag::a, n, v, sorted_t, g.spec.x, g.params}, as_json);
    }
    const auto g = gen_c52(n, v, t);
    auto sorted_t = t;
    std::sort(sorted_t.begin(), sorted_t.end());
    return report_generated(c, {CaseTag::b, n, v, sorted_t, g.spec.x, g.params}, as_json);
  } catch (const ConstructionError& e) {
    throw UsageError(which + " precondition " + e.what());
  }
}

inline int cmd_construct_t11(Context& c, int n, const std::string& xs, const std::string& ys, int eps,
                             std::optional<int> b_shift, bool as_json) {
  if (n < 3 || n % 2 == 0) throw UsageError("t11 needs odd n >= 3");
  if (eps != 0 && eps != 1) throw UsageError("--eps must be 0 or 1");
  auto y = parse_residues(ys);
  if (b_shift) y = shifted(y, *b_shift, n);
  const auto r = check_t11(n, parse_residues(xs), y, eps);
  if (const auto* f = std::get_if<ConditionFail>(&r)) {
    c.err << "condition " << f->condition << " fails at coefficient " << f->index << '\n';
    return 1;
  }
  const auto& g = std::get<Generated>(r);
  if (as_json) {
    c.out << io::json{{"n", n}, {"X", g.spec.x}, {"Y", g.spec.y}, {"eps", eps}, {"params", io::to_json(g.params)}}
                 .dump(2)
          << '\n';
  } else {
    c.out << "n\tX\tY\teps\tN\tk\tmu\tlambda\tt\n"
          << n << '\t' << format_set(g.spec.x) << '\t' << format_set(g.spec.y) << '\t' << eps << '\t'
          << io::tsv_params(g.params) << '\n';
  }
  return 0;
}

inline int cmd_construct_t13(Context& c, int n, const std::string& xs, const std::string& ys,
                             std::optional<int> b_shift, bool as_json) {
  if (n < 4 || n % 2 != 0) throw UsageError("t13 needs even n >= 4");
  const auto x = parse_residues(xs);
  auto y = parse_residues(ys);
  if (b_shift) y = shifted(y, *b_shift, n);
  const auto r = check_t13(n, x, y);
  std::string oracle = "n/a";
  if (r.oracle) oracle = accepted(*r.oracle) ? to_string(std::get<DsrgParams>(*r.oracle)) : "not a DSRG";
  const std::string conditions = r.failure ? "fail " + r.failure->condition : "pass";
  if (as_json) {
    io::json j{{"n", n}, {"X", x}, {"Y", y}, {"conditions", conditions}, {"claimed", io::to_json(r.printed)}};
    j["oracle"] = r.oracle && accepted(*r.oracle) ? io::to_json(std::get<DsrgParams>(*r.oracle)) : io::json(nullptr);
    j["oracle_matches_claim"] = r.oracle_matches_printed;
    c.out << j.dump(2) << '\n';
  } else {
    c.out << "n\tX\tY\tconditions\tclaimed\toracle\tmatch\n"
          << n << '\t' << format_set(x) << '\t' << format_set(y) << '\t' << conditions << '\t' << to_string(r.printed)
          << '\t' << oracle << '\t' << (r.oracle_matches_printed ? "yes" : "no") << '\n';
  }
  if (r.failure) c.err << "condition " << r.failure->condition << " fails at coefficient " << r.failure->index << '\n';
  return (!r.failure && r.oracle_matches_printed) ? 0 : 1;
}

}  // namespace detail

/// Entry point shared by the executable and the tests. args[0] is the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Directed strongly regular dihedrants: verify, construct, classify"};
  app.require_subcommand(1);
  detail::Context ctx{out, err};

  int n = 0, v = 0, eps = 0, vertices = 0, b_shift_value = 0;
  unsigned threads = 1;
  bool as_json = false, general_y = false;
  std::string xs, ys, set, format = "dot", output, ts;

  auto* verify = app.add_subcommand("verify", "check whether Dih(n,X,Y) is a DSRG");
  verify->add_option("--n", n, "order of the rotation subgroup")->required();
  verify->add_option("--x", xs, "rotation exponents, comma separated");
  verify->add_option("--y", ys, "reflection exponents, comma separated");
  auto* verify_b = verify->add_option("--b-shift", b_shift_value, "replace Y by b + Y");
  verify->add_flag("--json", as_json);

  auto* exp = app.add_subcommand("export", "write Dih(n,X,Y) as DOT or JSON");
  exp->add_option("--n", n)->required();
  exp->add_option("--x", xs);
  exp->add_option("--y", ys);
  exp->add_option("--format", format, "dot or json");
  exp->add_option("--output", output, "file to write (default stdout)");

  auto* feas = app.add_subcommand("feasible", "list feasible genuine DSRG parameters");
  feas->add_option("--vertices", vertices)->required();
  feas->add_flag("--json", as_json);

  auto* cls = app.add_subcommand("classify", "all directed strongly regular Dih(n,X,X)");
  cls->add_option("--n", n)->required();
  cls->add_option("--threads", threads);
  cls->add_flag("--json", as_json);

  auto* brute = app.add_subcommand("bruteforce", "exhaustive search with the matrix oracle");
  brute->add_option("--n", n)->required();
  brute->add_flag("--general-y", general_y, "search all (X, Y) instead of Y = X");
  brute->add_option("--threads", threads);
  brute->add_flag("--json", as_json);

  auto* spec = app.add_subcommand("spectrum", "Fourier transform of a residue multiset");
  spec->add_option("--n", n)->required();
  spec->add_option("--set", set, "residues with repetition, e.g. 1,2,2,3");
  spec->add_flag("--json", as_json);

  auto* cons = app.add_subcommand("construct", "build or check a known family member");
  cons->require_subcommand(1);
  auto* c51 = cons->add_subcommand("c51", "X = T + vZ_n, v odd");
  auto* c52 = cons->add_subcommand("c52", "X = T' + 2vZ_n");
  for (auto* s : {c51, c52}) {
    s->add_option("--n", n)->required();
    s->add_option("--v", v)->required();
    s->add_option("--t", ts)->required();
    s->add_flag("--json", as_json);
  }
  auto* t11 = cons->add_subcommand("t11", "odd n: X + X^-1 = C_n - e, Y Y^-1 - X X^-1 = eps C_n");
  auto* t13 = cons->add_subcommand("t13", "even n: X + X^-1 = C_n - e - c, Y in {X, X^-1}, Xc = X^-1");
  CLI::Option* t_b[2];
  int idx = 0;
  for (auto* s : {t11, t13}) {
    s->add_option("--n", n)->required();
    s->add_option("--x", xs);
    s->add_option("--y", ys);
    t_b[idx++] = s->add_option("--b-shift", b_shift_value, "replace Y by b + Y");
    s->add_flag("--json", as_json);
  }
  t11->add_option("--eps", eps)->required();

  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*verify)
      return detail::cmd_verify(ctx, n, xs, ys, verify_b->count() ? std::optional<int>(b_shift_value) : std::nullopt,
                                as_json);
    if (*exp) return detail::cmd_export(ctx, n, xs, ys, format, output);
    if (*feas) return detail::cmd_feasible(ctx, vertices, as_json);
    if (*cls) return detail::cmd_classify(ctx, n, as_json);
    if (*brute) return detail::cmd_bruteforce(ctx, n, general_y, as_json, threads);
    if (*spec) return detail::cmd_spectrum(ctx, n, set, as_json);
    if (*c51) return detail::cmd_construct_family(ctx, "c51", n, v, ts, as_json);
    if (*c52) return detail::cmd_construct_family(ctx, "c52", n, v, ts, as_json);
    if (*t11)
      return detail::cmd_construct_t11(ctx, n, xs, ys, eps,
                                       t_b[0]->count() ? std::optional<int>(b_shift_value) : std::nullopt, as_json);
    if (*t13)
      return detail::cmd_construct_t13(ctx, n, xs, ys, t_b[1]->count() ? std::optional<int>(b_shift_value) : std::nullopt,
                                       as_json);
  } catch (const std::invalid_argument& e) {  // UsageError, ConstructionError and domain errors
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace dsrg::cli
