#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kmforms/checks.hpp"
#include "kmforms/errors.hpp"
#include "kmforms/io.hpp"
#include "kmforms/jacobi.hpp"
#include "kmforms/lattice.hpp"
#include "kmforms/lift.hpp"
#include "kmforms/superalgebra.hpp"
#include "kmforms/theta.hpp"

namespace kmforms {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
  std::string cache_dir;
  bool no_cache = false;
  std::optional<std::int64_t> trace, lambda, order, bound;
  std::string format = "json";
  std::string output;
  std::string kind;
  int example = 1;
  int max_len = 3;
  std::string check_id;
  bool list = false;
};

Truncation truncation_of(const Options& o, std::int64_t default_lambda) {
  if (o.trace && o.lambda) throw DomainError("--trace and --lambda are exclusive");
  if (o.trace) return {TruncationKind::kTrace, *o.trace};
  return {TruncationKind::kLambda, o.lambda.value_or(default_lambda)};
}

SiegelCoefficientTable cached(const Options& o, const std::string& form, const Unit& unit,
                              const Truncation& t,
                              const std::function<SiegelCoefficientTable(const Truncation&)>& f,
                              std::ostream& err) {
  if (o.no_cache) return f(t);
  const TableCache cache(o.cache_dir.empty() ? TableCache::default_dir()
                                             : std::filesystem::path(o.cache_dir));
  if (auto hit = cache.lookup(form, unit, t)) return *hit;
  SiegelCoefficientTable table = f(t);
  try {
    cache.store(table);
  } catch (const std::exception& e) {
    err << "warning: cache not written: " << e.what() << "\n";
  }
  return table;
}

void emit_text(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw ConfigurationError("cannot open " + o.output + " for writing");
  f << text;
}

void emit_table(const Options& o, const SiegelCoefficientTable& t, std::ostream& out) {
  emit_text(o, serialize(t, parse_format(o.format)), out);
}

std::string jacobi_text(const JacobiSeries& s, Format format) {
  const auto& l = s.series.layout();
  const std::string unit = "scales:" + std::to_string(l.scales[0]) + "," + std::to_string(l.scales[1]);
  std::ostringstream out;
  if (format == Format::kJson) {
    out << "{\n  \"form\": " << ordered_json(s.name).dump() << ",\n  \"unit\": \"" << unit
        << "\",\n  \"depth\": " << s.depth() << ",\n  \"weight\": \"" << to_string(s.weight)
        << "\",\n  \"index\": \"" << to_string(s.index) << "\",\n  \"coefficients\": [";
    bool first = true;
    for (const auto& t : s.series.terms()) {
      out << (first ? "\n" : ",\n") << "    [" << t.exponent[0] << "," << t.exponent[1] << ",\""
          << to_string(t.coefficient) << "\"]";
      first = false;
    }
    out << (first ? "]\n}\n" : "\n  ]\n}\n");
  } else {
    out << "# form=" << s.name << "\n# unit=" << unit << "\n# depth=" << s.depth() << "\nn,l,c\n";
    for (const auto& t : s.series.terms()) {
      out << t.exponent[0] << "," << t.exponent[1] << "," << to_string(t.coefficient) << "\n";
    }
  }
  return out.str();
}

int print_report(const Report& r, std::ostream& out) {
  out << r.name << ": " << (r.passed ? "PASS" : "FAIL") << "\n";
  for (const auto& l : r.lines) out << "  " << l << "\n";
  return r.passed ? 0 : 1;
}

int run_delta5(const Options& o, std::ostream& out, std::ostream& err) {
  const Truncation t = truncation_of(o, 8);
  emit_table(o, cached(o, "delta5", kUnitPiI, t, [](const Truncation& x) { return delta5(x); }, err), out);
  return 0;
}

int run_jacobi(const Options& o, std::ostream& out) {
  static const std::map<std::string, std::function<JacobiSeries(std::int64_t)>> kinds{
      {"phi12_1", [](std::int64_t n) { return weak_jacobi(WeakJacobiKind::kPhi12_1, n); }},
      {"phi0_1", [](std::int64_t n) { return weak_jacobi(WeakJacobiKind::kPhi0_1, n); }},
      {"phi0_2", [](std::int64_t n) { return weak_jacobi(WeakJacobiKind::kPhi0_2, n); }},
      {"e4_1", [](std::int64_t n) { return jacobi_eisenstein(4, n); }},
      {"e6_1", [](std::int64_t n) { return jacobi_eisenstein(6, n); }},
      {"psi5_half", [](std::int64_t n) { return psi_half_forms(PsiKind::kPsi5Half, n); }},
      {"psi2_half", [](std::int64_t n) { return psi_half_forms(PsiKind::kPsi2Half, n); }},
      {"theta11", [](std::int64_t n) { return theta11(n, ThetaForm::kProduct); }},
  };
  auto it = kinds.find(o.kind);
  if (it == kinds.end()) throw DomainError("unknown Jacobi kind '" + o.kind + "'");
  emit_text(o, jacobi_text(it->second(o.order.value_or(4)), parse_format(o.format)), out);
  return 0;
}

int run_lift(const Options& o, std::ostream& out, std::ostream& err) {
  const Truncation t = truncation_of(o, 8);
  if (o.example == 1) {
    const LiftSpec spec = maass_lift_spec();
    auto f = [&spec](const Truncation& x) {
      const std::int64_t order = lift_input_depth(spec, x) / 2 + 1;
      return arithmetic_lift(psi_half_forms(PsiKind::kPsi5Half, order), spec, x);
    };
    emit_table(o, cached(o, spec.form_name, spec.output_unit, t, f, err), out);
  } else {
    emit_table(o, cached(o, "F2", kUnitOrthogonal, t, [](const Truncation& x) { return f2_table(x); }, err), out);
  }
  return 0;
}

int run_product_extract(const Options& o, std::ostream& out) {
  const Report r = denominator_identity_verify(o.example, o.lambda.value_or(12));
  return print_report(r, out);
}

int run_weyl(const Options& o, std::ostream& out) {
  const auto all = weyl_enumerate(o.example, o.max_len);
  out << "count " << all.size() << "\n";
  for (const auto& w : all) {
    std::string word;
    for (int g : w.word) word += (word.empty() ? "" : ".") + std::string("s") + std::to_string(g);
    out << (word.empty() ? "1" : word) << " det=" << w.det << " [";
    for (int i = 0; i < 3; ++i) {
      out << (i ? "; " : "");
      for (int j = 0; j < 3; ++j) out << (j ? " " : "") << to_string(w.matrix[i][j]);
    }
    out << "]\n";
  }
  return 0;
}

int run_verify(const Options& o, std::ostream& out) {
  if (o.list || o.check_id.empty()) {
    for (const auto& c : all_checks()) out << c.id << "  " << c.alias << "  " << c.summary << "\n";
    return o.list ? 0 : 2;
  }
  const CheckInfo* c = find_check(o.check_id);
  if (!c) throw DomainError("unknown check '" + o.check_id + "'");
  return print_report(run_check(*c, CheckOptions{o.order, o.bound}), out);
}

int run_multiplicities(const Options& o, std::ostream& out) {
  const std::int64_t bound = o.lambda.value_or(12);
  const auto table = example_form_table(o.example, Truncation{TruncationKind::kLambda, bound});
  const SimpleMultiplicityTable m = extract_simple_multiplicities(table, o.example);
  ordered_json j;
  j["example"] = o.example;
  j["bound"] = m.bound;
  j["m"] = ordered_json::array();
  for (const auto& [a, v] : m.m) j["m"].push_back({a[0], a[1], a[2], to_string(v)});
  j["rays"] = ordered_json::array();
  for (const auto& r : m.rays) {
    ordered_json tau = ordered_json::array();
    for (const auto& t : r.tau) tau.push_back(to_string(t));
    j["rays"].push_back({{"generator", r.generator}, {"tau", tau}});
  }
  emit_text(o, j.dump(1) + "\n", out);
  return 0;
}

int run_superalgebra(const Options& o, std::ostream& out) {
  const std::int64_t bound = o.bound.value_or(12);
  int status = print_report(diagonal_sweep(4, 12), out);
  status |= print_report(correction_factor_check(1, bound, 9), out);
  status |= print_report(correction_factor_check(2, bound, 3), out);
  return status;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact coefficient tables for two Siegel modular forms and their Borcherds products",
               "kmforms"};
  app.set_version_flag("--version", library_version());
  app.require_subcommand(1);
  Options o;
  app.add_option("--cache-dir", o.cache_dir, "cache directory (default KMFORMS_CACHE)");
  app.add_flag("--no-cache", o.no_cache, "bypass the on-disk cache");

  auto add_output = [&o](CLI::App* s) {
    s->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    s->add_option("--output,-o", o.output, "write to this file instead of stdout");
  };
  auto add_example = [&o](CLI::App* s) {
    s->add_option("example", o.example, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  };

  auto* d5 = app.add_subcommand("delta5", "theta-product coefficient table");
  d5->add_option("--trace", o.trace, "keep n + m <= N")->check(CLI::NonNegativeNumber);
  d5->add_option("--lambda", o.lambda, "keep lambda <= B")->check(CLI::NonNegativeNumber);
  add_output(d5);

  auto* jc = app.add_subcommand("jacobi", "Jacobi form coefficients");
  jc->add_option("kind", o.kind, "phi12_1 phi0_1 phi0_2 e4_1 e6_1 psi5_half psi2_half theta11")->required();
  jc->add_option("--order", o.order, "q-order")->check(CLI::PositiveNumber);
  add_output(jc);

  auto* lf = app.add_subcommand("lift", "arithmetic lift table for an example");
  add_example(lf);
  lf->add_option("--trace", o.trace, "keep n + m <= N")->check(CLI::NonNegativeNumber);
  lf->add_option("--lambda", o.lambda, "keep lambda <= B")->check(CLI::NonNegativeNumber);
  add_output(lf);

  auto* pe = app.add_subcommand("product-extract", "product exponents against the weak Jacobi form");
  add_example(pe);
  pe->add_option("--lambda", o.lambda, "lambda bound (default 12)")->check(CLI::NonNegativeNumber);

  auto* wy = app.add_subcommand("weyl", "enumerate Weyl group elements");
  add_example(wy);
  wy->add_option("--max-len", o.max_len, "maximal word length")->check(CLI::NonNegativeNumber);

  auto* vf = app.add_subcommand("verify", "run a named acceptance check");
  vf->add_option("check-id", o.check_id, "A1..A13 or alias");
  vf->add_flag("--list", o.list, "list the checks");
  vf->add_option("--order", o.order, "q-order for series checks")->check(CLI::NonNegativeNumber);
  vf->add_option("--bound", o.bound, "trace or lambda bound")->check(CLI::NonNegativeNumber);

  auto* mu = app.add_subcommand("multiplicities", "m(a) and tau along isotropic rays");
  add_example(mu);
  mu->add_option("--lambda", o.lambda, "lambda bound (default 12)")->check(CLI::NonNegativeNumber);
  add_output(mu);

  auto* sa = app.add_subcommand("superalgebra-check", "epsilon enumeration checks");
  sa->add_option("--bound", o.bound, "lambda bound (default 12)")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion& e) {
    out << library_version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*d5) return run_delta5(o, out, err);
    if (*jc) return run_jacobi(o, out);
    if (*lf) return run_lift(o, out, err);
    if (*pe) return run_product_extract(o, out);
    if (*wy) return run_weyl(o, out);
    if (*vf) return run_verify(o, out);
    if (*mu) return run_multiplicities(o, out);
    if (*sa) return run_superalgebra(o, out);
  } catch (const IdentityViolation& e) {
    err << "identity violation: " << e.what() << "\n";
    return 1;
  } catch (const CertificationFailure& e) {
    err << "certification failure: " << e.what() << "\n";
    return 1;
  } catch (const UnexpectedGeometry& e) {
    err << "unexpected geometry: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "parse error at line " << e.line() << ", offset " << e.offset() << ": " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace kmforms
