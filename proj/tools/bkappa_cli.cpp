#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bkappa/coherent.hpp"
#include "bkappa/fock.hpp"
#include "bkappa/ordering.hpp"
#include "bkappa/serialize.hpp"
#include "bkappa/spectral.hpp"
#include "bkappa/verify.hpp"

using namespace bkappa;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Text };

struct Options {
  std::string format;
  bool json = false;
  std::string output;
  bool verbose = false;
  bool parallel = false;
};

struct Result {
  json report;
  std::string text;
  std::string csv;
  bool passed = true;
};

Format resolve_format(const Options& opt, Format fallback) {
  if (opt.json) return Format::Json;
  if (opt.format.empty()) return fallback;
  if (opt.format == "json") return Format::Json;
  if (opt.format == "csv") return Format::Csv;
  return Format::Text;
}

Rational parse_exact_kappa(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError("kappa must be an exact rational such as 1/3 (got '" + text + "')");
  }
}

Rational parse_any_kappa(const std::string& text) {
  try {
    return Rational::parse_decimal(text);
  } catch (const std::exception&) {
    throw UsageError("cannot parse kappa '" + text + "'");
  }
}

void require(bool condition, const std::string& message) {
  if (!condition) throw UsageError(message);
}

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return {Rational::parse_decimal(text).to_double(), 0.0};
    return {Rational::parse_decimal(text.substr(0, comma)).to_double(),
            Rational::parse_decimal(text.substr(comma + 1)).to_double()};
  } catch (const std::exception&) {
    throw UsageError("z must be 're,im' (got '" + text + "')");
  }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string number(double v) { return json(round15(v)).dump(); }

Result checks_result(const std::string& label, const std::vector<CheckResult>& checks) {
  Result r;
  json list = json::array();
  std::ostringstream text, csv;
  csv << "suite,name,passed\n";
  for (const auto& c : checks) {
    json j;
    j["suite"] = c.suite;
    j["name"] = c.name;
    j["passed"] = c.passed;
    if (!c.detail.empty()) j["detail"] = c.detail;
    list.push_back(std::move(j));
    r.passed = r.passed && c.passed;
    text << (c.passed ? "[PASS] " : "[FAIL] ") << c.suite << ": " << c.name << '\n';
    csv << c.suite << ",\"" << c.name << "\"," << (c.passed ? "true" : "false") << '\n';
  }
  r.report["suite"] = label;
  r.report["passed"] = r.passed;
  r.report["checks"] = std::move(list);
  text << (r.passed ? "all checks passed" : "some checks FAILED") << '\n';
  r.text = text.str();
  r.csv = csv.str();
  return r;
}

Result run_stirling(long order, const std::string& kappa_text) {
  require(order >= 1, "--r must be >= 1");
  std::optional<Rational> kappa;
  if (!kappa_text.empty()) kappa = parse_exact_kappa(kappa_text);
  const StirlingTable table = stirling(order);
  const WickReport wick = wick_verify(table, std::max<long>(40, order));
  const StirlingTable shown = kappa ? table.specialize_kappa(*kappa) : table;
  Result r;
  r.report = to_json(shown);
  if (kappa) r.report["kappa"] = kappa->str();
  r.report["wick"] = to_json(wick);
  r.passed = wick.holds;
  std::ostringstream text, csv;
  csv << "r,k,value\n";
  for (long k = 1; k <= order; ++k) {
    text << "S(" << order << "," << k << ") = " << shown.at(k).to_string() << '\n';
    csv << order << ',' << k << ",\"" << shown.at(k).to_string() << "\"\n";
  }
  text << "Wick identity, n <= " << wick.n_max << ": " << (wick.holds ? "holds" : "FAILS") << '\n';
  r.text = text.str();
  r.csv = csv.str();
  return r;
}

Result run_bell(long max_r, const std::string& kappa_text) {
  require(max_r >= 1, "--max-r must be >= 1");
  std::optional<Rational> kappa;
  if (!kappa_text.empty()) kappa = parse_exact_kappa(kappa_text);
  Result r;
  json rows = json::array();
  std::ostringstream text, csv;
  csv << "r,value\n";
  for (long order = 1; order <= max_r; ++order) {
    NSigmaPoly b = bell(order);
    if (kappa) b = b.specialize_kappa(*kappa);
    json row;
    row["r"] = order;
    row["value"] = to_json(b);
    row["text"] = b.to_string();
    rows.push_back(std::move(row));
    text << 'B' << order << " = " << b.to_string() << '\n';
    csv << order << ",\"" << b.to_string() << "\"\n";
  }
  if (kappa) r.report["kappa"] = kappa->str();
  r.report["rows"] = std::move(rows);
  r.text = text.str();
  r.csv = csv.str();
  return r;
}

Result run_audit(long r_max) {
  require(r_max >= 1 && r_max <= 4, "--r-max must be in 1..4");
  const DiscrepancyReport report = compare_with_paper(r_max);
  Result r;
  r.report = to_json(report);
  bool tables_ok = true;
  for (long order = 1; order <= r_max; ++order) tables_ok = tables_ok && wick_verify(stirling(order), 40).holds;
  r.report["computed_tables_pass_wick"] = tables_ok;
  r.passed = tables_ok;
  std::ostringstream text, csv;
  text << "convention: " << report.convention << '\n';
  csv << "entry,verdict,printed,computed\n";
  for (const auto& e : report.entries) {
    const char* verdict = e.agree ? "agree" : "disagree";
    text << e.entry << ": " << verdict << "\n  printed:  " << e.printed.to_string() << "\n  computed: " << e.computed.to_string()
         << '\n';
    csv << '"' << e.entry << "\"," << verdict << ",\"" << e.printed.to_string() << "\",\"" << e.computed.to_string() << "\"\n";
  }
  for (const auto& note : report.notes) text << "note: " << note << '\n';
  r.text = text.str();
  r.csv = csv.str();
  return r;
}

Result run_spectrum(const std::string& kappa_text, const std::string& op_text, long levels) {
  const Rational kappa = parse_exact_kappa(kappa_text);
  require(kappa.sign() >= 0, "kappa must be >= 0");
  require(levels >= 1, "--levels must be >= 1");
  require(op_text == "f+f-" || op_text == "f-f+", "--operator must be f+f- or f-f+");
  const SpectrumOperator op = op_text == "f+f-" ? SpectrumOperator::PlusMinus : SpectrumOperator::MinusPlus;
  const std::vector<Rational> values = algebraic_spectrum(op, kappa, levels);
  Result r;
  r.report = spectrum_json(kappa, op, values);
  std::vector<std::string> parts;
  std::ostringstream csv;
  csv << "n,eigenvalue\n";
  for (std::size_t n = 0; n < values.size(); ++n) {
    parts.push_back(values[n].compact());
    csv << n << ',' << values[n].compact() << '\n';
  }
  r.text = join(parts, ", ") + '\n';
  r.csv = csv.str();
  return r;
}

Result run_coherent(const std::string& kappa_text, const std::string& z_text, double tol) {
  const Rational kappa = parse_any_kappa(kappa_text);
  require(kappa.sign() > 0, "coherent states need kappa > 0");
  require(tol > 0.0, "--tol must be > 0");
  const Complex z = parse_complex(z_text);
  const CoherentState state = coherent_state(kappa, z, tol);
  const double residual = coherent_residual(state);
  const double norm_error = std::abs(state.norm_sq - 1.0);
  Result r;
  r.report = to_json(state, residual);
  r.passed = residual <= 1e-10 && norm_error <= 1e-12;
  std::ostringstream text, csv;
  text << "kappa = " << kappa.compact() << "\nz = " << number(z.real()) << (z.imag() < 0 ? " - " : " + ")
       << number(std::abs(z.imag())) << "i\nD = " << state.truncation << "\nresidual = " << number(residual)
       << "\nnorm error = " << number(norm_error) << '\n';
  csv << "n,re,im\n";
  for (std::size_t n = 0; n < state.coefficients.size(); ++n) {
    csv << n << ',' << number(state.coefficients[n].real()) << ',' << number(state.coefficients[n].imag()) << '\n';
  }
  r.text = text.str();
  r.csv = csv.str();
  return r;
}

std::vector<long> parse_grids(const std::string& text) {
  std::vector<long> grids;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long m = std::stol(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      grids.push_back(m);
    } catch (const std::exception&) {
      throw UsageError("--grids must be a comma-separated list of integers (got '" + text + "')");
    }
  }
  return grids;
}

std::string convergence_text(const ConvergenceReport& rep) {
  std::ostringstream out;
  out << family_name(rep.family) << ", kappa = " << number(rep.kappa) << ", L = " << number(rep.length) << '\n';
  for (const auto& lc : rep.levels) {
    out << "  n=" << lc.level << "  extrapolated " << number(lc.extrapolated) << "  target " << number(lc.target)
        << "  rel.err " << number(lc.relative_error) << '\n';
  }
  for (const auto& w : rep.warnings) out << "  warning: " << w << '\n';
  out << "  " << (rep.passed ? "PASS" : "FAIL") << '\n';
  return out.str();
}

void convergence_csv(std::ostringstream& csv, const ConvergenceReport& rep) {
  for (const auto& lc : rep.levels) {
    csv << family_name(rep.family) << ',' << lc.level << ',' << number(lc.extrapolated) << ',' << number(lc.target) << ','
        << number(lc.relative_error) << '\n';
  }
}

Result run_calogero(const std::string& potential, const std::string& kappa_text, long levels, const std::string& grids_text,
                    double length) {
  require(potential == "v0" || potential == "v1" || potential == "both", "--potential must be v0, v1 or both");
  const double kappa = parse_any_kappa(kappa_text).to_double();
  require(kappa > 0.0, "kappa must be > 0");
  require(levels >= 1 && levels <= 8, "--levels must be in 1..8");
  require(length > 0.0, "--length must be > 0");
  const std::vector<long> grids = parse_grids(grids_text);
  require(grids.size() >= 3, "--grids needs at least three sizes");
  for (std::size_t i = 0; i < grids.size(); ++i) {
    require(grids[i] >= 100, "grid sizes must be >= 100");
    require(i == 0 || grids[i] > grids[i - 1], "grid sizes must increase");
  }
  Result r;
  std::ostringstream text, csv;
  csv << "potential,n,extrapolated,target,relative_error\n";
  if (potential == "both") {
    const ConvergenceReport v0 = cs_verify(PotentialFamily::V0, kappa, levels, grids, length);
    const ConvergenceReport v1 = cs_verify(PotentialFamily::V1, kappa, levels, grids, length);
    const PartnerComparison partners = compare_partners(v0, v1);
    r.report["v0"] = to_json(v0);
    r.report["v1"] = to_json(v1);
    r.report["partners"] = to_json(partners);
    r.passed = v0.passed && v1.passed && partners.passed;
    text << convergence_text(v0) << convergence_text(v1) << "partner deviation / spacing = "
         << number(partners.max_deviation_over_spacing) << (partners.passed ? "  PASS" : "  FAIL") << '\n';
    convergence_csv(csv, v0);
    convergence_csv(csv, v1);
  } else {
    const PotentialFamily family = potential == "v0" ? PotentialFamily::V0 : PotentialFamily::V1;
    const ConvergenceReport rep = cs_verify(family, kappa, levels, grids, length);
    r.report = to_json(rep);
    r.passed = rep.passed;
    text << convergence_text(rep);
    convergence_csv(csv, rep);
  }
  r.text = text.str();
  r.csv = csv.str();
  return r;
}

Result run_verify(const std::string& suite, bool parallel) {
  if (suite == "all") return checks_result(suite, run_all(parallel));
  for (Suite s : {Suite::Algebra, Suite::Ordering, Suite::Analytic, Suite::Spectral}) {
    if (suite_name(s) == suite) return checks_result(suite, run_suite(s));
  }
  throw UsageError("--suite must be all, algebra, ordering, analytic or spectral");
}

Result run_bargmann(long max_degree, const std::string& kappa_text) {
  const Rational kappa = parse_exact_kappa(kappa_text);
  require(kappa.sign() > 0, "kappa must be > 0");
  require(max_degree >= 0 && max_degree <= 150, "--max-degree must be in 0..150");
  Result r = checks_result("bargmann", bargmann_checks(kappa, max_degree));
  r.report["kappa"] = kappa.str();
  return r;
}

void emit(const Result& result, Format format, const std::string& path) {
  std::string body;
  switch (format) {
    case Format::Json:
      body = result.report.dump(2) + '\n';
      break;
    case Format::Csv:
      body = result.csv;
      break;
    case Format::Text:
      body = result.text;
      break;
  }
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file '" + path + "'");
  out << body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bkappa: exact calculus and numerical checks for the deformed fermion algebra B_k(1)"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--json", opt.json, "Shorthand for --format json");
  app.add_option("-o,--output", opt.output, "Write the report to a file instead of standard output");
  app.add_flag("-v,--verbose", opt.verbose, "Print timing to standard error");
  app.add_flag("--parallel", opt.parallel, "Run independent verification suites concurrently");

  std::function<Result()> action;
  Format fallback = Format::Json;

  auto* stirling_cmd = app.add_subcommand("stirling", "Deformed Stirling table S(r, k, N)")->fallthrough();
  long stirling_r = 0;
  std::string stirling_kappa;
  stirling_cmd->add_option("--r", stirling_r, "Order r")->required();
  stirling_cmd->add_option("--kappa", stirling_kappa, "Substitute an exact rational kappa");
  stirling_cmd->callback([&] {
    action = [&] { return run_stirling(stirling_r, stirling_kappa); };
    fallback = Format::Text;
  });

  auto* bell_cmd = app.add_subcommand("bell", "Deformed Bell operators B_1..B_R")->fallthrough();
  long bell_max = 0;
  std::string bell_kappa;
  bell_cmd->add_option("--max-r", bell_max, "Largest order")->required();
  bell_cmd->add_option("--kappa", bell_kappa, "Substitute an exact rational kappa");
  bell_cmd->callback([&] {
    action = [&] { return run_bell(bell_max, bell_kappa); };
    fallback = Format::Text;
  });

  auto* audit_cmd = app.add_subcommand("audit", "Compare the printed Stirling/Bell tables with computed values")->fallthrough();
  long audit_r = 4;
  audit_cmd->add_option("--r-max", audit_r, "Largest printed order to audit (1..4)");
  audit_cmd->callback([&] { action = [&] { return run_audit(audit_r); }; });

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Algebraic spectrum of f+f- or f-f+")->fallthrough();
  std::string spectrum_kappa, spectrum_op = "f+f-";
  long spectrum_levels = 10;
  spectrum_cmd->add_option("--kappa", spectrum_kappa, "Exact rational kappa")->required();
  spectrum_cmd->add_option("--operator", spectrum_op, "f+f- or f-f+");
  spectrum_cmd->add_option("--levels", spectrum_levels, "Number of levels");
  spectrum_cmd->callback([&] {
    action = [&] { return run_spectrum(spectrum_kappa, spectrum_op, spectrum_levels); };
    fallback = Format::Text;
  });

  auto* coherent_cmd = app.add_subcommand("coherent", "Build a coherent state and report its residual")->fallthrough();
  std::string coherent_kappa, coherent_z;
  double coherent_tol = 1e-24;
  coherent_cmd->add_option("--kappa", coherent_kappa, "kappa > 0 (rational or decimal)")->required();
  coherent_cmd->add_option("--z", coherent_z, "Eigenvalue as re,im")->required();
  coherent_cmd->add_option("--tol", coherent_tol, "Tail tolerance for the truncation");
  coherent_cmd->callback([&] { action = [&] { return run_coherent(coherent_kappa, coherent_z, coherent_tol); }; });

  auto* bargmann_cmd = app.add_subcommand("bargmann-check", "Check the Bargmann ladder realization")->fallthrough();
  long bargmann_degree = 30;
  std::string bargmann_kappa = "1/3";
  bargmann_cmd->add_option("--max-degree", bargmann_degree, "Largest monomial degree")->required();
  bargmann_cmd->add_option("--kappa", bargmann_kappa, "Exact rational kappa > 0");
  bargmann_cmd->callback([&] { action = [&] { return run_bargmann(bargmann_degree, bargmann_kappa); }; });

  auto* calogero_cmd = app.add_subcommand("calogero", "Finite-difference spectra of the V0/V1 potentials")->fallthrough();
  std::string calogero_potential = "both", calogero_kappa, calogero_grids = "2000,4000,8000";
  long calogero_levels = 5;
  double calogero_length = 40.0;
  calogero_cmd->add_option("--potential", calogero_potential, "v0, v1 or both");
  calogero_cmd->add_option("--kappa", calogero_kappa, "kappa > 0 (rational or decimal)")->required();
  calogero_cmd->add_option("--levels", calogero_levels, "Number of levels (1..8)");
  calogero_cmd->add_option("--grids", calogero_grids, "Interior point counts, e.g. 2000,4000,8000");
  calogero_cmd->add_option("--length", calogero_length, "Box length L");
  calogero_cmd->callback([&] {
    action = [&] {
      return run_calogero(calogero_potential, calogero_kappa, calogero_levels, calogero_grids, calogero_length);
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suites")->fallthrough();
  std::string verify_suite = "all";
  verify_cmd->add_option("--suite", verify_suite, "all, algebra, ordering, analytic or spectral");
  verify_cmd->callback([&] { action = [&] { return run_verify(verify_suite, opt.parallel); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    const Result result = action();
    emit(result, resolve_format(opt, fallback), opt.output);
    if (opt.verbose) {
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::fprintf(stderr, "finished in %.3f s\n", seconds);
    }
    return result.passed ? kOk : kCheckFailed;
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kCheckFailed;
  }
}
