#include "bkappa/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace bkappa {

double round15(double value) {
  if (!std::isfinite(value)) return value;
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.15g", value);
  return std::strtod(buffer, nullptr);
}

json to_json(const Rational& r) { return r.str(); }

json to_json(const KPoly& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  return out;
}

namespace {

json rows(const std::vector<KPoly>& part) {
  json out = json::array();
  for (const auto& k : part) out.push_back(to_json(k));
  return out;
}

std::vector<KPoly> rows_from_json(const json& j) {
  std::vector<KPoly> out;
  for (const auto& row : j) out.push_back(kpoly_from_json(row));
  return out;
}

json complex_json(const Complex& c) { return json::array({round15(c.real()), round15(c.imag())}); }

}  // namespace

json to_json(const NSigmaPoly& p) {
  json out;
  out["even"] = rows(p.even_part());
  out["sigma"] = rows(p.sigma_part());
  return out;
}

json to_json(const NormalForm& nf) {
  json terms = json::array();
  for (const auto& [key, coeff] : nf.terms()) {
    json t;
    t["raise"] = key.first;
    t["lower"] = key.second;
    t["coeff"] = to_json(coeff);
    terms.push_back(std::move(t));
  }
  json out;
  out["terms"] = std::move(terms);
  return out;
}

json to_json(const StirlingTable& table) {
  json entries = json::array();
  for (long k = 1; k <= table.order(); ++k) {
    json e;
    e["k"] = k;
    e["value"] = to_json(table.at(k));
    e["text"] = table.at(k).to_string();
    entries.push_back(std::move(e));
  }
  json out;
  out["r"] = table.order();
  out["entries"] = std::move(entries);
  return out;
}

json to_json(const WickReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    json e;
    e["n"] = f.n;
    e["residual"] = to_json(f.residual);
    failures.push_back(std::move(e));
  }
  json out;
  out["r"] = report.order;
  out["n_max"] = report.n_max;
  out["holds"] = report.holds;
  out["failures"] = std::move(failures);
  return out;
}

json to_json(const DiscrepancyReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    json j;
    j["entry"] = e.entry;
    j["printed"] = to_json(e.printed);
    j["printed_text"] = e.printed.to_string();
    j["computed"] = to_json(e.computed);
    j["computed_text"] = e.computed.to_string();
    if (e.literal_recurrence) {
      j["literal_recurrence"] = to_json(*e.literal_recurrence);
      j["literal_recurrence_text"] = e.literal_recurrence->to_string();
    }
    j["verdict"] = e.agree ? "agree" : "disagree";
    if (!e.note.empty()) j["note"] = e.note;
    entries.push_back(std::move(j));
  }
  json out;
  out["convention"] = report.convention;
  out["entries"] = std::move(entries);
  out["notes"] = report.notes;
  return out;
}

json to_json(const IdentityReport& report) {
  json out;
  out["name"] = report.name;
  out["holds"] = report.holds;
  out["difference"] = to_json(report.difference);
  return out;
}

json to_json(const CoherentState& state, double residual) {
  json out;
  out["kappa"] = state.kappa.str();
  out["z"] = complex_json(state.z);
  out["D"] = state.truncation;
  out["residual"] = round15(residual);
  out["norm_error"] = round15(std::abs(state.norm_sq - 1.0));
  json coeffs = json::array();
  for (const auto& c : state.coefficients) coeffs.push_back(complex_json(c));
  out["coefficients"] = std::move(coeffs);
  return out;
}

json to_json(const ConvergenceReport& report) {
  json out;
  out["potential"] = family_name(report.family);
  out["kappa"] = round15(report.kappa);
  out["length"] = round15(report.length);
  out["grids"] = report.grids;
  out["tolerance"] = round15(report.tolerance);
  json levels = json::array();
  for (const auto& lc : report.levels) {
    json l;
    l["n"] = lc.level;
    json per = json::array();
    for (double v : lc.per_grid) per.push_back(round15(v));
    l["per_grid"] = std::move(per);
    l["observed_order"] = round15(lc.observed_order);
    l["extrapolated"] = round15(lc.extrapolated);
    l["target"] = round15(lc.target);
    l["relative_error"] = round15(lc.relative_error);
    levels.push_back(std::move(l));
  }
  out["levels"] = std::move(levels);
  out["passed"] = report.passed;
  out["warnings"] = report.warnings;
  out["branch_note"] =
      "Dirichlet conditions at x=0 select the regular branch (2kn+1); the 2kn branch of V0 is covered by the closed-form check";
  return out;
}

json to_json(const PartnerComparison& comparison) {
  json out;
  out["kappa"] = round15(comparison.kappa);
  json v0 = json::array(), v1 = json::array();
  for (double v : comparison.v0) v0.push_back(round15(v));
  for (double v : comparison.v1) v1.push_back(round15(v));
  out["v0"] = std::move(v0);
  out["v1"] = std::move(v1);
  out["max_deviation_over_spacing"] = round15(comparison.max_deviation_over_spacing);
  out["passed"] = comparison.passed;
  return out;
}

std::string operator_name(SpectrumOperator op) { return op == SpectrumOperator::PlusMinus ? "f+f-" : "f-f+"; }

json spectrum_json(const Rational& kappa, SpectrumOperator op, const std::vector<Rational>& eigenvalues) {
  json out;
  out["kappa"] = kappa.str();
  out["operator"] = operator_name(op);
  json values = json::array();
  for (const auto& v : eigenvalues) values.push_back(v.str());
  json gaps = json::array();
  for (const auto& g : gap_analysis(eigenvalues)) gaps.push_back(g.str());
  out["eigenvalues"] = std::move(values);
  out["gaps"] = std::move(gaps);
  return out;
}

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

KPoly kpoly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("kappa polynomial must be an array");
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return KPoly(std::move(coeffs));
}

NSigmaPoly nsigma_from_json(const json& j) {
  return NSigmaPoly(rows_from_json(j.at("even")), rows_from_json(j.at("sigma")));
}

NormalForm normal_form_from_json(const json& j) {
  NormalForm out;
  for (const auto& t : j.at("terms")) {
    out += NormalForm::term(t.at("raise").get<long>(), nsigma_from_json(t.at("coeff")), t.at("lower").get<long>());
  }
  return out;
}

}  // namespace bkappa
