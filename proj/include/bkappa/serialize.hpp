#pragma once

#include <json.hpp>

#include <string>

#include "bkappa/coherent.hpp"
#include "bkappa/fock.hpp"
#include "bkappa/identities.hpp"
#include "bkappa/normal_form.hpp"
#include "bkappa/nsigma_poly.hpp"
#include "bkappa/ordering.hpp"
#include "bkappa/rational.hpp"
#include "bkappa/spectral.hpp"

namespace bkappa {

using json = nlohmann::ordered_json;

// Floats are rounded to 15 significant digits so output is stable across runs.
double round15(double value);

json to_json(const Rational& r);  // "p/q"
json to_json(const KPoly& p);     // ["c0", "c1", ...] by kappa degree
json to_json(const NSigmaPoly& p);
json to_json(const NormalForm& nf);
json to_json(const StirlingTable& table);
json to_json(const WickReport& report);
json to_json(const DiscrepancyReport& report);
json to_json(const IdentityReport& report);
json to_json(const CoherentState& state, double residual);
json to_json(const ConvergenceReport& report);
json to_json(const PartnerComparison& comparison);
json spectrum_json(const Rational& kappa, SpectrumOperator op, const std::vector<Rational>& eigenvalues);

Rational rational_from_json(const json& j);
KPoly kpoly_from_json(const json& j);
NSigmaPoly nsigma_from_json(const json& j);
NormalForm normal_form_from_json(const json& j);

std::string operator_name(SpectrumOperator op);

}  // namespace bkappa
