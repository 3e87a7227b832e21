#pragma once

#include "polyfock/decomposition.hpp"
#include "polyfock/exp_poly.hpp"
#include "polyfock/kernels.hpp"
#include "polyfock/matrix_model.hpp"
#include "polyfock/normal_form.hpp"
#include "polyfock/scalars.hpp"
#include "polyfock/spectral.hpp"

#include <json.hpp>

namespace pfx {

using json = nlohmann::json;

// Exact values travel as strings ("p/q") or [re, im] string pairs; floats
// appear only in fields explicitly named for them.

json to_json(const Rational& r);
json to_json(const GaussianRational& g);
json to_json(const ExpScalar& s);
json to_json(const ExpPoly& f);
json to_json(const NormalForm& nf);
json to_json(const FockColumn& col);
json to_json(const KernelFunc& kf, const UniPoly& factored);
json to_json(const SpectrumReport& rep);
json matrices_to_json(const ModelMatrices& m);
json matrices_to_json(const OrthonormalMatrices& m);

/// Decomposition report with per-component norms and the (always zero)
/// residual input - sum(components).
json decomposition_report(const ExpPoly& input, const TrueLevelDecomposition& dec);

Rational rational_from_json(const json& j);
GaussianRational gaussian_from_json(const json& j);
ExpScalar exp_scalar_from_json(const json& j);
ExpPoly exp_poly_from_json(const json& j);
NormalForm normal_form_from_json(const json& j);
FockColumn fock_column_from_json(const json& j);
SpectrumReport spectrum_report_from_json(const json& j);

}  // namespace pfx
