#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "degen/dowling.hpp"
#include "degen/genfun.hpp"
#include "degen/poisson_lab.hpp"
#include "degen/poly.hpp"
#include "degen/rat.hpp"
#include "degen/series.hpp"
#include "degen/stirling.hpp"
#include "degen/verify.hpp"

namespace degen {

// Rats serialize as "p/q" (or "p"), polynomials as arrays of Rat strings
// indexed by degree, series as {"order", "coeffs"}.

nlohmann::json to_json(const Rat& r);
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const std::vector<Rat>& v);
nlohmann::json to_json(const std::vector<Poly>& v);
nlohmann::json to_json(const GfValues& v);
nlohmann::json to_json(const McEstimate& e);
nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const SuiteReport& r);

template <SeriesCoefficient C>
nlohmann::json to_json(const Series<C>& s) {
    return {{"order", s.order()}, {"coeffs", to_json(s.coeffs())}};
}

/// Inverse of to_json for polynomials.
Poly poly_from_json(const nlohmann::json& j, Var var = Var::X);
Rat rat_from_json(const nlohmann::json& j);

/// Rows n, columns k = 0..nmax; entries above the diagonal are 0.
std::string to_csv(const TriangleTable& t);
std::string to_csv(const WhitneyTable& t);
nlohmann::json to_json(const TriangleTable& t);
nlohmann::json to_json(const WhitneyTable& t);

std::string to_csv(const SuiteReport& r);
std::string to_markdown(const SuiteReport& r);

std::string to_string(WhitneyKind kind);

} // namespace degen
