// Serialization of spectra, bounds reports, and edge lists. All numeric
// output goes through a 12-significant-digit formatter so that reruns are
// byte-identical.

#pragma once

#include <string>

#include "json.hpp"

#include "dkq/oracle.hpp"
#include "dkq/spectra.hpp"

namespace dkq::io {

using ordered_json = nlohmann::ordered_json;

// Round to 12 significant decimal digits (the serialization contract).
double round12(double v);
std::string format12(double v);

// {"q", "k", "graph", "method", "eigenvalues": [{"value", "multiplicity"}...],
//  "lambda2", "bound_2sqrtq", "ramanujan", "spectral_gap", "cheeger_lower",
//  "cheeger_upper"}
ordered_json spectrum_json(const spectra::Spectrum& s, std::uint32_t q, std::uint32_t k,
                           const std::string& graph, const std::string& method,
                           const spectra::BoundsReport& bounds);

std::string spectrum_csv(const spectra::Spectrum& s);

ordered_json compare_json(const oracle::CompareReport& r, double tol);

ordered_json bounds_json(const spectra::BoundsReport& r);
std::string bounds_csv_header();
std::string bounds_csv_row(const spectra::BoundsReport& r);

// Deterministic edge list: "# d-graph k=<k> q=<q>" then "u,v" rows in sorted
// order, u a point index and v a line index.
std::string edge_list_csv(const graphs::BipartiteGraph& g);

}  // namespace dkq::io
