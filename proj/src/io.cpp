#include "dkq/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace dkq::io {

std::string format12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

double round12(double v) { return std::strtod(format12(v).c_str(), nullptr); }

ordered_json spectrum_json(const spectra::Spectrum& s, std::uint32_t q, std::uint32_t k,
                           const std::string& graph, const std::string& method,
                           const spectra::BoundsReport& bounds) {
    ordered_json eigs = ordered_json::array();
    for (auto& [v, m] : s.entries)
        eigs.push_back({{"value", round12(v)}, {"multiplicity", m}});
    return ordered_json{{"q", q},
                        {"k", k},
                        {"graph", graph},
                        {"method", method},
                        {"eigenvalues", std::move(eigs)},
                        {"lambda2", round12(bounds.lambda2_bipartite)},
                        {"bound_2sqrtq", bounds.bound_2sqrtq},
                        {"ramanujan", bounds.ramanujan},
                        {"spectral_gap", round12(bounds.spectral_gap)},
                        {"cheeger_lower", round12(bounds.cheeger_lower)},
                        {"cheeger_upper", round12(bounds.cheeger_upper)}};
}

std::string spectrum_csv(const spectra::Spectrum& s) {
    std::ostringstream os;
    os << "value,multiplicity\n";
    for (auto& [v, m] : s.entries) os << format12(v) << "," << m << "\n";
    return os.str();
}

ordered_json compare_json(const oracle::CompareReport& r, double tol) {
    ordered_json mismatches = ordered_json::array();
    for (auto& m : r.mismatches)
        mismatches.push_back({{"expected_value", round12(m.expected_value)},
                              {"expected_multiplicity", m.expected_mult},
                              {"found_value", round12(m.found_value)},
                              {"found_multiplicity", m.found_mult}});
    return ordered_json{{"matched", r.matched},
                        {"mismatches", std::move(mismatches)},
                        {"max_abs_deviation", round12(r.max_abs_deviation)},
                        {"tolerance", round12(tol)},
                        {"equal", r.equal(tol)}};
}

ordered_json bounds_json(const spectra::BoundsReport& r) {
    return ordered_json{{"q", r.q},
                        {"lambda2", round12(r.lambda2_bipartite)},
                        {"lambda2_point", round12(r.lambda2_point)},
                        {"two_sqrt_q", round12(r.two_sqrt_q)},
                        {"two_sqrt_q_minus_1", round12(r.two_sqrt_q_minus_1)},
                        {"bound_2sqrtq", r.bound_2sqrtq},
                        {"ramanujan", r.ramanujan},
                        {"spectral_gap", round12(r.spectral_gap)},
                        {"cheeger_lower", round12(r.cheeger_lower)},
                        {"cheeger_upper", round12(r.cheeger_upper)}};
}

std::string bounds_csv_header() {
    return "q,lambda2,lambda2_point,two_sqrt_q,two_sqrt_q_minus_1,bound_2sqrtq,ramanujan,"
           "spectral_gap,cheeger_lower,cheeger_upper\n";
}

std::string bounds_csv_row(const spectra::BoundsReport& r) {
    std::ostringstream os;
    os << r.q << "," << format12(r.lambda2_bipartite) << "," << format12(r.lambda2_point) << ","
       << format12(r.two_sqrt_q) << "," << format12(r.two_sqrt_q_minus_1) << ","
       << (r.bound_2sqrtq ? "true" : "false") << "," << (r.ramanujan ? "true" : "false") << ","
       << format12(r.spectral_gap) << "," << format12(r.cheeger_lower) << ","
       << format12(r.cheeger_upper) << "\n";
    return os.str();
}

std::string edge_list_csv(const graphs::BipartiteGraph& g) {
    std::ostringstream os;
    os << "# d-graph k=" << g.k << " q=" << g.q << "\n";
    for (auto [u, v] : g.edges) os << u << "," << v << "\n";
    return os.str();
}

}  // namespace dkq::io
