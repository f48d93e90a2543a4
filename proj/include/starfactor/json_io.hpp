#ifndef STARFACTOR_JSON_IO_HPP
#define STARFACTOR_JSON_IO_HPP

#include <string>

#include "starfactor/critical.hpp"
#include "starfactor/edge_factor.hpp"
#include "starfactor/verify.hpp"

namespace starfactor {

// Machine-readable reports. Rationals are always exact "p/q" strings.
std::string analyze_to_json(const Graph& g);
std::string factor_to_json(const Graph& g, const StarCycleFactor& f);
std::string capped_build_to_json(const Graph& g, const CappedBuild& b, int cap);
std::string half_integral_to_json(const Graph& g, const HalfIntegralMatching& h);
std::string certificate_to_json(const ExclusionCertificate& c);
std::string edge_test_to_json(const Graph& g, Edge e, int cert_bound);
std::string factor_with_edge_to_json(const Graph& g, Edge e, int cert_bound);
std::string critical_to_json(const Graph& g, int edge_bound, int exhaustive_bound);
std::string critical_scan_to_json(int n_max, int edge_bound, int threads);
std::string verify_to_json(const VerifyReport& rep);

}  // namespace starfactor

#endif
