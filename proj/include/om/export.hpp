#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "om/committees.hpp"
#include "om/convexity.hpp"
#include "om/sign_core.hpp"
#include "om/tope_graphs.hpp"

namespace om {

using Json = nlohmann::ordered_json;

Json subset_json(GroundSubset subset);
Json report_json(const ValidationReport& report);
Json lattice_json(const ConvexLattice& lattice);
Json committees_json(const ToposSet& topes, const std::vector<Committee>& committees);
Json graph_json(const ToposSet& topes, const TopeGraph& graph);
Json formula_counts_json(const FormulaCounts& counts);

/// DOT text with vertices labeled by sign strings, in vertex and edge order.
std::string graph_dot(const ToposSet& topes, const TopeGraph& graph);

}  // namespace om
