#pragma once

#include <optional>
#include <string>

#include "strata/nodal.hpp"
#include "strata/strata_structure.hpp"

namespace strata {

/// Dual graph in DOT: one vertex per component, one edge per stratum of H(2).
/// With nodal data, separator edges are drawn "bold,color=red" and the other
/// nodal edges "dashed".
std::string dual_graph_dot(const StrataStructure& s, const std::optional<NodalData>& n = {});

}  // namespace strata
