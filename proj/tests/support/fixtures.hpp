#pragma once

#include <optional>
#include <vector>

#include "strata/error.hpp"

#include "strata/foliation_model.hpp"
#include "strata/strata_structure.hpp"

namespace fixtures {

using strata::Stratum;
using strata::StrataStructure;

// x, y, z, x-1 in dimension three.
inline StrataStructure r1_structure() {
    return strata::make_structure(3, {0, 1, 2, 3},
                                  {{}, {0}, {1}, {2}, {3}, {0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3},
                                   {0, 1, 2}, {1, 2, 3}});
}

inline strata::ResidueModel r1_residues() {
    strata::ResidueModel m;
    const auto lambda = m.table.add("lambda", strata::SymbolKind::RealPositive);
    const auto mu = m.table.add("mu", strata::SymbolKind::RealPositive);
    const auto alpha = m.table.add("alpha", strata::SymbolKind::NonReal);
    m.assign(0, 0, 1);
    m.assign(1, lambda, 1);
    m.assign(2, mu, -1);
    m.assign(3, alpha, -1);
    return m;
}

inline StrataStructure full_triangle() { return StrataStructure::power_set(3, {0, 1, 2}); }

inline strata::ResidueModel r2_residues() {
    strata::ResidueModel m;
    const auto lambda = m.table.add("lambda", strata::SymbolKind::RealPositive);
    const auto mu = m.table.add("mu", strata::SymbolKind::RealPositive);
    m.assign(0, 0, 1);
    m.assign(1, lambda, 1);
    m.assign(2, mu, -1);
    return m;
}

inline strata::ResidueModel remark_residues() {
    strata::ResidueModel m;
    const auto lambda = m.table.add("lambda", strata::SymbolKind::RealPositive);
    const auto mu = m.table.add("mu", strata::SymbolKind::NonReal);
    m.assign(0, 0, 1);
    m.assign(1, lambda, -1);
    m.assign(2, mu, 1);
    return m;
}

inline StrataStructure boundary_triangle() {
    return strata::make_structure(3, {0, 1, 2}, {{}, {0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}});
}

// Chain 0 - 1 - 2.
inline StrataStructure chain3() {
    return strata::make_structure(2, {0, 1, 2}, {{}, {0}, {1}, {2}, {0, 1}, {1, 2}});
}

// Kind of the strata::Error raised by f, if any.
template <class F>
std::optional<strata::ErrorKind> thrown_kind(F&& f) {
    try {
        f();
    } catch (const strata::Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

}  // namespace fixtures
