#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "strata/foliation_model.hpp"
#include "strata/nodal.hpp"
#include "strata/parity.hpp"
#include "strata/strata_structure.hpp"

namespace strata {

/// A trace-type component of the singular locus, contained in exactly one
/// divisor component (its host).
struct TraceComponent {
    std::string id;
    IndexId host;
    std::vector<std::string> adjacent;  // ids sharing trace-type points
};

struct FoliatedModel {
    StrataStructure structure;
    NodalData nodal;
    std::optional<ResidueModel> residues;
    std::vector<TraceComponent> traces;
};

/// Validates nodal data and trace hosts; nodal data is derived from the
/// residues when `nodal` is not given.
FoliatedModel make_model(StrataStructure structure, std::optional<NodalData> nodal,
                         std::optional<ResidueModel> residues, std::vector<TraceComponent> traces);

struct PartialSeparatrix {
    std::vector<std::string> traces;  // sorted ids
    std::set<IndexId> hosts;
};

/// Connected components of the trace adjacency graph, ordered by least id.
/// Adjacency is read symmetrically. Throws DanglingAdjacency.
std::vector<PartialSeparatrix> partial_separatrices(const FoliatedModel& m);

enum class ComponentMode { Parity, SearchOnly };

/// Components of E \ |S| and the membership of every divisor component.
struct ComponentMap {
    std::vector<std::vector<IndexId>> components;  // ordered by least member
    std::map<IndexId, std::size_t> component_of;
    /// Parity fibres coincide with the graph-search components (always true
    /// in SearchOnly mode).
    bool oracle_agrees = true;
};

ComponentMap component_map(const FoliatedModel& m, ComponentMode mode = ComponentMode::Parity);

struct ComponentVerdict {
    std::size_t component;
    std::vector<IndexId> members;
    bool pass;
    std::vector<std::size_t> covering;  // indices into the separatrix list
};

struct CoverageReport {
    std::vector<PartialSeparatrix> separatrices;
    std::vector<ComponentVerdict> verdicts;

    bool all_pass() const;
    std::vector<std::vector<IndexId>> uncovered() const;
};

/// Every component of E \ |S| must meet a partial separatrix whose hosts all
/// lie in that component. A separatrix whose hosts straddle two components
/// raises SeparatrixSpansComponents.
CoverageReport camacho_sad_check(const FoliatedModel& m, ComponentMode mode = ComponentMode::Parity);

/// A 1-path joins {i} and {j} using only edges of H(2) \ A.
bool connected_outside(const StrataStructure& s, const StratumSet& a, IndexId i, IndexId j);

/// Components of the dual graph with the edges in A removed.
std::vector<std::vector<IndexId>> components_outside(const StrataStructure& s, const StratumSet& a);

struct NodSepReport {
    std::vector<std::pair<IndexId, IndexId>> failing_pairs;
    std::vector<std::vector<IndexId>> nod_components;
    std::vector<std::vector<IndexId>> sep_components;
    /// nod component k lies inside sep component bijection[k]; filled only
    /// when no pair fails.
    std::vector<std::size_t> bijection;
    bool bijection_valid = false;

    bool holds() const noexcept { return failing_pairs.empty() && bijection_valid; }
};

/// Compares connection outside N(2) with connection outside the separator set
/// for every pair of components. Failures are reported, never raised.
NodSepReport nod_vs_sep_equivalence(const StrataStructure& s, const NodalData& n);

}  // namespace strata
