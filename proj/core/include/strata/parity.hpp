#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "strata/nodal.hpp"
#include "strata/strata_structure.hpp"

namespace strata {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

/// Two-colouring of H(1) relative to a block: Even holds the strata reachable
/// from the base with an even number of crossings.
struct ParityColoring {
    IndexId base;
    StratumSet block;
    std::map<IndexId, Parity> side;

    std::vector<IndexId> members(Parity p) const;
};

/// Witness that the flip rule is contradictory around a cycle.
struct ParityInconsistent {
    IndexId from;
    IndexId to;
};

using ColoringResult = std::variant<ParityColoring, ParityInconsistent>;

/// Number of subsupport entries of the 1-path that belong to `block`.
/// Throws NotAPath if `path` is not a 1-path of `s`.
std::size_t crossing_count(const StrataStructure& s, const StratumSet& block, const KPath& path);

/// BFS over the dual graph flipping parity across block edges. Throws
/// NotConnected if H(1) is not 1-connected and UnknownIndex for a bad base.
ColoringResult block_parity_coloring(const StrataStructure& s, const StratumSet& block,
                                     IndexId base);

/// Phi: H(1) -> {0,1}^m for the ordered separating blocks.
struct PhiSignature {
    std::vector<StratumSet> blocks;
    std::map<IndexId, std::vector<std::uint8_t>> table;
};

/// How the caller knows the structure is simply connected.
enum class ConnectivityClaim { BlowupProvenance, Pi1Verdict, Unverified };

std::string_view connectivity_claim_name(ConnectivityClaim c) noexcept;

struct ComponentReport {
    std::size_t blocks = 0;
    std::size_t separating = 0;
    PhiSignature phi;
    /// Fibres of Phi: the components of H_S(1), each sorted, ordered by least member.
    std::vector<std::vector<IndexId>> components;
    ConnectivityClaim claim = ConnectivityClaim::Unverified;

    /// Component count equals separating + 1.
    bool count_matches() const noexcept { return components.size() == separating + 1; }
};

/// Components of H_S via the parity signatures of the separating blocks.
/// Simple connectedness is the caller's claim and is recorded, not checked.
/// Throws InvalidNodalData, NotConnected, or ParityInconsistent.
ComponentReport components_by_parity(const StrataStructure& s, const NodalData& n,
                                     ConnectivityClaim claim = ConnectivityClaim::Unverified);

/// Plain graph search on the residual structure's dual graph.
std::vector<std::vector<IndexId>> components_by_search(const StrataStructure& residual);

}  // namespace strata
