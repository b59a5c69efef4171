#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "strata/strata_structure.hpp"

namespace strata {

/// One elementary homotopy applied to a 1-path given by its vertex list.
///
///  - BacktrackInsert:  (.., v_t, ..)          -> (.., v_t, vertex, v_t, ..)
///  - BacktrackRemove:  (.., v_t, w, v_t, ..)  -> (.., v_t, ..)
///  - TriangleInsert:   (.., v_t, v_t+1, ..)   -> (.., v_t, vertex, v_t+1, ..)
///  - TriangleRemove:   (.., v_t, w, v_t+2, ..) -> (.., v_t, v_t+2, ..)
///
/// `position` is t. `vertex` is only meaningful for the insertions.
struct HomotopyMove {
    enum class Kind { BacktrackInsert, BacktrackRemove, TriangleInsert, TriangleRemove };

    Kind kind;
    std::size_t position;
    IndexId vertex = 0;

    bool operator==(const HomotopyMove&) const = default;
};

struct HomotopySearchResult {
    bool equivalent = false;
    std::vector<HomotopyMove> moves;  // replayable when equivalent
    std::size_t explored = 0;         // path nodes expanded
};

inline constexpr std::size_t kDefaultHomotopyBudget = 100000;

struct HomotopySearchOptions {
    std::size_t budget = kDefaultHomotopyBudget;
    /// Longest intermediate path (in edges). Unset means
    /// max(length(γ1), length(γ2)) + 4.
    std::optional<std::size_t> max_length;
};

/// Breadth-first search for a chain of elementary homotopies turning `from`
/// into `to`, with every intermediate support inside `allowed` (a subset of
/// H(1)). Throws EndpointMismatch if the paths do not join the same strata and
/// NotAPath if either input is not a 1-path with support in `allowed`.
HomotopySearchResult elementary_homotopy_search(const StrataStructure& s, const KPath& from,
                                                const KPath& to, const StratumSet& allowed,
                                                const HomotopySearchOptions& options = {});

/// Applies one move; throws NotAPath if the move is not legal in `s`.
std::vector<IndexId> apply_homotopy_move(const StrataStructure& s,
                                         const std::vector<IndexId>& path,
                                         const HomotopyMove& move);

/// Replays a move list from `from` and returns the resulting vertex path.
std::vector<IndexId> replay_homotopy(const StrataStructure& s, std::vector<IndexId> from,
                                     const std::vector<HomotopyMove>& moves);

}  // namespace strata
