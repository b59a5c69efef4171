#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "strata/strata_structure.hpp"

namespace strata {

/// A closed point of the open stratum S_host that is not itself an E_K.
struct FreePoint {
    Stratum host;
    bool operator==(const FreePoint&) const = default;
};

/// The center E_core, |core| >= 2.
struct StratumCenter {
    Stratum core;
    bool operator==(const StratumCenter&) const = default;
};

/// Hand-encoded center: the caller states which strata are destroyed (z) and
/// which strata meet the center without being contained in it (b).
struct ExplicitCenter {
    StratumSet z_set;
    StratumSet b_set;
    bool operator==(const ExplicitCenter&) const = default;
};

using BlowupCenter = std::variant<FreePoint, StratumCenter, ExplicitCenter>;

/// "P[0,1]" / "S[0,1]". Explicit centers have no string form and raise.
std::string center_to_string(const BlowupCenter& c);
/// Parses "P[]", "P[0,1]" or "S[0,1]"; throws InputFormat.
BlowupCenter parse_center(std::string_view spec);
/// Semicolon-separated list of center specs.
std::vector<BlowupCenter> parse_center_list(std::string_view specs);

/// Which possibility of the H_3 center classification the center realizes:
/// a) nothing of H_3 destroyed, b) a triple stratum, c) a double stratum.
enum class CenterCase { A, B, C };

char center_case_label(CenterCase c) noexcept;

struct CenterData {
    StratumSet z_set;  // strata contained in the center
    StratumSet b_set;  // strata meeting the center, not contained in it
    StratumSet a_set;  // strata of H_2 meeting the center
    CenterCase center_case;
};

struct BlowupOutcome {
    StrataStructure new_structure;
    IndexId fresh_index;
    StratumSet z_set;
    StratumSet b_set;
};

/// Throws InvalidCenter if `c` is not a valid center for `s`.
void check_center(const StrataStructure& s, const BlowupCenter& c);

CenterData compute_center_data(const StrataStructure& s, const BlowupCenter& c);

/// H' = (H \ z) ∪ {J ∪ {fresh} : J in b}, fresh = max(I)+1.
BlowupOutcome apply_blowup(const StrataStructure& s, const BlowupCenter& c);

struct BlowupStep {
    BlowupCenter center;
    IndexId fresh_index;
    StrataStructure structure;  // structure after this step
};

struct BlowupTrace {
    int dimension;
    std::vector<BlowupStep> steps;

    /// The bare germ followed by every intermediate structure.
    std::vector<StrataStructure> structures() const;
    const StrataStructure& final_structure() const;
    std::vector<BlowupCenter> centers() const;
};

/// Applies `centers` to the bare germ of dimension d. The first center must
/// be P[]; later P[] centers are rejected. Errors carry the step index.
BlowupTrace blowup_sequence(int dimension, const std::vector<BlowupCenter>& centers);

/// Reproducible random trace: P[] followed by n_blowups - 1 centers drawn
/// uniformly from all valid free points (nonempty host) and stratum centers.
BlowupTrace random_sequence(int dimension, int n_blowups, std::uint64_t seed);

/// Dual graph as sorted edge list.
std::vector<std::pair<IndexId, IndexId>> dual_graph_edges(const StrataStructure& s);

}  // namespace strata
