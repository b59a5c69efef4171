#pragma once

#include <map>
#include <string>
#include <vector>

#include "strata/strata_structure.hpp"

namespace strata {

/// The two sides {J+, J-} of a nodal stratum. The pair is unordered: which
/// side is called "plus" carries no meaning.
struct SignPartition {
    Stratum plus;
    Stratum minus;

    bool same_as(const SignPartition& other) const noexcept {
        return (plus == other.plus && minus == other.minus) ||
               (plus == other.minus && minus == other.plus);
    }
    bool operator==(const SignPartition&) const = default;
};

/// Datum of nodal strata: N ⊆ H with a sign partition of each member.
struct NodalData {
    std::map<Stratum, SignPartition> entries;

    bool contains(const Stratum& j) const { return entries.count(j) != 0; }
    StratumSet strata() const;
    /// N(2).
    StratumSet level_two() const;
};

enum class NodalViolationKind {
    NotInStructure,   // J in N but not in H
    BadPartition,     // sides overlap, are empty, or do not cover J
    MissingSubset,    // J' ⊊ J meets both sides but is not in N
    SpuriousSubset,   // J' ⊊ J in N although it misses a side
    PartitionMismatch // J' in N with a partition other than the restriction
};

std::string_view nodal_violation_kind_name(NodalViolationKind kind) noexcept;

struct NodalViolation {
    NodalViolationKind kind;
    Stratum stratum;  // the offending J (or J')
    Stratum parent;   // J whose partition demanded the check
};

struct NodalValidationReport {
    std::vector<NodalViolation> violations;
    bool valid() const noexcept { return violations.empty(); }
    std::string to_string() const;
};

NodalValidationReport validate_nodal_data(const StrataStructure& s, const NodalData& n);

/// Throws InvalidNodalData with the report text unless `n` is valid.
void require_valid_nodal_data(const StrataStructure& s, const NodalData& n);

/// N*: members of N all of whose supersets in H are in N.
StratumSet uninterrupted_set(const StrataStructure& s, const NodalData& n);

/// 2-connected components of N(2), ordered by least member.
std::vector<std::vector<Stratum>> nodal_blocks(const StrataStructure& s, const NodalData& n);

struct NodalBlock {
    std::vector<Stratum> members;
    bool separating = false;
};

struct SeparatorReport {
    std::vector<NodalBlock> blocks;
    StratumSet separator_set;  // union of the separating blocks
    StrataStructure residual;  // H \ Cl_H(S)

    std::size_t separating_count() const;
    std::vector<std::vector<Stratum>> separating_blocks() const;
};

/// Classifies every nodal block as separating or not. For each block the
/// three characterizations (B ⊆ N*, Cl(B) ⊆ N, Cl(B) ⊆ N*) are evaluated and
/// EquivalenceViolation is raised if they disagree.
SeparatorReport separating_blocks(const StrataStructure& s, const NodalData& n);

}  // namespace strata
