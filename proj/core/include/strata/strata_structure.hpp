#pragma once

#include <cstddef>
#include <string>
#include <unordered_set>
#include <vector>

#include "strata/stratum.hpp"

namespace strata {

/// A combinatorial strata structure: a downward-closed family H of subsets of
/// a finite index set I containing every singleton, with |J| bounded by the
/// ambient dimension.
///
/// The constructor stores whatever it is given (sorted and deduplicated) so
/// that malformed input can still be diagnosed by validate_structure(). Use
/// make_structure() when an invalid structure should be rejected outright.
class StrataStructure {
public:
    StrataStructure(int dimension, std::vector<IndexId> indices, std::vector<Stratum> strata,
                    std::vector<std::string> names = {});

    /// {∅} over I = ∅: the germ before any blow-up.
    static StrataStructure bare_germ(int dimension);
    /// P(indices), truncated to the dimension bound.
    static StrataStructure power_set(int dimension, std::vector<IndexId> indices);

    int dimension() const noexcept { return dimension_; }
    const std::vector<IndexId>& indices() const noexcept { return indices_; }
    /// Distinct strata in shortlex order.
    const std::vector<Stratum>& strata() const noexcept { return strata_; }
    /// Component names, parallel to indices().
    const std::vector<std::string>& names() const noexcept { return names_; }
    /// Strata given more than once to the constructor.
    const std::vector<Stratum>& duplicates() const noexcept { return duplicates_; }

    bool contains(const Stratum& j) const { return members_.count(j) != 0; }
    bool has_index(IndexId i) const;

    /// H(k): strata with exactly k members.
    std::vector<Stratum> level(std::size_t k) const;
    /// Largest stratum size.
    std::size_t max_stratum_size() const noexcept;
    /// Dual-graph neighbours of i (j with {i,j} in H), ascending.
    std::vector<IndexId> neighbors(IndexId i) const;
    /// Third vertices k with {i,j,k} in H, ascending.
    std::vector<IndexId> triangle_apexes(IndexId i, IndexId j) const;

    std::string name_of(IndexId i) const;

    bool operator==(const StrataStructure& other) const;

private:
    int dimension_;
    std::vector<IndexId> indices_;
    std::vector<std::string> names_;
    std::vector<Stratum> strata_;
    std::vector<Stratum> duplicates_;
    std::unordered_set<Stratum, StratumHash> members_;
};

/// Builds a structure and throws InvalidStructure if it fails validation.
StrataStructure make_structure(int dimension, std::vector<IndexId> indices,
                               std::vector<Stratum> strata);

enum class ViolationKind {
    MissingEmpty,
    MissingSingleton,
    NotDownwardClosed,
    Oversize,
    Duplicate,
    UnknownMember,
    BadDimension,
};

struct Violation {
    ViolationKind kind;
    Stratum stratum;  // offending or missing stratum
    std::string detail;

    bool operator==(const Violation&) const = default;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const noexcept { return violations.empty(); }
    /// Missing strata reported as not-downward-closed, deduplicated.
    StratumSet missing_strata() const;
    std::string to_string() const;
};

std::string_view violation_kind_name(ViolationKind kind) noexcept;

ValidationReport validate_structure(const StrataStructure& s);

/// Cl_H(A) = {J' in H : J' ⊇ J for some J in A}.
StratumSet closure(const StrataStructure& s, const StratumSet& a);

/// {J in H : |J| <= k}; k = 3 gives the H_3 structure.
StrataStructure truncate(const StrataStructure& s, std::size_t k);

/// Sequence of k-element strata with consecutive unions in H(k+1).
struct KPath {
    std::size_t k = 1;
    std::vector<Stratum> entries;

    /// 1-path through the given vertices.
    static KPath from_vertices(const std::vector<IndexId>& vertices);
    /// Vertex list of a 1-path.
    std::vector<IndexId> vertices() const;

    std::size_t length() const noexcept { return entries.empty() ? 0 : entries.size() - 1; }
    const Stratum& front() const { return entries.front(); }
    const Stratum& back() const { return entries.back(); }

    StratumSet support() const;
    /// Consecutive unions, in path order (repeats kept).
    std::vector<Stratum> subsupport() const;

    KPath reversed() const;
    /// Concatenation; the shared endpoint appears once. Throws EndpointMismatch.
    KPath composed(const KPath& tail) const;

    bool operator==(const KPath&) const = default;
};

bool is_k_path(const StrataStructure& s, const std::vector<Stratum>& seq, std::size_t k);
inline bool is_k_path(const StrataStructure& s, const KPath& path) {
    return is_k_path(s, path.entries, path.k);
}

/// Partition of A ⊆ H(k) into k-connected components. Blocks are sorted
/// internally and ordered by least member.
std::vector<std::vector<Stratum>> k_connected_components(const StrataStructure& s,
                                                         const StratumSet& a, std::size_t k);

/// 1-connected components of the whole structure, as index lists.
std::vector<std::vector<IndexId>> index_components(const StrataStructure& s);

bool is_one_connected(const StrataStructure& s);

/// H(1) as a set of singletons.
StratumSet singletons(const StrataStructure& s);

}  // namespace strata
