#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace strata {

/// Identifier of an irreducible divisor component. Ids are never reused:
/// blow-ups allocate max(I)+1.
using IndexId = std::uint32_t;

/// A set of divisor components, kept as a strictly increasing list so that
/// set equality is list equality.
class Stratum {
public:
    Stratum() = default;
    Stratum(std::initializer_list<IndexId> members);

    /// Sorts the input. Duplicate members raise InvalidArgument.
    static Stratum from_members(std::vector<IndexId> members);

    std::span<const IndexId> members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    IndexId front() const { return members_.front(); }

    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    bool contains(IndexId i) const noexcept;
    bool is_subset_of(const Stratum& other) const noexcept;
    bool intersects(const Stratum& other) const noexcept;

    Stratum united(const Stratum& other) const;
    Stratum intersected(const Stratum& other) const;
    Stratum without(const Stratum& other) const;
    Stratum with(IndexId i) const;

    /// All subsets, in shortlex order.
    std::vector<Stratum> subsets() const;

    /// Shortlex: by size, then lexicographically.
    std::strong_ordering operator<=>(const Stratum& other) const noexcept;
    bool operator==(const Stratum& other) const noexcept = default;

    std::string to_string() const;

private:
    std::vector<IndexId> members_;
};

struct StratumHash {
    std::size_t operator()(const Stratum& s) const noexcept;
};

/// Ordered set of strata; iteration order is the canonical shortlex order.
using StratumSet = std::set<Stratum>;

std::string to_string(const StratumSet& set);

}  // namespace strata
