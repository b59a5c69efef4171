#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "strata/rational.hpp"

namespace strata {

/// A subspace of covectors at a point of a 3-fold (or higher), given by
/// spanning rows. The first e coordinates are the divisor equations.
struct CovectorSpace {
    std::size_t n = 3;
    std::size_t e = 1;
    std::vector<std::vector<Rational>> rows;
};

/// Throws InvalidArgument unless 1 <= e <= n and every row has n entries.
void check_covector_space(const CovectorSpace& u);

/// Rank of a rational matrix by exact elimination.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);

/// d = n - rank(u).
std::size_t strict_tangent_dimension(const CovectorSpace& u);

/// t_J = dim(rowspan(u) ∩ span{dx_j : j in J}); J holds 1-based coordinate
/// labels in 1..e. Throws IndexOutOfRange.
std::size_t t_value(const CovectorSpace& u, const std::vector<std::size_t>& j);

struct TSequence {
    std::vector<std::size_t> values;
    /// Realizing chain J_1 ⊋ J_2 ⊋ ... ⊋ J_e, J_1 = {1..e}.
    std::vector<std::vector<std::size_t>> chain;
};

/// Lexicographic maximum of t_σ over all e! maximal chains.
TSequence t_sequence(const CovectorSpace& u);

/// θ = t_{1..e}.
std::size_t theta(const CovectorSpace& u);

/// ζ in 0..3; throws UnclassifiedTSequence outside the dimension-three table.
int zeta(const CovectorSpace& u);

struct ControlInvariant {
    std::size_t nu = 0;
    std::size_t d = 0;
    int zeta = 0;

    auto operator<=>(const ControlInvariant&) const = default;
    std::string to_string() const;
};

/// Locally simple iff I_max <= (1,2,0).
inline constexpr ControlInvariant kSimpleThreshold{1, 2, 0};

std::strong_ordering compare_invariants(const ControlInvariant& a, const ControlInvariant& b);

/// (ν, d, ζ); (0,0,0) when ν = 0 (the point is off the hypersurface).
ControlInvariant control_invariant(const CovectorSpace& u, std::size_t nu);

}  // namespace strata
