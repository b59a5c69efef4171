#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strata/nodal.hpp"
#include "strata/rational.hpp"
#include "strata/strata_structure.hpp"

namespace strata {

enum class SymbolKind { RealPositive, NonReal };

struct Symbol {
    std::string name;
    SymbolKind kind;
};

/// Symbolic residue values. Declared semantics: real symbols are positive
/// reals, all symbols together are linearly independent over Q, and any
/// ratio involving a non-real symbol (other than with itself) is non-real.
/// Symbol 0 is the unit 1.
class SymbolTable {
public:
    explicit SymbolTable(std::string unit_name = "one");

    std::size_t add(std::string name, SymbolKind kind);
    std::optional<std::size_t> find(std::string_view name) const;

    const Symbol& at(std::size_t i) const { return symbols_.at(i); }
    std::size_t size() const noexcept { return symbols_.size(); }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

private:
    std::vector<Symbol> symbols_;
};

/// Residue scale·symbol along one divisor component; scale is nonzero.
struct Residue {
    std::size_t symbol;
    Rational scale;
};

struct ResidueModel {
    SymbolTable table;
    std::map<IndexId, Residue> assignment;

    /// Throws UnassignedComponent.
    const Residue& residue(IndexId i) const;
    /// Adds a residue; throws InvalidArgument for a zero scale or unknown symbol.
    void assign(IndexId i, std::size_t symbol, Rational scale);
};

struct StratumClass {
    enum class Kind { NodalCorner, RealSaddle, Complex, TooSmall };
    Kind kind;
    SignPartition partition;  // NodalCorner only: plus = positive scales
};

std::string_view stratum_class_name(StratumClass::Kind k) noexcept;

/// Whether λ_i/λ_j is real: both symbols real, or the same symbol.
bool ratio_is_real(const ResidueModel& m, IndexId i, IndexId j);

StratumClass classify_stratum(const ResidueModel& m, const Stratum& j);

/// Nodal strata of H with the residue sign partitions.
NodalData derive_nodal_data(const StrataStructure& s, const ResidueModel& m);

struct ResonanceResult {
    bool resonant = false;
    /// Nonnegative coefficients over the members of J, in member order, with
    /// Σ m_i λ_i = 0 exactly.
    std::vector<BigInt> witness;
};

ResonanceResult resonance_check(const ResidueModel& m, const Stratum& j);

struct SimpleCornerResult {
    bool simple = true;
    std::string diagnostic;
};

SimpleCornerResult is_gh_simple_corner(const ResidueModel& m, const Stratum& j);

/// The unique k with k - 1 < λ <= k. Throws NonPositive for λ <= 0.
std::int64_t nodal_reduction_steps(const Rational& lambda);

}  // namespace strata
