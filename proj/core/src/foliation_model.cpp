#include "strata/foliation_model.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include "strata/error.hpp"

namespace strata {

SymbolTable::SymbolTable(std::string unit_name) {
    symbols_.push_back({std::move(unit_name), SymbolKind::RealPositive});
}

std::size_t SymbolTable::add(std::string name, SymbolKind kind) {
    if (find(name)) throw Error(ErrorKind::InvalidArgument, "symbol '" + name + "' declared twice");
    symbols_.push_back({std::move(name), kind});
    return symbols_.size() - 1;
}

std::optional<std::size_t> SymbolTable::find(std::string_view name) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i].name == name) return i;
    }
    return std::nullopt;
}

const Residue& ResidueModel::residue(IndexId i) const {
    auto it = assignment.find(i);
    if (it == assignment.end()) {
        throw Error(ErrorKind::UnassignedComponent, "component " + std::to_string(i) + " has no residue");
    }
    return it->second;
}

void ResidueModel::assign(IndexId i, std::size_t symbol, Rational scale) {
    if (symbol >= table.size()) throw Error(ErrorKind::InvalidArgument, "unknown symbol");
    if (scale == 0) throw Error(ErrorKind::InvalidArgument, "residue scale must be nonzero");
    assignment[i] = Residue{symbol, std::move(scale)};
}

std::string_view stratum_class_name(StratumClass::Kind k) noexcept {
    switch (k) {
        case StratumClass::Kind::NodalCorner: return "nodal_corner";
        case StratumClass::Kind::RealSaddle: return "real_saddle";
        case StratumClass::Kind::Complex: return "complex";
        case StratumClass::Kind::TooSmall: return "too_small";
    }
    return "unknown";
}

bool ratio_is_real(const ResidueModel& m, IndexId i, IndexId j) {
    const Residue& a = m.residue(i);
    const Residue& b = m.residue(j);
    if (a.symbol == b.symbol) return true;
    return m.table.at(a.symbol).kind == SymbolKind::RealPositive &&
           m.table.at(b.symbol).kind == SymbolKind::RealPositive;
}

StratumClass classify_stratum(const ResidueModel& m, const Stratum& j) {
    for (IndexId i : j) m.residue(i);
    if (j.size() <= 1) return {StratumClass::Kind::TooSmall, {}};
    auto members = j.members();
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            if (!ratio_is_real(m, members[a], members[b])) return {StratumClass::Kind::Complex, {}};
        }
    }
    std::vector<IndexId> plus, minus;
    for (IndexId i : j) (m.residue(i).scale > 0 ? plus : minus).push_back(i);
    if (plus.empty() || minus.empty()) return {StratumClass::Kind::RealSaddle, {}};
    return {StratumClass::Kind::NodalCorner,
            {Stratum::from_members(std::move(plus)), Stratum::from_members(std::move(minus))}};
}

NodalData derive_nodal_data(const StrataStructure& s, const ResidueModel& m) {
    for (IndexId i : s.indices()) m.residue(i);
    NodalData n;
    for (const auto& j : s.strata()) {
        if (j.size() < 2) continue;
        StratumClass c = classify_stratum(m, j);
        if (c.kind == StratumClass::Kind::NodalCorner) n.entries.emplace(j, std::move(c.partition));
    }
    return n;
}

ResonanceResult resonance_check(const ResidueModel& m, const Stratum& j) {
    for (IndexId i : j) m.residue(i);
    auto members = j.members();
    ResonanceResult out;
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            const Residue& ra = m.residue(members[a]);
            const Residue& rb = m.residue(members[b]);
            if (ra.symbol != rb.symbol || (ra.scale > 0) == (rb.scale > 0)) continue;
            using boost::multiprecision::denominator;
            using boost::multiprecision::numerator;
            BigInt ma = abs(numerator(rb.scale)) * denominator(ra.scale);
            BigInt mb = abs(numerator(ra.scale)) * denominator(rb.scale);
            const BigInt g = boost::integer::gcd(ma, mb);
            ma /= g;
            mb /= g;
            if (Rational(ma) * ra.scale + Rational(mb) * rb.scale != 0) {
                throw std::logic_error("resonance witness does not cancel");
            }
            out.resonant = true;
            out.witness.assign(members.size(), BigInt(0));
            out.witness[a] = ma;
            out.witness[b] = mb;
            return out;
        }
    }
    return out;
}

SimpleCornerResult is_gh_simple_corner(const ResidueModel& m, const Stratum& j) {
    const ResonanceResult r = resonance_check(m, j);
    if (!r.resonant) return {true, ""};
    std::string pair;
    auto members = j.members();
    for (std::size_t t = 0; t < members.size(); ++t) {
        if (r.witness[t] == 0) continue;
        if (!pair.empty()) pair += ",";
        pair += std::to_string(members[t]);
    }
    return {false, "radial/dicritical-type resonance between components {" + pair +
                       "}: outside the generalized-hypersurface hypothesis"};
}

std::int64_t nodal_reduction_steps(const Rational& lambda) {
    if (lambda <= 0) throw Error(ErrorKind::NonPositive, "transversal eigenvalue must be positive");
    const BigInt p = boost::multiprecision::numerator(lambda);
    const BigInt q = boost::multiprecision::denominator(lambda);
    const BigInt k = (p + q - 1) / q;
    return k.convert_to<std::int64_t>();
}

}  // namespace strata
