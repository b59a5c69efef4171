#include "strata/nodal.hpp"

#include <algorithm>

#include "strata/error.hpp"

namespace strata {

StratumSet NodalData::strata() const {
    StratumSet out;
    for (const auto& [j, p] : entries) out.insert(j);
    return out;
}

StratumSet NodalData::level_two() const {
    StratumSet out;
    for (const auto& [j, p] : entries) {
        if (j.size() == 2) out.insert(j);
    }
    return out;
}

std::string_view nodal_violation_kind_name(NodalViolationKind kind) noexcept {
    switch (kind) {
        case NodalViolationKind::NotInStructure: return "not_in_structure";
        case NodalViolationKind::BadPartition: return "bad_partition";
        case NodalViolationKind::MissingSubset: return "missing_subset";
        case NodalViolationKind::SpuriousSubset: return "spurious_subset";
        case NodalViolationKind::PartitionMismatch: return "partition_mismatch";
    }
    return "unknown";
}

std::string NodalValidationReport::to_string() const {
    if (valid()) return "valid";
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) out += "; ";
        out += std::string(nodal_violation_kind_name(v.kind)) + " " + v.stratum.to_string();
        if (v.parent != v.stratum) out += " under " + v.parent.to_string();
    }
    return out;
}

NodalValidationReport validate_nodal_data(const StrataStructure& s, const NodalData& n) {
    NodalValidationReport report;
    auto& out = report.violations;
    for (const auto& [j, p] : n.entries) {
        if (!s.contains(j)) out.push_back({NodalViolationKind::NotInStructure, j, j});
        if (p.plus.empty() || p.minus.empty() || p.plus.intersects(p.minus) ||
            p.plus.united(p.minus) != j) {
            out.push_back({NodalViolationKind::BadPartition, j, j});
            continue;
        }
        for (const auto& sub : j.subsets()) {
            if (sub == j) continue;
            const SignPartition restricted{sub.intersected(p.plus), sub.intersected(p.minus)};
            const bool both_signs = !restricted.plus.empty() && !restricted.minus.empty();
            auto it = n.entries.find(sub);
            if (both_signs && it == n.entries.end()) {
                out.push_back({NodalViolationKind::MissingSubset, sub, j});
            } else if (!both_signs && it != n.entries.end()) {
                out.push_back({NodalViolationKind::SpuriousSubset, sub, j});
            } else if (both_signs && !it->second.same_as(restricted)) {
                out.push_back({NodalViolationKind::PartitionMismatch, sub, j});
            }
        }
    }
    return report;
}

void require_valid_nodal_data(const StrataStructure& s, const NodalData& n) {
    auto report = validate_nodal_data(s, n);
    if (!report.valid()) throw Error(ErrorKind::InvalidNodalData, report.to_string());
}

StratumSet uninterrupted_set(const StrataStructure& s, const NodalData& n) {
    require_valid_nodal_data(s, n);
    StratumSet out;
    for (const auto& [j, p] : n.entries) {
        const auto up = closure(s, {j});
        if (std::all_of(up.begin(), up.end(), [&](const Stratum& k) { return n.contains(k); })) {
            out.insert(j);
        }
    }
    return out;
}

std::vector<std::vector<Stratum>> nodal_blocks(const StrataStructure& s, const NodalData& n) {
    require_valid_nodal_data(s, n);
    return k_connected_components(s, n.level_two(), 2);
}

std::size_t SeparatorReport::separating_count() const {
    return static_cast<std::size_t>(
        std::count_if(blocks.begin(), blocks.end(), [](const NodalBlock& b) { return b.separating; }));
}

std::vector<std::vector<Stratum>> SeparatorReport::separating_blocks() const {
    std::vector<std::vector<Stratum>> out;
    for (const auto& b : blocks) {
        if (b.separating) out.push_back(b.members);
    }
    return out;
}

SeparatorReport separating_blocks(const StrataStructure& s, const NodalData& n) {
    const StratumSet star = uninterrupted_set(s, n);
    std::vector<NodalBlock> blocks;
    StratumSet separator;
    for (auto& members : nodal_blocks(s, n)) {
        const StratumSet as_set(members.begin(), members.end());
        const StratumSet cl = closure(s, as_set);
        auto inside = [](const StratumSet& sub, auto&& pred) {
            return std::all_of(sub.begin(), sub.end(), pred);
        };
        const bool a = inside(as_set, [&](const Stratum& j) { return star.count(j) != 0; });
        const bool b = inside(cl, [&](const Stratum& j) { return n.contains(j); });
        const bool c = inside(cl, [&](const Stratum& j) { return star.count(j) != 0; });
        if (a != b || b != c) {
            throw Error(ErrorKind::EquivalenceViolation,
                        "separating-block characterizations disagree on block starting at " +
                            members.front().to_string());
        }
        if (a) separator.insert(members.begin(), members.end());
        blocks.push_back({std::move(members), a});
    }
    const StratumSet removed = closure(s, separator);
    std::vector<Stratum> kept;
    for (const auto& j : s.strata()) {
        if (!removed.count(j)) kept.push_back(j);
    }
    return SeparatorReport{std::move(blocks), std::move(separator),
                           StrataStructure(s.dimension(), s.indices(), std::move(kept), s.names())};
}

}  // namespace strata
