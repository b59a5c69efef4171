#include "strata/parity.hpp"

#include <algorithm>
#include <deque>

#include "strata/error.hpp"

namespace strata {

std::vector<IndexId> ParityColoring::members(Parity p) const {
    std::vector<IndexId> out;
    for (const auto& [i, side_of] : side) {
        if (side_of == p) out.push_back(i);
    }
    return out;
}

std::string_view connectivity_claim_name(ConnectivityClaim c) noexcept {
    switch (c) {
        case ConnectivityClaim::BlowupProvenance: return "blowup_provenance";
        case ConnectivityClaim::Pi1Verdict: return "pi1_verdict";
        case ConnectivityClaim::Unverified: return "unverified";
    }
    return "unknown";
}

std::size_t crossing_count(const StrataStructure& s, const StratumSet& block, const KPath& path) {
    if (path.k != 1 || !is_k_path(s, path)) throw Error(ErrorKind::NotAPath, "not a 1-path");
    std::size_t count = 0;
    for (const auto& edge : path.subsupport()) {
        if (block.count(edge)) ++count;
    }
    return count;
}

ColoringResult block_parity_coloring(const StrataStructure& s, const StratumSet& block,
                                     IndexId base) {
    if (!s.has_index(base)) {
        throw Error(ErrorKind::UnknownIndex, "index " + std::to_string(base) + " not in I");
    }
    if (!is_one_connected(s)) throw Error(ErrorKind::NotConnected, "structure is not 1-connected");
    ParityColoring coloring{base, block, {}};
    coloring.side[base] = Parity::Even;
    std::deque<IndexId> queue{base};
    std::optional<ParityInconsistent> conflict;
    while (!queue.empty()) {
        const IndexId cur = queue.front();
        queue.pop_front();
        for (IndexId nb : s.neighbors(cur)) {
            const bool flips = block.count(Stratum::from_members({cur, nb})) != 0;
            const Parity expected =
                static_cast<Parity>(static_cast<std::uint8_t>(coloring.side[cur]) ^ (flips ? 1 : 0));
            auto it = coloring.side.find(nb);
            if (it == coloring.side.end()) {
                coloring.side[nb] = expected;
                queue.push_back(nb);
            } else if (it->second != expected && !conflict) {
                conflict = ParityInconsistent{std::min(cur, nb), std::max(cur, nb)};
            }
        }
    }
    if (conflict) return *conflict;
    return coloring;
}

ComponentReport components_by_parity(const StrataStructure& s, const NodalData& n,
                                     ConnectivityClaim claim) {
    const SeparatorReport sep = separating_blocks(s, n);
    if (s.indices().empty()) throw Error(ErrorKind::NotConnected, "structure has no components");
    ComponentReport report;
    report.blocks = sep.blocks.size();
    report.separating = sep.separating_count();
    report.claim = claim;
    const IndexId base = s.indices().front();
    for (IndexId i : s.indices()) report.phi.table[i] = {};
    for (const auto& members : sep.separating_blocks()) {
        StratumSet block(members.begin(), members.end());
        auto coloring = block_parity_coloring(s, block, base);
        if (auto* bad = std::get_if<ParityInconsistent>(&coloring)) {
            throw Error(ErrorKind::ParityInconsistent,
                        "parity flips inconsistently at {" + std::to_string(bad->from) + "," +
                            std::to_string(bad->to) + "}");
        }
        const auto& colors = std::get<ParityColoring>(coloring);
        for (auto& [i, bits] : report.phi.table) {
            bits.push_back(static_cast<std::uint8_t>(colors.side.at(i)));
        }
        report.phi.blocks.push_back(std::move(block));
    }
    std::map<std::vector<std::uint8_t>, std::vector<IndexId>> fibres;
    for (const auto& [i, bits] : report.phi.table) fibres[bits].push_back(i);
    for (auto& [bits, members] : fibres) report.components.push_back(std::move(members));
    std::sort(report.components.begin(), report.components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return report;
}

std::vector<std::vector<IndexId>> components_by_search(const StrataStructure& residual) {
    return index_components(residual);
}

}  // namespace strata
