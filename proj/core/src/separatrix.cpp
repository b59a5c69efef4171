#include "strata/separatrix.hpp"

#include <algorithm>
#include <deque>

#include "strata/error.hpp"

namespace strata {

FoliatedModel make_model(StrataStructure structure, std::optional<NodalData> nodal,
                         std::optional<ResidueModel> residues, std::vector<TraceComponent> traces) {
    NodalData n;
    if (nodal) {
        n = std::move(*nodal);
    } else if (residues) {
        n = derive_nodal_data(structure, *residues);
    }
    require_valid_nodal_data(structure, n);
    for (const auto& t : traces) {
        if (!structure.has_index(t.host)) {
            throw Error(ErrorKind::UnknownIndex,
                        "trace '" + t.id + "' hosted on unknown component " + std::to_string(t.host));
        }
    }
    return FoliatedModel{std::move(structure), std::move(n), std::move(residues), std::move(traces)};
}

std::vector<PartialSeparatrix> partial_separatrices(const FoliatedModel& m) {
    std::map<std::string, std::size_t> position;
    for (std::size_t t = 0; t < m.traces.size(); ++t) {
        if (!position.emplace(m.traces[t].id, t).second) {
            throw Error(ErrorKind::InvalidArgument, "trace id '" + m.traces[t].id + "' repeated");
        }
    }
    std::vector<std::set<std::size_t>> adj(m.traces.size());
    for (std::size_t t = 0; t < m.traces.size(); ++t) {
        for (const auto& other : m.traces[t].adjacent) {
            auto it = position.find(other);
            if (it == position.end()) {
                throw Error(ErrorKind::DanglingAdjacency,
                            "trace '" + m.traces[t].id + "' refers to unknown trace '" + other + "'");
            }
            adj[t].insert(it->second);
            adj[it->second].insert(t);
        }
    }
    std::vector<bool> seen(m.traces.size(), false);
    std::vector<PartialSeparatrix> out;
    // Visit in id order so that the output order is by least id.
    for (const auto& [id, start] : position) {
        if (seen[start]) continue;
        PartialSeparatrix sep;
        std::deque<std::size_t> queue{start};
        seen[start] = true;
        while (!queue.empty()) {
            const std::size_t cur = queue.front();
            queue.pop_front();
            sep.traces.push_back(m.traces[cur].id);
            sep.hosts.insert(m.traces[cur].host);
            for (std::size_t nb : adj[cur]) {
                if (!seen[nb]) {
                    seen[nb] = true;
                    queue.push_back(nb);
                }
            }
        }
        std::sort(sep.traces.begin(), sep.traces.end());
        out.push_back(std::move(sep));
    }
    return out;
}

ComponentMap component_map(const FoliatedModel& m, ComponentMode mode) {
    const SeparatorReport sep = separating_blocks(m.structure, m.nodal);
    const auto searched = components_by_search(sep.residual);
    ComponentMap out;
    if (mode == ComponentMode::Parity) {
        const ComponentReport parity =
            components_by_parity(m.structure, m.nodal, ConnectivityClaim::Unverified);
        out.components = parity.components;
        out.oracle_agrees = parity.components == searched;
    } else {
        out.components = searched;
    }
    for (std::size_t c = 0; c < out.components.size(); ++c) {
        for (IndexId i : out.components[c]) out.component_of[i] = c;
    }
    return out;
}

bool CoverageReport::all_pass() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.pass; });
}

std::vector<std::vector<IndexId>> CoverageReport::uncovered() const {
    std::vector<std::vector<IndexId>> out;
    for (const auto& v : verdicts) {
        if (!v.pass) out.push_back(v.members);
    }
    return out;
}

CoverageReport camacho_sad_check(const FoliatedModel& m, ComponentMode mode) {
    const ComponentMap map = component_map(m, mode);
    CoverageReport report;
    report.separatrices = partial_separatrices(m);
    for (std::size_t c = 0; c < map.components.size(); ++c) {
        report.verdicts.push_back({c, map.components[c], false, {}});
    }
    for (std::size_t k = 0; k < report.separatrices.size(); ++k) {
        const auto& sep = report.separatrices[k];
        std::set<std::size_t> touched;
        for (IndexId h : sep.hosts) touched.insert(map.component_of.at(h));
        if (touched.size() > 1) {
            throw Error(ErrorKind::SeparatrixSpansComponents,
                        "partial separatrix containing '" + sep.traces.front() +
                            "' meets several components of the divisor minus the separator");
        }
        if (touched.empty()) continue;
        auto& verdict = report.verdicts[*touched.begin()];
        verdict.pass = true;
        verdict.covering.push_back(k);
    }
    return report;
}

std::vector<std::vector<IndexId>> components_outside(const StrataStructure& s, const StratumSet& a) {
    std::vector<Stratum> kept;
    for (const auto& j : s.strata()) {
        if (j.size() <= 1 || (j.size() == 2 && !a.count(j))) kept.push_back(j);
    }
    return index_components(StrataStructure(s.dimension(), s.indices(), std::move(kept)));
}

bool connected_outside(const StrataStructure& s, const StratumSet& a, IndexId i, IndexId j) {
    for (IndexId x : {i, j}) {
        if (!s.has_index(x)) throw Error(ErrorKind::UnknownIndex, "index " + std::to_string(x) + " not in I");
    }
    for (const auto& e : a) {
        if (e.size() != 2 || !s.contains(e)) {
            throw Error(ErrorKind::InvalidArgument, e.to_string() + " is not in H(2)");
        }
    }
    if (i == j) return true;
    std::set<IndexId> seen{i};
    std::deque<IndexId> queue{i};
    while (!queue.empty()) {
        const IndexId cur = queue.front();
        queue.pop_front();
        for (IndexId nb : s.neighbors(cur)) {
            if (seen.count(nb) || a.count(Stratum::from_members({cur, nb}))) continue;
            if (nb == j) return true;
            seen.insert(nb);
            queue.push_back(nb);
        }
    }
    return false;
}

NodSepReport nod_vs_sep_equivalence(const StrataStructure& s, const NodalData& n) {
    const SeparatorReport sep = separating_blocks(s, n);
    const StratumSet nod2 = n.level_two();
    NodSepReport report;
    report.nod_components = components_outside(s, nod2);
    report.sep_components = components_outside(s, sep.separator_set);

    std::map<IndexId, std::size_t> nod_of, sep_of;
    for (std::size_t c = 0; c < report.nod_components.size(); ++c) {
        for (IndexId i : report.nod_components[c]) nod_of[i] = c;
    }
    for (std::size_t c = 0; c < report.sep_components.size(); ++c) {
        for (IndexId i : report.sep_components[c]) sep_of[i] = c;
    }
    const auto& ids = s.indices();
    for (std::size_t a = 0; a < ids.size(); ++a) {
        for (std::size_t b = a + 1; b < ids.size(); ++b) {
            const bool outside_nod = connected_outside(s, nod2, ids[a], ids[b]);
            const bool outside_sep = connected_outside(s, sep.separator_set, ids[a], ids[b]);
            if (outside_nod != outside_sep) report.failing_pairs.emplace_back(ids[a], ids[b]);
        }
    }
    if (!report.failing_pairs.empty()) return report;

    std::vector<bool> hit(report.sep_components.size(), false);
    bool ok = report.nod_components.size() == report.sep_components.size();
    for (const auto& comp : report.nod_components) {
        const std::size_t target = sep_of.at(comp.front());
        for (IndexId i : comp) ok = ok && sep_of.at(i) == target;
        ok = ok && !hit[target];
        hit[target] = true;
        report.bijection.push_back(target);
    }
    report.bijection_valid = ok && std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
    return report;
}

}  // namespace strata
