#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "walks.hpp"
#include "strata/blowup.hpp"
#include "strata/corpus.hpp"
#include "strata/homotopy.hpp"
#include "strata/parity.hpp"
#include "strata/pi1.hpp"
#include "strata/separatrix.hpp"

using namespace strata;

namespace {

constexpr std::size_t kInstances = 120;

const std::vector<CorpusInstance>& corpus() {
    static const std::vector<CorpusInstance> instances = [] {
        std::vector<CorpusInstance> out;
        for (std::size_t k = 0; k < kInstances; ++k) out.push_back(make_corpus_instance(instance_seed(99, k)));
        return out;
    }();
    return instances;
}

}  // namespace

TEST_CASE("corpus generation is deterministic", "[property]") {
    const auto a = make_corpus_instance(42);
    const auto b = make_corpus_instance(42);
    CHECK(a.trace.centers() == b.trace.centers());
    CHECK(a.model.nodal.strata() == b.model.nodal.strata());
    CHECK(a.model.traces.size() == b.model.traces.size());
}

TEST_CASE("blow-ups add one index and keep every old singleton", "[property]") {
    for (const auto& inst : corpus()) {
        const auto structures = inst.trace.structures();
        for (std::size_t t = 0; t < inst.trace.steps.size(); ++t) {
            const auto& before = structures[t];
            const auto& after = structures[t + 1];
            const IndexId fresh = inst.trace.steps[t].fresh_index;
            CHECK(after.indices().size() == before.indices().size() + 1);
            CHECK(after.contains(Stratum{fresh}));
            for (IndexId i : before.indices()) CHECK(after.contains(Stratum{i}));
            CHECK(oracle::is_valid(after));

            const auto data = compute_center_data(before, inst.trace.steps[t].center);
            for (const auto& z : data.z_set) CHECK_FALSE(data.b_set.count(z));
            // The strata of H_2 meeting the center form a 1-connected family.
            std::vector<IndexId> ids;
            for (const auto& j : data.a_set) {
                if (j.size() == 1) ids.push_back(j.front());
            }
            const StrataStructure a(before.dimension(), ids, {data.a_set.begin(), data.a_set.end()});
            if (!ids.empty()) CHECK(oracle::components(a).size() == 1);
        }
    }
}

TEST_CASE("every corpus structure is simply connected with a replayable certificate", "[property]") {
    for (std::size_t k = 0; k < 40; ++k) {
        const auto& inst = corpus()[k];
        for (const auto& s : inst.trace.structures()) {
            const auto v = simply_connected_verdict(s);
            REQUIRE(v.status == Pi1Status::SimplyConnected);
            CHECK(v.h1.empty());
            CHECK(replay_tietze(v.presentation, v.tietze));
        }
    }
}

TEST_CASE("nodal structure laws on the corpus", "[property]") {
    for (const auto& inst : corpus()) {
        const auto& s = inst.model.structure;
        const auto& n = inst.model.nodal;
        REQUIRE(validate_nodal_data(s, n).valid());

        const auto u = uninterrupted_set(s, n);
        CHECK(closure(s, u) == u);
        for (const auto& j : u) CHECK(n.contains(j));

        const auto rep = separating_blocks(s, n);
        for (std::size_t a = 0; a < rep.blocks.size(); ++a) {
            const StratumSet ca = closure(s, {rep.blocks[a].members.begin(), rep.blocks[a].members.end()});
            for (std::size_t b = a + 1; b < rep.blocks.size(); ++b) {
                const StratumSet cb = closure(s, {rep.blocks[b].members.begin(), rep.blocks[b].members.end()});
                for (const auto& j : ca) CHECK_FALSE(cb.count(j));
            }
        }
        for (IndexId i : s.indices()) CHECK(rep.residual.contains(Stratum{i}));
        StratumSet level2;
        for (const auto& j : closure(s, rep.separator_set)) {
            if (j.size() == 2) level2.insert(j);
        }
        CHECK(level2 == rep.separator_set);
    }
}

TEST_CASE("component count equals separating blocks plus one", "[property]") {
    for (const auto& inst : corpus()) {
        const auto& m = inst.model;
        const auto report = components_by_parity(m.structure, m.nodal, ConnectivityClaim::BlowupProvenance);
        const auto residual = separating_blocks(m.structure, m.nodal).residual;
        CHECK(report.components == components_by_search(residual));
        CHECK(report.components == oracle::components(residual));
        CHECK(report.count_matches());
        CHECK(component_map(m).oracle_agrees);
    }
}

TEST_CASE("nod and sep connectivity agree on the corpus", "[property]") {
    for (const auto& inst : corpus()) {
        const auto r = nod_vs_sep_equivalence(inst.model.structure, inst.model.nodal);
        CHECK(r.failing_pairs.empty());
        CHECK(r.bijection_valid);
    }
}

TEST_CASE("coverage passes on generated traces and fails after deletion", "[property]") {
    for (const auto& inst : corpus()) {
        const auto report = camacho_sad_check(inst.model);
        REQUIRE(report.all_pass());
        // Drop every trace hosted in the last component.
        auto pruned = inst.model;
        const auto map = component_map(pruned);
        const std::size_t victim = map.components.size() - 1;
        std::set<std::string> removed;
        for (const auto& t : pruned.traces) {
            if (map.component_of.at(t.host) == victim) removed.insert(t.id);
        }
        std::erase_if(pruned.traces, [&](const TraceComponent& t) { return removed.count(t.id) != 0; });
        for (auto& t : pruned.traces) {
            std::erase_if(t.adjacent, [&](const std::string& id) { return removed.count(id) != 0; });
        }
        const auto after = camacho_sad_check(pruned);
        CHECK_FALSE(after.all_pass());
        CHECK(after.uncovered() == std::vector<std::vector<IndexId>>{map.components[victim]});
    }
}

TEST_CASE("crossing counts are additive, reversal invariant and parity-consistent", "[property]") {
    Rng rng(4);
    for (std::size_t k = 0; k < 60; ++k) {
        const auto& m = corpus()[k].model;
        const auto& s = m.structure;
        const auto rep = separating_blocks(s, m.nodal);
        for (const auto& block : rep.separating_blocks()) {
            const StratumSet b(block.begin(), block.end());
            const IndexId base = s.indices()[rng.index(s.indices().size())];
            const auto coloring = block_parity_coloring(s, b, base);
            REQUIRE(std::holds_alternative<ParityColoring>(coloring));
            const auto& c = std::get<ParityColoring>(coloring);
            for (int trial = 0; trial < 10; ++trial) {
                const auto p1 = KPath::from_vertices(walks::random_walk(s, base, rng.index(8), rng));
                const auto p2 = KPath::from_vertices(walks::random_walk(s, p1.back().front(), rng.index(8), rng));
                const auto joined = p1.composed(p2);
                CHECK(crossing_count(s, b, joined) == crossing_count(s, b, p1) + crossing_count(s, b, p2));
                CHECK(crossing_count(s, b, p1.reversed()) == crossing_count(s, b, p1));
                const bool odd = crossing_count(s, b, p1) % 2 == 1;
                CHECK(odd == (c.side.at(p1.back().front()) == Parity::Odd));
            }
        }
    }
}

TEST_CASE("k-connected components are exhaustively joinable", "[property]") {
    for (std::size_t k = 0; k < 40; ++k) {
        const auto& s = corpus()[k].model.structure;
        const auto level = s.level(2);
        if (level.empty() || level.size() > 8) continue;
        const StratumSet a(level.begin(), level.end());
        const auto comps = k_connected_components(s, a, 2);
        std::size_t total = 0;
        std::map<Stratum, std::size_t> block_of;
        for (std::size_t c = 0; c < comps.size(); ++c) {
            total += comps[c].size();
            for (const auto& j : comps[c]) block_of[j] = c;
        }
        CHECK(total == a.size());
        CHECK(block_of.size() == a.size());
        // Two strata are in one block iff they are joined by a chain of
        // adjacent pairs, computed here by transitive closure.
        std::vector<Stratum> v(a.begin(), a.end());
        const std::size_t n = v.size();
        std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                const auto u = v[x].united(v[y]);
                reach[x][y] = x == y || (u.size() == 3 && s.contains(u));
            }
        }
        for (std::size_t m = 0; m < n; ++m) {
            for (std::size_t x = 0; x < n; ++x) {
                for (std::size_t y = 0; y < n; ++y) reach[x][y] = reach[x][y] || (reach[x][m] && reach[m][y]);
            }
        }
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) CHECK(reach[x][y] == (block_of[v[x]] == block_of[v[y]]));
        }
    }
}

TEST_CASE("homotopy moves replay exactly", "[property]") {
    Rng rng(8);
    for (std::size_t k = 0; k < 30; ++k) {
        const auto& s = corpus()[k].model.structure;
        if (s.indices().size() > 6) continue;
        const IndexId a = s.indices()[rng.index(s.indices().size())];
        const IndexId b = s.indices()[rng.index(s.indices().size())];
        const auto p1 = KPath::from_vertices(walks::random_path_between(s, a, b, rng.index(3), rng));
        const auto p2 = KPath::from_vertices(walks::random_path_between(s, a, b, rng.index(3), rng));
        const auto r = elementary_homotopy_search(s, p1, p2, singletons(s), {20000, {}});
        if (r.equivalent) CHECK(replay_homotopy(s, p1.vertices(), r.moves) == p2.vertices());
    }
}
