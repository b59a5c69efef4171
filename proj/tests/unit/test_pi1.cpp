#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "strata/blowup.hpp"
#include "strata/error.hpp"
#include "strata/integer_matrix.hpp"
#include "strata/pi1.hpp"

using namespace strata;

namespace {

// Six-vertex projective plane.
StrataStructure projective_plane() {
    std::vector<Stratum> strata{{}};
    const std::vector<Stratum> triangles{{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                                         {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}};
    StratumSet all;
    for (const auto& t : triangles) {
        for (const auto& sub : t.subsets()) all.insert(sub);
    }
    return make_structure(3, {0, 1, 2, 3, 4, 5}, {all.begin(), all.end()});
}

// Free rank of H1 over Q from the Euler characteristic of the 2-complex.
std::size_t betti_one(const StrataStructure& s) {
    const auto h3 = truncate(s, 3);
    const auto edges = h3.level(2);
    const auto triangles = h3.level(3);
    std::vector<std::vector<Rational>> boundary;
    for (const auto& t : triangles) {
        std::vector<Rational> row(edges.size(), Rational(0));
        const auto m = t.members();
        const Stratum faces[3] = {{m[1], m[2]}, {m[0], m[2]}, {m[0], m[1]}};
        const int signs[3] = {1, -1, 1};
        for (int f = 0; f < 3; ++f) {
            const auto pos = std::find(edges.begin(), edges.end(), faces[f]) - edges.begin();
            row[static_cast<std::size_t>(pos)] = signs[f];
        }
        boundary.push_back(row);
    }
    const std::size_t cycles = edges.size() - h3.indices().size() + oracle::components(h3).size();
    return cycles - oracle::bareiss_rank(boundary);
}

std::size_t zeros(const std::vector<std::int64_t>& inv) {
    return static_cast<std::size_t>(std::count(inv.begin(), inv.end(), 0));
}

}  // namespace

TEST_CASE("edge_path_presentation examples", "[pi1]") {
    const auto hollow = edge_path_presentation(fixtures::boundary_triangle(), 0);
    CHECK(hollow.generators == std::vector<Stratum>{{1, 2}});
    CHECK(hollow.tree_edges == std::vector<Stratum>{{0, 1}, {0, 2}});
    CHECK(hollow.relators.empty());

    const auto full = edge_path_presentation(fixtures::full_triangle(), 0);
    CHECK(full.generators.size() == 1);
    REQUIRE(full.relators.size() == 1);
    CHECK(free_reduce(full.relators.front()).size() == 1);

    CHECK(edge_path_presentation(fixtures::chain3(), 0).generators.empty());
    CHECK_THROWS_AS(edge_path_presentation(make_structure(2, {0, 1}, {{}, {0}, {1}}), 0), Error);
    CHECK_THROWS_AS(edge_path_presentation(fixtures::chain3(), 9), Error);
}

TEST_CASE("generator count is |H(2)| - |H(1)| + 1", "[pi1]") {
    for (const auto& s : {fixtures::r1_structure(), fixtures::full_triangle(), projective_plane()}) {
        const auto p = edge_path_presentation(s, s.indices().front());
        CHECK(p.generators.size() == s.level(2).size() - s.indices().size() + 1);
        CHECK(p.relators.size() == s.level(3).size());
    }
}

TEST_CASE("path words", "[pi1]") {
    const auto p = edge_path_presentation(fixtures::boundary_triangle(), 0);
    CHECK(path_word(p, {0, 1, 2, 0}) == Word{1});
    CHECK(path_word(p, {0, 2, 1, 0}) == Word{-1});
    CHECK(path_word(p, {0, 1, 0}).empty());
    CHECK(inverse(Word{1, -2, 3}) == Word{-3, 2, -1});
    CHECK(free_reduce(Word{1, 2, -2, -1, 3}) == Word{3});
}

TEST_CASE("h1_invariants examples", "[pi1]") {
    CHECK(h1_invariants(fixtures::boundary_triangle()) == std::vector<std::int64_t>{0});
    const auto cone = blowup_sequence(3, parse_center_list("P[];P[0];P[0,1];S[0,1,2]"));
    CHECK(h1_invariants(cone.final_structure()).empty());
    CHECK(h1_invariants(fixtures::full_triangle()).empty());
    CHECK(h1_invariants(projective_plane()) == std::vector<std::int64_t>{2});
    CHECK(h1_invariants(StrataStructure::bare_germ(3)).empty());
}

TEST_CASE("h1 free rank agrees with the Euler characteristic oracle", "[pi1]") {
    std::vector<StrataStructure> cases{fixtures::boundary_triangle(), fixtures::full_triangle(),
                                       fixtures::r1_structure(), projective_plane(), fixtures::chain3()};
    // Two hollow triangles sharing an edge.
    cases.push_back(make_structure(3, {0, 1, 2, 3}, {{}, {0}, {1}, {2}, {3}, {0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}));
    for (const auto& s : cases) CHECK(zeros(h1_invariants(s)) == betti_one(s));
}

TEST_CASE("smith diagonal", "[pi1]") {
    IntegerMatrix m(2, 2);
    m(0, 0) = 2;
    m(0, 1) = 4;
    m(1, 0) = 6;
    m(1, 1) = 8;
    CHECK(smith_diagonal(m) == std::vector<BigInt>{2, 4});
    IntegerMatrix z(2, 3);
    CHECK(smith_diagonal(z).empty());
}

TEST_CASE("simply_connected_verdict examples", "[pi1]") {
    const auto cone = blowup_sequence(3, parse_center_list("P[];P[0];P[0,1];S[0,1,2]"));
    const auto v = simply_connected_verdict(cone.final_structure());
    CHECK(v.status == Pi1Status::SimplyConnected);
    CHECK(v.certificate == CertificateKind::Tietze);
    CHECK(replay_tietze(v.presentation, v.tietze));

    const auto hollow = simply_connected_verdict(fixtures::boundary_triangle());
    CHECK(hollow.status == Pi1Status::NotSimplyConnected);
    CHECK(hollow.witness_factor == std::int64_t{0});

    const auto point = simply_connected_verdict(make_structure(2, {0}, {{}, {0}}));
    CHECK(point.status == Pi1Status::SimplyConnected);
    CHECK(point.presentation.generators.empty());

    const auto rp2 = simply_connected_verdict(projective_plane());
    CHECK(rp2.status == Pi1Status::NotSimplyConnected);
    CHECK(rp2.witness_factor == std::int64_t{2});

    const auto split = simply_connected_verdict(make_structure(2, {0, 1}, {{}, {0}, {1}}));
    CHECK(split.status == Pi1Status::NotSimplyConnected);
    CHECK(split.components == 2);
}

TEST_CASE("verdicts depend only on H_3", "[pi1]") {
    const auto s = blowup_sequence(4, parse_center_list("P[];P[0];P[0,1];P[0,1,2];S[0,1,2,3]")).final_structure();
    const auto a = simply_connected_verdict(s);
    const auto b = simply_connected_verdict(truncate(s, 3));
    CHECK(a.status == b.status);
    CHECK(a.h1 == b.h1);
    CHECK(a.steps == b.steps);
}

TEST_CASE("tampered Tietze certificates do not replay", "[pi1]") {
    const auto s = fixtures::full_triangle();
    const auto v = simply_connected_verdict(s);
    REQUIRE(v.status == Pi1Status::SimplyConnected);
    REQUIRE_FALSE(v.tietze.steps.empty());
    auto bad = v.tietze;
    bad.steps.front().replacement = Word{1};
    CHECK_FALSE(replay_tietze(v.presentation, bad));
    CHECK_FALSE(replay_tietze(v.presentation, TietzeCertificate{}));
}

TEST_CASE("tietze budget exhaustion leaves the verdict unknown", "[pi1]") {
    const auto cone = blowup_sequence(3, parse_center_list("P[];P[0];P[0,1];S[0,1,2];S[0,3];S[1,3]"));
    const auto v = simply_connected_verdict(cone.final_structure(), 0);
    CHECK(v.status == Pi1Status::Unknown);
    CHECK(v.certificate == CertificateKind::None);
}

TEST_CASE("provenance verdict replays the trace", "[pi1]") {
    const auto t = blowup_sequence(3, parse_center_list("P[];P[0];P[0,1];S[0,1,2]"));
    const auto v = provenance_verdict(t, 2);
    CHECK(v.status == Pi1Status::SimplyConnected);
    CHECK(v.certificate == CertificateKind::BlowupProvenance);
    auto forged = t;
    forged.steps[3].structure = fixtures::boundary_triangle();
    CHECK_THROWS_AS(provenance_verdict(forged), Error);
}
