#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "strata/error.hpp"
#include "strata/separatrix.hpp"

using namespace strata;
using fixtures::thrown_kind;

namespace {

FoliatedModel r2_model(std::vector<TraceComponent> traces) {
    return make_model(fixtures::full_triangle(), std::nullopt, fixtures::r2_residues(), std::move(traces));
}

FoliatedModel r1_model(std::vector<TraceComponent> traces = {}) {
    return make_model(fixtures::r1_structure(), std::nullopt, fixtures::r1_residues(), std::move(traces));
}

}  // namespace

TEST_CASE("partial_separatrices examples", "[separatrix]") {
    const auto apart = partial_separatrices(r2_model({{"t1", 0, {}}, {"t2", 2, {}}}));
    REQUIRE(apart.size() == 2);
    CHECK(apart[0].traces == std::vector<std::string>{"t1"});

    const auto joined = partial_separatrices(r2_model({{"t1", 0, {"t2"}}, {"t2", 2, {}}}));
    REQUIRE(joined.size() == 1);
    CHECK(joined[0].hosts == std::set<IndexId>{0, 2});
    CHECK(joined[0].traces == std::vector<std::string>{"t1", "t2"});

    CHECK(partial_separatrices(r2_model({})).empty());

    CHECK(thrown_kind([] { partial_separatrices(r2_model({{"t1", 0, {"t9"}}})); }) ==
          ErrorKind::DanglingAdjacency);
}

TEST_CASE("make_model validates hosts and nodal data", "[separatrix]") {
    CHECK(thrown_kind([] { r2_model({{"t1", 7, {}}}); }) == ErrorKind::UnknownIndex);
    NodalData bad;
    bad.entries[{0, 1, 2}] = {{0, 1}, {2}};
    CHECK(thrown_kind([&] { make_model(fixtures::full_triangle(), bad, std::nullopt, {}); }) ==
          ErrorKind::InvalidNodalData);
}

TEST_CASE("component_map examples", "[separatrix]") {
    const auto r2 = component_map(r2_model({}));
    CHECK(r2.component_of == std::map<IndexId, std::size_t>{{0, 0}, {1, 0}, {2, 1}});
    CHECK(r2.oracle_agrees);

    const auto r1 = component_map(r1_model());
    CHECK(r1.components.size() == 1);
    CHECK(r1.component_of.size() == 4);

    const auto empty = component_map(make_model(fixtures::chain3(), NodalData{}, std::nullopt, {}));
    CHECK(empty.components.size() == 1);

    const auto search = component_map(r2_model({}), ComponentMode::SearchOnly);
    CHECK(search.components == r2.components);
}

TEST_CASE("camacho_sad_check examples", "[separatrix]") {
    const auto both = camacho_sad_check(r2_model({{"t1", 0, {}}, {"t2", 2, {}}}));
    CHECK(both.all_pass());
    CHECK(both.verdicts.size() == 2);

    const auto one = camacho_sad_check(r2_model({{"t1", 0, {}}}));
    CHECK_FALSE(one.all_pass());
    CHECK(one.uncovered() == std::vector<std::vector<IndexId>>{{2}});

    CHECK(thrown_kind([] { camacho_sad_check(r2_model({{"t1", 0, {"t2"}}, {"t2", 2, {}}})); }) ==
          ErrorKind::SeparatrixSpansComponents);
}

TEST_CASE("connected_outside examples", "[separatrix]") {
    const auto full = fixtures::full_triangle();
    const StratumSet sep{{0, 2}, {1, 2}};
    CHECK(connected_outside(full, sep, 0, 1));
    CHECK_FALSE(connected_outside(full, sep, 0, 2));
    for (IndexId i = 0; i < 3; ++i) {
        for (IndexId j = 0; j < 3; ++j) CHECK(connected_outside(full, {}, i, j));
    }
    CHECK(thrown_kind([&] { connected_outside(full, {}, 0, 9); }) == ErrorKind::UnknownIndex);
    CHECK(thrown_kind([&] { connected_outside(full, {{0, 1, 2}}, 0, 1); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("components_outside matches union-find", "[separatrix]") {
    const auto r1 = fixtures::r1_structure();
    const StratumSet cut{{0, 1}, {0, 2}};
    CHECK(components_outside(r1, cut) == oracle::components(r1, cut));
}

TEST_CASE("nod_vs_sep_equivalence examples", "[separatrix]") {
    const auto r1 = nod_vs_sep_equivalence(fixtures::r1_structure(), r1_model().nodal);
    CHECK(r1.holds());
    CHECK(r1.bijection == std::vector<std::size_t>{0});

    const auto r2 = nod_vs_sep_equivalence(fixtures::full_triangle(), r2_model({}).nodal);
    CHECK(r2.holds());
    CHECK(r2.nod_components == std::vector<std::vector<IndexId>>{{0, 1}, {2}});
    CHECK(r2.bijection == std::vector<std::size_t>{0, 1});

    // Not realizable by residues: the triangle is interrupted although both
    // edges at 2 are nodal.
    NodalData hand;
    hand.entries[{0, 2}] = {{0}, {2}};
    hand.entries[{1, 2}] = {{1}, {2}};
    const auto fails = nod_vs_sep_equivalence(fixtures::full_triangle(), hand);
    CHECK_FALSE(fails.holds());
    CHECK(fails.failing_pairs == std::vector<std::pair<IndexId, IndexId>>{{0, 2}, {1, 2}});
    CHECK(fails.bijection.empty());
}
