#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "strata/blowup.hpp"
#include "strata/corpus.hpp"
#include "strata/dot.hpp"
#include "strata/error.hpp"
#include "strata/json_io.hpp"

using namespace strata;
using fixtures::thrown_kind;

TEST_CASE("structure documents round trip", "[json_io]") {
    const auto r1 = fixtures::r1_structure();
    const Json doc = structure_to_json(r1);
    CHECK(doc["dimension"] == 3);
    CHECK(doc["components"].size() == 4);
    CHECK(doc["strata"][0] == Json::array());
    CHECK(structure_from_json(doc) == r1);
    CHECK(structure_to_json(structure_from_json(doc)).dump() == doc.dump());
}

TEST_CASE("structure documents are validated", "[json_io]") {
    const Json missing = Json::parse(R"({"dimension":2,"components":["a","b"],"strata":[[],[0],[0,1]]})");
    CHECK(thrown_kind([&] { structure_from_json(missing); }) == ErrorKind::InvalidStructure);
    const Json bad = Json::parse(R"({"dimension":2,"components":["a"],"strata":[[],["x"]]})");
    CHECK(thrown_kind([&] { structure_from_json(bad); }) == ErrorKind::InputFormat);
    CHECK(thrown_kind([] { structure_from_json(Json::parse(R"({"components":[]})")); }) == ErrorKind::InputFormat);
}

TEST_CASE("trace documents replay", "[json_io]") {
    const auto t = blowup_sequence(3, parse_center_list("P[];P[0];P[0,1];S[0,1,2]"));
    const Json doc = trace_to_json(t);
    CHECK(doc["steps"][3]["center"] == "S[0,1,2]");
    CHECK(doc["steps"][3]["fresh"] == 3);
    CHECK(doc["final"]["strata"].size() == 14);
    const auto back = trace_from_json(doc);
    CHECK(back.final_structure() == t.final_structure());

    Json tampered = doc;
    tampered["steps"][3]["fresh"] = 9;
    CHECK(thrown_kind([&] { trace_from_json(tampered); }) == ErrorKind::InputFormat);
    Json invalid = doc;
    invalid["steps"][1]["center"] = "S[0,5]";
    CHECK(thrown_kind([&] { trace_from_json(invalid); }) == ErrorKind::InvalidCenter);
}

TEST_CASE("nodal and residue documents round trip", "[json_io]") {
    const auto m = fixtures::r1_residues();
    const Json rdoc = residues_to_json(m);
    CHECK(rdoc["residues"]["2"]["scale"] == "-1");
    const auto back = residues_from_json(rdoc);
    CHECK(residues_to_json(back).dump() == rdoc.dump());

    const Json given = Json::parse(R"({"symbols":[{"name":"one","kind":"real"},{"name":"mu","kind":"real"},
        {"name":"alpha","kind":"nonreal"}],"residues":{"0":{"symbol":"one","scale":"1"},"2":{"symbol":"mu","scale":"-1/1"}}})");
    const auto parsed = residues_from_json(given);
    CHECK(parsed.residue(2).scale == -1);
    CHECK(parsed.table.size() == 3);

    const auto n = derive_nodal_data(fixtures::r1_structure(), m);
    const Json ndoc = nodal_to_json(n);
    CHECK(ndoc["nodal"][0]["stratum"] == Json::array({0, 2}));
    CHECK(nodal_from_json(ndoc).strata() == n.strata());

    const Json undeclared = Json::parse(R"({"symbols":[],"residues":{"0":{"symbol":"mu","scale":"1"}}})");
    CHECK(thrown_kind([&] { residues_from_json(undeclared); }) == ErrorKind::InputFormat);
    const Json zero = Json::parse(R"({"symbols":[],"residues":{"0":{"symbol":"one","scale":"0"}}})");
    CHECK(thrown_kind([&] { residues_from_json(zero); }) == ErrorKind::InputFormat);
}

TEST_CASE("model documents round trip", "[json_io]") {
    const auto inst = make_corpus_instance(instance_seed(3, 4));
    const Json doc = model_to_json(inst.model);
    const auto back = model_from_json(doc);
    CHECK(back.structure == inst.model.structure);
    CHECK(back.nodal.strata() == inst.model.nodal.strata());
    CHECK(model_to_json(back).dump() == doc.dump());

    Json flat = structure_to_json(fixtures::full_triangle());
    flat["residues"] = residues_to_json(fixtures::r2_residues());
    flat["traces"] = Json::parse(R"([{"id":"t1","host":0,"adjacent":["t2"]},{"id":"t2","host":1}])");
    const auto m = model_from_json(flat);
    CHECK(m.traces.size() == 2);
    CHECK(m.nodal.strata().size() == 3);
}

TEST_CASE("matrix documents", "[json_io]") {
    const auto u = matrix_from_json(Json::parse(R"({"n":3,"e":3,"rows":[["1","1","0"]]})"));
    CHECK(u.rows.front()[1] == 1);
    CHECK(matrix_to_json(u).dump() == R"({"n":3,"e":3,"rows":[["1","1","0"]]})");
    CHECK(thrown_kind([] { matrix_from_json(Json::parse(R"({"n":3,"e":4,"rows":[]})")); }) == ErrorKind::InputFormat);
    CHECK(thrown_kind([] { matrix_from_json(Json::parse(R"({"n":3,"e":1,"rows":[["1"]]})")); }) == ErrorKind::InputFormat);
}

TEST_CASE("dot export styles separator and nodal edges", "[json_io]") {
    const auto full = fixtures::full_triangle();
    const auto n = derive_nodal_data(full, fixtures::r2_residues());
    const auto dot = dual_graph_dot(full, n);
    CHECK_THAT(dot, Catch::Matchers::ContainsSubstring("0 -- 2 [style=bold,color=red];"));
    CHECK_THAT(dot, Catch::Matchers::ContainsSubstring("0 -- 1;"));

    const auto r1 = fixtures::r1_structure();
    const auto d1 = dual_graph_dot(r1, derive_nodal_data(r1, fixtures::r1_residues()));
    CHECK_THAT(d1, Catch::Matchers::ContainsSubstring("1 -- 2 [style=dashed];"));
    CHECK_FALSE(d1.find("red") != std::string::npos);
}
