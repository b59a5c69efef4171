#include "strata/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include "strata/error.hpp"

namespace strata {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InputFormat, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) bad(std::string("expected an object holding '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field '") + key + "'");
    return *it;
}

std::int64_t as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

IndexId as_index(const Json& j, const char* what) {
    const auto v = as_int(j, what);
    if (v < 0) bad(std::string(what) + " must be nonnegative");
    return static_cast<IndexId>(v);
}

Stratum stratum_from(const Json& j) {
    if (!j.is_array()) bad("stratum must be an array of indices");
    std::vector<IndexId> members;
    for (const auto& v : j) members.push_back(as_index(v, "stratum member"));
    try {
        return Stratum::from_members(std::move(members));
    } catch (const Error& e) {
        bad(e.what());
    }
}

Json stratum_json(const Stratum& s) {
    Json out = Json::array();
    for (IndexId i : s) out.push_back(i);
    return out;
}

std::string as_string(const Json& j, const char* what) {
    if (!j.is_string()) bad(std::string(what) + " must be a string");
    return j.get<std::string>();
}

Rational rational_from(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    return parse_rational(as_string(j, "rational entry"));
}

}  // namespace

Json structure_to_json(const StrataStructure& s) {
    std::map<IndexId, IndexId> pos;
    for (std::size_t k = 0; k < s.indices().size(); ++k) pos[s.indices()[k]] = static_cast<IndexId>(k);
    Json strata = Json::array();
    for (const auto& j : s.strata()) {
        Json row = Json::array();
        for (IndexId i : j) row.push_back(pos.at(i));
        strata.push_back(std::move(row));
    }
    return Json{{"dimension", s.dimension()}, {"components", s.names()}, {"strata", std::move(strata)}};
}

StrataStructure structure_from_json(const Json& j) {
    const auto d = as_int(field(j, "dimension"), "dimension");
    const Json& comps = field(j, "components");
    if (!comps.is_array()) bad("'components' must be an array of names");
    std::vector<std::string> names;
    std::vector<IndexId> ids;
    for (const auto& c : comps) {
        ids.push_back(static_cast<IndexId>(names.size()));
        names.push_back(as_string(c, "component name"));
    }
    const Json& strata = field(j, "strata");
    if (!strata.is_array()) bad("'strata' must be an array");
    std::vector<Stratum> list;
    for (const auto& s : strata) list.push_back(stratum_from(s));
    StrataStructure out(static_cast<int>(d), std::move(ids), std::move(list), std::move(names));
    const auto report = validate_structure(out);
    if (!report.valid()) throw Error(ErrorKind::InvalidStructure, report.to_string());
    return out;
}

Json trace_to_json(const BlowupTrace& t) {
    Json steps = Json::array();
    for (const auto& step : t.steps) {
        steps.push_back(Json{{"center", center_to_string(step.center)}, {"fresh", step.fresh_index}});
    }
    return Json{{"dimension", t.dimension},
                {"steps", std::move(steps)},
                {"final", structure_to_json(t.final_structure())}};
}

BlowupTrace trace_from_json(const Json& j) {
    const auto d = as_int(field(j, "dimension"), "dimension");
    const Json& steps = field(j, "steps");
    if (!steps.is_array()) bad("'steps' must be an array");
    std::vector<BlowupCenter> centers;
    std::vector<IndexId> fresh;
    for (const auto& s : steps) {
        centers.push_back(parse_center(as_string(field(s, "center"), "center")));
        fresh.push_back(as_index(field(s, "fresh"), "fresh"));
    }
    BlowupTrace t = blowup_sequence(static_cast<int>(d), centers);
    for (std::size_t k = 0; k < fresh.size(); ++k) {
        if (t.steps[k].fresh_index != fresh[k]) {
            bad("step " + std::to_string(k) + ": recorded fresh index " + std::to_string(fresh[k]) +
                " but replay allocates " + std::to_string(t.steps[k].fresh_index));
        }
    }
    if (j.contains("final")) {
        const StrataStructure recorded = structure_from_json(j.at("final"));
        if (structure_to_json(recorded)["strata"] != structure_to_json(t.final_structure())["strata"]) {
            bad("recorded final structure differs from the replayed one");
        }
    }
    return t;
}

Json nodal_to_json(const NodalData& n) {
    Json rows = Json::array();
    for (const auto& [j, p] : n.entries) {
        rows.push_back(Json{{"stratum", stratum_json(j)}, {"plus", stratum_json(p.plus)}, {"minus", stratum_json(p.minus)}});
    }
    return Json{{"nodal", std::move(rows)}};
}

NodalData nodal_from_json(const Json& j) {
    const Json& rows = field(j, "nodal");
    if (!rows.is_array()) bad("'nodal' must be an array");
    NodalData n;
    for (const auto& r : rows) {
        Stratum s = stratum_from(field(r, "stratum"));
        SignPartition p{stratum_from(field(r, "plus")), stratum_from(field(r, "minus"))};
        if (!n.entries.emplace(s, p).second) bad("nodal stratum " + s.to_string() + " listed twice");
    }
    return n;
}

Json residues_to_json(const ResidueModel& m) {
    Json symbols = Json::array();
    for (const auto& s : m.table.symbols()) {
        symbols.push_back(Json{{"name", s.name}, {"kind", s.kind == SymbolKind::RealPositive ? "real" : "nonreal"}});
    }
    Json residues = Json::object();
    for (const auto& [i, r] : m.assignment) {
        residues[std::to_string(i)] = Json{{"symbol", m.table.at(r.symbol).name}, {"scale", format_rational(r.scale)}};
    }
    return Json{{"symbols", std::move(symbols)}, {"residues", std::move(residues)}};
}

ResidueModel residues_from_json(const Json& j) {
    ResidueModel m;
    const Json& symbols = field(j, "symbols");
    if (!symbols.is_array()) bad("'symbols' must be an array");
    for (const auto& s : symbols) {
        const std::string name = as_string(field(s, "name"), "symbol name");
        const std::string kind = as_string(field(s, "kind"), "symbol kind");
        if (kind != "real" && kind != "nonreal") bad("symbol kind must be 'real' or 'nonreal', got '" + kind + "'");
        if (name == m.table.at(0).name) {
            if (kind != "real") bad("the unit symbol '" + name + "' is real");
            continue;
        }
        if (m.table.find(name)) bad("symbol '" + name + "' declared twice");
        m.table.add(name, kind == "real" ? SymbolKind::RealPositive : SymbolKind::NonReal);
    }
    const Json& residues = field(j, "residues");
    if (!residues.is_object()) bad("'residues' must be an object keyed by component index");
    for (const auto& [key, r] : residues.items()) {
        IndexId i = 0;
        try {
            std::size_t used = 0;
            const long v = std::stol(key, &used);
            if (used != key.size() || v < 0) throw std::invalid_argument(key);
            i = static_cast<IndexId>(v);
        } catch (const std::exception&) {
            bad("residue key '" + key + "' is not a component index");
        }
        const std::string sym = as_string(field(r, "symbol"), "residue symbol");
        const auto id = m.table.find(sym);
        if (!id) bad("residue for " + key + " uses undeclared symbol '" + sym + "'");
        const Rational scale = rational_from(field(r, "scale"));
        try {
            m.assign(i, *id, scale);
        } catch (const Error& e) {
            bad(e.what());
        }
    }
    return m;
}

Json model_to_json(const FoliatedModel& m) {
    Json out{{"structure", structure_to_json(m.structure)}};
    if (m.residues) out["residues"] = residues_to_json(*m.residues);
    out["nodal"] = nodal_to_json(m.nodal);
    Json traces = Json::array();
    for (const auto& t : m.traces) traces.push_back(Json{{"id", t.id}, {"host", t.host}, {"adjacent", t.adjacent}});
    out["traces"] = std::move(traces);
    return out;
}

FoliatedModel model_from_json(const Json& j) {
    StrataStructure s = structure_from_json(j.contains("structure") ? j.at("structure") : j);
    std::optional<ResidueModel> residues;
    std::optional<NodalData> nodal;
    if (j.contains("residues")) residues = residues_from_json(j.at("residues"));
    if (j.contains("nodal")) nodal = nodal_from_json(j.at("nodal"));
    if (!residues && !nodal) bad("model needs 'residues' or 'nodal'");
    std::vector<TraceComponent> traces;
    if (j.contains("traces")) {
        const Json& list = j.at("traces");
        if (!list.is_array()) bad("'traces' must be an array");
        for (const auto& t : list) {
            TraceComponent tc{as_string(field(t, "id"), "trace id"), as_index(field(t, "host"), "trace host"), {}};
            if (t.contains("adjacent")) {
                if (!t.at("adjacent").is_array()) bad("'adjacent' must be an array of trace ids");
                for (const auto& a : t.at("adjacent")) tc.adjacent.push_back(as_string(a, "adjacent id"));
            }
            traces.push_back(std::move(tc));
        }
    }
    return make_model(std::move(s), std::move(nodal), std::move(residues), std::move(traces));
}

Json matrix_to_json(const CovectorSpace& u) {
    Json rows = Json::array();
    for (const auto& r : u.rows) {
        Json row = Json::array();
        for (const auto& x : r) row.push_back(format_rational(x));
        rows.push_back(std::move(row));
    }
    return Json{{"n", u.n}, {"e", u.e}, {"rows", std::move(rows)}};
}

CovectorSpace matrix_from_json(const Json& j) {
    CovectorSpace u;
    const auto n = as_int(field(j, "n"), "n");
    const auto e = as_int(field(j, "e"), "e");
    if (n < 1 || e < 1) bad("'n' and 'e' must be positive");
    u.n = static_cast<std::size_t>(n);
    u.e = static_cast<std::size_t>(e);
    const Json& rows = field(j, "rows");
    if (!rows.is_array()) bad("'rows' must be an array");
    for (const auto& r : rows) {
        if (!r.is_array()) bad("each row must be an array");
        std::vector<Rational> row;
        for (const auto& x : r) row.push_back(rational_from(x));
        u.rows.push_back(std::move(row));
    }
    try {
        check_covector_space(u);
    } catch (const Error& e) {
        bad(e.what());
    }
    return u;
}

Json verdict_to_json(const Pi1Verdict& v) {
    Json out{{"status", pi1_status_name(v.status)},
             {"certificate", certificate_kind_name(v.certificate)},
             {"steps", v.steps},
             {"h1", v.h1},
             {"generators", v.presentation.generators.size()},
             {"relators", v.presentation.relators.size()},
             {"components", v.components}};
    if (v.witness_factor) out["witness_factor"] = *v.witness_factor;
    return out;
}

Json component_report_to_json(const ComponentReport& r, bool agreement) {
    return Json{{"blocks", r.blocks},
                {"separating", r.separating},
                {"components", r.components},
                {"agreement", agreement},
                {"claim", connectivity_claim_name(r.claim)}};
}

Json coverage_to_json(const CoverageReport& r) {
    Json comps = Json::array();
    for (const auto& v : r.verdicts) {
        comps.push_back(Json{{"members", v.members}, {"verdict", v.pass ? "PASS" : "FAIL"}, {"separatrices", v.covering}});
    }
    Json seps = Json::array();
    for (const auto& s : r.separatrices) {
        seps.push_back(Json{{"traces", s.traces}, {"hosts", std::vector<IndexId>(s.hosts.begin(), s.hosts.end())}});
    }
    return Json{{"pass", r.all_pass()}, {"components", std::move(comps)}, {"separatrices", std::move(seps)}};
}

Json nod_sep_to_json(const NodSepReport& r) {
    Json failing = Json::array();
    for (const auto& [a, b] : r.failing_pairs) failing.push_back(Json::array({a, b}));
    return Json{{"holds", r.holds()},
                {"failing_pairs", std::move(failing)},
                {"nod_components", r.nod_components},
                {"sep_components", r.sep_components},
                {"bijection", r.bijection},
                {"bijection_valid", r.bijection_valid}};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        bad("'" + path + "' is not valid JSON: " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) bad("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

}  // namespace strata
