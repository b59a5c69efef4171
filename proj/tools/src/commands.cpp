#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "strata/blowup.hpp"
#include "strata/corpus.hpp"
#include "strata/dot.hpp"
#include "strata/error.hpp"
#include "strata/hironaka.hpp"
#include "strata/json_io.hpp"
#include "strata/pi1.hpp"
#include "strata/separatrix.hpp"

namespace strata::cli {
namespace {

struct Options {
    std::string input;
    std::string residues;
    std::string nodal;
    std::string model;
    std::string format = "json";
    std::string output;
    std::string dot;
    std::optional<int> dim;
    std::string blowups;
    std::optional<std::size_t> random;
    int max_blowups = 8;
    std::uint64_t seed = 0;
    std::string matrix;
    std::optional<std::size_t> nu;
    std::string suite;
};

std::size_t tietze_budget() {
    const char* env = std::getenv("STRATA_BUDGET");
    if (!env) return kDefaultTietzeBudget;
    const std::string text(env);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty() || text.front() == '-') {
        throw Error(ErrorKind::InputFormat, "STRATA_BUDGET must be a nonnegative integer, got '" + text + "'");
    }
    return static_cast<std::size_t>(v);
}

/// Everything a command may need from its input files.
struct Input {
    StrataStructure structure;
    std::optional<BlowupTrace> trace;
    FoliatedModel model;
};

Input load_input(const Options& o) {
    std::string path = o.input;
    if (!o.model.empty()) {
        if (!path.empty()) throw Error(ErrorKind::InvalidArgument, "give either an input file or --model, not both");
        path = o.model;
    }
    if (path.empty()) throw Error(ErrorKind::InvalidArgument, "an input file is required");
    const Json doc = read_json_file(path);

    std::optional<StrataStructure> structure;
    std::optional<BlowupTrace> trace;
    std::optional<ResidueModel> residues;
    std::optional<NodalData> nodal;
    std::vector<TraceComponent> traces;
    if (doc.contains("steps")) {
        trace = trace_from_json(doc);
        structure = trace->final_structure();
    } else if (doc.contains("traces") || doc.contains("structure") || doc.contains("residues") ||
               doc.contains("nodal")) {
        if (doc.contains("residues") || doc.contains("nodal")) {
            FoliatedModel m = model_from_json(doc);
            structure = m.structure;
            residues = std::move(m.residues);
            nodal = std::move(m.nodal);
            traces = std::move(m.traces);
        } else {
            structure = structure_from_json(doc.contains("structure") ? doc.at("structure") : doc);
            Json only_traces = doc;
            only_traces["nodal"] = Json{{"nodal", Json::array()}};
            traces = model_from_json(only_traces).traces;
        }
    } else {
        structure = structure_from_json(doc);
    }
    if (!o.residues.empty()) {
        residues = residues_from_json(read_json_file(o.residues));
        if (!o.nodal.empty()) throw Error(ErrorKind::InvalidArgument, "give either --residues or --nodal, not both");
        nodal.reset();
    }
    if (!o.nodal.empty()) nodal = nodal_from_json(read_json_file(o.nodal));
    FoliatedModel model = make_model(*structure, std::move(nodal), std::move(residues), std::move(traces));
    return Input{std::move(*structure), std::move(trace), std::move(model)};
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
    if (o.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.output);
    if (!file) throw Error(ErrorKind::InputFormat, "cannot write '" + o.output + "'");
    file << text;
}

Json strata_list(const StratumSet& set) {
    Json out = Json::array();
    for (const auto& j : set) out.push_back(std::vector<IndexId>(j.begin(), j.end()));
    return out;
}

std::string join(const std::vector<IndexId>& ids) {
    std::string s;
    for (std::size_t k = 0; k < ids.size(); ++k) s += (k ? "," : "") + std::to_string(ids[k]);
    return "{" + s + "}";
}

// ---------------------------------------------------------------- generate

int cmd_generate(const Options& o, std::ostream& out) {
    if (o.random) {
        if (!o.blowups.empty()) throw Error(ErrorKind::InvalidArgument, "--blowups and --random exclude each other");
        CorpusOptions co;
        if (o.dim) co.dimensions = {*o.dim};
        co.max_blowups = o.max_blowups;
        Json instances = Json::array();
        for (std::size_t k = 0; k < *o.random; ++k) {
            const auto inst = make_corpus_instance(instance_seed(o.seed, k), co);
            instances.push_back(
                Json{{"seed", inst.seed}, {"trace", trace_to_json(inst.trace)}, {"model", model_to_json(inst.model)}});
        }
        emit(o, out, Json{{"instances", std::move(instances)}}.dump(2) + "\n");
        return kExitOk;
    }
    if (o.blowups.empty()) throw Error(ErrorKind::InvalidArgument, "generate needs --blowups or --random");
    const BlowupTrace t = blowup_sequence(o.dim.value_or(3), parse_center_list(o.blowups));
    emit(o, out, trace_to_json(t).dump(2) + "\n");
    return kExitOk;
}

// ----------------------------------------------------------------- analyze

struct Analysis {
    SeparatorReport separator;
    StratumSet uninterrupted;
    Pi1Verdict pi1;
    std::optional<ComponentReport> parity;
    std::vector<std::vector<IndexId>> searched;
    std::string parity_error;
    std::optional<CoverageReport> coverage;
    std::string coverage_error;
};

Analysis analyze(const Input& in) {
    const auto& s = in.structure;
    const auto& n = in.model.nodal;
    Analysis a{separating_blocks(s, n), uninterrupted_set(s, n), {}, {}, {}, {}, {}, {}};
    a.searched = components_by_search(a.separator.residual);
    ConnectivityClaim claim = ConnectivityClaim::Unverified;
    if (in.trace) {
        a.pi1 = provenance_verdict(*in.trace);
        claim = ConnectivityClaim::BlowupProvenance;
    } else {
        a.pi1 = simply_connected_verdict(s, tietze_budget());
        if (a.pi1.status == Pi1Status::SimplyConnected) claim = ConnectivityClaim::Pi1Verdict;
    }
    if (!s.indices().empty()) {
        try {
            a.parity = components_by_parity(s, n, claim);
        } catch (const Error& e) {
            a.parity_error = std::string(error_kind_name(e.kind())) + ": " + e.what();
        }
    }
    if (!in.model.traces.empty()) {
        try {
            a.coverage = camacho_sad_check(in.model, a.parity ? ComponentMode::Parity : ComponentMode::SearchOnly);
        } catch (const Error& e) {
            a.coverage_error = std::string(error_kind_name(e.kind())) + ": " + e.what();
        }
    }
    return a;
}

Json analysis_json(const Input& in, const Analysis& a) {
    Json blocks = Json::array();
    for (const auto& b : a.separator.blocks) {
        blocks.push_back(Json{{"members", strata_list({b.members.begin(), b.members.end()})}, {"separating", b.separating}});
    }
    const bool agreement = a.parity && a.parity->components == a.searched;
    Json report;
    if (a.parity) {
        report = component_report_to_json(*a.parity, agreement);
    } else {
        report = Json{{"blocks", a.separator.blocks.size()},
                      {"separating", a.separator.separating_count()},
                      {"components", a.searched},
                      {"agreement", false},
                      {"claim", "unverified"}};
        if (!a.parity_error.empty()) report["parity_error"] = a.parity_error;
    }
    Json out{{"structure",
              Json{{"dimension", in.structure.dimension()},
                   {"components", in.structure.indices().size()},
                   {"strata", in.structure.strata().size()}}},
             {"nodal", strata_list(in.model.nodal.strata())},
             {"uninterrupted", strata_list(a.uninterrupted)},
             {"blocks", std::move(blocks)},
             {"separating_blocks", a.separator.separating_count()},
             {"separator", strata_list(a.separator.separator_set)},
             {"components", a.searched.size()},
             {"component_report", std::move(report)},
             {"pi1", verdict_to_json(a.pi1)}};
    if (a.coverage) out["coverage"] = coverage_to_json(*a.coverage);
    if (!a.coverage_error.empty()) out["coverage"] = Json{{"error", a.coverage_error}};
    return out;
}

std::string analysis_table(const Input& in, const Analysis& a) {
    std::ostringstream t;
    t << "dimension            " << in.structure.dimension() << "\n";
    t << "divisor components   " << in.structure.indices().size() << "\n";
    t << "strata               " << in.structure.strata().size() << "\n";
    t << "nodal strata         " << to_string(in.model.nodal.strata()) << "\n";
    t << "uninterrupted        " << to_string(a.uninterrupted) << "\n";
    t << "nodal blocks         " << a.separator.blocks.size() << "\n";
    for (const auto& b : a.separator.blocks) {
        t << "  " << to_string(StratumSet(b.members.begin(), b.members.end()))
          << (b.separating ? "  separating" : "") << "\n";
    }
    t << "separating blocks    " << a.separator.separating_count() << "\n";
    t << "components           " << a.searched.size() << "\n";
    for (const auto& c : a.searched) t << "  " << join(c) << "\n";
    t << "parity agreement     "
      << (a.parity ? (a.parity->components == a.searched ? "yes" : "no") : "n/a (" + a.parity_error + ")") << "\n";
    t << "pi1                  " << pi1_status_name(a.pi1.status) << " (" << certificate_kind_name(a.pi1.certificate)
      << ")\n";
    if (a.coverage) {
        for (const auto& v : a.coverage->verdicts) {
            t << "coverage " << join(v.members) << "  " << (v.pass ? "PASS" : "FAIL") << "\n";
        }
    }
    if (!a.coverage_error.empty()) t << "coverage error       " << a.coverage_error << "\n";
    return t.str();
}

int cmd_analyze(const Options& o, std::ostream& out) {
    const Input in = load_input(o);
    const Analysis a = analyze(in);
    emit(o, out, o.format == "json" ? analysis_json(in, a).dump(2) + "\n" : analysis_table(in, a));
    return kExitOk;
}

// ------------------------------------------------------------------- check

struct CheckResult {
    std::uint64_t seed = 0;
    bool pass = false;
    std::string detail;
};

std::string describe(const Error& e) { return std::string(error_kind_name(e.kind())) + ": " + e.what(); }

CheckResult run_suite(const std::string& suite, const std::optional<BlowupTrace>& trace, const FoliatedModel& m,
                      std::size_t budget) {
    CheckResult r;
    try {
        if (suite == "componentcount") {
            const ConnectivityClaim claim = trace ? ConnectivityClaim::BlowupProvenance : ConnectivityClaim::Unverified;
            const auto report = components_by_parity(m.structure, m.nodal, claim);
            const auto searched = components_by_search(separating_blocks(m.structure, m.nodal).residual);
            r.pass = report.components == searched && report.count_matches();
            if (!r.pass) {
                r.detail = std::to_string(searched.size()) + " components for " + std::to_string(report.separating) +
                           " separating blocks";
            }
        } else if (suite == "simplyconnected") {
            std::vector<StrataStructure> all = trace ? trace->structures() : std::vector<StrataStructure>{m.structure};
            r.pass = true;
            for (std::size_t k = 0; k < all.size() && r.pass; ++k) {
                const auto v = simply_connected_verdict(all[k], budget);
                r.pass = v.status == Pi1Status::SimplyConnected && v.h1.empty() && replay_tietze(v.presentation, v.tietze);
                if (!r.pass) r.detail = "structure " + std::to_string(k) + ": " + std::string(pi1_status_name(v.status));
            }
        } else if (suite == "camachosad") {
            const auto report = camacho_sad_check(m);
            r.pass = report.all_pass();
            for (const auto& c : report.uncovered()) r.detail += (r.detail.empty() ? "uncovered " : " ") + join(c);
        } else {
            const auto report = nod_vs_sep_equivalence(m.structure, m.nodal);
            r.pass = report.holds();
            for (const auto& [i, j] : report.failing_pairs) {
                r.detail += (r.detail.empty() ? "failing pairs " : " ") + join({i, j});
            }
        }
    } catch (const Error& e) {
        r.pass = false;
        r.detail = describe(e);
    }
    return r;
}

int cmd_check(const Options& o, std::ostream& out) {
    const std::size_t budget = tietze_budget();
    std::vector<CheckResult> results;
    if (o.random) {
        if (!o.input.empty() || !o.model.empty()) {
            throw Error(ErrorKind::InvalidArgument, "--random and an input file exclude each other");
        }
        CorpusOptions co;
        if (o.dim) co.dimensions = {*o.dim};
        co.max_blowups = o.max_blowups;
        results.resize(*o.random);
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t k = next++; k < results.size(); k = next++) {
                const std::uint64_t seed = instance_seed(o.seed, k);
                try {
                    const auto inst = make_corpus_instance(seed, co);
                    results[k] = run_suite(o.suite, inst.trace, inst.model, budget);
                } catch (const Error& e) {
                    results[k] = {seed, false, "generation failed: " + describe(e)};
                }
                results[k].seed = seed;
            }
        };
        const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
        std::vector<std::thread> pool;
        for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
        for (auto& th : pool) th.join();
    } else {
        const Input in = load_input(o);
        results.push_back(run_suite(o.suite, in.trace, in.model, budget));
    }

    const auto passed = static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return r.pass; }));
    if (o.format == "json") {
        Json failures = Json::array();
        for (const auto& r : results) {
            if (!r.pass) failures.push_back(Json{{"seed", r.seed}, {"detail", r.detail}});
        }
        emit(o, out,
             Json{{"suite", o.suite}, {"total", results.size()}, {"passed", passed}, {"failures", std::move(failures)}}
                     .dump(2) +
                 "\n");
    } else {
        std::ostringstream t;
        for (const auto& r : results) {
            if (!r.pass) t << "FAIL" << (o.random ? " seed=" + std::to_string(r.seed) : "") << ": " << r.detail << "\n";
        }
        t << passed << "/" << results.size() << " pass\n";
        emit(o, out, t.str());
    }
    return passed == results.size() ? kExitOk : kExitCheckFailed;
}

// ------------------------------------------------------------------ export

int cmd_export(const Options& o, std::ostream& out) {
    const Input in = load_input(o);
    const std::string text = dual_graph_dot(in.structure, in.model.nodal);
    Options target = o;
    if (!o.dot.empty()) target.output = o.dot;
    emit(target, out, text);
    return kExitOk;
}

// --------------------------------------------------------------- invariant

int cmd_invariant(const Options& o, std::ostream& out) {
    if (o.matrix.empty()) throw Error(ErrorKind::InvalidArgument, "invariant needs --matrix");
    const CovectorSpace u = matrix_from_json(read_json_file(o.matrix));
    const auto t = t_sequence(u);
    const std::size_t d = strict_tangent_dimension(u);
    const int z = zeta(u);
    Json j{{"n", u.n}, {"e", u.e}, {"d", d}, {"t", t.values}, {"chain", t.chain}, {"theta", theta(u)}, {"zeta", z}};
    std::optional<ControlInvariant> inv;
    if (o.nu) {
        inv = control_invariant(u, *o.nu);
        j["invariant"] = Json::array({inv->nu, inv->d, inv->zeta});
        j["locally_simple"] = *inv <= kSimpleThreshold;
    }
    if (o.format == "json") {
        emit(o, out, j.dump(2) + "\n");
    } else {
        std::ostringstream s;
        s << "d      " << d << "\n";
        s << "t      (";
        for (std::size_t k = 0; k < t.values.size(); ++k) s << (k ? "," : "") << t.values[k];
        s << ")\n";
        s << "theta  " << theta(u) << "\n";
        s << "zeta   " << z << "\n";
        if (inv) {
            s << "I_p    " << inv->to_string() << "\n";
            s << "simple " << (*inv <= kSimpleThreshold ? "yes" : "no") << "\n";
        }
        emit(o, out, s.str());
    }
    return kExitOk;
}

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ';');
    return s;
}

}  // namespace

int run_command(const std::vector<const char*>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Combinatorial strata structures of divisors: blow-ups, nodal separators, components, pi1."};
    app.name("strata");
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");
    Options o;

    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
        c->add_option("-o,--output", o.output, "Write the report to FILE instead of standard output");
    };
    auto add_inputs = [&](CLI::App* c) {
        c->add_option("input", o.input, "Structure, trace or model JSON");
        c->add_option("--residues", o.residues, "Residue model JSON");
        c->add_option("--nodal", o.nodal, "Nodal data JSON");
        c->add_option("--model", o.model, "Model JSON (structure, residues or nodal data, traces)");
    };
    auto add_corpus = [&](CLI::App* c) {
        c->add_option("--random", o.random, "Number of random corpus instances")->check(CLI::PositiveNumber);
        c->add_option("--dim", o.dim, "Ambient dimension")->check(CLI::Range(2, 16));
        c->add_option("--max-blowups", o.max_blowups, "Largest number of blow-ups per instance")
            ->check(CLI::Range(1, 64));
        c->add_option("--seed", o.seed, "Base seed");
    };

    auto* generate = app.add_subcommand("generate", "Write a blow-up trace or a random corpus");
    add_corpus(generate);
    generate->add_option("--blowups", o.blowups, "Semicolon-separated centers, e.g. \"P[];P[0];S[0,1]\"");
    generate->add_option("-o,--output", o.output, "Output file");

    auto* analyze_cmd = app.add_subcommand("analyze", "Blocks, separator and component report");
    add_inputs(analyze_cmd);
    add_format(analyze_cmd);

    auto* check = app.add_subcommand("check", "Run a property suite over a file or a random corpus");
    check->add_option("suite", o.suite, "componentcount | simplyconnected | camachosad | nodsep")
        ->required()
        ->check(CLI::IsMember({"componentcount", "simplyconnected", "camachosad", "nodsep"}));
    add_inputs(check);
    add_corpus(check);
    check->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    check->add_option("-o,--output", o.output, "Write the report to FILE");

    auto* export_cmd = app.add_subcommand("export", "Dual graph in DOT");
    add_inputs(export_cmd);
    export_cmd->add_option("--dot", o.dot, "DOT output file");
    export_cmd->add_option("-o,--output", o.output, "DOT output file");

    auto* invariant = app.add_subcommand("invariant", "Strict tangent space invariants of a covector space");
    invariant->add_option("--matrix", o.matrix, "Matrix JSON")->required();
    invariant->add_option("--nu", o.nu, "Multiplicity");
    add_format(invariant);

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "strata: error: usage: " << one_line(e.what()) << "\n";
        return kExitInputError;
    }

    // check defaults to a plain pass count on a terminal-friendly format.
    if (check->parsed() && check->count("--format") == 0) o.format = "table";

    try {
        if (generate->parsed()) return cmd_generate(o, out);
        if (analyze_cmd->parsed()) return cmd_analyze(o, out);
        if (check->parsed()) return cmd_check(o, out);
        if (export_cmd->parsed()) return cmd_export(o, out);
        return cmd_invariant(o, out);
    } catch (const BlowupStepError& e) {
        err << "strata: error: InvalidCenter: " << one_line(e.what()) << "\n";
    } catch (const Error& e) {
        err << "strata: error: " << error_kind_name(e.kind()) << ": " << one_line(e.what()) << "\n";
    } catch (const std::exception& e) {
        err << "strata: error: Internal: " << one_line(e.what()) << "\n";
    }
    return kExitInputError;
}

}  // namespace strata::cli
