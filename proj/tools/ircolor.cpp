#include "ircolor/cross_check.hpp"
#include "ircolor/engine.hpp"
#include "ircolor/families.hpp"
#include "ircolor/io.hpp"
#include "ircolor/scan.hpp"
#include "ircolor/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <thread>

using namespace ircolor;
using nlohmann::ordered_json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_findings = 2;
constexpr int exit_input = 64;
constexpr int exit_parameter = 65;
constexpr const char * schema = "ircolor.report/1";

struct Common
{
    std::string input = "-";
    std::string format = "graph6";
    int oracle_cap = oracle::default_cap;
    int jobs = 1;
    bool json = false;
    double budget_seconds = 0;
};

auto add_common(CLI::App * cmd, Common & c, bool with_input) -> void
{
    if (with_input)
        cmd->add_option("input", c.input, "Input file, '-' for stdin")->capture_default_str();
    cmd->add_option("--format", c.format, "graph6 or edgelist")->capture_default_str();
    cmd->add_option("--oracle-cap", c.oracle_cap, "Largest order handed to the exhaustive oracle")->capture_default_str();
    cmd->add_option("--jobs", c.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_flag("--json", c.json, "Emit a JSON report");
    cmd->add_option("--budget-seconds", c.budget_seconds, "Time budget per computation, 0 = unlimited")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
}

auto make_token(double seconds) -> CancelToken
{
    if (seconds <= 0)
        return {};
    return CancelToken::with_budget(std::chrono::milliseconds(static_cast<long long>(seconds * 1000)));
}

auto read_graphs(const Common & c) -> std::vector<GraphRecord>
{
    auto format = parse_input_format(c.format);
    std::ifstream file;
    std::istream * in = &std::cin;
    if (c.input != "-") {
        file.open(c.input);
        if (! file)
            throw InputError(0, "cannot open " + c.input);
        in = &file;
    }
    GraphReader reader(*in, format);
    std::vector<GraphRecord> out;
    while (auto r = reader.next())
        out.push_back(std::move(*r));
    return out;
}

/// Runs work(i) for every index on a bounded pool; results are stored by index so order is preserved.
template <typename Work>
auto parallel_for(std::size_t count, int jobs, Work work) -> void
{
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++)
            work(i);
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < std::min<int>(jobs, static_cast<int>(count)); ++j)
        pool.emplace_back(worker);
    worker();
    for (auto & t : pool)
        t.join();
}

auto set_json(const VertexSet & s) -> ordered_json
{
    auto out = ordered_json::array();
    for (int v : s)
        out.push_back(v);
    return out;
}

auto graph_header(const GraphRecord & r, std::size_t index) -> ordered_json
{
    ordered_json j;
    j["index"] = index;
    j["line"] = r.line;
    j["n"] = r.graph.order();
    j["m"] = r.graph.size();
    if (r.graph.order() <= graph6_max_order)
        j["graph6"] = to_graph6(r.graph);
    return j;
}

auto value_text(const ordered_json & v) -> std::string { return v.is_string() ? v.get<std::string>() : v.dump(); }

// ---------------------------------------------------------------------------

struct InvariantsArgs
{
    Common common;
    std::string invariants;
    int irc_cap = 10;
    bool witnesses = false;
    bool oracle = false;
};

struct GraphResult
{
    ordered_json values = ordered_json::object();
    ordered_json witnesses = ordered_json::object();
    ordered_json timing = ordered_json::object();
    std::vector<ordered_json> violations;
};

auto run_invariants(const InvariantsArgs & a) -> int
{
    std::vector<Invariant> wanted;
    if (a.invariants.empty())
        wanted.assign(all_invariants.begin(), all_invariants.end());
    else {
        std::stringstream list(a.invariants);
        std::string item;
        while (std::getline(list, item, ','))
            wanted.push_back(parse_invariant(item));
    }
    auto records = read_graphs(a.common);
    std::vector<GraphResult> results(records.size());

    parallel_for(records.size(), a.common.jobs, [&](std::size_t i) {
        const auto & g = records[i].graph;
        auto & res = results[i];
        for (auto id : wanted) {
            auto name = to_string(id);
            if (! applicable(id, g)) {
                res.values[name] = "undefined";
                continue;
            }
            bool irc_kind = id == Invariant::irc_colorable || id == Invariant::chi_irc;
            if (irc_kind && g.order() > a.irc_cap) {
                res.values[name] = "skipped(cap)";
                continue;
            }
            auto started = std::chrono::steady_clock::now();
            try {
                auto token = make_token(a.common.budget_seconds);
                auto r = compute_invariant(g, id, token);
                if (id == Invariant::irc_colorable)
                    res.values[name] = r.value == 1;
                else if (r.value)
                    res.values[name] = *r.value;
                else
                    res.values[name] = "absent";
                if (a.witnesses && (r.coloring || r.set)) {
                    ordered_json w;
                    if (r.coloring)
                        w["coloring"] = r.coloring->color_of();
                    if (r.set)
                        w["set"] = set_json(*r.set);
                    res.witnesses[name] = w;
                }
                if (a.oracle && g.order() <= a.common.oracle_cap) {
                    auto slow = oracle::oracle_invariant(g, id, a.common.oracle_cap).value;
                    if (slow != r.value)
                        res.violations.push_back({{"check", "oracle agreement: " + name},
                                                  {"fast", r.value ? ordered_json(*r.value) : ordered_json("absent")},
                                                  {"oracle", slow ? ordered_json(*slow) : ordered_json("absent")}});
                }
            }
            catch (const Cancelled &) {
                res.values[name] = "skipped(budget)";
            }
            res.timing[name] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
        }
    });

    ordered_json report;
    report["schema"] = schema;
    report["command"] = "invariants";
    report["graphs"] = ordered_json::array();
    report["violations"] = ordered_json::array();
    ordered_json timing = ordered_json::array();
    for (std::size_t i = 0; i < records.size(); ++i) {
        auto entry = graph_header(records[i], i);
        entry["invariants"] = results[i].values;
        if (a.witnesses)
            entry["witnesses"] = results[i].witnesses;
        report["graphs"].push_back(entry);
        for (auto v : results[i].violations) {
            v["graph"] = i;
            report["violations"].push_back(v);
        }
        timing.push_back({{"index", i}, {"ms", results[i].timing}});
    }
    report["summary"] = {{"graphs", records.size()}, {"violations", report["violations"].size()}};
    report["timing"] = timing;

    if (a.common.json)
        std::cout << report.dump(2) << '\n';
    else {
        std::cout << std::left << std::setw(6) << "#" << std::setw(5) << "n" << std::setw(5) << "m";
        for (auto id : wanted)
            std::cout << std::setw(15) << to_string(id);
        std::cout << '\n';
        for (std::size_t i = 0; i < records.size(); ++i) {
            std::cout << std::setw(6) << i << std::setw(5) << records[i].graph.order() << std::setw(5)
                      << records[i].graph.size();
            for (auto id : wanted)
                std::cout << std::setw(15) << value_text(results[i].values[to_string(id)]);
            std::cout << '\n';
        }
        for (const auto & v : report["violations"])
            std::cout << "violation: " << v.dump() << '\n';
    }
    return report["violations"].empty() ? exit_ok : exit_findings;
}

// ---------------------------------------------------------------------------

struct GenArgs
{
    std::string family;
    std::vector<std::string> params;
    std::string format = "graph6";
    std::string sidecar;
    bool json = false;
};

auto int_param(const GenArgs & a, std::size_t i) -> int
{
    if (i >= a.params.size())
        throw ParameterError(a.family + " needs " + std::to_string(i + 1) + " parameter(s)");
    try {
        std::size_t used = 0;
        int v = std::stoi(a.params[i], &used);
        if (used != a.params[i].size())
            throw std::invalid_argument("trailing");
        return v;
    }
    catch (const std::logic_error &) {
        throw ParameterError("parameter '" + a.params[i] + "' is not an integer");
    }
}

auto generate(const GenArgs & a) -> FamilyInstance
{
    const auto & f = a.family;
    if (f == "A")
        return gen_family_A(int_param(a, 0), int_param(a, 1));
    if (f == "B")
        return gen_family_B(int_param(a, 0), int_param(a, 1));
    if (f == "H")
        return gen_graph_H(int_param(a, 0), int_param(a, 1));
    if (f == "Z")
        return gen_family_Z(int_param(a, 0), int_param(a, 1));
    if (f == "complete_bipartite")
        return gen_basic(BasicKind::complete_bipartite, int_param(a, 0), int_param(a, 1));
    if (f == "complete" || f == "star" || f == "cycle" || f == "path")
        return gen_basic(parse_basic_kind(f), int_param(a, 0));
    if (f == "bridge")
        return gen_irc_family(IrcFamilyKind::bridge, int_param(a, 0), int_param(a, 1));
    if (f == "cut_vertex" || f == "tilde" || f == "gstar" || f == "bipartite_star_of_cycles")
        return gen_irc_family(parse_irc_family_kind(f), int_param(a, 0));
    if (f == "fixture") {
        if (a.params.empty())
            throw ParameterError("fixture needs an id");
        return fixture(parse_fixture_id(a.params[0]));
    }
    throw ParameterError("unknown family '" + f + "'");
}

auto instance_json(const FamilyInstance & f) -> ordered_json
{
    ordered_json j;
    j["schema"] = schema;
    j["name"] = f.name;
    j["n"] = f.graph.order();
    j["m"] = f.graph.size();
    if (f.graph.order() <= graph6_max_order)
        j["graph6"] = to_graph6(f.graph);
    j["edges"] = ordered_json::array();
    for (auto [u, v] : f.graph.edges())
        j["edges"].push_back({u, v});
    j["labels"] = f.labels;
    j["claims"] = ordered_json::object();
    for (const auto & [name, c] : f.claims)
        j["claims"][name] = {{"value", c.value}, {"exact", c.exact}};
    j["coloring"] = f.coloring ? ordered_json(f.coloring->color_of()) : ordered_json(nullptr);
    j["description"] = f.description;
    return j;
}

auto run_gen(const GenArgs & a) -> int
{
    auto f = generate(a);
    auto format = parse_input_format(a.format);
    if (a.json) {
        std::cout << instance_json(f).dump(2) << '\n';
        return exit_ok;
    }
    if (format == InputFormat::graph6)
        std::cout << to_graph6(f.graph) << '\n';
    else
        std::cout << to_edge_list_text(f.graph);
    if (! a.sidecar.empty()) {
        std::ofstream out(a.sidecar);
        if (! out)
            throw ParameterError("cannot write " + a.sidecar);
        out << instance_json(f).dump(2) << '\n';
    }
    return exit_ok;
}

// ---------------------------------------------------------------------------

struct VerifyArgs
{
    Common common;
    std::string scope = "all";
    std::string graphs;
    int max_order = 5;
    int tree_max_order = 8;
};

auto run_verify_cmd(const VerifyArgs & a) -> int
{
    VerifyOptions opt;
    opt.max_order = a.max_order;
    opt.tree_max_order = a.tree_max_order;
    opt.oracle_cap = a.common.oracle_cap;
    if (! a.graphs.empty()) {
        Common c = a.common;
        c.input = a.graphs;
        for (auto & r : read_graphs(c))
            opt.graphs.push_back(std::move(r.graph));
    }
    auto token = make_token(a.common.budget_seconds);
    auto checks = run_verify(a.scope, opt, token);

    ordered_json report;
    report["schema"] = schema;
    report["command"] = "verify";
    report["graphs"] = ordered_json::array();
    report["checks"] = ordered_json::array();
    report["violations"] = ordered_json::array();
    int counts[3] = {0, 0, 0};
    for (const auto & c : checks) {
        ordered_json j = {{"scope", c.scope}, {"claim", c.claim}, {"status", to_string(c.status)}, {"detail", c.detail}};
        ++counts[static_cast<int>(c.status)];
        report["checks"].push_back(j);
        if (c.status == CheckStatus::fail)
            report["violations"].push_back(j);
    }
    report["summary"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"skipped", counts[2]}};
    if (a.common.json)
        std::cout << report.dump(2) << '\n';
    else {
        for (const auto & c : checks)
            std::cout << std::left << std::setw(8) << to_string(c.status) << std::setw(24) << c.scope << c.claim
                      << (c.detail.empty() ? "" : "  [" + c.detail + "]") << '\n';
        std::cout << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " skipped\n";
    }
    return counts[1] == 0 ? exit_ok : exit_findings;
}

// ---------------------------------------------------------------------------

struct ScanArgs
{
    Common common;
    std::string mode;
};

auto run_scan(const ScanArgs & a) -> int
{
    auto mode = parse_scan_mode(a.mode);
    auto records = read_graphs(a.common);
    std::vector<ScanOutcome> results(records.size());
    ScanOptions opt{a.common.oracle_cap};
    parallel_for(records.size(), a.common.jobs, [&](std::size_t i) {
        try {
            results[i] = scan_graph(records[i].graph, mode, opt, make_token(a.common.budget_seconds));
        }
        catch (const Cancelled &) {
            results[i].skipped = "budget";
        }
    });

    ordered_json report;
    report["schema"] = schema;
    report["command"] = "scan";
    report["mode"] = a.mode;
    report["graphs"] = ordered_json::array();
    report["violations"] = ordered_json::array();
    int skipped = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        auto entry = graph_header(records[i], i);
        const auto & r = results[i];
        if (r.skipped) {
            entry["skipped"] = *r.skipped;
            ++skipped;
        }
        entry["values"] = r.values;
        report["graphs"].push_back(entry);
        for (const auto & f : r.findings) {
            ordered_json v = {{"graph", i}, {"line", records[i].line}, {"check", f.check}, {"detail", f.detail}};
            if (records[i].graph.order() <= graph6_max_order)
                v["graph6"] = to_graph6(records[i].graph);
            if (f.oracle_confirmed)
                v["oracle_confirmed"] = *f.oracle_confirmed;
            report["violations"].push_back(v);
        }
    }
    report["summary"] = {{"graphs", records.size()}, {"skipped", skipped}, {"findings", report["violations"].size()}};
    if (a.common.json)
        std::cout << report.dump(2) << '\n';
    else {
        for (const auto & v : report["violations"])
            std::cout << "finding: graph " << v["graph"] << " (line " << v["line"] << ") " << value_text(v["check"]) << ": "
                      << value_text(v["detail"]) << '\n';
        std::cout << records.size() << " graphs, " << skipped << " skipped, " << report["violations"].size()
                  << " findings\n";
    }
    return report["violations"].empty() ? exit_ok : exit_findings;
}

} // namespace

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Exact irredundance and IRC colouring invariants"};
    app.require_subcommand(1);

    InvariantsArgs inv;
    auto * inv_cmd = app.add_subcommand("invariants", "Compute invariants for every input graph");
    add_common(inv_cmd, inv.common, true);
    inv_cmd->add_option("--invariants", inv.invariants, "Comma list: chi,ir,gamma,chi_i,chi_gamma,chi_d,chi_gd,irc_colorable,chi_irc");
    inv_cmd->add_option("--irc-cap", inv.irc_cap, "Largest order for irc_colorable and chi_irc")->capture_default_str();
    inv_cmd->add_flag("--witnesses", inv.witnesses, "Include witness colourings and sets");
    inv_cmd->add_flag("--oracle", inv.oracle, "Cross-check every value against the exhaustive oracle");

    GenArgs gen;
    auto * gen_cmd = app.add_subcommand("gen", "Generate a family instance");
    gen_cmd->add_option("family", gen.family,
                        "A, B, H, Z, complete, complete_bipartite, star, cycle, path, cut_vertex, bridge, tilde, gstar, fixture")
        ->required();
    gen_cmd->add_option("params", gen.params, "Family parameters");
    gen_cmd->add_option("--format", gen.format, "graph6 or edgelist")->capture_default_str();
    gen_cmd->add_option("--sidecar", gen.sidecar, "Write claims and colouring as JSON to this file");
    gen_cmd->add_flag("--json", gen.json, "Emit the instance as one JSON document");

    VerifyArgs ver;
    auto * ver_cmd = app.add_subcommand("verify", "Check the machine-checkable claims");
    add_common(ver_cmd, ver.common, false);
    ver_cmd->add_option("scope", ver.scope, "all or one of: " + [] {
        std::string s;
        for (const auto & name : verify_scopes())
            s += (s.empty() ? "" : ", ") + name;
        return s;
    }())->capture_default_str();
    ver_cmd->add_option("--graphs", ver.graphs, "Graph stream for stream-based scopes");
    ver_cmd->add_option("--max-order", ver.max_order, "Order of the built-in labelled graph stream")->capture_default_str();
    ver_cmd->add_option("--tree-max-order", ver.tree_max_order, "Largest labelled tree order")->capture_default_str();

    ScanArgs scan;
    auto * scan_cmd = app.add_subcommand("scan", "Scan a graph stream for violations");
    scan_cmd->add_option("mode", scan.mode, "chain, bounds, conjecture or characterization")->required();
    add_common(scan_cmd, scan.common, true);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_parameter;
    }

    try {
        if (*inv_cmd)
            return run_invariants(inv);
        if (*gen_cmd)
            return run_gen(gen);
        if (*ver_cmd)
            return run_verify_cmd(ver);
        return run_scan(scan);
    }
    catch (const InputError & e) {
        std::cerr << "input error: " << e.what() << '\n';
        return exit_input;
    }
    catch (const ParameterError & e) {
        std::cerr << "parameter error: " << e.what() << '\n';
        return exit_parameter;
    }
    catch (const SizeCapError & e) {
        std::cerr << "size cap: " << e.what() << '\n';
        return exit_parameter;
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
}
