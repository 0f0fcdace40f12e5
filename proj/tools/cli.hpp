#pragma once

// Command-line front end. run_cli is separate from main so tests can drive
// it with in-memory streams.
//
// Exit codes: 0 success / cover / valid, 1 no cover exists, 2 budget or
// construction limit, 3 bad input or usage, 4 invalid cover.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oppdc/oppdc.hpp"

namespace oppdc::cli {

enum ExitCode : int { ok = 0, no_cover = 1, budget = 2, bad_input = 3, invalid_cover = 4 };

namespace detail {

inline std::string slurp(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open '" + path + "'");
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

inline Budget make_budget(std::uint64_t nodes, std::int64_t ms) {
    Budget b;
    if (nodes) b.max_nodes = nodes;
    if (ms) b.max_millis = std::chrono::milliseconds(ms);
    b.validate();
    return b;
}

inline double millis(std::chrono::nanoseconds d) { return std::chrono::duration<double, std::milli>(d).count(); }

inline nlohmann::json edges_json(const std::vector<Edge>& es) {
    auto j = nlohmann::json::array();
    for (const Edge& e : es) j.push_back({e.u, e.v});
    return j;
}

inline nlohmann::json witness_json(const Witness& w) {
    using nlohmann::json;
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else if constexpr (std::is_same_v<T, VertexWitness>) {
                return {{"vertex", x.vertex}};
            } else if constexpr (std::is_same_v<T, EdgeCutWitness>) {
                return {{"edges", edges_json(x.edges)}};
            } else if constexpr (std::is_same_v<T, CountWitness>) {
                return {{"order", x.order}, {"size", x.size}};
            } else if constexpr (std::is_same_v<T, DegreeWitness>) {
                return json::object();
            } else if constexpr (std::is_same_v<T, EarDecomposition>) {
                return {{"base_cycle", x.base_cycle}, {"ears", x.ears}};
            } else if constexpr (std::is_same_v<T, CycleDecomposition>) {
                return {{"cycles", x.cycles}};
            } else {
                json paths = json::array();
                for (const auto& p : x.paths()) paths.push_back(p.vertices());
                return {{"paths", paths}};
            }
        },
        w);
}

inline std::string report_json(const ScanSummary& s) {
    using nlohmann::json;
    std::string out;
    for (const auto& e : s.entries) {
        json j;
        j["line"] = e.line;
        j["graph6"] = e.graph6;
        if (e.kind == EntryKind::verdict) {
            j["verdict"] = e.verdict->survivor() ? "survivor" : to_string(*e.verdict->eliminated_by);
            j["witness"] = witness_json(e.verdict->witness);
        } else {
            j["verdict"] = to_string(e.kind);
            j["witness"] = nullptr;
            if (!e.message.empty()) j["message"] = e.message;
        }
        j["elapsed_ms"] = millis(e.elapsed);
        out += j.dump() + "\n";
    }
    json summary;
    summary["graphs"] = s.graphs;
    summary["survivors"] = s.survivors;
    summary["survivor_graph6"] = s.survivor_graph6;
    summary["parse_errors"] = s.parse_errors;
    summary["known_exceptions"] = s.known_exceptions;
    summary["disconnected"] = s.disconnected;
    summary["by_rule"] = s.by_rule;
    summary["rules_not_implemented"] = rules_not_implemented();
    out += json{{"summary", summary}}.dump() + "\n";
    return out;
}

inline std::string report_text(const ScanSummary& s) {
    std::ostringstream o;
    for (const auto& e : s.entries) {
        o << e.graph6 << '\t';
        if (e.kind != EntryKind::verdict)
            o << to_string(e.kind);
        else
            o << (e.verdict->survivor() ? "survivor" : to_string(*e.verdict->eliminated_by));
        o << '\n';
    }
    o << "graphs " << s.graphs << "\nsurvivors " << s.survivors << "\nparse errors " << s.parse_errors
      << "\nknown exceptions " << s.known_exceptions << "\ndisconnected " << s.disconnected << '\n';
    for (const auto& [rule, n] : s.by_rule) o << "rule " << rule << ' ' << n << '\n';
    for (const auto& r : rules_not_implemented()) o << "rule " << r << " not implemented\n";
    for (const auto& g6 : s.survivor_graph6) o << "survivor " << g6 << '\n';
    return o.str();
}

struct Options {
    std::string input, graph, cover, cycles, left, right, left_cover, right_cover, stream, name;
    std::string family, to, report = "text", emit = "cover";
    std::size_t n = 0, m = 0;
    std::uint64_t budget_nodes = 0;
    std::int64_t budget_ms = 0;
    unsigned jobs = 1;
    VertexId apex = 0;
    bool lenient = false, exhaustive = false, dot = false, stats = false;
};

inline PathCover cover_for(const Graph& g, Budget b, const char* what) {
    SolveOutcome o = solve_structured(g, b);
    if (o.status == SolveStatus::unsat) throw NonExistenceError(std::string(what) + " has no cover");
    if (o.status != SolveStatus::cover) throw ConstructionError(std::string(what) + ": budget exhausted");
    return *o.cover;
}

inline int run_construct(const Options& o, std::istream& in, std::ostream& out) {
    const Budget b = make_budget(o.budget_nodes, o.budget_ms);
    PathCover c;
    if (o.family == "cycle") {
        c = cycle_cover(o.n);
    } else if (o.family == "biclique") {
        c = complete_bipartite_cover(o.n, o.m);
    } else if (o.family == "complete") {
        c = complete_graph_cover(o.n, b);
    } else if (o.family == "fixture") {
        c = paper_fixture(fixture_from_string(o.name)).cover;
    } else if (o.family == "block-graph") {
        c = block_graph_cover(read_graph(slurp(o.input, in)));
    } else if (o.family == "cycle-partition") {
        const Graph g = read_graph(slurp(o.input, in));
        CycleSearchResult r = find_cycle_partition(g, b);
        if (!r.decomposition)
            throw DomainError(r.complete ? "graph has no attached cycle partition" : "cycle partition search gave up");
        c = cycle_partition_cover(g, *r.decomposition);
    } else if (o.family == "ear") {
        const Graph g = read_graph(slurp(o.input, in));
        EarSearchResult r = find_ear_decomposition(g, true, b);
        if (!r.decomposition)
            throw DomainError(r.complete ? "graph has no long-ear decomposition" : "ear search gave up");
        c = ear_cover(g, *r.decomposition, b);
    } else if (o.family == "product") {
        const Graph g = read_graph(slurp(o.left, in)), h = read_graph(slurp(o.right, in));
        c = product_cover(g, cover_for(g, b, "left factor"), h, cover_for(h, b, "right factor"));
    } else {
        throw InputError("unknown family '" + o.family + "'");
    }
    out << emit_cover(c);
    return ok;
}

inline int run_product(const Options& o, std::istream& in, std::ostream& out) {
    const Budget b = make_budget(o.budget_nodes, o.budget_ms);
    const Graph g = read_graph(slurp(o.left, in)), h = read_graph(slurp(o.right, in));
    const PathCover cg = o.left_cover.empty() ? cover_for(g, b, "left factor") : parse_cover(slurp(o.left_cover, in));
    const PathCover ch =
        o.right_cover.empty() ? cover_for(h, b, "right factor") : parse_cover(slurp(o.right_cover, in));
    if (o.emit == "graph")
        out << emit_edge_list(cartesian_product(g, h));
    else
        out << emit_cover(product_cover(g, cg, h, ch));
    return ok;
}

inline int run_verify(const Options& o, std::istream& in, std::ostream& out) {
    const Graph g = read_graph(slurp(o.graph, in));
    const PathCover c = parse_cover(slurp(o.cover, in));
    const VerifyReport r = verify_oppdc(g, c, !o.lenient);
    out << r.summary() << '\n';
    return r.valid ? ok : invalid_cover;
}

inline int run_solve(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    const Graph g = read_graph(slurp(o.input, in));
    BudgetMeter meter(make_budget(o.budget_nodes, o.budget_ms));
    SolveOutcome r;
    if (o.exhaustive) {
        if (!is_connected(g)) throw InputError("--exhaustive needs a connected graph");
        r = solve_exhaustive(g, meter);
    } else {
        r = solve_structured(g, meter);
    }
    if (o.stats)
        err << "status " << to_string(r.status) << "\nnodes " << r.nodes_explored << "\nelapsed_ms "
            << millis(r.elapsed) << '\n';
    switch (r.status) {
        case SolveStatus::cover:
            out << (o.dot ? emit_dot(g, r.cover) : emit_cover(*r.cover));
            return ok;
        case SolveStatus::unsat:
            err << "no cover exists\n";
            return no_cover;
        case SolveStatus::budget_exhausted:
            err << "budget exhausted after " << r.nodes_explored << " nodes\n";
            return budget;
    }
    return budget;
}

inline int run_filter(const Options& o, std::istream& in, std::ostream& out) {
    const ScanSummary s = scan_stream(slurp(o.stream, in), make_budget(o.budget_nodes, o.budget_ms), o.jobs);
    out << (o.report == "json" ? report_json(s) : report_text(s));
    return ok;
}

inline int run_convert(const Options& o, std::istream& in, std::ostream& out) {
    if (o.to == "socdc") {
        const Graph g = read_graph(slurp(o.graph, in));
        const ApexCycleCover a = oppdc_to_socdc(g, parse_cover(slurp(o.cover, in)));
        if (o.emit == "graph")
            out << emit_edge_list(a.apex_graph);
        else
            out << emit_cycles(a.cycles);
    } else if (o.to == "oppdc") {
        const Graph g = read_graph(slurp(o.graph, in));
        out << emit_cover(socdc_to_oppdc(g, o.apex, parse_cycles(slurp(o.cycles, in))));
    } else if (o.to == "graph6") {
        out << emit_graph6(read_graph(slurp(o.input, in))) << '\n';
    } else if (o.to == "edge-list") {
        out << emit_edge_list(read_graph(slurp(o.input, in)));
    } else if (o.to == "dot") {
        const Graph g = read_graph(slurp(o.input, in));
        out << emit_dot(g, o.cover.empty() ? std::nullopt : std::optional(parse_cover(slurp(o.cover, in))));
    } else {
        throw InputError("unknown conversion target '" + o.to + "'");
    }
    return ok;
}

inline int run_fixture(const Options& o, std::ostream& out) {
    const Fixture f = paper_fixture(fixture_from_string(o.name));
    if (o.emit == "graph")
        out << emit_edge_list(f.graph);
    else if (o.emit == "labels")
        for (VertexId v = 0; v < f.labels.size(); ++v) out << v << ' ' << f.labels[v] << '\n';
    else
        out << emit_cover(f.cover);
    return ok;
}

inline void add_budget(CLI::App* app, Options& o) {
    app->add_option("--budget-nodes", o.budget_nodes, "search node limit");
    app->add_option("--budget-ms", o.budget_ms, "wall-clock limit in milliseconds");
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    using namespace detail;
    Options o;
    CLI::App app{"oriented perfect path double covers"};
    app.name("oppdc");
    app.require_subcommand(1);

    auto* construct = app.add_subcommand("construct", "build a cover from a closed-form construction");
    construct
        ->add_option("--family", o.family, "cycle|biclique|complete|product|block-graph|cycle-partition|ear|fixture")
        ->required();
    construct->add_option("--n", o.n);
    construct->add_option("--m", o.m);
    construct->add_option("--name", o.name, "fixture name");
    construct->add_option("--input", o.input, "graph file (block-graph, cycle-partition, ear)");
    construct->add_option("--left", o.left);
    construct->add_option("--right", o.right);
    add_budget(construct, o);

    auto* verify = app.add_subcommand("verify", "check a cover against a graph");
    verify->add_option("--graph", o.graph)->required();
    verify->add_option("--cover", o.cover)->required();
    verify->add_flag("--lenient", o.lenient, "allow zero-length paths anywhere");

    auto* solve = app.add_subcommand("solve", "search for a cover");
    solve->add_option("--input", o.input)->required();
    solve->add_flag("--exhaustive", o.exhaustive, "plain search without structural rules");
    solve->add_flag("--dot", o.dot, "emit Graphviz instead of the cover format");
    solve->add_flag("--stats", o.stats, "report status, nodes and time on stderr");
    add_budget(solve, o);

    auto* filter = app.add_subcommand("filter", "minimal-counterexample filter over a graph6 stream");
    filter->add_option("--stream", o.stream)->required();
    filter->add_option("--report", o.report)->check(CLI::IsMember({"json", "text"}));
    filter->add_option("--jobs", o.jobs)->check(CLI::Range(1u, 256u));
    add_budget(filter, o);

    auto* product = app.add_subcommand("product", "cover of a Cartesian product");
    product->add_option("--left", o.left)->required();
    product->add_option("--right", o.right)->required();
    product->add_option("--left-cover", o.left_cover);
    product->add_option("--right-cover", o.right_cover);
    product->add_option("--emit", o.emit)->check(CLI::IsMember({"cover", "graph"}));
    add_budget(product, o);

    auto* convert = app.add_subcommand("convert", "convert between covers, cycle covers and graph formats");
    convert->add_option("--to", o.to, "socdc|oppdc|graph6|edge-list|dot")->required();
    convert->add_option("--graph", o.graph);
    convert->add_option("--cover", o.cover);
    convert->add_option("--cycles", o.cycles);
    convert->add_option("--apex", o.apex);
    convert->add_option("--input", o.input);
    convert->add_option("--emit", o.emit)->check(CLI::IsMember({"cover", "graph"}));

    auto* fixture = app.add_subcommand("fixture", "print a built-in fixture");
    fixture->add_option("--name", o.name)->required();
    fixture->add_option("--emit", o.emit)->check(CLI::IsMember({"cover", "graph", "labels"}));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return bad_input;
    }

    try {
        if (*construct) return run_construct(o, in, out);
        if (*verify) return run_verify(o, in, out);
        if (*solve) return run_solve(o, in, out, err);
        if (*filter) return run_filter(o, in, out);
        if (*product) return run_product(o, in, out);
        if (*convert) return run_convert(o, in, out);
        if (*fixture) return run_fixture(o, out);
    } catch (const NonExistenceError& e) {
        err << "no cover: " << e.what() << '\n';
        return no_cover;
    } catch (const CaseNotCovered& e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const ConstructionError& e) {
        err << "error: " << e.what() << '\n';
        return budget;
    } catch (const ParseError& e) {
        err << "parse error at " << e.position() << ": " << e.what() << '\n';
        return bad_input;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return bad_input;
    }
    return bad_input;
}

}  // namespace oppdc::cli
