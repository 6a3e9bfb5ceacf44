#pragma once

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "v3conf/v3conf.hpp"

namespace v3conf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kSynopsis =
    "usage: v3conf <command> [options]\n"
    "  verify <file>\n"
    "  census <file> [--json]\n"
    "  triangle-free <v> [--trace] [--json]\n"
    "  chain <n> [--json]\n"
    "  cyclic <v> [a b c] [--json]\n"
    "  enumerate <v> [--distribution] [--emit] [--connected-only=<bool>] [--threads <n>] [--long-run]\n"
    "  levi <file> [--export=dot|adj]\n"
    "  <file> may be '-' for standard input; --format=auto|compact|json selects the input format\n";

namespace detail {

// Input that could not be read or tokenized; reported as a usage/parse failure.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    InputFormat format = InputFormat::Auto;
};

inline std::string read_source(const std::string& path, std::istream& in) {
    if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream file(path);
    if (!file) throw InputError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline bool is_syntax_error(ErrorKind kind) {
    return kind == ErrorKind::UnknownSymbol || kind == ErrorKind::TokenLength || kind == ErrorKind::MalformedJson ||
           kind == ErrorKind::PointCountMismatch;
}

inline void write_configuration(std::ostream& out, const Configuration& cfg, bool json) {
    if (json || cfg.v() > kCompactAlphabetSize) {
        out << to_json(cfg).dump() << '\n';
    } else {
        out << format_compact(cfg) << '\n';
    }
}

inline nlohmann::json census_json(const FragmentCensus& c) {
    return {{"v", c.v}, {"t", c.t}, {"a1", c.a1}, {"a2", c.a2}, {"b1", c.b1},
            {"b2", c.b2}, {"b3", c.b3}, {"b4", c.b4}, {"b5", c.b5}};
}

inline nlohmann::json trace_json(const ExtensionTrace& trace) {
    nlohmann::json cycles = nlohmann::json::array();
    for (const auto& c : trace.cycle_history) cycles.push_back(std::vector<int>(c.begin(), c.end()));
    return {{"base_v", trace.base_v}, {"steps", trace.steps}, {"cycle_history", std::move(cycles)}};
}

inline int cmd_verify(Context& ctx, const std::string& path) {
    const auto [v, blocks] = read_candidate(read_source(path, ctx.in), ctx.format);
    const auto report = validate(v, blocks);
    ctx.out << "v: " << v << '\n';
    ctx.out << "valid: " << (report.valid() ? "yes" : "no") << '\n';
    for (const auto& violation : report.violations) {
        ctx.out << "violation: " << to_string(violation.rule);
        for (int id : violation.ids) ctx.out << ' ' << id;
        ctx.out << '\n';
    }
    if (!report.valid()) {
        ctx.err << "error: configuration violates " << report.violations.size() << " axiom check(s)\n";
        return kExitDomain;
    }
    const auto cfg = Configuration::from_blocks(v, blocks);
    ctx.out << "connected: " << (is_connected(cfg) ? "yes" : "no") << '\n';
    ctx.out << "levi girth: " << to_string(girth(levi_graph(cfg))) << '\n';
    return kExitOk;
}

inline int cmd_census(Context& ctx, const std::string& path, bool json) {
    const auto cfg = read_configuration(read_source(path, ctx.in), ctx.format);
    const auto direct = count_fragments_direct(cfg);
    const auto formula = census_from_formulas(cfg.v(), count_triangles(cfg));
    const bool match = direct == formula;
    if (json) {
        auto j = census_json(direct);
        j["direct"] = census_json(direct);
        j["formula"] = census_json(formula);
        j["match"] = match;
        ctx.out << j.dump() << '\n';
        return kExitOk;
    }
    ctx.out << "v = " << direct.v << ", t = " << direct.t << '\n';
    ctx.out << std::left << std::setw(10) << "fragment" << std::right << std::setw(14) << "direct" << std::setw(14)
            << "formula" << '\n';
    const std::pair<const char*, std::int64_t FragmentCensus::*> rows[] = {
        {"a1", &FragmentCensus::a1}, {"a2", &FragmentCensus::a2}, {"b1", &FragmentCensus::b1},
        {"b2", &FragmentCensus::b2}, {"b3", &FragmentCensus::b3}, {"b4", &FragmentCensus::b4},
        {"b5", &FragmentCensus::b5}};
    for (const auto& [name, field] : rows) {
        ctx.out << std::left << std::setw(10) << name << std::right << std::setw(14) << direct.*field
                << std::setw(14) << formula.*field << '\n';
    }
    ctx.out << "match: " << (match ? "yes" : "no") << '\n';
    return kExitOk;
}

inline int cmd_triangle_free(Context& ctx, int v, bool trace, bool json) {
    const auto result = triangle_free(v);
    if (json && trace) {
        ctx.out << nlohmann::json{{"configuration", to_json(result.configuration)}, {"trace", trace_json(result.trace)}}.dump()
                << '\n';
        return kExitOk;
    }
    write_configuration(ctx.out, result.configuration, json);
    if (trace) {
        ctx.out << "trace: base_v=" << result.trace.base_v << " steps=" << result.trace.steps << '\n';
        for (std::size_t i = 0; i < result.trace.cycle_history.size(); ++i) {
            ctx.out << "cycle " << i + 1 << ':';
            for (int x : result.trace.cycle_history[i]) ctx.out << ' ' << x;
            ctx.out << '\n';
        }
    }
    return kExitOk;
}

inline int cmd_cyclic(Context& ctx, int v, const std::vector<int>& triple, bool json) {
    if (!triple.empty()) {
        if (triple.size() != 3) throw CLI::ValidationError("cyclic", "expected either no triple or exactly a b c");
        write_configuration(ctx.out, cyclic_configuration({v, triple[0], triple[1], triple[2]}), json);
        return kExitOk;
    }
    if (v < 7) throw Error(ErrorKind::VTooSmall, "no v_3 exists for v=" + std::to_string(v));
    const auto reps = enumerate_cyclic(v);
    if (json) {
        auto rows = nlohmann::json::array();
        for (const auto& t : reps) {
            const auto direct = count_triangles(cyclic_configuration(t));
            nlohmann::json row{{"a", t.a}, {"b", t.b}, {"c", t.c}, {"direct", direct}};
            row["predicted"] = v >= 10 ? nlohmann::json(predict_cyclic_triangles(t)) : nlohmann::json(nullptr);
            rows.push_back(std::move(row));
        }
        ctx.out << nlohmann::json{{"v", v}, {"triples", std::move(rows)}}.dump() << '\n';
        return kExitOk;
    }
    ctx.out << std::left << std::setw(16) << "triple" << std::right << std::setw(10) << "predicted" << std::setw(8)
            << "direct" << '\n';
    for (const auto& t : reps) {
        const auto direct = count_triangles(cyclic_configuration(t));
        const std::string label = "<" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + ">";
        const std::string predicted = v >= 10 ? std::to_string(predict_cyclic_triangles(t)) : "-";
        ctx.out << std::left << std::setw(16) << label << std::right << std::setw(10) << predicted << std::setw(8)
                << direct << '\n';
    }
    return kExitOk;
}

inline int cmd_enumerate(Context& ctx, int v, bool distribution, bool emit, bool connected_only, unsigned threads,
                         bool long_run) {
    if (v >= 13 && !long_run) {
        throw CLI::ValidationError("enumerate", "v >= 13 runs for a long time; pass --long-run to proceed");
    }
    if (!distribution && !emit) distribution = true;
    EnumerationOptions options{connected_only, std::max(threads, 1U)};
    TriangleDistribution dist;
    dist.v = v;
    enumerate_all(v, options, [&](const Configuration& cfg) {
        if (emit) ctx.out << format_compact(cfg) << '\n';
        ++dist.counts[count_triangles(cfg)];
        ++dist.total;
    });
    if (distribution) {
        ctx.out << "t\tcount\n";
        for (const auto& [t, count] : dist.counts) ctx.out << t << '\t' << count << '\n';
        ctx.out << "total\t" << dist.total << '\n';
    }
    return kExitOk;
}

inline int cmd_levi(Context& ctx, const std::string& path, const std::string& export_format) {
    const auto cfg = read_configuration(read_source(path, ctx.in), ctx.format);
    const auto g = levi_graph(cfg);
    if (export_format == "dot") {
        ctx.out << export_dot(g);
    } else if (export_format == "adj") {
        ctx.out << export_adjacency(g);
    } else {
        ctx.out << "vertices: " << g.vertex_count() << '\n';
        ctx.out << "edges: " << g.graph.edge_count() << '\n';
        ctx.out << "girth: " << to_string(girth(g)) << '\n';
        ctx.out << "6-cycles: " << count_six_cycles(g) << '\n';
    }
    return kExitOk;
}

} // namespace detail

/// Runs one command line; `args[0]` is the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Symmetric configurations v_3: construction, fragment census, enumeration", "v3conf"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "auto";
    app.add_option("--format", format, "input format")->check(CLI::IsMember({"auto", "compact", "json"}));

    std::string path;
    bool json = false;
    bool trace = false;
    int number = 0;
    std::vector<int> triple;
    bool distribution = false;
    bool emit = false;
    bool connected_only = true;
    bool long_run = false;
    unsigned threads = 1;
    std::string export_format;

    auto* verify = app.add_subcommand("verify", "validate a configuration, report connectivity and Levi girth");
    verify->add_option("file", path)->required();

    auto* census = app.add_subcommand("census", "direct and formula fragment counts");
    census->add_option("file", path)->required();
    census->add_flag("--json", json);

    auto* tf = app.add_subcommand("triangle-free", "triangle-free configuration on v points");
    tf->add_option("v", number)->required();
    tf->add_flag("--trace", trace);
    tf->add_flag("--json", json);

    auto* chain = app.add_subcommand("chain", "ring of n edge-deleted Heawood graphs (7n points, 20n triangles)");
    chain->add_option("n", number)->required();
    chain->add_flag("--json", json);

    auto* cyclic = app.add_subcommand("cyclic", "cyclic configurations of order v");
    cyclic->add_option("v", number)->required();
    cyclic->add_option("triple", triple)->expected(0, 3);
    cyclic->add_flag("--json", json);

    auto* enumerate = app.add_subcommand("enumerate", "all non-isomorphic v_3 and their triangle counts");
    enumerate->add_option("v", number)->required();
    enumerate->add_flag("--distribution", distribution);
    enumerate->add_flag("--emit", emit);
    enumerate->add_option("--connected-only", connected_only)->default_str("true");
    enumerate->add_option("--threads", threads)->check(CLI::PositiveNumber);
    enumerate->add_flag("--long-run", long_run);

    auto* levi = app.add_subcommand("levi", "Levi graph summary or export");
    levi->add_option("file", path)->required();
    levi->add_option("--export", export_format)->check(CLI::IsMember({"dot", "adj"}));

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << kSynopsis;
        return kExitUsage;
    }

    const InputFormat input_format =
        format == "json" ? InputFormat::Json : format == "compact" ? InputFormat::Compact : InputFormat::Auto;

    // Output is buffered so that a failing command never emits a partial result.
    std::ostringstream buffer;
    detail::Context buffered{in, buffer, err, input_format};
    int code = kExitOk;
    try {
        if (*verify) code = detail::cmd_verify(buffered, path);
        else if (*census) code = detail::cmd_census(buffered, path, json);
        else if (*tf) code = detail::cmd_triangle_free(buffered, number, trace, json);
        else if (*chain) {
            detail::write_configuration(buffered.out, heawood_chain(number), json);
        } else if (*cyclic) code = detail::cmd_cyclic(buffered, number, triple, json);
        else if (*enumerate) code = detail::cmd_enumerate(buffered, number, distribution, emit, connected_only, threads, long_run);
        else if (*levi) code = detail::cmd_levi(buffered, path, export_format);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << kSynopsis;
        return kExitUsage;
    } catch (const detail::InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return detail::is_syntax_error(e.kind()) ? kExitUsage : kExitDomain;
    }
    if (code == kExitOk || *verify) out << buffer.str();
    return code;
}

} // namespace v3conf::cli
