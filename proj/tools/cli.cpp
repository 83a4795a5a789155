#include "cli.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "fusionrank/closed_form.hpp"
#include "fusionrank/dual_graph.hpp"
#include "fusionrank/errors.hpp"
#include "fusionrank/fusion.hpp"
#include "fusionrank/graph_oracle.hpp"
#include "fusionrank/rank_engine.hpp"
#include "fusionrank/verlinde.hpp"

namespace fusionrank::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Bad invocation or unreadable input; exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Range {
    std::int64_t lo = 0;
    std::int64_t hi = -1;
};

struct Config {
    std::string format = "text";
    int jobs = 0;
    std::string fusion = "builtin:g2l1";
    std::string output;

    // rank
    std::int64_t genus = 0;
    std::int64_t npoints = 0;
    std::string method = "closed";
    std::string weight = "mu";
    std::int64_t level = 1;
    std::string graph_path;

    // verify / table
    std::string g_range;
    std::string n_range;
    bool allow_extension = false;

    // graph-rank
    bool oracle = false;

    // moebius
    std::optional<std::int64_t> k;
    bool check = false;
};

Range parse_range(const std::string& text, const char* flag) {
    auto parse_int = [&](const std::string& s) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) throw UsageError(std::string(flag) + ": invalid range '" + text + "'");
        return v;
    };
    Range r;
    if (auto dots = text.find(".."); dots != std::string::npos) {
        r.lo = parse_int(text.substr(0, dots));
        r.hi = parse_int(text.substr(dots + 2));
    } else {
        r.lo = r.hi = parse_int(text);
    }
    if (r.lo > r.hi) throw UsageError(std::string(flag) + ": empty range '" + text + "'");
    if (r.lo < 0) throw UsageError(std::string(flag) + ": range must be nonnegative");
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

FusionRing load_ring(const std::string& source) {
    if (source == "builtin:g2l1") return FusionRing::g2_level1();
    if (source.starts_with("builtin:")) throw UsageError("unknown builtin fusion ring '" + source + "'");
    return FusionRing(load_fusion(read_file(source)));
}

DualGraph load_graph_file(const std::string& path) {
    if (path.empty()) throw UsageError("--graph <file> is required");
    DualGraph g = load_dual_graph(read_file(path));
    g.check();
    return g;
}

std::string format_long_double(const char* fmt, long double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

void emit_single(const Config& cfg, std::ostream& out, Json row, const std::string& text) {
    if (cfg.format == "json") {
        out << row.dump() << "\n";
    } else if (cfg.format == "csv") {
        std::string header;
        std::string values;
        for (const auto& [key, value] : row.items()) {
            if (value.is_object()) continue;
            header += (header.empty() ? "" : ",") + key;
            values += (values.empty() ? "" : ",") + (value.is_string() ? value.get<std::string>() : value.dump());
        }
        out << header << "\n" << values << "\n";
    } else {
        out << text << "\n";
    }
}

int cmd_rank(const Config& cfg, std::ostream& out) {
    static const std::vector<std::string> kMethods = {"closed", "clutch", "tails", "graph", "verlinde-numeric"};
    if (std::find(kMethods.begin(), kMethods.end(), cfg.method) == kMethods.end()) {
        throw UsageError("unknown method '" + cfg.method + "'");
    }
    if (cfg.method != "graph" && (cfg.genus < 0 || cfg.npoints < 0)) {
        throw UsageError("--genus and --npoints must be nonnegative");
    }

    Json row;
    row["g"] = cfg.genus;
    row["n"] = cfg.npoints;
    row["method"] = cfg.method;

    if (cfg.method == "closed") {
        const Q5 value = closed_value(cfg.genus, cfg.npoints);
        const BigInt rank = to_integer(value);
        row["rank"] = to_string(rank);
        row["value"] = to_json(value);
        emit_single(cfg, out, row, to_string(rank));
        return kSuccess;
    }

    if (cfg.method == "verlinde-numeric") {
        if (cfg.npoints != 0) throw PreconditionError("verlinde-numeric computes n = 0 ranks only");
        if (cfg.level < 1) throw UsageError("--level must be positive");
        const auto variant = calibrate_exponent();
        const auto v = verlinde_trig_rank(cfg.genus, cfg.level, variant);
        row["rank"] = to_string(v.nearest);
        row["variant"] = std::string(variant_name(variant));
        row["value"] = format_long_double("%.21Lg", v.value);
        row["nearest"] = to_string(v.nearest);
        row["residual"] = format_long_double("%.3Le", v.residual);
        const std::string note = v.residual < 1e-6L ? "residual < 1e-6" : "residual " + format_long_double("%.3Le", v.residual);
        emit_single(cfg, out, row, to_string(v.nearest) + " (" + note + ")");
        return kSuccess;
    }

    const RankEngine engine(load_ring(cfg.fusion));
    BigInt rank;
    if (cfg.method == "clutch") {
        const WeightList w(static_cast<std::size_t>(cfg.npoints), engine.ring().at(cfg.weight));
        rank = engine.smooth(cfg.genus, w);
    } else if (cfg.method == "tails") {
        engine.ring().at(cfg.weight);
        DualGraph graph;
        try {
            graph = fig_b_graph(cfg.genus, cfg.npoints, cfg.weight);
        } catch (const GraphError& e) {
            throw PreconditionError(std::string("elliptic-tail degeneration: ") + e.what());
        }
        rank = engine.graph(graph);
    } else {
        const DualGraph graph = load_graph_file(cfg.graph_path);
        row["g"] = graph.total_genus();
        row["n"] = graph.leg_count();
        rank = engine.graph(graph);
    }
    row["rank"] = to_string(rank);
    emit_single(cfg, out, row, to_string(rank));
    return kSuccess;
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
    const Range g = parse_range(cfg.g_range, "--g");
    const Range n = parse_range(cfg.n_range, "--n");
    if (g.lo < 2 && !cfg.allow_extension) {
        throw UsageError("--g must start at 2 or above (use --allow-extension for g = 0, 1)");
    }
    const auto rows = verify_grid(g.lo, g.hi, n.lo, n.hi, cfg.allow_extension, cfg.jobs);

    if (cfg.format == "json") {
        Json all = Json::array();
        for (const auto& r : rows) all.push_back(to_json(r));
        out << all.dump() << "\n";
    } else if (cfg.format == "csv") {
        out << kRankReportCsvHeader << "\n";
        for (const auto& r : rows) out << to_csv(r) << "\n";
    } else {
        for (const auto& r : rows) {
            out << "g=" << r.g << " n=" << r.n << " sum_clutch=" << to_string(r.sum_clutch)
                << " closed=" << to_string(r.closed) << " sum_tails=" << to_string(r.sum_tails)
                << (r.agree ? " agree" : " DISAGREE") << (r.extension ? " (extension)" : "") << "\n";
        }
    }

    for (const auto& r : rows) {
        if (!r.agree) {
            err << "disagreement at g=" << r.g << " n=" << r.n << ": " << to_csv(r) << "\n";
            return kDisagreement;
        }
    }
    if (cfg.format == "text") out << rows.size() << " rows, all agree\n";
    return kSuccess;
}

int cmd_graph_rank(const Config& cfg, std::ostream& out) {
    const RankEngine engine(load_ring(cfg.fusion));
    const DualGraph graph = load_graph_file(cfg.graph_path);
    const BigInt rank = engine.graph(graph);

    Json row;
    row["g"] = graph.total_genus();
    row["n"] = graph.leg_count();
    row["rank"] = to_string(rank);
    if (!cfg.oracle) {
        emit_single(cfg, out, row, to_string(rank));
        return kSuccess;
    }
    const BigInt oracle = rank_bruteforce(engine.ring(), graph);
    const bool agree = oracle == rank;
    row["oracle"] = to_string(oracle);
    row["agree"] = agree;
    emit_single(cfg, out, row, to_string(rank) + " " + to_string(oracle) + (agree ? " OK" : " MISMATCH"));
    return agree ? kSuccess : kDisagreement;
}

int cmd_moebius(const Config& cfg, std::ostream& out) {
    Json row;
    if (!cfg.graph_path.empty()) {
        if (cfg.check) throw UsageError("--check applies to --k only");
        const SimpleGraph graph = load_simple_graph(read_file(cfg.graph_path));
        const BigInt count = count_noleaf_subgraphs(graph, cfg.jobs);
        row["count"] = to_string(count);
        emit_single(cfg, out, row, to_string(count));
        return kSuccess;
    }
    if (!cfg.k) throw UsageError("--k or --graph is required");
    const std::int64_t k = *cfg.k;
    if (k < 2 || k > 8) throw UsageError("--k must lie in 2..8");

    const BigInt count = count_noleaf_subgraphs(moebius_ladder(k), cfg.jobs);
    row["k"] = k;
    row["count"] = to_string(count);
    if (!cfg.check) {
        emit_single(cfg, out, row, to_string(count));
        return kSuccess;
    }
    const BigInt closed = closed_rank(k + 1, 0);
    const bool agree = closed == count;
    row["closed"] = to_string(closed);
    row["agree"] = agree;
    emit_single(cfg, out, row, to_string(count) + " " + to_string(closed) + (agree ? " OK" : " MISMATCH"));
    return agree ? kSuccess : kDisagreement;
}

int cmd_table(const Config& cfg, std::ostream& out) {
    const Range g = parse_range(cfg.g_range, "--g");
    const Range n = parse_range(cfg.n_range, "--n");
    const std::int64_t width = n.hi - n.lo + 1;
    const std::int64_t cells = (g.hi - g.lo + 1) * width;
    std::vector<BigInt> ranks(static_cast<std::size_t>(cells));
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < cells; ++c) ranks[static_cast<std::size_t>(c)] = closed_rank(g.lo + c / width, n.lo + c % width);

    if (cfg.format == "json") {
        Json all = Json::array();
        for (std::int64_t c = 0; c < cells; ++c) {
            all.push_back({{"g", g.lo + c / width}, {"n", n.lo + c % width}, {"rank", to_string(ranks[c])}});
        }
        out << all.dump() << "\n";
        return kSuccess;
    }
    const char sep = cfg.format == "csv" ? ',' : ' ';
    out << "g" << sep << "n" << sep << "rank\n";
    for (std::int64_t c = 0; c < cells; ++c) {
        out << g.lo + c / width << sep << n.lo + c % width << sep << to_string(ranks[c]) << "\n";
    }
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Exact conformal-block rank computations over fusion rings", "fusion-rank"};
    app.require_subcommand(1);
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    auto* jobs = app.add_option("--jobs", cfg.jobs, "Worker threads (default: FUSION_RANK_JOBS, else all cores)")
                     ->check(CLI::PositiveNumber);
    app.add_option("--fusion", cfg.fusion, "builtin:g2l1 or a fusion-ring JSON file");
    app.add_option("--output", cfg.output, "Write results to this file instead of standard output");

    auto* rank = app.add_subcommand("rank", "Rank of the bundle at (g, n) by one method");
    rank->add_option("--genus", cfg.genus, "Genus g");
    rank->add_option("--npoints", cfg.npoints, "Number of marked points n");
    rank->add_option("--method", cfg.method, "closed | clutch | tails | graph | verlinde-numeric");
    rank->add_option("--weight", cfg.weight, "Label on every marked point (clutch, tails)");
    rank->add_option("--level", cfg.level, "Level for verlinde-numeric");
    rank->add_option("--graph", cfg.graph_path, "Dual-graph JSON file (method graph)");

    auto* verify = app.add_subcommand("verify", "Check the three rank expressions agree over a grid");
    verify->add_option("--g", cfg.g_range, "Genus range a..b")->required();
    verify->add_option("--n", cfg.n_range, "Point-count range a..b")->required();
    verify->add_flag("--allow-extension", cfg.allow_extension, "Permit g = 0 and g = 1");

    auto* graph_rank = app.add_subcommand("graph-rank", "Rank of a dual graph by factorization");
    graph_rank->add_option("--graph", cfg.graph_path, "Dual-graph JSON file")->required();
    graph_rank->add_flag("--oracle", cfg.oracle, "Also run the brute-force oracle and compare");

    auto* moebius = app.add_subcommand("moebius", "Count no-leaf edge subgraphs of a Moebius ladder");
    moebius->add_option("--k", cfg.k, "Ladder size k (2k vertices)");
    moebius->add_flag("--check", cfg.check, "Compare against closed_rank(k + 1, 0)");
    moebius->add_option("--graph", cfg.graph_path, "Count this graph JSON instead");

    auto* table = app.add_subcommand("table", "Emit closed-form ranks over a grid");
    table->add_option("--g", cfg.g_range, "Genus range a..b")->required();
    table->add_option("--n", cfg.n_range, "Point-count range a..b")->required();

    for (auto* sub : {rank, verify, graph_rank, moebius, table}) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    // CLI11 drops an environment value that fails validation, so it is read here instead
    if (jobs->count() == 0) {
        if (const char* env = std::getenv("FUSION_RANK_JOBS"); env != nullptr && *env != '\0') {
            int parsed = 0;
            const auto [end, ec] = std::from_chars(env, env + std::strlen(env), parsed);
            if (ec != std::errc{} || *end != '\0' || parsed < 1) {
                err << "error: FUSION_RANK_JOBS must be a positive integer, got '" << env << "'\n";
                return kUsage;
            }
            cfg.jobs = parsed;
        }
    }
    if (cfg.jobs > 0) omp_set_num_threads(cfg.jobs);

    std::ostringstream buffer;
    int code = kSuccess;
    try {
        if (rank->parsed()) {
            code = cmd_rank(cfg, buffer);
        } else if (verify->parsed()) {
            code = cmd_verify(cfg, buffer, err);
        } else if (graph_rank->parsed()) {
            code = cmd_graph_rank(cfg, buffer);
        } else if (moebius->parsed()) {
            code = cmd_moebius(cfg, buffer);
        } else {
            code = cmd_table(cfg, buffer);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnknownLabel& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const GraphError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kPrecondition;
    }

    if (cfg.output.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(cfg.output, std::ios::binary);
        if (!file) {
            err << "error: cannot write '" << cfg.output << "'\n";
            return kUsage;
        }
        file << buffer.str();
    }
    return code;
}

}  // namespace fusionrank::cli
