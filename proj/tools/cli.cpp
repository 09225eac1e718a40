#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "endgraph/ball.hpp"
#include "endgraph/builtins.hpp"
#include "endgraph/ends.hpp"
#include "endgraph/errors.hpp"
#include "endgraph/genericity.hpp"
#include "endgraph/graph_io.hpp"
#include "endgraph/phe.hpp"
#include "endgraph/reductions.hpp"
#include "endgraph/spec_file.hpp"
#include "endgraph/surfaces.hpp"

namespace endgraph::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot read '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

SpecFile parse_file(const std::string& path) {
    const auto text = read_file(path);
    try {
        return parse_spec(text);
    } catch (const ParseError& e) {
        throw DomainError(path + ":" + e.what());
    }
}

// A file path, "gamma:<k>:<closed set>", an inline descriptor or a builtin name.
SpecFile parse_argument(const std::string& arg) {
    if (std::filesystem::is_regular_file(arg)) return parse_file(arg);
    if (arg.starts_with("gamma:")) {
        const auto colon = arg.find(':', 6);
        if (colon == std::string::npos) throw DomainError("expected gamma:<k>:<closed set>, got '" + arg + "'");
        return parse_spec("gamma " + arg.substr(6, colon - 6) + " closedset " + arg.substr(colon + 1));
    }
    if (arg.find('=') != std::string::npos) return parse_descriptor(arg);
    return BuiltinSpec{arg};
}

OraclePtr graph_argument(const std::string& arg) { return to_oracle(parse_argument(arg)); }

std::optional<StandardGraphDescriptor> descriptor_of(const SpecFile& s, const OraclePtr& g) {
    if (const auto* d = std::get_if<StandardGraphDescriptor>(&s)) return *d;
    return g->descriptor();
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (format == a) return;
    std::string list;
    for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
    throw UsageError("--format must be one of: " + list);
}

nlohmann::ordered_json ends_json(const ComponentTree& t, const GraphOracle& g) {
    nlohmann::ordered_json j;
    j["horizon"] = t.horizon;
    j["depth"] = t.r_max;
    j["levels"] = nlohmann::ordered_json::array();
    for (const auto& level : t.levels) {
        auto nodes = nlohmann::ordered_json::array();
        for (const auto& n : level) {
            nlohmann::ordered_json node;
            node["parent"] = n.parent;
            node["children"] = n.children;
            node["representative"] = n.representative;
            node["min_depth"] = n.min_depth;
            node["vertices"] = n.vertex_count;
            node["edges"] = n.edge_count;
            node["betti"] = n.betti;
            node["new_cycles"] = n.new_cycles;
            node["open_stubs"] = n.open_stubs;
            nodes.push_back(node);
        }
        j["levels"].push_back(nodes);
    }
    j["persistent_branches"] = t.persistent_branches();
    auto profiles = nlohmann::ordered_json::array();
    const std::size_t span = static_cast<std::size_t>(std::max<std::int64_t>(2, t.r_max / 2));
    for (const auto& p : loop_accumulation_profile(t)) {
        nlohmann::ordered_json q;
        q["leaf_level"] = p.leaf_level;
        q["leaf_index"] = p.leaf_index;
        q["persistent"] = p.persistent;
        q["cumulative"] = p.cumulative;
        q["still_growing"] = still_growing(p, span);
        profiles.push_back(q);
    }
    j["profiles"] = profiles;
    j["rank_lower_bound"] = rank_lower_bound(g, t.horizon);
    return j;
}

std::string ends_text(const ComponentTree& t) {
    std::ostringstream out;
    out << "horizon " << t.horizon << " depth " << t.r_max << "\n";
    for (std::size_t i = 0; i < t.levels.size(); ++i) {
        out << "level " << i << ":";
        for (const auto& n : t.levels[i])
            out << " [" << n.representative << " v=" << n.vertex_count << " betti=" << n.betti
                << (n.open() ? " open" : "") << "]";
        out << "\n";
    }
    out << "persistent " << t.persistent_branches().size() << "\n";
    return out.str();
}

PantsComplex pants_file(const std::string& path) {
    auto s = parse_file(path);
    if (auto* p = std::get_if<PantsComplex>(&s)) return *p;
    throw DomainError(path + " is not a pants complex");
}

SurfaceInput surface_argument(const std::string& arg) {
    const auto s = parse_argument(arg);
    if (const auto* p = std::get_if<PantsComplex>(&s)) return *p;
    if (const auto* d = std::get_if<StandardGraphDescriptor>(&s)) return SurfaceClass{d->rank, d->endpair};
    if (const auto* b = std::get_if<BuiltinSpec>(&s); b && b->name == "annulus_chain") return annulus_chain();
    throw DomainError("'" + arg + "' is neither a pants complex nor a surface descriptor");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite-scale computations on locally finite rooted graphs", "endgraph"};
    app.require_subcommand(1);

    auto* ball_cmd = app.add_subcommand("ball", "Rooted ball with stubs");
    std::string ball_spec;
    std::string ball_radius;
    std::string ball_format = "text";
    ball_cmd->add_option("--spec", ball_spec, "Graph: file, builtin, gamma:<k>:<set> or descriptor")->required();
    ball_cmd->add_option("--radius", ball_radius, "Radius, a multiple of 1/2 (e.g. 3 or 5/2)")->required();
    ball_cmd->add_option("--format", ball_format, "text, dot, graph or code");

    auto* dist_cmd = app.add_subcommand("dist", "Ball-isomorphism distance");
    std::string dist_a;
    std::string dist_b;
    std::int64_t dist_budget = 20;
    dist_cmd->add_option("--a", dist_a, "First graph")->required();
    dist_cmd->add_option("--b", dist_b, "Second graph")->required();
    dist_cmd->add_option("--budget", dist_budget, "Largest radius, in half-steps")->check(CLI::NonNegativeNumber);

    auto* ends_cmd = app.add_subcommand("ends", "Component tree of the complements of balls");
    std::string ends_spec;
    std::int64_t ends_depth = 4;
    std::int64_t ends_horizon = 8;
    std::string ends_format = "json";
    ends_cmd->add_option("--spec", ends_spec, "Graph")->required();
    ends_cmd->add_option("--depth", ends_depth, "Deepest level r")->check(CLI::NonNegativeNumber);
    ends_cmd->add_option("--horizon", ends_horizon, "Window radius R >= r")->check(CLI::NonNegativeNumber);
    ends_cmd->add_option("--format", ends_format, "json, dot or text");

    auto* rank_cmd = app.add_subcommand("rank", "Rank lower bound from a ball");
    std::string rank_spec;
    std::int64_t rank_radius = 6;
    rank_cmd->add_option("--spec", rank_spec, "Graph")->required();
    rank_cmd->add_option("--radius", rank_radius, "Ball radius")->check(CLI::NonNegativeNumber);

    auto* reduce_cmd = app.add_subcommand("reduce", "Graph from a closed subset of Cantor space");
    std::string reduce_file;
    std::size_t reduce_k = 3;
    std::optional<std::string> reduce_ball;
    std::string reduce_format = "text";
    std::optional<std::string> reduce_decode;
    std::optional<std::size_t> reduce_validate;
    unsigned reduce_grouping = 0b000111;
    reduce_cmd->add_option("--closed-set", reduce_file, "Closed-set file, or inline 'closedset ...' text")->required();
    reduce_cmd->add_option("--k", reduce_k, "0 (pruned tree), 3, or 4..64");
    reduce_cmd->add_option("--emit-ball", reduce_ball, "Print the ball of this radius");
    reduce_cmd->add_option("--format", reduce_format, "text, dot, graph or code (with --emit-ball)");
    reduce_cmd->add_option("--decode", reduce_decode, "Explain where a vertex id comes from");
    reduce_cmd->add_option("--validate", reduce_validate, "Check the tree of the closed set to this depth");
    reduce_cmd->add_option("--grouping", reduce_grouping, "k = 4 split mask over six edge-ends")->check(CLI::Range(0, 63));

    auto* phe_cmd = app.add_subcommand("phe", "Proper homotopy equivalence");
    std::string phe_a;
    std::string phe_b;
    std::int64_t phe_budget = 6;
    phe_cmd->add_option("--a", phe_a, "Descriptor or graph")->required();
    phe_cmd->add_option("--b", phe_b, "Descriptor or graph")->required();
    phe_cmd->add_option("--budget", phe_budget, "Radius for rank certificates")->check(CLI::NonNegativeNumber);

    auto* realize_cmd = app.add_subcommand("realize", "Construct a graph with a given descriptor");
    std::string realize_desc;
    std::string realize_space = "<inf";
    std::string realize_radius = "3";
    std::string realize_format = "text";
    realize_cmd->add_option("--descriptor", realize_desc, "Descriptor text")->required();
    realize_cmd->add_option("--space", realize_space, "k, <=k or <inf");
    realize_cmd->add_option("--emit-ball", realize_radius, "Radius of the printed ball");
    realize_cmd->add_option("--format", realize_format, "text, dot, graph or code");

    auto* generic_cmd = app.add_subcommand("generic", "Configuration-model genericity experiment");
    ExperimentConfig cfg;
    std::optional<std::string> csv_path;
    std::size_t threads = 1;
    generic_cmd->add_option("--k", cfg.k, "Degree")->check(CLI::PositiveNumber);
    generic_cmd->add_option("--N", cfg.N, "Vertices")->check(CLI::PositiveNumber);
    generic_cmd->add_option("--n", cfg.n, "Rank and connectivity parameter")->check(CLI::NonNegativeNumber);
    generic_cmd->add_option("--R", cfg.R, "Horizon")->check(CLI::NonNegativeNumber);
    generic_cmd->add_option("--trials", cfg.trials, "Number of trials");
    generic_cmd->add_option("--seed", cfg.seed, "64-bit seed")->required();
    generic_cmd->add_option("--csv", csv_path, "Write per-trial CSV here ('-' for stdout)");
    generic_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

    auto* surface_cmd = app.add_subcommand("surface", "Pants complexes and their graphs");
    std::optional<std::string> surface_file;
    bool surface_graph = false;
    bool surface_genus = false;
    std::vector<std::string> surface_homeo;
    std::string surface_format = "text";
    surface_cmd->add_option("--file", surface_file, "Pants file");
    surface_cmd->add_flag("--to-graph", surface_graph, "Print the associated graph");
    surface_cmd->add_flag("--genus", surface_genus, "Print genus and Euler characteristic");
    surface_cmd->add_option("--homeo", surface_homeo, "Two pants files or surface descriptors")->expected(2);
    surface_cmd->add_option("--format", surface_format, "text or dot (with --to-graph)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    auto print_ball = [&](const GraphOracle& g, const std::string& radius, const std::string& format) {
        check_format(format, {"text", "dot", "graph", "code"});
        const Ball b = ball(g, parse_half_radius(radius));
        if (format == "dot")
            out << to_dot(b);
        else if (format == "graph")
            out << to_text(to_graph(b));
        else if (format == "code")
            out << canonical_code(b) << "\n";
        else
            out << to_text(b);
    };

    try {
        if (ball_cmd->parsed()) {
            print_ball(*graph_argument(ball_spec), ball_radius, ball_format);
        } else if (dist_cmd->parsed()) {
            out << distance(*graph_argument(dist_a), *graph_argument(dist_b), dist_budget).to_string() << "\n";
        } else if (ends_cmd->parsed()) {
            check_format(ends_format, {"json", "dot", "text"});
            const auto g = graph_argument(ends_spec);
            const auto t = component_tree(*g, ends_depth, ends_horizon);
            if (ends_format == "json")
                out << ends_json(t, *g).dump(2) << "\n";
            else if (ends_format == "dot")
                out << to_dot(t);
            else
                out << ends_text(t);
        } else if (rank_cmd->parsed()) {
            const auto g = graph_argument(rank_spec);
            out << "rank >= " << rank_lower_bound(*g, rank_radius) << " (ball radius " << rank_radius << ")\n";
            if (const auto d = g->descriptor()) out << "certified rank " << d->rank.to_string() << "\n";
        } else if (reduce_cmd->parsed()) {
            const auto s = reduce_file.starts_with("closedset ") ? SpecFile(parse_closed_set(reduce_file)) : parse_file(reduce_file);
            const auto* c = std::get_if<ClosedSetSpec>(&s);
            if (!c) throw DomainError(reduce_file + " is not a closed set");
            if (reduce_validate) {
                const auto report = validate_closed_set(*c, *reduce_validate);
                for (const auto& v : report.violations) out << "violation: " << v << "\n";
                for (const auto& w : report.warnings) out << "warning: " << w << "\n";
                if (!report.violations.empty()) return 1;
                out << "valid to depth " << *reduce_validate << "\n";
            }
            const EdgeEndGrouping grouping{static_cast<std::uint8_t>(reduce_grouping)};
            if (reduce_k != 4 && reduce_grouping != 0b000111) throw UsageError("--grouping applies to k = 4 only");
            const OraclePtr g = reduce_k == 4 ? gamma_k(*c, 4, grouping) : gamma_oracle(reduce_k, *c);
            if (reduce_decode) {
                out << decode_vertex(*c, reduce_k, *reduce_decode, grouping).to_string() << "\n";
            } else if (reduce_ball) {
                print_ball(*g, *reduce_ball, reduce_format);
            } else {
                out << g->provenance() << "\n";
                const auto d = g->descriptor();
                out << (d ? to_string(*d) : std::string("descriptor unknown")) << "\n";
            }
        } else if (phe_cmd->parsed()) {
            const auto sa = parse_argument(phe_a);
            const auto sb = parse_argument(phe_b);
            const auto ga = to_oracle(sa);
            const auto gb = to_oracle(sb);
            const auto da = descriptor_of(sa, ga);
            const auto db = descriptor_of(sb, gb);
            if (da && db) {
                out << (phe_equivalent(*da, *db) ? "equivalent" : "not equivalent") << "\n";
            } else {
                const auto v = phe_distinguish(*ga, *gb, phe_budget);
                out << (v.distinguished ? "not equivalent: " + v.reason : std::string("unknown")) << "\n";
            }
        } else if (realize_cmd->parsed()) {
            const auto g = realize(parse_descriptor(realize_desc), parse_space(realize_space));
            print_ball(*g, realize_radius, realize_format);
        } else if (generic_cmd->parsed()) {
            const auto result = run_experiment(cfg, threads);
            const auto csv = result.to_csv();
            if (csv_path && *csv_path == "-") {
                out << csv;
            } else if (csv_path) {
                std::ofstream file(*csv_path, std::ios::binary);
                if (!file || !(file << csv)) throw DomainError("cannot write '" + *csv_path + "'");
            }
            if (!csv_path || *csv_path != "-") {
                out << std::setprecision(6) << "trials " << result.records.size() << "\n"
                    << "fraction_in_U" << cfg.n << " " << result.fraction_in_Un() << "\n"
                    << "fraction_in_V" << cfg.n << " " << result.fraction_in_Vn() << "\n";
            }
        } else if (surface_cmd->parsed()) {
            check_format(surface_format, {"text", "dot"});
            if (!surface_homeo.empty()) {
                out << to_string(surfaces_homeomorphic(surface_argument(surface_homeo[0]),
                                                       surface_argument(surface_homeo[1])))
                    << "\n";
            } else {
                if (!surface_file) throw UsageError("surface needs --file or --homeo");
                if (!surface_graph && !surface_genus) throw UsageError("surface --file needs --to-graph or --genus");
                const auto p = pants_file(*surface_file);
                if (surface_genus)
                    out << "genus " << genus(p) << "\n" << "euler_characteristic " << euler_characteristic(p) << "\n";
                if (surface_graph) out << (surface_format == "dot" ? to_dot(to_graph(p)) : to_text(to_graph(p)));
            }
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace endgraph::cli
