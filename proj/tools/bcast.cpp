// Command-line front end: solve, verify, gen, extract, enumerate, recognize.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bcast/broadcast.hpp"
#include "bcast/extraction.hpp"
#include "bcast/families.hpp"
#include "bcast/graph.hpp"
#include "bcast/harness.hpp"
#include "bcast/solvers.hpp"

namespace {

using namespace bcast;

std::vector<Graph> load_graphs(const std::string& arg) {
    if (std::filesystem::is_regular_file(arg)) {
        std::ifstream in(arg);
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_graph6_lines(ss.str());
    }
    return {parse_graph6(arg)};
}

std::string set_str(const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += (i > 0 ? "," : "") + std::to_string(s[i]);
    }
    return out + "}";
}

int cmd_solve(const std::string& arg) {
    for (const auto& g : load_graphs(arg)) {
        const DistanceMatrix d(g);
        const auto a = alpha(g);
        const auto b = alpha_b(g, d);
        std::cout << "graph6: " << write_graph6(g) << "\n"
                  << "n: " << g.order() << "  diameter: " << d.diameter() << "\n"
                  << "alpha: " << a.value << "  witness: " << set_str(a.witness) << "\n"
                  << "alpha_b: " << b.value << "  witness: " << format_broadcast(b.witness) << "\n"
                  << "optimal supports: " << b.supports.size();
        std::cout << "  f_max values:";
        for (int f : b.optimal_fmax) {
            std::cout << ' ' << f;
        }
        std::cout << "\n";
    }
    return 0;
}

struct VerifyArgs {
    int max_n = 0;
    std::string random;
    std::string file;
    bool allow_k0 = false;
    bool allow_n8 = false;
    bool summary_only = false;
    int jobs = 0;
    std::string format = "json";
    std::string checkpoint;
};

int cmd_verify(const VerifyArgs& args) {
    CampaignSource source;
    if (!args.file.empty()) {
        source = FileSource{args.file};
    } else if (!args.random.empty()) {
        RandomSource r;
        char c1 = 0, c2 = 0, c3 = 0;
        std::istringstream in(args.random);
        if (!(in >> r.n >> c1 >> r.p >> c2 >> r.seed >> c3 >> r.count) || c1 != ',' || c2 != ',' || c3 != ',') {
            throw CLI::ValidationError("--random", "expected n,p,seed,count");
        }
        source = r;
    } else {
        if (args.max_n > 7 && !args.allow_n8) {
            throw CLI::ValidationError("--max-n", "n = 8 requires --allow-n8");
        }
        source = EnumerateSource{args.max_n > 0 ? args.max_n : 7, 1, args.allow_n8, args.checkpoint};
    }
    CampaignOptions options;
    options.verify.allow_k0 = args.allow_k0;
    options.jobs = args.jobs;

    const bool csv = args.format == "csv";
    if (csv && !args.summary_only) {
        std::cout << csv_header() << "\n";
    }
    auto summary = run_campaign(source, options, [&](const VerificationRecord& r) {
        if (args.summary_only) {
            return;
        }
        std::cout << (csv ? record_to_csv(r) : record_to_json(r)) << "\n";
    });
    if (csv) {
        std::cerr << summary_to_json(summary) << "\n";
    } else {
        std::cout << summary_to_json(summary) << "\n";
    }
    return summary.ok() ? 0 : 1;
}

struct GenArgs {
    std::string family;
    int k = 1;
    int l = 2;
    int r = 0;
    std::vector<int> layer_sizes{1};
    std::string cross = "single";
    bool sparse = false;
    bool allow_k0 = false;
    bool json = false;
};

StripSpec strip_for(const GenArgs& a, int length) {
    StripSpec s;
    if (a.layer_sizes.size() == 1) {
        s = a.sparse ? StripSpec::sparse(length, a.layer_sizes[0]) : StripSpec::uniform(length, a.layer_sizes[0]);
        return s;
    }
    if (static_cast<int>(a.layer_sizes.size()) != length) {
        throw CLI::ValidationError("--layer-sizes", "give one size or exactly " + std::to_string(length) +
                                                        " sizes (layers beyond the root)");
    }
    std::vector<int> sizes{1};
    sizes.insert(sizes.end(), a.layer_sizes.begin(), a.layer_sizes.end());
    s = StripSpec::with_sizes(sizes);
    if (a.sparse) {
        for (int i = 1; i < length; i += 2) {
            std::vector<Edge> e;
            for (int j = 0; j < sizes[static_cast<std::size_t>(i) + 1]; ++j) {
                e.emplace_back(j % sizes[static_cast<std::size_t>(i)], j);
            }
            s.odd_layer_edges[i] = e;
        }
    }
    return s;
}

int cmd_gen(const GenArgs& a) {
    FamilyMember m;
    if (a.family == "g2") {
        const int length = 2 * a.k + 1;
        auto s1 = strip_for(a, length);
        auto s2 = strip_for(a, length);
        std::vector<Edge> cross;
        if (a.cross == "complete") {
            for (int x = 0; x < s1.layer_sizes.back(); ++x) {
                for (int y = 0; y < s2.layer_sizes.back(); ++y) {
                    cross.emplace_back(x, y);
                }
            }
        } else {
            cross = {{0, 0}};
        }
        m = build_G2(a.k, s1, s2, cross, {a.allow_k0});
    } else {
        std::vector<StripSpec> strips(static_cast<std::size_t>(a.l), strip_for(a, 2 * a.k));
        m = build_G0(a.k, a.l, strips, a.r);
    }
    std::cout << write_graph6(m.graph) << "\n";
    if (a.json) {
        std::cerr << family_params_to_json(m.params) << "\n";
    }
    return 0;
}

int cmd_extract(const std::string& graph, const std::string& broadcast) {
    const Graph g = parse_graph6(graph);
    const DistanceMatrix d(g);
    const Broadcast f = parse_broadcast(broadcast);
    std::cout << certificate_to_json(extract_independent_set(g, d, f)) << "\n";
    return 0;
}

int cmd_enumerate(int n, bool allow_n8) {
    for_each_connected(n, [](const Graph& g, std::uint64_t) { std::cout << write_graph6(g) << '\n'; }, {allow_n8});
    return 0;
}

int cmd_recognize(const std::string& arg, bool allow_k0) {
    for (const auto& g : load_graphs(arg)) {
        auto p = recognize(g, {allow_k0});
        std::cout << write_graph6(g) << ' ' << (p ? family_params_to_json(*p) : "none") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Broadcast independence toolkit"};
    app.require_subcommand(1);

    std::string solve_arg;
    auto* solve = app.add_subcommand("solve", "Compute alpha and alpha_b with witnesses");
    solve->add_option("graph", solve_arg, "graph6 string or file of graph6 lines")->required();

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Check the bound and the equality characterization");
    auto* o_max = verify->add_option("--max-n", va.max_n, "Enumerate all connected graphs up to N vertices");
    auto* o_rand = verify->add_option("--random", va.random, "n,p,seed,count");
    auto* o_file = verify->add_option("--file", va.file, "File of graph6 lines");
    o_max->excludes(o_rand)->excludes(o_file);
    o_rand->excludes(o_file);
    verify->add_flag("--allow-k0", va.allow_k0, "Accept k=0 as a G2 member");
    verify->add_flag("--allow-n8", va.allow_n8, "Permit --max-n 8");
    verify->add_option("--checkpoint", va.checkpoint, "Progress file for long enumerations");
    verify->add_option("--jobs", va.jobs, "Worker threads (0 = all cores)");
    verify->add_option("--format", va.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_flag("--summary-only", va.summary_only, "Print only the aggregate summary");

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "Build a member of an extremal family");
    gen->add_option("--family", ga.family)->required()->check(CLI::IsMember({"g0", "g2"}));
    gen->add_option("--k", ga.k)->required();
    gen->add_option("--l", ga.l, "Number of strips (g0)");
    gen->add_option("--r", ga.r, "Size of the extra clique part (g0)");
    gen->add_option("--layer-sizes", ga.layer_sizes, "One size, or one per layer beyond the root");
    gen->add_option("--cross", ga.cross, "single or complete (g2)")->check(CLI::IsMember({"single", "complete"}));
    gen->add_flag("--sparse", ga.sparse, "Sparse odd-layer edges");
    gen->add_flag("--allow-k0", ga.allow_k0, "Permit k=0 for g2");
    gen->add_flag("--params", ga.json, "Also print the parameters as JSON on stderr");

    std::string ex_graph;
    std::string ex_broadcast;
    auto* extract = app.add_subcommand("extract", "Run the independent-set extraction on a broadcast");
    extract->add_option("--graph", ex_graph)->required();
    extract->add_option("--broadcast", ex_broadcast, "\"f0 f1 ...\"")->required();

    int en_n = 0;
    bool en_n8 = false;
    auto* enumerate = app.add_subcommand("enumerate", "Print every labeled connected graph on N vertices");
    enumerate->add_option("--n", en_n)->required();
    enumerate->add_flag("--allow-n8", en_n8);

    std::string rec_arg;
    bool rec_k0 = false;
    auto* rec = app.add_subcommand("recognize", "Test membership in the extremal families");
    rec->add_option("graph", rec_arg)->required();
    rec->add_flag("--allow-k0", rec_k0);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            return cmd_solve(solve_arg);
        }
        if (verify->parsed()) {
            return cmd_verify(va);
        }
        if (gen->parsed()) {
            return cmd_gen(ga);
        }
        if (extract->parsed()) {
            return cmd_extract(ex_graph, ex_broadcast);
        }
        if (enumerate->parsed()) {
            return cmd_enumerate(en_n, en_n8);
        }
        if (rec->parsed()) {
            return cmd_recognize(rec_arg, rec_k0);
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
