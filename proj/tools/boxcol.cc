/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <boxcol/colouring_json.hh>
#include <boxcol/compose.hh>
#include <boxcol/solver.hh>
#include <boxcol/vertex_colouring.hh>

#include <CLI11.hpp>

#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace boxcol;

using std::cerr;
using std::cout;
using std::string;
using std::vector;

using nlohmann::json;

namespace
{
    enum Exit : int
    {
        exit_ok = 0,
        exit_verification_failed = 1,
        exit_usage = 2,
        exit_budget = 3
    };

    /// Bad input from the user: exit 2.
    class UsageError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    const std::map<string, GraphFormat> format_names{
        { "edgelist", GraphFormat::edge_list },
        { "graph6", GraphFormat::graph6 } };

    auto add_format(CLI::App & app, GraphFormat & format) -> void
    {
        app.add_option("--format", format, "graph file format")
            ->transform(CLI::CheckedTransformer(format_names))
            ->default_str("edgelist");
    }

    auto read_graph_arg(const string & filename, GraphFormat format) -> Graph
    {
        if (filename == "-")
            return read_graph(std::cin, format);
        return read_graph_file(filename, format);
    }

    auto read_json_file(const string & filename) -> json
    {
        try {
            if (filename == "-")
                return json::parse(std::cin);
            std::ifstream in{ filename };
            if (! in)
                throw UsageError{ "cannot open '" + filename + "'" };
            return json::parse(in);
        }
        catch (const json::exception & e) {
            throw UsageError{ "'" + filename + "' is not valid JSON: " + e.what() };
        }
    }

    auto write_graph(std::ostream & out, const Graph & g, GraphFormat format) -> void
    {
        if (format == GraphFormat::graph6)
            out << to_graph6(g) << '\n';
        else
            write_edge_list(out, g);
    }

    auto milliseconds(std::chrono::microseconds t) -> double
    {
        return double(t.count()) / 1000.0;
    }

    auto budget_of(std::uint64_t nodes, double secs) -> SearchBudget
    {
        SearchBudget budget;
        budget.max_nodes = nodes;
        budget.max_time = std::chrono::milliseconds{ std::int64_t(secs * 1000.0) };
        return budget;
    }

    auto report_budget(const BudgetExhausted & e) -> int
    {
        json doc{ { "lower", e.lower }, { "upper", e.upper }, { "nodes", e.stats.nodes },
            { "time_ms", milliseconds(e.stats.time) } };
        cout << doc.dump() << '\n';
        cerr << "boxcol: " << e.what() << '\n';
        return exit_budget;
    }

    struct GenOptions
    {
        string family;
        vector<std::size_t> sizes;
        GraphFormat format = GraphFormat::edge_list;
    };

    auto run_gen(const GenOptions & o) -> int
    {
        auto want = [&] (std::size_t count) {
            if (o.sizes.size() != count)
                throw UsageError{ "family '" + o.family + "' takes " + std::to_string(count) + " size argument(s)" };
        };

        Graph g;
        if (o.family == "path")
            want(1), g = path(o.sizes[0]);
        else if (o.family == "cycle")
            want(1), g = cycle(o.sizes[0]);
        else if (o.family == "complete")
            want(1), g = complete(o.sizes[0]);
        else if (o.family == "hypercube")
            want(1), g = hypercube(o.sizes[0]);
        else if (o.family == "grid")
            want(2), g = grid(o.sizes[0], o.sizes[1]);
        else if (o.family == "petersen")
            want(0), g = petersen();
        else
            throw UsageError{ "unknown family '" + o.family + "'" };

        write_graph(cout, g, o.format);
        return exit_ok;
    }

    struct ProductOptions
    {
        string g, h;
        GraphFormat format = GraphFormat::edge_list;
        GraphFormat out_format = GraphFormat::edge_list;
    };

    auto run_product(const ProductOptions & o) -> int
    {
        auto p = cartesian_product(read_graph_arg(o.g, o.format), read_graph_arg(o.h, o.format));
        write_graph(cout, p.graph, o.out_format);
        return exit_ok;
    }

    struct AciOptions
    {
        string graph;
        GraphFormat format = GraphFormat::edge_list;
        std::uint64_t budget_nodes = SearchBudget{}.max_nodes;
        double budget_secs = 60.0;
        bool lower_only = false;
        bool greedy = false;
        std::uint64_t seed = 0;
    };

    auto run_aci(const AciOptions & o) -> int
    {
        auto g = read_graph_arg(o.graph, o.format);
        if (o.lower_only) {
            cout << json{ { "lower_bound", lower_bound(g) } }.dump() << '\n';
            return exit_ok;
        }

        if (o.greedy) {
            auto start = std::chrono::steady_clock::now();
            auto x = greedy_acyclic(g, o.seed);
            auto took = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
            json doc{ { "colours", colours_used(x) }, { "colouring", colouring_to_json(g, x) },
                { "seed", o.seed }, { "time_ms", milliseconds(took) } };
            cout << doc.dump() << '\n';
            return exit_ok;
        }

        try {
            auto r = exact_aci(g, budget_of(o.budget_nodes, o.budget_secs));
            json doc{ { "aci", r.aci }, { "colouring", colouring_to_json(g, r.witness) },
                { "nodes", r.stats.nodes }, { "time_ms", milliseconds(r.stats.time) } };
            cout << doc.dump() << '\n';
            return exit_ok;
        }
        catch (const BudgetExhausted & e) {
            return report_budget(e);
        }
    }

    struct GreedyOptions
    {
        string graph;
        GraphFormat format = GraphFormat::edge_list;
        std::uint64_t seed = 0;
    };

    auto run_greedy(const GreedyOptions & o) -> int
    {
        auto g = read_graph_arg(o.graph, o.format);
        cout << colouring_to_json(g, greedy_acyclic(g, o.seed)).dump() << '\n';
        return exit_ok;
    }

    struct VertexColourOptions
    {
        string graph;
        GraphFormat format = GraphFormat::edge_list;
    };

    auto run_vertex_colour(const VertexColourOptions & o) -> int
    {
        auto g = read_graph_arg(o.graph, o.format);
        cout << vertex_colouring_to_json(brooks_colouring(g)).dump() << '\n';
        return exit_ok;
    }

    struct ComposeOptions
    {
        string g, h, xg, xh, out_graph;
        GraphFormat format = GraphFormat::edge_list;
        bool solve_factors = false;
        std::uint64_t budget_nodes = SearchBudget{}.max_nodes;
        double budget_secs = 60.0;
    };

    auto run_compose(const ComposeOptions & o) -> int
    {
        auto budget = budget_of(o.budget_nodes, o.budget_secs);
        auto g = read_graph_arg(o.g, o.format), h = read_graph_arg(o.h, o.format);

        auto factor_colouring = [&] (const Graph & f, const string & file, const char * name) -> EdgeColouring {
            if (! file.empty())
                return colouring_from_json(f, read_json_file(file));
            if (! o.solve_factors)
                throw UsageError{ string{ "no colouring given for " } + name + "; pass --x" + char(std::tolower(name[0]))
                    + " or --solve-factors" };
            return exact_aci(f, budget).witness;
        };

        try {
            ComposeInput in{ g, factor_colouring(g, o.xg, "G"), h, factor_colouring(h, o.xh, "H") };
            ColouredGraph out;
            try {
                auto r = compose(in);
                for (auto & w : r.warnings)
                    cerr << "boxcol: warning: " << w << '\n';
                out = { std::move(r.product.graph), std::move(r.colouring) };
            }
            catch (const ProductOfTwoK2 & e) {
                cerr << "boxcol: " << e.what() << "; solving the product exactly\n";
                out = compose_or_solve(in, budget);
            }

            if (! o.out_graph.empty()) {
                std::ofstream f{ o.out_graph };
                if (! f)
                    throw UsageError{ "cannot write '" + o.out_graph + "'" };
                write_edge_list(f, out.graph);
            }
            cout << colouring_to_json(out.graph, out.colouring).dump() << '\n';
            return exit_ok;
        }
        catch (const BudgetExhausted & e) {
            return report_budget(e);
        }
    }

    auto run_hypercube(std::size_t d) -> int
    {
        auto q = hypercube_colouring(d);
        cout << colouring_to_json(q.graph, q.colouring).dump() << '\n';
        return exit_ok;
    }

    struct VerifyOptions
    {
        string graph, colouring;
        GraphFormat format = GraphFormat::edge_list;
    };

    auto run_verify(const VerifyOptions & o) -> int
    {
        auto doc = read_json_file(o.colouring);
        ColouredGraph cg;
        if (o.graph.empty())
            cg = colouring_from_json(doc);
        else {
            cg.graph = read_graph_arg(o.graph, o.format);
            cg.colouring = colouring_from_json(cg.graph, doc);
        }

        if (auto v = check_acyclic(cg.graph, cg.colouring)) {
            cout << describe(cg.graph, *v) << '\n';
            return exit_verification_failed;
        }
        cout << "ok: acyclic with " << colours_used(cg.colouring) << " colours\n";
        return exit_ok;
    }

    struct ScanOptions
    {
        std::size_t min_n = 1, max_n = 6;
        string input;
        unsigned threads = 1;
        std::uint64_t budget_nodes = SearchBudget{}.max_nodes;
        double budget_secs = 60.0;
    };

    struct ScanRow
    {
        std::size_t n = 0, m = 0, delta = 0;
        std::optional<unsigned> aci;
        std::uint64_t nodes = 0;
        std::chrono::microseconds time{ 0 };
    };

    auto run_scan(const ScanOptions & o) -> int
    {
        vector<Graph> graphs;
        if (! o.input.empty()) {
            if (o.input == "-")
                graphs = read_graph6_stream(std::cin);
            else {
                std::ifstream in{ o.input };
                if (! in)
                    throw UsageError{ "cannot open '" + o.input + "'" };
                graphs = read_graph6_stream(in);
            }
        }
        else {
            if (o.max_n > 9)
                throw UsageError{ "--max-n is limited to 9 for generated corpora; use --input for more" };
            for (std::size_t n = o.min_n ; n <= o.max_n ; ++n)
                for (auto & g : connected_graphs(n))
                    graphs.push_back(std::move(g));
        }

        auto budget = budget_of(o.budget_nodes, o.budget_secs);
        vector<ScanRow> rows(graphs.size());
        std::atomic<std::size_t> next{ 0 };
        auto worker = [&] {
            for (std::size_t i ; (i = next++) < graphs.size() ; ) {
                auto & g = graphs[i];
                auto & row = rows[i];
                row.n = g.vertex_count();
                row.m = g.edge_count();
                row.delta = g.max_degree();
                try {
                    auto r = exact_aci(g, budget);
                    row.aci = r.aci;
                    row.nodes = r.stats.nodes;
                    row.time = r.stats.time;
                }
                catch (const BudgetExhausted & e) {
                    row.nodes = e.stats.nodes;
                    row.time = e.stats.time;
                }
            }
        };

        vector<std::thread> pool;
        for (unsigned t = 1 ; t < std::max(o.threads, 1u) ; ++t)
            pool.emplace_back(worker);
        worker();
        for (auto & t : pool)
            t.join();

        cout << "n,m,delta,aci,aci_minus_delta,nodes,time_ms\n";
        std::optional<long> worst;
        std::size_t exhausted = 0, over = 0;
        for (auto & row : rows) {
            cout << row.n << ',' << row.m << ',' << row.delta << ',';
            if (row.aci) {
                long gap = long(*row.aci) - long(row.delta);
                worst = std::max(worst.value_or(gap), gap);
                if (gap > 2)
                    ++over;
                cout << *row.aci << ',' << gap;
            }
            else {
                ++exhausted;
                cout << ',';
            }
            cout << ',' << row.nodes << ',' << std::fixed << std::setprecision(3) << milliseconds(row.time) << '\n';
        }

        cout << "# graphs " << rows.size() << ", max(aci - delta) ";
        if (worst)
            cout << *worst;
        else
            cout << "n/a";
        cout << ", above delta + 2: " << over << ", budget exhausted: " << exhausted << '\n';

        if (over > 0)
            return exit_verification_failed;
        if (exhausted > 0)
            return exit_budget;
        return exit_ok;
    }

    auto add_budget(CLI::App & app, std::uint64_t & nodes, double & secs) -> void
    {
        app.add_option("--budget-nodes", nodes, "search node limit")->capture_default_str();
        app.add_option("--budget-secs", secs, "search time limit in seconds")->capture_default_str();
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Acyclic edge colourings of graphs and their cartesian products" };
    app.require_subcommand(1);
    app.set_config("--config", "", "read options from a key=value file");

    GenOptions gen;
    auto gen_cmd = app.add_subcommand("gen", "write a named graph (path, cycle, complete, grid, hypercube, petersen)");
    gen_cmd->add_option("family", gen.family)->required();
    gen_cmd->add_option("sizes", gen.sizes);
    add_format(*gen_cmd, gen.format);

    ProductOptions product;
    auto product_cmd = app.add_subcommand("product", "write the cartesian product of two graphs");
    product_cmd->add_option("g-file", product.g, "first factor")->required();
    product_cmd->add_option("h-file", product.h, "second factor")->required();
    add_format(*product_cmd, product.format);
    product_cmd->add_option("--out-format", product.out_format, "output format")
        ->transform(CLI::CheckedTransformer(format_names))->default_str("edgelist");

    AciOptions aci;
    auto aci_cmd = app.add_subcommand("aci", "compute the acyclic chromatic index exactly");
    aci_cmd->add_option("graph", aci.graph)->required();
    add_format(*aci_cmd, aci.format);
    add_budget(*aci_cmd, aci.budget_nodes, aci.budget_secs);
    aci_cmd->add_flag("--lower-only", aci.lower_only, "only print the degree lower bound");
    aci_cmd->add_flag("--greedy", aci.greedy, "run the greedy heuristic instead of the exact search");
    aci_cmd->add_option("--seed", aci.seed, "greedy seed")->capture_default_str();

    GreedyOptions greedy;
    auto greedy_cmd = app.add_subcommand("greedy", "colour greedily and print the colouring");
    greedy_cmd->add_option("graph", greedy.graph)->required();
    add_format(*greedy_cmd, greedy.format);
    greedy_cmd->add_option("--seed", greedy.seed, "edge order seed")->capture_default_str();

    VertexColourOptions vertex;
    auto vertex_cmd = app.add_subcommand("vertex-color", "proper vertex colouring within the Brooks bound");
    vertex_cmd->add_option("graph", vertex.graph)->required();
    add_format(*vertex_cmd, vertex.format);

    ComposeOptions comp;
    auto compose_cmd = app.add_subcommand("compose", "colour G□H from colourings of G and H");
    // -h would collide with --h
    compose_cmd->set_help_flag("--help", "print this help message and exit");
    compose_cmd->add_option("--g", comp.g, "graph G")->required();
    compose_cmd->add_option("--h", comp.h, "graph H")->required();
    compose_cmd->add_option("--xg", comp.xg, "colouring JSON for G");
    compose_cmd->add_option("--xh", comp.xh, "colouring JSON for H");
    compose_cmd->add_flag("--solve-factors", comp.solve_factors, "solve missing factor colourings exactly");
    compose_cmd->add_option("--out-graph", comp.out_graph, "also write the product as an edge list");
    add_format(*compose_cmd, comp.format);
    add_budget(*compose_cmd, comp.budget_nodes, comp.budget_secs);

    std::size_t dimension = 0;
    auto hypercube_cmd = app.add_subcommand("hypercube", "colour the d-cube with d + 1 colours");
    hypercube_cmd->add_option("d", dimension)->required()->check(CLI::PositiveNumber);

    VerifyOptions verify;
    auto verify_cmd = app.add_subcommand("verify", "check that a colouring is proper and acyclic");
    verify_cmd->add_option("colouring", verify.colouring, "colouring JSON")->required();
    verify_cmd->add_option("--graph", verify.graph, "check against this graph rather than the one in the JSON");
    add_format(*verify_cmd, verify.format);

    ScanOptions scan;
    auto scan_cmd = app.add_subcommand("scan", "exact values over a corpus, as CSV");
    scan_cmd->add_option("--min-n", scan.min_n, "smallest order to generate")->capture_default_str();
    scan_cmd->add_option("--max-n", scan.max_n, "largest order to generate")->capture_default_str();
    scan_cmd->add_option("--input", scan.input, "graph6 stream to scan instead of generating");
    scan_cmd->add_option("--threads", scan.threads, "worker threads")->capture_default_str();
    add_budget(*scan_cmd, scan.budget_nodes, scan.budget_secs);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*gen_cmd)
            return run_gen(gen);
        if (*product_cmd)
            return run_product(product);
        if (*aci_cmd)
            return run_aci(aci);
        if (*greedy_cmd)
            return run_greedy(greedy);
        if (*vertex_cmd)
            return run_vertex_colour(vertex);
        if (*compose_cmd)
            return run_compose(comp);
        if (*hypercube_cmd)
            return run_hypercube(dimension);
        if (*verify_cmd)
            return run_verify(verify);
        if (*scan_cmd)
            return run_scan(scan);
    }
    catch (const UsageError & e) {
        cerr << "boxcol: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::invalid_argument & e) {
        // GraphError, ColouringError, ComposeError
        cerr << "boxcol: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::logic_error & e) {
        cerr << "boxcol: self-check failed: " << e.what() << '\n';
        return exit_verification_failed;
    }
    catch (const std::exception & e) {
        cerr << "boxcol: " << e.what() << '\n';
        return exit_usage;
    }

    return exit_usage;
}
