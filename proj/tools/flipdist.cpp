#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "flipdist/bench.hpp"
#include "flipdist/bintree.hpp"
#include "flipdist/flip_dag.hpp"
#include "flipdist/gen.hpp"
#include "flipdist/io.hpp"
#include "flipdist/oracle.hpp"
#include "flipdist/solver.hpp"

namespace {

using namespace flipdist;

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_instance(in);
}

void print_stats(std::ostream& os, const SolveResult& res) {
    os << "n=" << res.n << '\n';
    os << "base_cost=" << res.base_cost << '\n';
    auto block = [&](const char* prefix, const SearchStats& s) {
        os << prefix << "tree_nodes=" << s.tree_nodes << '\n';
        os << prefix << "tree_leaves=" << s.tree_leaves << '\n';
        os << prefix << "flips_performed=" << s.flips_performed << '\n';
        os << prefix << "partitions=" << s.partitions << '\n';
        os << prefix << "subset_count=" << s.subset_count << '\n';
    };
    block("", res.accepted);
    block("total_", res.total);
    if (res.distance >= 0)
        os << "bound=" << leaf_bound(res.n, res.distance - res.base_cost) << '\n';
}

int run_solve(const std::string& path, std::optional<int> k_flag, bool emit_seq,
              const std::string& dag_file, bool stats_flag, int max_cap) {
    Instance ins = load_instance(path);
    std::optional<int> k = ins.budget;
    if (k_flag) k = k_flag;  // the command line wins over the file
    SolverOptions opt;
    opt.max_cap = max_cap;
    SolveResult res = k ? solve_decision(ins.initial, ins.target, *k, opt)
                        : exact_distance(ins.initial, ins.target, opt);
    const bool yes = res.distance >= 0;
    if (k) {
        std::cout << (yes ? "yes" : "no") << '\n';
    } else if (yes) {
        std::cout << "distance " << res.distance << '\n';
    } else {
        std::cerr << "error: no answer within --max-cap " << max_cap << '\n';
        return 2;
    }
    if (stats_flag) print_stats(std::cout, res);
    if (yes && emit_seq)
        for (const FlipRecord& r : res.witness.flips)
            std::cout << r.underlying.a << ' ' << r.underlying.b << " -> " << r.created.a
                      << ' ' << r.created.b << '\n';
    if (yes && !dag_file.empty()) {
        std::ofstream out(dag_file);
        if (!out) {
            std::cerr << "error: cannot write " << dag_file << '\n';
            return 2;
        }
        out << dot_export(build_dag(res.witness), res.witness);
    }
    return yes ? 0 : 1;
}

int run_distance(const std::string& path) {
    Instance ins = load_instance(path);
    SolveResult res = exact_distance(ins.initial, ins.target);
    std::cout << res.distance << '\n';
    return 0;
}

int run_oracle(const std::string& path) {
    Instance ins = load_instance(path);
    int d = bfs_distance(ins.initial, ins.target);  // guards its own size limit
    if (ins.budget) {
        const bool yes = d <= *ins.budget;
        std::cout << (yes ? "yes" : "no") << '\n';
        return yes ? 0 : 1;
    }
    std::cout << d << '\n';
    return 0;
}

int run_gen(int m, std::uint64_t seed, std::optional<int> walk) {
    Instance ins = walk ? gen_walk(m, seed, *walk) : gen_uniform(m, seed);
    std::cout << serialize_instance(ins);
    return 0;
}

int run_convert(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(first, last - first + 1));
    }
    if (lines.size() != 2)
        throw ParseError("expected exactly two tree lines, got " +
                         std::to_string(lines.size()));
    Instance ins;
    ins.initial = tree_to_triangulation(parse_tree(lines[0]));
    ins.target = tree_to_triangulation(parse_tree(lines[1]));
    if (ins.initial.vertex_count() != ins.target.vertex_count())
        throw ParseError("trees have different sizes");
    std::cout << serialize_instance(ins);
    return 0;
}

std::pair<int, int> parse_m_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos || dots == 0 || dots + 2 >= s.size())
        throw ParseError("--m-range expects the form A..B");
    try {
        std::size_t used = 0;
        int lo = std::stoi(s.substr(0, dots), &used);
        if (used != dots) throw ParseError("bad m-range bound");
        std::string hi_text = s.substr(dots + 2);
        int hi = std::stoi(hi_text, &used);
        if (used != hi_text.size()) throw ParseError("bad m-range bound");
        return {lo, hi};
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("--m-range expects the form A..B");
    }
}

int run_bench_cmd(const std::string& m_range, int samples, std::uint64_t seed,
                  const std::string& csv_path) {
    auto [lo, hi] = parse_m_range(m_range);
    std::vector<BenchRow> rows = run_bench(lo, hi, samples, seed);
    std::ofstream out(csv_path);
    if (!out) {
        std::cerr << "error: cannot write " << csv_path << '\n';
        return 2;
    }
    write_csv(out, rows);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact flip distance between triangulations of a convex polygon"};
    app.require_subcommand(1);

    std::string solve_file;
    int solve_k = 0;
    bool emit_seq = false;
    std::string dag_file;
    bool stats_flag = false;
    int max_cap = -1;
    CLI::App* solve = app.add_subcommand(
        "solve", "Compute the distance, or decide distance <= k when k is given");
    solve->add_option("file", solve_file, "instance file")->required();
    solve->add_option("--k", solve_k, "decision budget; overrides a k line in the file")
        ->check(CLI::NonNegativeNumber);
    solve->add_flag("--emit-sequence", emit_seq,
                    "print the witness, one flip per line: a b -> c d");
    solve->add_option("--emit-dag", dag_file,
                      "write the witness dependency DAG to this file as DOT");
    solve->add_flag("--stats", stats_flag, "print search statistics as key=value lines");
    solve->add_option("--max-cap", max_cap,
                      "cap the per-piece budget search (default: twice the piece size)");

    std::string dist_file;
    CLI::App* distance = app.add_subcommand("distance", "Print just the distance");
    distance->add_option("file", dist_file, "instance file")->required();

    std::string oracle_file;
    CLI::App* oracle = app.add_subcommand(
        "oracle", "Answer by breadth-first search over all triangulations (small m only)");
    oracle->add_option("file", oracle_file, "instance file")->required();

    int gen_m = 0;
    std::uint64_t gen_seed = 0;
    int gen_steps = 0;
    CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
    gen->add_option("--m", gen_m, "polygon size")->required()->check(CLI::Range(3, 1000000));
    gen->add_option("--seed", gen_seed, "random seed")->required();
    CLI::Option* walk_opt =
        gen->add_option("--walk", gen_steps, "derive the target by this many random flips")
            ->check(CLI::NonNegativeNumber);

    std::string trees_file;
    CLI::App* convert =
        app.add_subcommand("convert", "Turn two binary trees into an instance");
    convert->add_option("--trees", trees_file, "file with two trees, one per line")
        ->required();

    std::string m_range;
    int samples = 0;
    std::uint64_t bench_seed = 0;
    std::string csv_path;
    CLI::App* bench = app.add_subcommand("bench", "Random instances, stats as CSV");
    bench->add_option("--m-range", m_range, "polygon sizes A..B")->required();
    bench->add_option("--samples", samples, "instances per size")
        ->required()
        ->check(CLI::NonNegativeNumber);
    bench->add_option("--seed", bench_seed, "random seed")->required();
    bench->add_option("--csv", csv_path, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (solve->parsed()) {
            std::optional<int> k;
            if (solve->count("--k")) k = solve_k;
            return run_solve(solve_file, k, emit_seq, dag_file, stats_flag, max_cap);
        }
        if (distance->parsed()) return run_distance(dist_file);
        if (oracle->parsed()) return run_oracle(oracle_file);
        if (gen->parsed()) {
            std::optional<int> walk;
            if (walk_opt->count()) walk = gen_steps;
            return run_gen(gen_m, gen_seed, walk);
        }
        if (convert->parsed()) return run_convert(trees_file);
        if (bench->parsed()) return run_bench_cmd(m_range, samples, bench_seed, csv_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
