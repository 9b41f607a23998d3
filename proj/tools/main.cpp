#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sparselp/cli.hpp"

using namespace sparselp;

namespace {

struct SolveArgs {
    std::string file;
    std::string backend = "sparse";
    double eps = default_threshold_eps;
    std::size_t neg_cap = default_guess_cap;
    std::size_t dense_limit = SolverOptions{}.dense_limit;
    bool json = false;

    SolverOptions options() const { return {eps, neg_cap, dense_limit}; }
};

void add_solver_flags(CLI::App* cmd, SolveArgs& args)
{
    cmd->add_option("--eps", args.eps, "Threshold tolerance: x counts as 1 when x >= 1 - eps")->capture_default_str();
    cmd->add_option("--neg-cap", args.neg_cap, "Largest number of free negations to enumerate")->capture_default_str();
    cmd->add_option("--dense-limit", args.dense_limit, "Largest matrix size the dense backend accepts")
        ->capture_default_str();
}

std::vector<Backend> parse_backends(const std::vector<std::string>& names)
{
    std::vector<Backend> out;
    for (const auto& name : names)
        out.push_back(parse_backend(name));
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Least and stable models of logic programs by sparse matrix iteration"};
    app.require_subcommand(1);

    const std::vector<std::string> backend_names{"sparse", "dense", "symbolic"};

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Least model of a definite program");
    solve_cmd->add_option("file", solve.file, "Program (.lp)")->required();
    solve_cmd->add_option("--backend", solve.backend)->check(CLI::IsMember(backend_names))->capture_default_str();
    solve_cmd->add_flag("--json", solve.json, "Print one JSON object");
    add_solver_flags(solve_cmd, solve);

    SolveArgs stable;
    auto* stable_cmd = app.add_subcommand("stable", "Stable models of a normal program");
    stable_cmd->add_option("file", stable.file, "Program (.lp)")->required();
    stable_cmd->add_option("--backend", stable.backend)->check(CLI::IsMember(backend_names))->capture_default_str();
    stable_cmd->add_flag("--json", stable.json, "Print one JSON object");
    add_solver_flags(stable_cmd, stable);

    BenchRequest bench;
    SolveArgs bench_solver;
    std::string bench_file;
    std::string bench_profile = "table1";
    std::vector<std::string> bench_backends{"sparse", "dense"};
    auto* bench_cmd = app.add_subcommand("bench", "Time the fixpoint loop per backend (JSON lines)");
    bench_cmd->add_option("--file", bench_file, "Program (.lp); otherwise a generated program");
    bench_cmd->add_option("--profile", bench_profile)->check(CLI::IsMember({"table1", "denser"}))
        ->capture_default_str();
    bench_cmd->add_option("--n", bench.profile.n, "Atoms")->capture_default_str();
    bench_cmd->add_option("--m", bench.profile.m, "Rules")->capture_default_str();
    bench_cmd->add_option("--k", bench.profile.k, "Negative literals")->capture_default_str();
    bench_cmd->add_option("--seed", bench.profile.seed)->capture_default_str();
    bench_cmd->add_option("--backend", bench_backends, "Backends to time")
        ->check(CLI::IsMember(backend_names))
        ->delimiter(',')
        ->capture_default_str();
    bench_cmd->add_option("--trials", bench.options.trials)->check(CLI::PositiveNumber)->capture_default_str();
    bench_cmd->add_flag("--table", bench.table, "Print a table instead of JSON lines");
    add_solver_flags(bench_cmd, bench_solver);

    GenProfile gen;
    std::string gen_profile = "table1";
    std::string gen_output;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random program");
    gen_cmd->add_option("--profile", gen_profile)->check(CLI::IsMember({"table1", "denser"}))->capture_default_str();
    gen_cmd->add_option("--n", gen.n, "Atoms")->required();
    gen_cmd->add_option("--m", gen.m, "Rules")->required();
    gen_cmd->add_option("--k", gen.k, "Negative literals")->capture_default_str();
    gen_cmd->add_option("--seed", gen.seed)->capture_default_str();
    gen_cmd->add_option("-o,--output", gen_output, "Output file (default stdout)");

    std::string ground_file;
    std::string ground_output;
    auto* ground_cmd = app.add_subcommand("ground", "Transitive-closure program of an edge list");
    ground_cmd->add_option("file", ground_file, "Edge list (.tsv)")->required();
    ground_cmd->add_option("-o,--output", ground_output, "Output file (default stdout)");

    std::string stats_file;
    std::string stats_matrix;
    auto* stats_cmd = app.add_subcommand("stats", "Size and sparsity of a program");
    stats_cmd->add_option("file", stats_file, "Program (.lp)")->required();
    stats_cmd->add_option("--dump-matrix", stats_matrix, "Write the program matrix (Matrix Market)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*solve_cmd)
            return cmd_solve(solve.file, parse_backend(solve.backend), solve.options(), solve.json, std::cout,
                             std::cerr);
        if (*stable_cmd)
            return cmd_stable(stable.file, parse_backend(stable.backend), stable.options(), stable.json, std::cout,
                              std::cerr);
        if (*bench_cmd) {
            if (!bench_file.empty())
                bench.file = bench_file;
            bench.profile.kind = parse_profile_kind(bench_profile);
            bench.backends = parse_backends(bench_backends);
            bench.options.solver = bench_solver.options();
            return cmd_bench(bench, std::cout, std::cerr);
        }
        if (*gen_cmd) {
            gen.kind = parse_profile_kind(gen_profile);
            return cmd_gen(gen, gen_output, std::cout, std::cerr);
        }
        if (*ground_cmd)
            return cmd_ground(ground_file, ground_output, std::cout, std::cerr);
        if (*stats_cmd)
            return cmd_stats(stats_file, stats_matrix, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return 1;
}
