#include "sparselp/bench.hpp"

#include <chrono>

#include <json.hpp>

#include "sparselp/encoder.hpp"
#include "sparselp/error.hpp"
#include "sparselp/transform.hpp"

namespace sparselp {

ProgramStats program_stats(const NormalProgram& p)
{
    ProgramStats stats;
    stats.n = p.atoms().size();
    stats.m = p.rules().size();
    stats.k = p.negative_literal_count();
    if (p.is_definite()) {
        const auto standardized = standardize(DefiniteProgram::from_normal(p)).first;
        stats.n_prime = standardized.atoms().size();
        stats.sparsity = sparsity(standardized);
    } else {
        const auto prepared = prepare_normal(p);
        stats.n_prime = prepared.program.atoms().size();
        stats.free_negations = free_negations(prepared).size();
        stats.sparsity = sparsity(prepared);
    }
    return stats;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename Solver, typename Count>
void time_solver(const Solver& solver, const BenchOptions& options, BenchRecord& record, Count count_models)
{
    double total = 0.0;
    for (std::size_t t = 0; t < options.trials; ++t) {
        const auto start = Clock::now();
        const auto trace = solver.run();
        total += seconds_since(start);
        if (t + 1 == options.trials)
            record.model_count = count_models(trace);
    }
    record.trials = options.trials;
    record.mean_seconds = options.trials ? total / static_cast<double>(options.trials) : 0.0;
}

} // namespace

BenchRecord bench_program(const NormalProgram& p, const std::string& program_id, Backend backend,
                          const BenchOptions& options)
{
    if (options.trials == 0)
        throw ParameterError("trials must be at least 1");
    const ProgramStats stats = program_stats(p);
    BenchRecord record;
    record.program_id = program_id;
    record.n = stats.n;
    record.m = stats.m;
    record.n_prime = stats.n_prime;
    record.k = stats.k;
    record.sparsity = stats.sparsity.body_based;
    record.sparsity_nnz = stats.sparsity.nnz_based;
    record.backend = backend;

    try {
        const auto start = Clock::now();
        if (p.is_definite()) {
            const LeastModelSolver solver(DefiniteProgram::from_normal(p), backend, options.solver);
            record.encode_seconds = seconds_since(start);
            time_solver(solver, options, record, [](const FixpointTrace&) { return std::size_t{1}; });
        } else {
            const StableModelSolver solver(p, backend, options.solver);
            record.encode_seconds = seconds_since(start);
            time_solver(solver, options, record,
                        [&solver](const FixpointTrace& trace) { return solver.models(trace).size(); });
        }
    } catch (const GuessExplosionError&) {
        throw;
    } catch (const ResourceLimitError& e) {
        record.skipped = e.what();
    }
    return record;
}

std::string to_json_line(const BenchRecord& record)
{
    nlohmann::ordered_json j;
    j["program_id"] = record.program_id;
    j["n"] = record.n;
    j["m"] = record.m;
    j["n_prime"] = record.n_prime;
    j["k"] = record.k;
    j["sparsity"] = record.sparsity;
    j["sparsity_nnz"] = record.sparsity_nnz;
    j["backend"] = std::string(to_string(record.backend));
    j["trials"] = record.trials;
    j["mean_seconds"] = record.mean_seconds;
    j["encode_seconds"] = record.encode_seconds;
    j["model_count"] = record.model_count;
    j["skipped"] = record.skipped ? nlohmann::ordered_json(*record.skipped) : nlohmann::ordered_json(nullptr);
    return j.dump();
}

} // namespace sparselp
