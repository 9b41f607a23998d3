#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "sparselp/program.hpp"
#include "sparselp/solver.hpp"

namespace sparselp {

struct ProgramStats {
    std::size_t n = 0;        // original atoms
    std::size_t m = 0;        // rules
    std::size_t n_prime = 0;  // atoms after positive form and standardization
    std::size_t k = 0;        // negative literal occurrences
    std::size_t free_negations = 0;
    SparsityReport sparsity;
};

// Definite programs go through standardize, normal ones through prepare_normal.
ProgramStats program_stats(const NormalProgram& p);

struct BenchRecord {
    std::string program_id;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t n_prime = 0;
    std::size_t k = 0;
    double sparsity = 1.0;
    double sparsity_nnz = 1.0;
    Backend backend = Backend::sparse;
    std::size_t trials = 0;
    double mean_seconds = 0.0;
    double encode_seconds = 0.0;
    std::size_t model_count = 0;
    // Set when the backend declined the program ("skipped: memory bound ...").
    std::optional<std::string> skipped;
};

struct BenchOptions {
    std::size_t trials = 30;
    SolverOptions solver;
};

// Prepares the solver once (timed as encode_seconds), then times run() alone
// over `trials` sequential runs. Definite programs use the least-model solver,
// normal ones the stable-model solver.
BenchRecord bench_program(const NormalProgram& p, const std::string& program_id, Backend backend,
                          const BenchOptions& options);

// One JSON object, no trailing newline.
std::string to_json_line(const BenchRecord& record);

} // namespace sparselp
