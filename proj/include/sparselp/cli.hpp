#pragma once

#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sparselp/bench.hpp"
#include "sparselp/generator.hpp"
#include "sparselp/solver.hpp"

namespace sparselp {

// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_parse = 2;
inline constexpr int exit_semantic = 3;
inline constexpr int exit_resource = 4;

// Maps a caught exception to the exit code above (1 for anything unexpected).
int exit_code_for(const std::exception& e);

// Each command reports errors on `err` as "error: <message>" and returns the
// exit code instead of throwing.

int cmd_solve(const std::string& path, Backend backend, const SolverOptions& options, bool json, std::ostream& out,
              std::ostream& err);

int cmd_stable(const std::string& path, Backend backend, const SolverOptions& options, bool json, std::ostream& out,
               std::ostream& err);

struct BenchRequest {
    // A program file, or else a generated program from `profile`.
    std::optional<std::string> file;
    GenProfile profile;
    std::vector<Backend> backends{Backend::sparse, Backend::dense};
    BenchOptions options;
    // Human-readable table instead of JSON lines.
    bool table = false;
};

int cmd_bench(const BenchRequest& request, std::ostream& out, std::ostream& err);

// Writes the program (profile header comment first) to `output`, or to `out`
// when `output` is empty.
int cmd_gen(const GenProfile& profile, const std::string& output, std::ostream& out, std::ostream& err);

// Grounds the transitive-closure program of an edge list. Writes it to
// `output` and prints n and m, or prints the program to `out` with n and m in
// a leading comment when `output` is empty.
int cmd_ground(const std::string& edge_path, const std::string& output, std::ostream& out, std::ostream& err);

// One JSON object with n, m, n_prime, k, sparsity, sparsity_nnz and
// free_negations. `matrix_output`, when set, receives the program matrix in
// Matrix Market form.
int cmd_stats(const std::string& path, const std::string& matrix_output, std::ostream& out, std::ostream& err);

} // namespace sparselp
