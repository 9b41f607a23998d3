#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "sparselp/encoder.hpp"
#include "sparselp/matrix.hpp"
#include "sparselp/program.hpp"
#include "sparselp/transform.hpp"

namespace sparselp {

enum class Backend { sparse, dense, symbolic };

std::string_view to_string(Backend backend);
// Throws ParameterError on unknown names.
Backend parse_backend(std::string_view name);

struct SolverOptions {
    double eps = default_threshold_eps;
    std::size_t guess_cap = default_guess_cap;
    // Largest standardized atom count the dense backend accepts.
    std::size_t dense_limit = 16384;
};

struct FixpointTrace {
    // Thresholded products computed, the confirming one included.
    std::size_t iterations = 0;
    bool converged = false;
    DenseMatrix final;
    // Nonzero count of the iterate after each product.
    std::vector<std::size_t> per_iteration_nonzeros;
};

// Least model of a definite program by iterating v <- theta(M v) from the
// initial vector. Construction does all the preparation (standardization,
// encoding); run() is the fixpoint loop alone.
class LeastModelSolver {
public:
    LeastModelSolver(const DefiniteProgram& p, Backend backend, SolverOptions options = {});

    // `history`, when given, receives every iterate starting with v0.
    FixpointTrace run(std::vector<DenseMatrix>* history = nullptr) const;

    // Atoms of the fixpoint restricted to the original atoms.
    AtomSet model(const FixpointTrace& trace) const;

    Backend backend() const noexcept { return backend_; }
    const StandardizedProgram& standardized() const noexcept { return standardized_; }
    const ProgramMatrix& matrix() const noexcept { return matrix_; }
    const DenseMatrix& initial() const noexcept { return initial_; }
    std::size_t original_count() const noexcept { return original_count_; }

private:
    FixpointTrace run_symbolic() const;

    Backend backend_;
    SolverOptions options_;
    DefiniteProgram source_;
    StandardizedProgram standardized_;
    std::size_t original_count_ = 0;
    ProgramMatrix matrix_;
    DenseMatrix dense_;
    DenseMatrix initial_;
};

// Stable models of a normal program: positive form, standardization, normal
// program matrix and guess matrix, then M <- theta(A M) to a fixpoint and a
// complementarity filter over the columns.
class StableModelSolver {
public:
    StableModelSolver(const NormalProgram& p, Backend backend, SolverOptions options = {});

    FixpointTrace run() const;
    ModelSet models(const FixpointTrace& trace) const;

    Backend backend() const noexcept { return backend_; }
    const StandardizedPositiveForm& prepared() const noexcept { return prepared_; }
    const ProgramMatrix& matrix() const noexcept { return matrix_; }
    const GuessMatrix& guess() const noexcept { return guess_; }

private:
    FixpointTrace run_symbolic() const;

    Backend backend_;
    SolverOptions options_;
    StandardizedPositiveForm prepared_;
    ProgramMatrix matrix_;
    DenseMatrix dense_;
    GuessMatrix guess_;
};

std::pair<AtomSet, FixpointTrace> least_model_linalg(const DefiniteProgram& p, Backend backend = Backend::sparse,
                                                     SolverOptions options = {});

std::pair<ModelSet, FixpointTrace> stable_models_linalg(const NormalProgram& p, Backend backend = Backend::sparse,
                                                        SolverOptions options = {});

// Accepts a column iff every negation atom and its positive counterpart sum
// to exactly 1; accepted columns are restricted to the original atoms.
ModelSet filter_stable_columns(const DenseMatrix& fixpoint, const StandardizedPositiveForm& pf);

// candidate == least_model_symbolic(gl_reduct(p, candidate)).
bool verify_stable(const NormalProgram& p, const AtomSet& candidate);

} // namespace sparselp
