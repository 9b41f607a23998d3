#include "sparselp/solver.hpp"

#include <algorithm>
#include <string>

#include "sparselp/error.hpp"

namespace sparselp {

std::string_view to_string(Backend backend)
{
    switch (backend) {
    case Backend::sparse:
        return "sparse";
    case Backend::dense:
        return "dense";
    case Backend::symbolic:
        return "symbolic";
    }
    return "unknown";
}

Backend parse_backend(std::string_view name)
{
    if (name == "sparse")
        return Backend::sparse;
    if (name == "dense")
        return Backend::dense;
    if (name == "symbolic")
        return Backend::symbolic;
    throw ParameterError("unknown backend '" + std::string(name) + "' (expected sparse, dense or symbolic)");
}

namespace {

DenseMatrix densify_checked(const ProgramMatrix& m, const SolverOptions& options)
{
    const auto n = m.matrix.rows();
    if (n > options.dense_limit)
        throw ResourceLimitError("skipped: memory bound (dense backend needs a " + std::to_string(n) + " x " +
                                 std::to_string(n) + " matrix; limit is " + std::to_string(options.dense_limit) +
                                 ")");
    return densify(m.matrix);
}

[[noreturn]] void no_convergence(std::size_t iterations)
{
    throw ConvergenceError("no fixpoint after " + std::to_string(iterations) +
                           " iterations; the encoding is inconsistent");
}

AtomSet ones_below(std::span<const double> values, std::size_t stride, std::size_t column, std::size_t limit)
{
    std::vector<AtomId> out;
    for (std::size_t r = 0; r < limit; ++r)
        if (values[r * stride + column] == 1.0)
            out.push_back(static_cast<AtomId>(r));
    return AtomSet(std::move(out));
}

} // namespace

// ---------------------------------------------------------------------------
// Least models

LeastModelSolver::LeastModelSolver(const DefiniteProgram& p, Backend backend, SolverOptions options)
    : backend_(backend), options_(options), source_(p), original_count_(p.atoms().size())
{
    if (options_.eps < 0.0)
        throw ParameterError("threshold tolerance must be non-negative");
    standardized_ = standardize(p).first;
    matrix_ = encode_program_matrix(standardized_);
    initial_ = initial_vector(standardized_);
    if (backend_ == Backend::dense)
        dense_ = densify_checked(matrix_, options_);
}

FixpointTrace LeastModelSolver::run(std::vector<DenseMatrix>* history) const
{
    if (backend_ == Backend::symbolic)
        return run_symbolic();

    const std::size_t n = initial_.rows();
    const std::size_t limit = n + 1;
    std::vector<double> v(initial_.data().begin(), initial_.data().end());
    std::vector<double> u(n);
    FixpointTrace trace;
    if (history)
        history->push_back(DenseMatrix::column(v));

    for (;;) {
        if (backend_ == Backend::sparse)
            spmv_into(matrix_.matrix, v, u);
        else
            dense_mv_into(dense_, v, u);
        theta_in_place(u, options_.eps);
        ++trace.iterations;
        trace.per_iteration_nonzeros.push_back(
            static_cast<std::size_t>(std::count(u.begin(), u.end(), 1.0)));
        if (history)
            history->push_back(DenseMatrix::column(u));
        if (u == v) {
            trace.converged = true;
            break;
        }
        if (trace.iterations >= limit)
            no_convergence(trace.iterations);
        std::swap(u, v);
    }
    trace.final = DenseMatrix::column(std::move(v));
    return trace;
}

FixpointTrace LeastModelSolver::run_symbolic() const
{
    const std::size_t limit = original_count_ + 1;
    FixpointTrace trace;
    AtomSet current;
    for (;;) {
        AtomSet next = tp_step(source_, current);
        ++trace.iterations;
        trace.per_iteration_nonzeros.push_back(next.size());
        if (next == current) {
            trace.converged = true;
            break;
        }
        if (trace.iterations >= limit)
            no_convergence(trace.iterations);
        current = std::move(next);
    }
    std::vector<double> values(original_count_, 0.0);
    for (AtomId a : current)
        values[a] = 1.0;
    trace.final = DenseMatrix::column(std::move(values));
    return trace;
}

AtomSet LeastModelSolver::model(const FixpointTrace& trace) const
{
    return ones_below(trace.final.data(), 1, 0, std::min(original_count_, trace.final.rows()));
}

std::pair<AtomSet, FixpointTrace> least_model_linalg(const DefiniteProgram& p, Backend backend, SolverOptions options)
{
    LeastModelSolver solver(p, backend, options);
    auto trace = solver.run();
    auto model = solver.model(trace);
    return {std::move(model), std::move(trace)};
}

// ---------------------------------------------------------------------------
// Stable models

StableModelSolver::StableModelSolver(const NormalProgram& p, Backend backend, SolverOptions options)
    : backend_(backend), options_(options), prepared_(prepare_normal(p))
{
    if (options_.eps < 0.0)
        throw ParameterError("threshold tolerance must be non-negative");
    matrix_ = encode_normal_matrix(prepared_);
    guess_ = initial_guess_matrix(prepared_, options_.guess_cap);
    if (backend_ == Backend::dense)
        dense_ = densify_checked(matrix_, options_);
}

FixpointTrace StableModelSolver::run() const
{
    if (backend_ == Backend::symbolic)
        return run_symbolic();

    const std::size_t rows = guess_.matrix.rows();
    const std::size_t h = guess_.matrix.cols();
    const std::size_t limit = rows + 1;
    DenseMatrix current = guess_.matrix;
    DenseMatrix next = current;
    std::vector<std::size_t> active(h);
    for (std::size_t c = 0; c < h; ++c)
        active[c] = c;

    FixpointTrace trace;
    for (;;) {
        // Columns that reached their fixpoint stay frozen; only active ones are recomputed.
        if (backend_ == Backend::sparse)
            spmm_columns(matrix_.matrix, current, active, next);
        else
            dense_mm_columns(dense_, current, active, next);
        std::vector<std::size_t> changed;
        for (auto c : active) {
            bool differs = false;
            for (std::size_t r = 0; r < rows; ++r) {
                double& x = next(r, c);
                x = theta(x, options_.eps);
                differs = differs || x != current(r, c);
            }
            if (differs)
                changed.push_back(c);
        }
        ++trace.iterations;
        std::swap(current, next);
        trace.per_iteration_nonzeros.push_back(current.nonzeros());
        if (changed.empty()) {
            trace.converged = true;
            break;
        }
        if (trace.iterations >= limit)
            no_convergence(trace.iterations);
        active = std::move(changed);
    }
    trace.final = std::move(current);
    return trace;
}

FixpointTrace StableModelSolver::run_symbolic() const
{
    const auto& program = prepared_.program;
    const std::size_t rows = guess_.matrix.rows();
    const std::size_t h = guess_.matrix.cols();
    const std::size_t limit = rows + 1;
    std::vector<char> is_neg(rows, 0);
    for (const auto& [neg, pos] : prepared_.neg_rows)
        is_neg[neg] = 1;

    FixpointTrace trace;
    trace.final = DenseMatrix(rows, h);
    std::size_t longest = 0;
    std::vector<char> current(rows), next(rows);
    for (std::size_t c = 0; c < h; ++c) {
        for (std::size_t r = 0; r < rows; ++r)
            current[r] = guess_.matrix(r, c) == 1.0;
        std::size_t steps = 0;
        for (;;) {
            for (std::size_t r = 0; r < rows; ++r)
                next[r] = is_neg[r] ? current[r] : 0;
            for (const auto& rule : program.rules()) {
                auto holds = [&current](AtomId a) { return current[a] != 0; };
                const bool fires = rule.is_fact() ||
                                   (rule.is_or() ? std::any_of(rule.pos_body.begin(), rule.pos_body.end(), holds)
                                                 : std::all_of(rule.pos_body.begin(), rule.pos_body.end(), holds));
                if (fires)
                    next[rule.head] = 1;
            }
            ++steps;
            if (next == current)
                break;
            if (steps >= limit)
                no_convergence(steps);
            std::swap(current, next);
        }
        longest = std::max(longest, steps);
        for (std::size_t r = 0; r < rows; ++r)
            trace.final(r, c) = current[r] ? 1.0 : 0.0;
    }
    trace.iterations = longest;
    trace.converged = true;
    trace.per_iteration_nonzeros.push_back(trace.final.nonzeros());
    return trace;
}

ModelSet StableModelSolver::models(const FixpointTrace& trace) const
{
    return filter_stable_columns(trace.final, prepared_);
}

ModelSet filter_stable_columns(const DenseMatrix& fixpoint, const StandardizedPositiveForm& pf)
{
    if (fixpoint.rows() != pf.program.atoms().size())
        throw DimensionError("fixpoint rows do not match the program atoms");
    std::vector<AtomSet> accepted;
    for (std::size_t c = 0; c < fixpoint.cols(); ++c) {
        const bool complementary = std::all_of(pf.neg_rows.begin(), pf.neg_rows.end(), [&](const auto& pair) {
            return fixpoint(pair.second, c) + fixpoint(pair.first, c) == 1.0;
        });
        if (complementary)
            accepted.push_back(ones_below(fixpoint.data(), fixpoint.cols(), c, pf.original_count));
    }
    return ModelSet(std::move(accepted));
}

std::pair<ModelSet, FixpointTrace> stable_models_linalg(const NormalProgram& p, Backend backend,
                                                        SolverOptions options)
{
    StableModelSolver solver(p, backend, options);
    auto trace = solver.run();
    auto models = solver.models(trace);
    return {std::move(models), std::move(trace)};
}

bool verify_stable(const NormalProgram& p, const AtomSet& candidate)
{
    return least_model_symbolic(gl_reduct(p, candidate)) == candidate;
}

} // namespace sparselp
