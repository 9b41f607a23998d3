#include "sparselp/encoder.hpp"

#include <string>

#include "sparselp/error.hpp"
#include "sparselp/io.hpp"

namespace sparselp {

namespace {

struct RowBuilder {
    std::vector<Index> rows;
    std::vector<Index> cols;
    std::vector<double> values;

    void add(std::size_t r, std::size_t c, double v)
    {
        rows.push_back(static_cast<Index>(r));
        cols.push_back(static_cast<Index>(c));
        values.push_back(v);
    }

    void add_rule(std::size_t row, const Rule& rule)
    {
        if (rule.is_fact()) {
            add(row, row, 1.0);
            return;
        }
        const double weight = rule.is_or() ? 1.0 : 1.0 / static_cast<double>(rule.pos_body.size());
        for (AtomId b : rule.pos_body)
            add(row, b, weight);
    }

    CsrMatrix finish(std::size_t n)
    {
        return coo_to_csr(CooMatrix(n, n, std::move(rows), std::move(cols), std::move(values)));
    }
};

} // namespace

ProgramMatrix encode_program_matrix(const StandardizedProgram& p)
{
    const std::size_t n = p.atoms().size();
    RowBuilder builder;
    for (std::size_t i = 0; i < n; ++i)
        if (auto r = p.rule_for(static_cast<AtomId>(i)))
            builder.add_rule(i, p.rules()[*r]);
    return ProgramMatrix{builder.finish(n), p.atoms()};
}

ProgramMatrix encode_normal_matrix(const StandardizedPositiveForm& pf)
{
    const auto& p = pf.program;
    const std::size_t n = p.atoms().size();
    RowBuilder builder;
    for (std::size_t i = 0; i < n; ++i) {
        const auto id = static_cast<AtomId>(i);
        const auto rule = p.rule_for(id);
        if (pf.neg_rows.contains(id)) {
            if (rule)
                throw EncodingError("negation atom '" + p.atoms().name(id) +
                                    "' cannot head a rule: " + rule_to_string(p.rules()[*rule], p.atoms()));
            builder.add(i, i, 1.0);
        } else if (rule) {
            builder.add_rule(i, p.rules()[*rule]);
        }
    }
    return ProgramMatrix{builder.finish(n), p.atoms()};
}

DenseMatrix initial_vector(const StandardizedProgram& p)
{
    DenseMatrix v(p.atoms().size(), 1);
    for (const auto& r : p.rules())
        if (r.is_fact())
            v(r.head, 0) = 1.0;
    return v;
}

std::vector<AtomId> free_negations(const StandardizedPositiveForm& pf)
{
    std::vector<AtomId> out;
    for (const auto& [neg, positive] : pf.neg_rows)
        if (!pf.source_facts.contains(positive))
            out.push_back(neg);
    return out;
}

GuessMatrix initial_guess_matrix(const StandardizedPositiveForm& pf, std::size_t cap)
{
    auto free = free_negations(pf);
    const std::size_t f = free.size();
    if (f > cap)
        throw GuessExplosionError(f, cap);
    if (f >= 63)
        throw GuessExplosionError(f, 62);
    const std::size_t rows = pf.program.atoms().size();
    const std::size_t h = std::size_t{1} << f;
    if (rows != 0 && h > (std::size_t{1} << 31) / rows)
        throw ResourceLimitError("initial matrix of " + std::to_string(rows) + " x " + std::to_string(h) +
                                 " entries does not fit in memory");

    DenseMatrix m(rows, h);
    for (const auto& r : pf.program.rules())
        if (r.is_fact())
            for (std::size_t c = 0; c < h; ++c)
                m(r.head, c) = 1.0;
    for (std::size_t b = 0; b < f; ++b)
        for (std::size_t c = 0; c < h; ++c)
            m(free[b], c) = static_cast<double>((c >> (f - 1 - b)) & 1U);
    return GuessMatrix{std::move(m), std::move(free)};
}

namespace {

SparsityReport report(std::size_t n, std::size_t body_entries, std::size_t nnz)
{
    SparsityReport out;
    out.n = n;
    out.body_entries = body_entries;
    out.nnz = nnz;
    if (n == 0)
        return out;
    const double cells = static_cast<double>(n) * static_cast<double>(n);
    out.body_based = 1.0 - static_cast<double>(body_entries) / cells;
    out.nnz_based = 1.0 - static_cast<double>(nnz) / cells;
    return out;
}

std::pair<std::size_t, std::size_t> count_entries(const StandardizedProgram& p)
{
    std::size_t body = 0;
    std::size_t nnz = 0;
    for (const auto& r : p.rules()) {
        body += r.pos_body.size();
        nnz += r.is_fact() ? 1 : r.pos_body.size();
    }
    return {body, nnz};
}

} // namespace

SparsityReport sparsity(const StandardizedProgram& p)
{
    const auto [body, nnz] = count_entries(p);
    return report(p.atoms().size(), body, nnz);
}

SparsityReport sparsity(const StandardizedPositiveForm& pf)
{
    const auto [body, nnz] = count_entries(pf.program);
    return report(pf.program.atoms().size(), body, nnz + pf.neg_rows.size());
}

} // namespace sparselp
