#pragma once

#include <cstddef>
#include <vector>

#include "sparselp/matrix.hpp"
#include "sparselp/program.hpp"
#include "sparselp/transform.hpp"

namespace sparselp {

// Square program matrix; row/column i is atom i of `atoms`.
struct ProgramMatrix {
    CsrMatrix matrix;
    AtomTable atoms;
};

struct GuessMatrix {
    DenseMatrix matrix;
    // Negation atoms enumerated across the columns, most significant first.
    std::vector<AtomId> free_negs;
};

struct SparsityReport {
    // 1 - (sum of body lengths) / n^2; fact diagonals are not counted.
    double body_based = 1.0;
    // 1 - nnz / n^2 of the encoded matrix.
    double nnz_based = 1.0;
    std::size_t body_entries = 0;
    std::size_t nnz = 0;
    std::size_t n = 0;
};

inline constexpr std::size_t default_guess_cap = 20;

// Conjunctive row: 1/m per body atom. Disjunctive row: 1 per body atom.
// Fact: 1 on the diagonal.
ProgramMatrix encode_program_matrix(const StandardizedProgram& p);

// As encode_program_matrix, plus a diagonal 1 on every negation atom row.
// Throws EncodingError when a negation atom heads a rule.
ProgramMatrix encode_normal_matrix(const StandardizedPositiveForm& pf);

// 1 exactly at the fact atoms.
DenseMatrix initial_vector(const StandardizedProgram& p);

// Negation atoms whose positive counterpart is not a source fact.
std::vector<AtomId> free_negations(const StandardizedPositiveForm& pf);

// Fact rows are all ones, negation rows of source facts all zeros, and the
// free negation rows enumerate all 2^f assignments in binary counting order.
// Throws GuessExplosionError when f exceeds `cap`.
GuessMatrix initial_guess_matrix(const StandardizedPositiveForm& pf, std::size_t cap = default_guess_cap);

SparsityReport sparsity(const StandardizedProgram& p);
SparsityReport sparsity(const StandardizedPositiveForm& pf);

} // namespace sparselp
