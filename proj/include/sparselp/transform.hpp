#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "sparselp/program.hpp"

namespace sparselp {

struct StandardizationMap {
    // Auxiliary atom -> index of the source rule it replaces.
    std::map<AtomId, std::size_t> aux_of;
    // Atoms with ids below this count are inherited from the input program.
    std::size_t original_count = 0;
};

// Definite program whose negative literals were replaced by fresh atoms.
// Atoms are ordered originals first, then one negation atom per distinct
// negated atom.
struct PositiveFormProgram {
    DefiniteProgram program;
    std::size_t original_count = 0;
    // Negation atom -> its positive counterpart.
    std::map<AtomId, AtomId> neg_rows;
};

// Positive form after standardization; the input expected by the normal
// program encoder. Atom order: originals, negation atoms, auxiliaries.
struct StandardizedPositiveForm {
    StandardizedProgram program;
    StandardizationMap map;
    std::size_t original_count = 0;
    std::map<AtomId, AtomId> neg_rows;
    // Original atoms with a fact rule in the source program.
    AtomSet source_facts;
};

// Every head with k >= 2 rules gets fresh atoms x1..xk with xi <- body(ri)
// and head <- x1 v ... v xk. Heads defined once pass through unchanged.
std::pair<StandardizedProgram, StandardizationMap> standardize(const DefiniteProgram& p);

PositiveFormProgram positive_form(const NormalProgram& p);

StandardizedPositiveForm standardize(const PositiveFormProgram& pf);

// positive_form followed by standardize.
StandardizedPositiveForm prepare_normal(const NormalProgram& p);

} // namespace sparselp
