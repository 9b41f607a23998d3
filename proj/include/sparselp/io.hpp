#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sparselp/program.hpp"

namespace sparselp {

struct ParseWarning {
    std::size_t line = 0;
    std::size_t column = 0;
    std::string message;
};

// Program text: one rule per statement, terminated by '.'.
//
//   fact.
//   head :- a, b, not c.     conjunction, negation as failure
//   head :- a; b.            disjunction (standardized programs)
//   % comment to end of line
//
// Atom names are identifiers, optionally followed by a parenthesised list of
// constants, so ground terms such as path(1,2) are single atoms.
//
// parse_program expands disjunctive rules into one conjunctive rule per
// disjunct. Duplicate body literals are dropped with a warning; a rule with an
// atom both positive and negated in its body can never fire and is dropped
// with a warning.
NormalProgram parse_program(std::string_view text, std::vector<ParseWarning>* warnings = nullptr);

// Keeps disjunctive rules as such and validates the standardized-program
// invariant. Atoms named _aux_* are tagged auxiliary, _not_<x> is tagged as
// the negation of x when x exists.
StandardizedProgram parse_standardized_program(std::string_view text,
                                               std::vector<ParseWarning>* warnings = nullptr);

std::string serialize_program(const NormalProgram& p);
std::string serialize_program(const DefiniteProgram& p);
std::string serialize_program(const StandardizedProgram& p);

std::string rule_to_string(const Rule& rule, const AtomTable& atoms);

// Same rules over the same atom names, ignoring ids and rule order.
bool structurally_equal(const detail::RuleStore& a, const detail::RuleStore& b);

struct Graph {
    std::vector<std::string> node_names;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    std::size_t node_count() const noexcept { return node_names.size(); }
    std::size_t edge_count() const noexcept { return edges.size(); }
    bool empty() const noexcept { return edges.empty(); }
};

// Whitespace separated "u v" pairs, one per line. Extra columns (weights,
// timestamps) are ignored; '%' and '#' start comment lines. Node labels must
// consist of [A-Za-z0-9_].
Graph load_edge_list(std::string_view text);

// Grounds path(X,Y) <- edge(X,Y) and path(X,Y) <- edge(X,Z), path(Z,Y) with
// the recursive rule instantiated for every edge (X,Z) and every node Y.
// Throws ParameterError on an empty graph.
DefiniteProgram ground_transitive_closure(const Graph& g);

std::string edge_atom(std::string_view from, std::string_view to);
std::string path_atom(std::string_view from, std::string_view to);

std::string read_file(const std::string& path);

} // namespace sparselp
