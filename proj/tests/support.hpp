#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// work on raw rule lists and bitmasks so they share no code paths with the
// library's solvers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sparselp/io.hpp"
#include "sparselp/program.hpp"

namespace testing_support {

// Atom order p, q, r, s, t.
inline constexpr const char* example1_text = "p :- q, r.\np :- s, t.\nr :- s.\nq :- t.\ns.\nt.\n";
// Atom order p, q, s, t, u, v.
inline constexpr const char* example2_text = "p :- q, s.\nq :- p, t.\ns :- not t.\nt.\nu :- v.\n";

inline sparselp::DefiniteProgram example1()
{
    return sparselp::DefiniteProgram::from_normal(sparselp::parse_program(example1_text));
}

inline sparselp::NormalProgram example2() { return sparselp::parse_program(example2_text); }

inline std::set<std::string> names_of(const sparselp::AtomSet& set, const sparselp::AtomTable& atoms)
{
    std::set<std::string> out;
    for (auto a : set)
        out.insert(atoms.name(a));
    return out;
}

inline std::set<std::set<std::string>> names_of(const sparselp::ModelSet& models, const sparselp::AtomTable& atoms)
{
    std::set<std::set<std::string>> out;
    for (const auto& m : models)
        out.insert(names_of(m, atoms));
    return out;
}

// Rule over at most 64 atoms as bitmasks.
struct MaskRule {
    int head;
    std::uint64_t pos;
    std::uint64_t neg;
};

inline std::vector<MaskRule> mask_rules(const sparselp::detail::RuleStore& p)
{
    std::vector<MaskRule> out;
    for (const auto& r : p.rules()) {
        MaskRule m{static_cast<int>(r.head), 0, 0};
        for (auto a : r.pos_body)
            m.pos |= std::uint64_t{1} << a;
        for (auto a : r.neg_body)
            m.neg |= std::uint64_t{1} << a;
        out.push_back(m);
    }
    return out;
}

// Least model of the reduct w.r.t. `guess` by naive forward chaining.
inline std::uint64_t naive_least_model(const std::vector<MaskRule>& rules, std::uint64_t guess = 0)
{
    std::uint64_t model = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& r : rules) {
            if ((r.neg & guess) != 0 || (r.pos & model) != r.pos)
                continue;
            const std::uint64_t bit = std::uint64_t{1} << r.head;
            if (!(model & bit)) {
                model |= bit;
                changed = true;
            }
        }
    }
    return model;
}

inline std::set<std::uint64_t> naive_stable_models(const std::vector<MaskRule>& rules, std::size_t atoms)
{
    std::set<std::uint64_t> out;
    for (std::uint64_t guess = 0; guess < (std::uint64_t{1} << atoms); ++guess)
        if (naive_least_model(rules, guess) == guess)
            out.insert(guess);
    return out;
}

inline std::uint64_t mask_of(const sparselp::AtomSet& set)
{
    std::uint64_t m = 0;
    for (auto a : set)
        m |= std::uint64_t{1} << a;
    return m;
}

// Small random normal program over `n` atoms a0..a{n-1}; every atom occurs
// in the table even when unused by rules.
inline sparselp::NormalProgram random_normal(std::mt19937_64& rng, std::size_t n, std::size_t rules,
                                             std::size_t max_body, double neg_share)
{
    sparselp::AtomTable atoms;
    for (std::size_t i = 0; i < n; ++i)
        atoms.intern("a" + std::to_string(i));
    std::uniform_int_distribution<std::size_t> atom(0, n - 1);
    std::uniform_int_distribution<std::size_t> length(0, max_body);
    std::bernoulli_distribution negate(neg_share);
    std::vector<sparselp::Rule> out;
    for (std::size_t r = 0; r < rules; ++r) {
        std::set<sparselp::AtomId> used;
        std::vector<sparselp::AtomId> pos, neg;
        const std::size_t len = std::min(length(rng), n);
        while (used.size() < len) {
            const auto a = static_cast<sparselp::AtomId>(atom(rng));
            if (!used.insert(a).second)
                continue;
            (negate(rng) ? neg : pos).push_back(a);
        }
        out.push_back(sparselp::and_rule(static_cast<sparselp::AtomId>(atom(rng)), pos, neg));
    }
    return sparselp::NormalProgram(std::move(atoms), std::move(out));
}

inline sparselp::DefiniteProgram random_definite(std::mt19937_64& rng, std::size_t n, std::size_t rules,
                                                 std::size_t max_body)
{
    return sparselp::DefiniteProgram::from_normal(random_normal(rng, n, rules, max_body, 0.0));
}

// Reachability in one or more steps.
inline std::set<std::pair<std::string, std::string>> bfs_closure(const sparselp::Graph& g)
{
    std::vector<std::vector<std::size_t>> adj(g.node_count());
    for (const auto& [u, v] : g.edges)
        adj[u].push_back(v);
    std::set<std::pair<std::string, std::string>> out;
    for (std::size_t s = 0; s < g.node_count(); ++s) {
        std::vector<char> seen(g.node_count(), 0);
        std::queue<std::size_t> frontier;
        for (auto v : adj[s])
            if (!seen[v]) {
                seen[v] = 1;
                frontier.push(v);
            }
        while (!frontier.empty()) {
            const auto u = frontier.front();
            frontier.pop();
            out.emplace(g.node_names[s], g.node_names[u]);
            for (auto v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    frontier.push(v);
                }
        }
    }
    return out;
}

// path(x,y) atoms of a model as name pairs.
inline std::set<std::pair<std::string, std::string>> path_pairs(const sparselp::AtomSet& model,
                                                                const sparselp::AtomTable& atoms)
{
    std::set<std::pair<std::string, std::string>> out;
    for (auto a : model) {
        const std::string& name = atoms.name(a);
        if (name.rfind("path(", 0) != 0)
            continue;
        const auto comma = name.find(',');
        out.emplace(name.substr(5, comma - 5), name.substr(comma + 1, name.size() - comma - 2));
    }
    return out;
}

// Edge-list text of a random digraph with labels n0..n{nodes-1}.
inline std::string random_edge_list(std::mt19937_64& rng, std::size_t nodes, std::size_t edges)
{
    std::uniform_int_distribution<std::size_t> node(0, nodes - 1);
    std::string text;
    for (std::size_t e = 0; e < edges; ++e)
        text += "n" + std::to_string(node(rng)) + "\tn" + std::to_string(node(rng)) + "\n";
    return text;
}

} // namespace testing_support
