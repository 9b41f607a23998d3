#include "sparselp/transform.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace sparselp {

namespace {

// Atom names may contain '(' ',' ')'; fresh names stay plain identifiers.
std::string identifier_safe(const std::string& name)
{
    std::string out;
    out.reserve(name.size());
    for (char c : name) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
            out += c;
        else if (c != ')')
            out += '_';
    }
    return out;
}

} // namespace

std::pair<StandardizedProgram, StandardizationMap> standardize(const DefiniteProgram& p)
{
    AtomTable atoms = p.atoms();
    StandardizationMap map;
    map.original_count = atoms.size();

    std::vector<std::size_t> defs(atoms.size(), 0);
    for (const auto& r : p.rules())
        ++defs[r.head];

    std::vector<std::vector<AtomId>> disjuncts(atoms.size());
    std::vector<AtomId> or_heads;
    std::vector<Rule> rules;
    rules.reserve(p.size() + p.size() / 2);

    for (std::size_t i = 0; i < p.rules().size(); ++i) {
        const Rule& r = p.rules()[i];
        if (defs[r.head] < 2) {
            rules.push_back(r);
            continue;
        }
        auto& group = disjuncts[r.head];
        if (group.empty())
            or_heads.push_back(r.head);
        const std::string base =
            "_aux_" + identifier_safe(atoms.name(r.head)) + "_" + std::to_string(group.size() + 1);
        const AtomId aux = atoms.add_fresh(base, AtomOrigin::auxiliary());
        group.push_back(aux);
        map.aux_of.emplace(aux, i);
        rules.push_back(Rule{aux, r.pos_body, {}, Connective::conjunction});
    }
    for (AtomId head : or_heads)
        rules.push_back(or_rule(head, disjuncts[head]));

    return {StandardizedProgram(std::move(atoms), std::move(rules)), std::move(map)};
}

PositiveFormProgram positive_form(const NormalProgram& p)
{
    PositiveFormProgram out;
    AtomTable atoms = p.atoms();
    out.original_count = atoms.size();

    std::vector<std::int64_t> bar(atoms.size(), -1);
    std::vector<Rule> rules;
    rules.reserve(p.size());
    for (const auto& r : p.rules()) {
        std::vector<AtomId> body = r.pos_body;
        for (AtomId b : r.neg_body) {
            if (bar[b] < 0) {
                const AtomId fresh =
                    atoms.add_fresh("_not_" + identifier_safe(atoms.name(b)), AtomOrigin::negation_of(b));
                bar[b] = fresh;
                out.neg_rows.emplace(fresh, b);
            }
            body.push_back(static_cast<AtomId>(bar[b]));
        }
        rules.push_back(and_rule(r.head, std::move(body)));
    }
    out.program = DefiniteProgram(std::move(atoms), std::move(rules));
    return out;
}

StandardizedPositiveForm standardize(const PositiveFormProgram& pf)
{
    auto [program, map] = standardize(pf.program);
    std::vector<AtomId> facts;
    for (const auto& r : pf.program.rules())
        if (r.is_fact() && r.head < pf.original_count)
            facts.push_back(r.head);
    return StandardizedPositiveForm{std::move(program), std::move(map), pf.original_count, pf.neg_rows,
                                    AtomSet(std::move(facts))};
}

StandardizedPositiveForm prepare_normal(const NormalProgram& p) { return standardize(positive_form(p)); }

} // namespace sparselp
