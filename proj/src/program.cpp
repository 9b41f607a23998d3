#include "sparselp/program.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "sparselp/error.hpp"

namespace sparselp {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error("line " + std::to_string(line) + (column ? ", column " + std::to_string(column) : std::string{}) +
            ": " + message),
      line_(line),
      column_(column)
{
}

GuessExplosionError::GuessExplosionError(std::size_t free_negations, std::size_t cap)
    : ResourceLimitError("guess explosion: " + std::to_string(free_negations) +
                         " free negation atoms exceed the cap of " + std::to_string(cap) +
                         " (2^f initial columns)"),
      free_negations_(free_negations),
      cap_(cap)
{
}

// ---------------------------------------------------------------------------
// AtomTable

AtomId AtomTable::intern(std::string_view name, AtomOrigin origin)
{
    if (auto found = find(name))
        return *found;
    if (origin.kind == AtomKind::negation &&
        (origin.of >= names_.size() || origins_[origin.of].kind != AtomKind::original)) {
        throw ProgramError("negation atom '" + std::string(name) + "' must refer to an original atom");
    }
    const auto id = static_cast<AtomId>(names_.size());
    names_.emplace_back(name);
    origins_.push_back(origin);
    index_.emplace(names_.back(), id);
    return id;
}

AtomId AtomTable::add_fresh(std::string_view base, AtomOrigin origin)
{
    std::string candidate(base);
    for (std::size_t k = 1; index_.contains(candidate); ++k)
        candidate = std::string(base) + "_" + std::to_string(k);
    return intern(candidate, origin);
}

std::optional<AtomId> AtomTable::find(std::string_view name) const
{
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t AtomTable::count(AtomKind kind) const
{
    return static_cast<std::size_t>(
        std::count_if(origins_.begin(), origins_.end(), [kind](const AtomOrigin& o) { return o.kind == kind; }));
}

// ---------------------------------------------------------------------------
// Rule

namespace {

void canonicalise(std::vector<AtomId>& body)
{
    std::sort(body.begin(), body.end());
    body.erase(std::unique(body.begin(), body.end()), body.end());
}

} // namespace

Rule fact(AtomId head) { return Rule{head, {}, {}, Connective::conjunction}; }

Rule and_rule(AtomId head, std::vector<AtomId> pos, std::vector<AtomId> neg)
{
    canonicalise(pos);
    canonicalise(neg);
    return Rule{head, std::move(pos), std::move(neg), Connective::conjunction};
}

Rule or_rule(AtomId head, std::vector<AtomId> pos)
{
    canonicalise(pos);
    return Rule{head, std::move(pos), {}, Connective::disjunction};
}

std::size_t RuleHash::operator()(const Rule& rule) const noexcept
{
    std::size_t h = std::hash<AtomId>{}(rule.head) * 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    mix(static_cast<std::size_t>(rule.connective));
    for (AtomId a : rule.pos_body)
        mix(a);
    mix(0xffffffffULL);
    for (AtomId a : rule.neg_body)
        mix(a);
    return h;
}

// ---------------------------------------------------------------------------
// AtomSet / ModelSet

AtomSet::AtomSet(std::initializer_list<AtomId> ids) : AtomSet(std::vector<AtomId>(ids)) {}

AtomSet::AtomSet(std::vector<AtomId> ids) : members_(std::move(ids)) { canonicalise(members_); }

AtomSet AtomSet::from_mask(std::span<const char> mask)
{
    AtomSet out;
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i])
            out.members_.push_back(static_cast<AtomId>(i));
    return out;
}

bool AtomSet::contains(AtomId id) const { return std::binary_search(members_.begin(), members_.end(), id); }

std::vector<char> AtomSet::mask(std::size_t universe) const
{
    std::vector<char> out(universe, 0);
    for (AtomId a : members_)
        if (a < universe)
            out[a] = 1;
    return out;
}

bool AtomSet::is_subset_of(const AtomSet& other) const
{
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

AtomSet AtomSet::restricted_below(AtomId limit) const
{
    AtomSet out;
    auto end = std::lower_bound(members_.begin(), members_.end(), limit);
    out.members_.assign(members_.begin(), end);
    return out;
}

std::string to_string(const AtomSet& set, const AtomTable& atoms)
{
    std::vector<std::string> names;
    names.reserve(set.size());
    for (AtomId a : set)
        names.push_back(atoms.name(a));
    std::sort(names.begin(), names.end());
    std::string out;
    for (const auto& n : names) {
        if (!out.empty())
            out += ' ';
        out += n;
    }
    return out;
}

ModelSet::ModelSet(std::vector<AtomSet> models) : models_(std::move(models))
{
    std::sort(models_.begin(), models_.end());
    models_.erase(std::unique(models_.begin(), models_.end()), models_.end());
}

// ---------------------------------------------------------------------------
// Programs

namespace detail {

RuleStore::RuleStore(AtomTable atoms, std::vector<Rule> rules) : atoms_(std::move(atoms))
{
    std::unordered_set<Rule, RuleHash> seen;
    seen.reserve(rules.size());
    rules_.reserve(rules.size());
    const auto n = atoms_.size();
    for (auto& rule : rules) {
        canonicalise(rule.pos_body);
        canonicalise(rule.neg_body);
        auto in_range = [n](AtomId a) { return a < n; };
        if (!in_range(rule.head) || !std::all_of(rule.pos_body.begin(), rule.pos_body.end(), in_range) ||
            !std::all_of(rule.neg_body.begin(), rule.neg_body.end(), in_range)) {
            throw ProgramError("rule refers to an atom id outside the atom table");
        }
        std::vector<AtomId> both;
        std::set_intersection(rule.pos_body.begin(), rule.pos_body.end(), rule.neg_body.begin(),
                              rule.neg_body.end(), std::back_inserter(both));
        if (!both.empty())
            throw ProgramError("atom '" + atoms_.name(both.front()) + "' occurs both positively and negatively in a body");
        if (rule.is_or() && (!rule.neg_body.empty() || rule.pos_body.empty()))
            throw ProgramError("disjunctive rules need a non-empty positive body and no negation");
        if (seen.insert(rule).second)
            rules_.push_back(std::move(rule));
    }
}

} // namespace detail

NormalProgram::NormalProgram(AtomTable atoms, std::vector<Rule> rules) : RuleStore(std::move(atoms), std::move(rules))
{
    for (const auto& r : rules_)
        if (r.is_or())
            throw ProgramError("normal programs contain conjunctive rules only");
}

bool NormalProgram::is_definite() const noexcept
{
    return std::all_of(rules_.begin(), rules_.end(), [](const Rule& r) { return r.neg_body.empty(); });
}

std::size_t NormalProgram::negative_literal_count() const noexcept
{
    std::size_t k = 0;
    for (const auto& r : rules_)
        k += r.neg_body.size();
    return k;
}

DefiniteProgram::DefiniteProgram(AtomTable atoms, std::vector<Rule> rules)
    : RuleStore(std::move(atoms), std::move(rules))
{
    for (const auto& r : rules_) {
        if (r.is_or())
            throw ProgramError("definite programs contain conjunctive rules only");
        if (!r.neg_body.empty())
            throw ProgramError("program is not definite");
    }
}

DefiniteProgram DefiniteProgram::from_normal(const NormalProgram& p)
{
    if (!p.is_definite())
        throw ProgramError("program is not definite");
    return DefiniteProgram(p.atoms(), std::vector<Rule>(p.rules().begin(), p.rules().end()));
}

NormalProgram DefiniteProgram::to_normal() const
{
    return NormalProgram(atoms_, std::vector<Rule>(rules_.begin(), rules_.end()));
}

namespace {

std::string describe(const Rule& r, std::size_t index, const AtomTable& atoms)
{
    std::ostringstream os;
    os << "#" << index << " (" << atoms.name(r.head);
    if (!r.is_fact()) {
        os << " :- ";
        const char* sep = r.is_or() ? "; " : ", ";
        bool first = true;
        for (AtomId a : r.pos_body) {
            os << (first ? "" : sep) << atoms.name(a);
            first = false;
        }
        for (AtomId a : r.neg_body) {
            os << (first ? "" : sep) << "not " << atoms.name(a);
            first = false;
        }
    }
    os << ".)";
    return os.str();
}

} // namespace

StandardizedProgram::StandardizedProgram(AtomTable atoms, std::vector<Rule> rules)
    : RuleStore(std::move(atoms), std::move(rules)), head_rule_(atoms_.size(), -1)
{
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        const auto& r = rules_[i];
        if (!r.neg_body.empty())
            throw ProgramError("standardized programs cannot contain negation");
        auto& slot = head_rule_[r.head];
        if (slot >= 0) {
            const auto j = static_cast<std::size_t>(slot);
            throw EncodingError("not a standardized program: atom '" + atoms_.name(r.head) + "' heads rules " +
                                describe(rules_[j], j, atoms_) + " and " + describe(r, i, atoms_));
        }
        slot = static_cast<std::int64_t>(i);
    }
}

std::optional<std::size_t> StandardizedProgram::rule_for(AtomId atom) const
{
    if (atom >= head_rule_.size() || head_rule_[atom] < 0)
        return std::nullopt;
    return static_cast<std::size_t>(head_rule_[atom]);
}

// ---------------------------------------------------------------------------
// Reference semantics

namespace {

AtomSet apply_tp(std::span<const Rule> rules, std::size_t universe, const AtomSet& i)
{
    const auto in = i.mask(universe);
    std::vector<char> out(universe, 0);
    for (const auto& r : rules) {
        auto holds = [&in](AtomId a) { return in[a] != 0; };
        const bool fires = r.is_or() ? std::any_of(r.pos_body.begin(), r.pos_body.end(), holds)
                                     : std::all_of(r.pos_body.begin(), r.pos_body.end(), holds);
        if (fires)
            out[r.head] = 1;
    }
    return AtomSet::from_mask(out);
}

template <typename Program>
AtomSet iterate_tp(const Program& p, std::size_t* iterations)
{
    AtomSet current;
    std::size_t steps = 0;
    for (;;) {
        AtomSet next = tp_step(p, current);
        ++steps;
        if (next == current)
            break;
        current = std::move(next);
    }
    if (iterations)
        *iterations = steps;
    return current;
}

} // namespace

AtomSet tp_step(const StandardizedProgram& p, const AtomSet& i) { return apply_tp(p.rules(), p.atoms().size(), i); }

AtomSet tp_step(const DefiniteProgram& p, const AtomSet& i) { return apply_tp(p.rules(), p.atoms().size(), i); }

AtomSet least_model_symbolic(const StandardizedProgram& p, std::size_t* iterations)
{
    return iterate_tp(p, iterations);
}

AtomSet least_model_symbolic(const DefiniteProgram& p, std::size_t* iterations) { return iterate_tp(p, iterations); }

bool is_model(const DefiniteProgram& p, const AtomSet& i)
{
    return tp_step(p, i).is_subset_of(i);
}

DefiniteProgram gl_reduct(const NormalProgram& p, const AtomSet& i)
{
    const auto in = i.mask(p.atoms().size());
    std::vector<Rule> kept;
    kept.reserve(p.size());
    for (const auto& r : p.rules()) {
        if (std::any_of(r.neg_body.begin(), r.neg_body.end(), [&in](AtomId a) { return in[a] != 0; }))
            continue;
        kept.push_back(Rule{r.head, r.pos_body, {}, Connective::conjunction});
    }
    return DefiniteProgram(p.atoms(), std::move(kept));
}

ModelSet stable_models_bruteforce(const NormalProgram& p, std::size_t cap)
{
    const std::size_t n = p.atoms().size();
    if (n > cap)
        throw ResourceLimitError("brute-force stable model enumeration is capped at " + std::to_string(cap) +
                                 " atoms; program has " + std::to_string(n));
    std::vector<AtomSet> found;
    std::vector<char> mask(n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        for (std::size_t a = 0; a < n; ++a)
            mask[a] = static_cast<char>((bits >> a) & 1U);
        const AtomSet candidate = AtomSet::from_mask(mask);
        if (least_model_symbolic(gl_reduct(p, candidate)) == candidate)
            found.push_back(candidate);
    }
    return ModelSet(std::move(found));
}

} // namespace sparselp
