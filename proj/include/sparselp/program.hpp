#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sparselp {

using AtomId = std::uint32_t;

enum class AtomKind : std::uint8_t { original, auxiliary, negation };

struct AtomOrigin {
    AtomKind kind = AtomKind::original;
    // Positive counterpart, meaningful only for AtomKind::negation.
    AtomId of = 0;

    static AtomOrigin original() { return {}; }
    static AtomOrigin auxiliary() { return {AtomKind::auxiliary, 0}; }
    static AtomOrigin negation_of(AtomId atom) { return {AtomKind::negation, atom}; }

    friend bool operator==(const AtomOrigin&, const AtomOrigin&) = default;
};

// Interned atom names. Ids are dense, 0-based and assigned in insertion order.
class AtomTable {
public:
    AtomId intern(std::string_view name, AtomOrigin origin = AtomOrigin::original());

    // Adds an atom whose name starts from `base`; a numeric suffix is appended
    // until the name is unused.
    AtomId add_fresh(std::string_view base, AtomOrigin origin);

    std::optional<AtomId> find(std::string_view name) const;
    const std::string& name(AtomId id) const { return names_.at(id); }
    const AtomOrigin& origin(AtomId id) const { return origins_.at(id); }
    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }
    std::span<const std::string> names() const noexcept { return names_; }

    std::size_t count(AtomKind kind) const;

private:
    std::vector<std::string> names_;
    std::vector<AtomOrigin> origins_;
    std::unordered_map<std::string, AtomId> index_;
};

enum class Connective : std::uint8_t { conjunction, disjunction };

struct Rule {
    AtomId head = 0;
    std::vector<AtomId> pos_body;
    std::vector<AtomId> neg_body;
    Connective connective = Connective::conjunction;

    bool is_fact() const noexcept
    {
        return connective == Connective::conjunction && pos_body.empty() && neg_body.empty();
    }
    bool is_or() const noexcept { return connective == Connective::disjunction; }
    std::size_t body_size() const noexcept { return pos_body.size() + neg_body.size(); }

    friend bool operator==(const Rule&, const Rule&) = default;
    friend auto operator<=>(const Rule&, const Rule&) = default;
};

Rule fact(AtomId head);
Rule and_rule(AtomId head, std::vector<AtomId> pos, std::vector<AtomId> neg = {});
Rule or_rule(AtomId head, std::vector<AtomId> pos);

struct RuleHash {
    std::size_t operator()(const Rule& rule) const noexcept;
};

// Sorted, duplicate-free set of atom ids.
class AtomSet {
public:
    AtomSet() = default;
    AtomSet(std::initializer_list<AtomId> ids);
    explicit AtomSet(std::vector<AtomId> ids);

    static AtomSet from_mask(std::span<const char> mask);

    bool contains(AtomId id) const;
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    std::span<const AtomId> members() const noexcept { return members_; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    // Membership bitmap of length `universe`.
    std::vector<char> mask(std::size_t universe) const;
    bool is_subset_of(const AtomSet& other) const;
    AtomSet restricted_below(AtomId limit) const;

    friend bool operator==(const AtomSet&, const AtomSet&) = default;
    // Lexicographic on the sorted id sequence.
    friend auto operator<=>(const AtomSet&, const AtomSet&) = default;

private:
    std::vector<AtomId> members_;
};

std::string to_string(const AtomSet& set, const AtomTable& atoms);

// Deduplicated, sorted collection of interpretations.
class ModelSet {
public:
    ModelSet() = default;
    explicit ModelSet(std::vector<AtomSet> models);

    std::span<const AtomSet> models() const noexcept { return models_; }
    std::size_t size() const noexcept { return models_.size(); }
    bool empty() const noexcept { return models_.empty(); }
    auto begin() const noexcept { return models_.begin(); }
    auto end() const noexcept { return models_.end(); }

    friend bool operator==(const ModelSet&, const ModelSet&) = default;

private:
    std::vector<AtomSet> models_;
};

namespace detail {

// Shared storage for the three program kinds. Construction canonicalises every
// rule (sorted, duplicate-free bodies) and drops exact duplicate rules.
class RuleStore {
public:
    const AtomTable& atoms() const noexcept { return atoms_; }
    std::span<const Rule> rules() const noexcept { return rules_; }
    std::size_t size() const noexcept { return rules_.size(); }
    bool empty() const noexcept { return rules_.empty(); }

protected:
    RuleStore() = default;
    RuleStore(AtomTable atoms, std::vector<Rule> rules);

    AtomTable atoms_;
    std::vector<Rule> rules_;
};

} // namespace detail

class NormalProgram : public detail::RuleStore {
public:
    NormalProgram() = default;
    NormalProgram(AtomTable atoms, std::vector<Rule> rules);

    bool is_definite() const noexcept;
    std::size_t negative_literal_count() const noexcept;
};

class DefiniteProgram : public detail::RuleStore {
public:
    DefiniteProgram() = default;
    DefiniteProgram(AtomTable atoms, std::vector<Rule> rules);

    // Throws ProgramError("program is not definite") when `p` has negation.
    static DefiniteProgram from_normal(const NormalProgram& p);
    NormalProgram to_normal() const;
};

// Conjunctive rules with pairwise distinct heads plus disjunctive rules; every
// atom heads at most one rule.
class StandardizedProgram : public detail::RuleStore {
public:
    StandardizedProgram() = default;
    StandardizedProgram(AtomTable atoms, std::vector<Rule> rules);

    // Index of the rule with head `atom`, if any.
    std::optional<std::size_t> rule_for(AtomId atom) const;

private:
    std::vector<std::int64_t> head_rule_;
};

// Immediate consequence operator. Valid for definite and standardized programs.
AtomSet tp_step(const StandardizedProgram& p, const AtomSet& i);
AtomSet tp_step(const DefiniteProgram& p, const AtomSet& i);

// Least fixpoint of tp_step from the empty set. `iterations` receives the
// number of operator applications.
AtomSet least_model_symbolic(const StandardizedProgram& p, std::size_t* iterations = nullptr);
AtomSet least_model_symbolic(const DefiniteProgram& p, std::size_t* iterations = nullptr);

bool is_model(const DefiniteProgram& p, const AtomSet& i);

// Gelfond-Lifschitz reduct: drops rules blocked by `i`, strips negation.
DefiniteProgram gl_reduct(const NormalProgram& p, const AtomSet& i);

inline constexpr std::size_t default_bruteforce_cap = 20;

// Every I with I = least_model_symbolic(gl_reduct(p, I)). Throws
// ResourceLimitError when the program has more than `cap` atoms.
ModelSet stable_models_bruteforce(const NormalProgram& p, std::size_t cap = default_bruteforce_cap);

} // namespace sparselp
