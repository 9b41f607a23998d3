#include "sparselp/generator.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "sparselp/error.hpp"

namespace sparselp {

std::string_view to_string(ProfileKind kind) { return kind == ProfileKind::table1 ? "table1" : "denser"; }

ProfileKind parse_profile_kind(std::string_view name)
{
    if (name == "table1")
        return ProfileKind::table1;
    if (name == "denser")
        return ProfileKind::denser;
    throw ParameterError("unknown profile '" + std::string(name) + "' (expected table1 or denser)");
}

std::string GenProfile::header_comment() const
{
    std::ostringstream os;
    os << "% profile: kind=" << to_string(kind) << " n=" << n << " m=" << m << " k=" << k << " seed=" << seed;
    return os.str();
}

std::uint64_t Random::below(std::uint64_t bound)
{
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

std::vector<std::size_t> allocate_strata(std::size_t total, std::span<const unsigned> weights)
{
    const std::uint64_t sum = std::accumulate(weights.begin(), weights.end(), std::uint64_t{0});
    std::vector<std::size_t> counts(weights.size(), 0);
    if (sum == 0 || total == 0)
        return counts;
    std::vector<std::pair<std::uint64_t, std::size_t>> remainders;
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const std::uint64_t scaled = static_cast<std::uint64_t>(total) * weights[i];
        counts[i] = static_cast<std::size_t>(scaled / sum);
        assigned += counts[i];
        remainders.emplace_back(scaled % sum, i);
    }
    std::stable_sort(remainders.begin(), remainders.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::size_t i = 0; assigned < total; ++i, ++assigned)
        ++counts[remainders[i].second];
    return counts;
}

std::size_t denser_body_length(std::size_t n) { return (n + 19) / 20; }

namespace {

class RuleFactory {
public:
    RuleFactory(std::size_t n, Random& rng) : n_(n), rng_(rng), stamp_(n, 0), scratch_(n)
    {
        std::iota(scratch_.begin(), scratch_.end(), AtomId{0});
    }

    std::vector<AtomId> distinct_atoms(std::size_t count)
    {
        std::vector<AtomId> out;
        out.reserve(count);
        if (2 * count > n_) {
            for (std::size_t i = 0; i < count; ++i) {
                const auto j = i + rng_.below(n_ - i);
                std::swap(scratch_[i], scratch_[j]);
                out.push_back(scratch_[i]);
            }
            return out;
        }
        ++epoch_;
        while (out.size() < count) {
            const auto a = static_cast<AtomId>(rng_.below(n_));
            if (stamp_[a] == epoch_)
                continue;
            stamp_[a] = epoch_;
            out.push_back(a);
        }
        return out;
    }

    // A rule not generated before. Lengths that keep colliding are shortened
    // (only reachable for very small n).
    Rule fresh_rule(std::size_t length)
    {
        length = std::min(length, n_);
        for (; length > 0; --length) {
            for (int attempt = 0; attempt < 64; ++attempt) {
                const auto head = static_cast<AtomId>(rng_.below(n_));
                Rule r = and_rule(head, distinct_atoms(length));
                if (seen_.insert(r).second)
                    return r;
            }
        }
        throw ParameterError("cannot generate that many distinct rules over " + std::to_string(n_) + " atoms");
    }

    void remember(const Rule& r) { seen_.insert(r); }

private:
    std::size_t n_;
    Random& rng_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
    std::vector<AtomId> scratch_;
    std::unordered_set<Rule, RuleHash> seen_;
};

void check_profile(const GenProfile& profile)
{
    if (profile.n < 1)
        throw ParameterError("profile needs at least one atom");
}

AtomTable numbered_atoms(std::size_t n)
{
    AtomTable atoms;
    for (std::size_t i = 1; i <= n; ++i)
        atoms.intern("p" + std::to_string(i));
    return atoms;
}

// Facts first, then one rule per entry of `lengths` in shuffled order.
DefiniteProgram build(const GenProfile& profile, Random& rng,
                      const std::function<std::vector<std::size_t>(std::size_t)>& lengths_for)
{
    check_profile(profile);
    const std::size_t n = profile.n;
    std::vector<Rule> rules;
    if (profile.m > 0) {
        const std::size_t fact_cap = (n + 2) / 3;
        std::size_t facts = fact_cap >= 2 ? static_cast<std::size_t>(rng.between(1, fact_cap - 1)) : 0;
        facts = std::min(facts, profile.m);

        RuleFactory factory(n, rng);
        rules.reserve(profile.m);
        for (AtomId head : factory.distinct_atoms(facts)) {
            rules.push_back(fact(head));
            factory.remember(rules.back());
        }
        std::vector<std::size_t> lengths = lengths_for(profile.m - facts);
        rng.shuffle(lengths);
        for (std::size_t length : lengths)
            rules.push_back(factory.fresh_rule(length));
    }
    return DefiniteProgram(numbered_atoms(n), std::move(rules));
}

std::vector<std::size_t> expand(const std::vector<std::size_t>& counts, const std::vector<std::size_t>& lengths)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < counts.size(); ++i)
        out.insert(out.end(), counts[i], lengths[i]);
    return out;
}

std::uint64_t negation_stream_seed(std::uint64_t seed)
{
    // splitmix64 finaliser
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

DefiniteProgram gen_definite(const GenProfile& profile)
{
    if (profile.kind != ProfileKind::table1)
        throw ParameterError("gen_definite expects the table1 profile");
    Random rng(profile.seed);
    return build(profile, rng, [](std::size_t rules) {
        return expand(allocate_strata(rules, table1_body_percent), {1, 2, 3, 4, 5, 6, 7, 8});
    });
}

DefiniteProgram gen_denser(const GenProfile& profile)
{
    if (profile.kind != ProfileKind::denser)
        throw ParameterError("gen_denser expects the denser profile");
    Random rng(profile.seed);
    const std::size_t long_length = denser_body_length(profile.n);
    return build(profile, rng, [long_length](std::size_t rules) {
        constexpr std::array<unsigned, 4> top{table1_body_percent[0], table1_body_percent[1], denser_long_percent,
                                              100 - table1_body_percent[0] - table1_body_percent[1] -
                                                  denser_long_percent};
        const auto counts = allocate_strata(rules, top);
        const auto rest = allocate_strata(counts[3], std::span(table1_body_percent).subspan(2));
        auto lengths = expand({counts[0], counts[1], counts[2]}, {1, 2, long_length});
        const auto tail = expand(rest, {3, 4, 5, 6, 7, 8});
        lengths.insert(lengths.end(), tail.begin(), tail.end());
        return lengths;
    });
}

NormalProgram gen_normal(const GenProfile& profile)
{
    const DefiniteProgram base = profile.kind == ProfileKind::table1 ? gen_definite(profile) : gen_denser(profile);
    if (profile.k == 0)
        return base.to_normal();

    std::vector<Rule> rules(base.rules().begin(), base.rules().end());
    std::vector<std::size_t> offsets(rules.size() + 1, 0);
    for (std::size_t i = 0; i < rules.size(); ++i)
        offsets[i + 1] = offsets[i] + rules[i].pos_body.size();
    const std::size_t occurrences = offsets.back();
    if (profile.k > occurrences)
        throw ParameterError("cannot place " + std::to_string(profile.k) + " negations in " +
                             std::to_string(occurrences) + " body literals");

    std::unordered_set<Rule, RuleHash> present(rules.begin(), rules.end());
    std::vector<std::vector<AtomId>> original_pos;
    original_pos.reserve(rules.size());
    for (const auto& r : rules)
        original_pos.push_back(r.pos_body);

    Random rng(negation_stream_seed(profile.seed));
    std::size_t placed = 0;
    std::size_t attempts = 0;
    const std::size_t max_attempts = 1000 * profile.k + 10 * occurrences;
    while (placed < profile.k) {
        if (++attempts > max_attempts)
            throw ParameterError("cannot place " + std::to_string(profile.k) +
                                 " negations without duplicating rules");
        const std::size_t flat = rng.below(occurrences);
        const auto ri = static_cast<std::size_t>(std::upper_bound(offsets.begin(), offsets.end(), flat) -
                                                 offsets.begin() - 1);
        const AtomId atom = original_pos[ri][flat - offsets[ri]];
        Rule& rule = rules[ri];
        if (!std::binary_search(rule.pos_body.begin(), rule.pos_body.end(), atom))
            continue;
        std::vector<AtomId> pos = rule.pos_body;
        pos.erase(std::lower_bound(pos.begin(), pos.end(), atom));
        std::vector<AtomId> neg = rule.neg_body;
        neg.insert(std::lower_bound(neg.begin(), neg.end(), atom), atom);
        Rule flipped{rule.head, std::move(pos), std::move(neg), Connective::conjunction};
        if (present.contains(flipped))
            continue;
        present.erase(rule);
        present.insert(flipped);
        rule = std::move(flipped);
        ++placed;
    }
    return NormalProgram(base.atoms(), std::move(rules));
}

NormalProgram generate(const GenProfile& profile) { return gen_normal(profile); }

} // namespace sparselp
