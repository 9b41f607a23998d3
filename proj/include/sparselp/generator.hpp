#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sparselp/program.hpp"

namespace sparselp {

enum class ProfileKind { table1, denser };

std::string_view to_string(ProfileKind kind);
ProfileKind parse_profile_kind(std::string_view name);

struct GenProfile {
    ProfileKind kind = ProfileKind::table1;
    std::size_t n = 1;     // atoms
    std::size_t m = 0;     // rules, facts included
    std::size_t k = 0;     // negative literal occurrences
    std::uint64_t seed = 0;

    // "% profile: kind=table1 n=1000 m=5000 k=0 seed=42"
    std::string header_comment() const;
};

// Share (in percent) of non-fact rules per body length 1..8.
inline constexpr std::array<unsigned, 8> table1_body_percent{4, 4, 10, 40, 35, 4, 2, 1};

// Share (in percent) of non-fact rules with the long body in the denser profile.
inline constexpr unsigned denser_long_percent = 75;

// Seeded generator with portable output: mt19937_64 plus explicit rejection
// sampling and Fisher-Yates, so sequences do not depend on the standard
// library's distribution implementations.
class Random {
public:
    explicit Random(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);
    // Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

    template <typename T>
    void shuffle(T& items)
    {
        for (std::size_t i = items.size(); i > 1; --i)
            std::swap(items[i - 1], items[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

// Exact per-stratum counts splitting `total` proportionally to `weights` with
// largest-remainder rounding. Ties go to the lower stratum.
std::vector<std::size_t> allocate_strata(std::size_t total, std::span<const unsigned> weights);

// Body length of the long rules in the denser profile: ceil(0.05 n).
std::size_t denser_body_length(std::size_t n);

// Atoms p1..pn; facts drawn from [1, ceil(n/3) - 1]; body lengths per
// table1_body_percent; heads and bodies uniform. Throws ParameterError when
// the profile is infeasible.
DefiniteProgram gen_definite(const GenProfile& profile);

// Facts and lengths 1-2 as in the table1 profile, 75% of non-fact rules with
// body length ceil(0.05 n), the remainder over lengths 3-8 in table1 ratios.
DefiniteProgram gen_denser(const GenProfile& profile);

// Base program by profile kind, then exactly k body literal occurrences
// flipped to negation (from an independent stream, so the base does not
// depend on k).
NormalProgram gen_normal(const GenProfile& profile);

// Dispatches on kind and k: definite programs come back as NormalProgram.
NormalProgram generate(const GenProfile& profile);

} // namespace sparselp
