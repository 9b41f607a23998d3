#include <gtest/gtest.h>

#include <map>

#include "sparselp/encoder.hpp"
#include "sparselp/error.hpp"
#include "sparselp/generator.hpp"
#include "sparselp/io.hpp"
#include "sparselp/transform.hpp"

using namespace sparselp;

namespace {

GenProfile profile(ProfileKind kind, std::size_t n, std::size_t m, std::size_t k, std::uint64_t seed)
{
    GenProfile p;
    p.kind = kind;
    p.n = n;
    p.m = m;
    p.k = k;
    p.seed = seed;
    return p;
}

std::map<std::size_t, std::size_t> body_histogram(const detail::RuleStore& p, std::size_t& facts)
{
    std::map<std::size_t, std::size_t> out;
    facts = 0;
    for (const auto& r : p.rules()) {
        if (r.is_fact())
            ++facts;
        else
            ++out[r.body_size()];
    }
    return out;
}

} // namespace

TEST(Random, BelowIsInRangeAndReproducible)
{
    Random a(9), b(9);
    for (int i = 0; i < 1000; ++i) {
        const auto x = a.below(7);
        EXPECT_LT(x, 7u);
        EXPECT_EQ(x, b.below(7));
    }
    std::vector<int> items{1, 2, 3, 4, 5};
    a.shuffle(items);
    std::sort(items.begin(), items.end());
    EXPECT_EQ(items, (std::vector<int>{1, 2, 3, 4, 5}));
}

TEST(Strata, LargestRemainder)
{
    EXPECT_EQ(allocate_strata(100, table1_body_percent), (std::vector<std::size_t>{4, 4, 10, 40, 35, 4, 2, 1}));
    const auto counts = allocate_strata(37, table1_body_percent);
    std::size_t total = 0;
    for (auto c : counts)
        total += c;
    EXPECT_EQ(total, 37u);
    EXPECT_EQ(allocate_strata(0, table1_body_percent), std::vector<std::size_t>(8, 0));
    const std::array<unsigned, 2> even{1, 1};
    EXPECT_EQ(allocate_strata(3, even), (std::vector<std::size_t>{2, 1}));
}

TEST(GenDefinite, Table1Histogram)
{
    const auto p = gen_definite(profile(ProfileKind::table1, 1000, 5000, 0, 42));
    EXPECT_EQ(p.rules().size(), 5000u);
    EXPECT_EQ(p.atoms().size(), 1000u);
    std::size_t facts = 0;
    const auto hist = body_histogram(p, facts);
    EXPECT_GE(facts, 1u);
    EXPECT_LT(facts * 3, 1000u);
    const double rules = static_cast<double>(5000 - facts);
    for (std::size_t len = 1; len <= 8; ++len) {
        const double share = hist.count(len) ? 100.0 * static_cast<double>(hist.at(len)) / rules : 0.0;
        EXPECT_NEAR(share, table1_body_percent[len - 1], 1.0) << "length " << len;
    }
}

TEST(GenDefinite, TrivialAndDeterministic)
{
    EXPECT_TRUE(gen_definite(profile(ProfileKind::table1, 1, 0, 0, 0)).empty());
    const auto a = gen_definite(profile(ProfileKind::table1, 200, 800, 0, 5));
    const auto b = gen_definite(profile(ProfileKind::table1, 200, 800, 0, 5));
    EXPECT_EQ(serialize_program(a), serialize_program(b));
    const auto c = gen_definite(profile(ProfileKind::table1, 200, 800, 0, 6));
    EXPECT_NE(serialize_program(a), serialize_program(c));
    EXPECT_THROW(gen_definite(profile(ProfileKind::denser, 10, 10, 0, 0)), ParameterError);
    EXPECT_THROW(gen_definite(profile(ProfileKind::table1, 0, 10, 0, 0)), ParameterError);
}

TEST(GenDefinite, InfeasibleRuleCount)
{
    // Two atoms admit only a handful of distinct rules.
    EXPECT_THROW(gen_definite(profile(ProfileKind::table1, 2, 50, 0, 1)), ParameterError);
}

TEST(GenDenser, LongBodies)
{
    const auto p = gen_denser(profile(ProfileKind::denser, 1000, 10000, 0, 7));
    EXPECT_EQ(denser_body_length(1000), 50u);
    std::size_t facts = 0;
    const auto hist = body_histogram(p, facts);
    const double share = static_cast<double>(hist.at(50)) / static_cast<double>(10000 - facts);
    EXPECT_GE(share, 0.70);
    EXPECT_LE(share, 0.80);
    EXPECT_EQ(serialize_program(p), serialize_program(gen_denser(profile(ProfileKind::denser, 1000, 10000, 0, 7))));
}

TEST(GenNormal, ExactNegationCount)
{
    const auto p = gen_normal(profile(ProfileKind::table1, 1000, 5000, 8, 1));
    EXPECT_EQ(p.negative_literal_count(), 8u);
    for (const auto& r : p.rules())
        if (r.pos_body.empty() && r.neg_body.empty())
            EXPECT_TRUE(r.is_fact());
}

TEST(GenNormal, StagedDeterminism)
{
    const auto base = gen_definite(profile(ProfileKind::table1, 100, 400, 0, 3));
    EXPECT_EQ(serialize_program(gen_normal(profile(ProfileKind::table1, 100, 400, 0, 3))), serialize_program(base));
    const auto k4 = gen_normal(profile(ProfileKind::table1, 100, 400, 4, 3));
    const auto k6 = gen_normal(profile(ProfileKind::table1, 100, 400, 6, 3));
    ASSERT_EQ(k4.rules().size(), base.rules().size());
    ASSERT_EQ(k6.rules().size(), base.rules().size());
    for (std::size_t i = 0; i < base.rules().size(); ++i) {
        const auto& r = base.rules()[i];
        for (const auto* q : {&k4.rules()[i], &k6.rules()[i]}) {
            EXPECT_EQ(q->head, r.head);
            std::vector<AtomId> merged = q->pos_body;
            merged.insert(merged.end(), q->neg_body.begin(), q->neg_body.end());
            std::sort(merged.begin(), merged.end());
            EXPECT_EQ(merged, r.pos_body);
        }
    }
    EXPECT_EQ(k4.negative_literal_count(), 4u);
    EXPECT_EQ(k6.negative_literal_count(), 6u);
}

TEST(GenNormal, TooManyNegations)
{
    EXPECT_THROW(gen_normal(profile(ProfileKind::table1, 5, 3, 100, 1)), ParameterError);
}

TEST(GenProfile, HeaderComment)
{
    EXPECT_EQ(profile(ProfileKind::denser, 10, 20, 3, 4).header_comment(), "% profile: kind=denser n=10 m=20 k=3 seed=4");
    EXPECT_EQ(parse_profile_kind("table1"), ProfileKind::table1);
    EXPECT_THROW(parse_profile_kind("sparse"), ParameterError);
}

TEST(GeneratorProperty, ProgramsParseStandardizeAndEncode)
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto kind = seed % 2 ? ProfileKind::denser : ProfileKind::table1;
        const std::size_t n = 5 + seed * 7;
        const auto p = generate(profile(kind, n, 3 * n, seed % 5, seed));
        const auto reparsed = parse_program(serialize_program(p));
        EXPECT_TRUE(structurally_equal(reparsed, p));
        const auto pf = prepare_normal(p);
        EXPECT_NO_THROW(encode_normal_matrix(pf).matrix.validate());
    }
}

TEST(GeneratorProperty, Table1SparsityAtScale)
{
    const auto p = gen_definite(profile(ProfileKind::table1, 1000, 5000, 0, 42));
    EXPECT_GE(sparsity(standardize(p).first).body_based, 0.985);
}

TEST(GeneratorProperty, DistinctSeedsDiffer)
{
    std::set<std::string> seen;
    for (std::uint64_t seed = 100; seed < 130; ++seed)
        seen.insert(serialize_program(gen_definite(profile(ProfileKind::table1, 50, 150, 0, seed))));
    EXPECT_EQ(seen.size(), 30u);
}
