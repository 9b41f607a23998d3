#include <gtest/gtest.h>

#include "sparselp/error.hpp"
#include "sparselp/io.hpp"
#include "sparselp/transform.hpp"
#include "support.hpp"

using namespace sparselp;
using namespace testing_support;

namespace {

std::set<std::string> rule_lines(const detail::RuleStore& p)
{
    std::set<std::string> out;
    for (const auto& r : p.rules())
        out.insert(rule_to_string(r, p.atoms()));
    return out;
}

} // namespace

TEST(Standardize, Example1)
{
    const auto [p1, map] = standardize(example1());
    ASSERT_EQ(p1.atoms().size(), 7u);
    EXPECT_EQ(map.original_count, 5u);
    EXPECT_EQ(map.aux_of.size(), 2u);
    const std::string u = p1.atoms().name(5), v = p1.atoms().name(6);
    EXPECT_EQ(p1.atoms().origin(5).kind, AtomKind::auxiliary);
    EXPECT_EQ(rule_lines(p1), (std::set<std::string>{u + " :- q, r.", v + " :- s, t.", "p :- " + u + "; " + v + ".",
                                                     "r :- s.", "q :- t.", "s.", "t."}));
}

TEST(Standardize, SdProgramUnchanged)
{
    const auto p = DefiniteProgram::from_normal(parse_program("p :- q.\nq.\n"));
    const auto [sp, map] = standardize(p);
    EXPECT_TRUE(map.aux_of.empty());
    EXPECT_TRUE(structurally_equal(sp, p));
}

TEST(Standardize, FactAndRuleForSameHead)
{
    const auto p = DefiniteProgram::from_normal(parse_program("p.\np :- q.\n"));
    const auto [sp, map] = standardize(p);
    EXPECT_EQ(sp.atoms().size(), 4u);
    EXPECT_EQ(sp.rules().size(), 3u);
    EXPECT_EQ(least_model_symbolic(sp).restricted_below(2), least_model_symbolic(p));
    EXPECT_EQ(names_of(least_model_symbolic(p), p.atoms()), std::set<std::string>{"p"});
}

TEST(StandardizeProperty, PreservesLeastModel)
{
    std::mt19937_64 rng(31);
    for (int round = 0; round < 500; ++round) {
        const std::size_t n = 1 + rng() % 30;
        const auto p = random_definite(rng, n, rng() % (3 * n), 4);
        const auto [sp, map] = standardize(p);
        ASSERT_EQ(map.original_count, n);
        for (std::size_t a = 0; a < n; ++a)
            ASSERT_EQ(sp.atoms().name(static_cast<AtomId>(a)), p.atoms().name(static_cast<AtomId>(a)));
        EXPECT_EQ(least_model_symbolic(sp).restricted_below(static_cast<AtomId>(n)), least_model_symbolic(p));
        // Every head is defined at most once.
        std::set<AtomId> heads;
        for (const auto& r : sp.rules())
            EXPECT_TRUE(heads.insert(r.head).second);
    }
}

TEST(PositiveForm, Example2)
{
    const auto pf = positive_form(example2());
    ASSERT_EQ(pf.program.atoms().size(), 7u);
    EXPECT_EQ(pf.original_count, 6u);
    const AtomId tbar = 6;
    EXPECT_EQ(pf.program.atoms().origin(tbar).kind, AtomKind::negation);
    EXPECT_EQ(pf.neg_rows, (std::map<AtomId, AtomId>{{tbar, *pf.program.atoms().find("t")}}));
    const std::string t = pf.program.atoms().name(tbar);
    EXPECT_EQ(rule_lines(pf.program),
              (std::set<std::string>{"p :- q, s.", "q :- p, t.", "s :- " + t + ".", "t.", "u :- v."}));
}

TEST(PositiveForm, DefiniteIsIdentity)
{
    const auto p = example1();
    const auto pf = positive_form(p.to_normal());
    EXPECT_TRUE(pf.neg_rows.empty());
    EXPECT_TRUE(structurally_equal(pf.program, p));
}

TEST(PositiveForm, OneAtomPerNegatedAtom)
{
    const auto pf = positive_form(parse_program("p :- not q, not r.\ns :- not q.\n"));
    EXPECT_EQ(pf.neg_rows.size(), 2u);
    EXPECT_EQ(pf.program.atoms().size(), 6u);
}

TEST(PositiveFormProperty, Idempotent)
{
    std::mt19937_64 rng(32);
    for (int round = 0; round < 200; ++round) {
        const auto p = random_normal(rng, 1 + rng() % 12, rng() % 20, 3, 0.3);
        const auto once = positive_form(p);
        const auto twice = positive_form(once.program.to_normal());
        EXPECT_TRUE(twice.neg_rows.empty());
        EXPECT_TRUE(structurally_equal(twice.program, once.program));
        EXPECT_EQ(once.program.rules().size(), p.rules().size());
    }
}

TEST(PrepareNormal, AtomOrder)
{
    const auto sp = prepare_normal(parse_program("p :- not q.\np :- r.\n"));
    const auto& atoms = sp.program.atoms();
    ASSERT_EQ(atoms.size(), 6u);
    EXPECT_EQ(atoms.origin(3).kind, AtomKind::negation);
    EXPECT_EQ(atoms.origin(4).kind, AtomKind::auxiliary);
    EXPECT_EQ(atoms.origin(5).kind, AtomKind::auxiliary);
    EXPECT_TRUE(sp.source_facts.empty());
}
