#include <gtest/gtest.h>

#include "sparselp/error.hpp"
#include "sparselp/io.hpp"
#include "sparselp/transform.hpp"
#include "support.hpp"

using namespace sparselp;
using namespace testing_support;

TEST(Parse, Example1InSourceOrder)
{
    const auto p = parse_program("s.\nt.\nr :- s.\nq :- t.\np :- q, r.\np :- s, t.");
    EXPECT_EQ(p.rules().size(), 6u);
    EXPECT_EQ(p.atoms().size(), 5u);
    EXPECT_TRUE(p.is_definite());
    EXPECT_TRUE(structurally_equal(p, example1()));
}

TEST(Parse, NegationAndEmpty)
{
    const auto p = parse_program("s :- not t.\nt.");
    ASSERT_EQ(p.rules().size(), 2u);
    EXPECT_EQ(p.rules()[0].neg_body, std::vector<AtomId>{*p.atoms().find("t")});
    const auto empty = parse_program("");
    EXPECT_TRUE(empty.empty());
    EXPECT_EQ(empty.atoms().size(), 0u);
}

TEST(Parse, CommentsArgumentsAndMultiline)
{
    const auto p = parse_program("% header\npath(a,b) :- edge(a,b). % trailing\nq :-\n   r,\n   not s.\n");
    EXPECT_EQ(p.rules().size(), 2u);
    EXPECT_TRUE(p.atoms().find("path(a,b)").has_value());
    EXPECT_EQ(p.negative_literal_count(), 1u);
}

TEST(Parse, DisjunctiveBodiesExpand)
{
    const auto p = parse_program("p :- u; v.\n");
    EXPECT_EQ(p.rules().size(), 2u);
    EXPECT_THROW(parse_program("p :- u; not v.\n"), ParseError);
    EXPECT_THROW(parse_program("p :- u, v; w.\n"), ParseError);
}

TEST(Parse, ErrorsCarryPositions)
{
    try {
        parse_program("p.\nq :- r\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_GE(e.line(), 2u);
    }
    EXPECT_THROW(parse_program("p :- .\n"), ParseError);
    EXPECT_THROW(parse_program(":- p.\n"), ParseError);
    EXPECT_THROW(parse_program("P$ :- q.\n"), ParseError);
}

TEST(Parse, Warnings)
{
    std::vector<ParseWarning> warnings;
    const auto p = parse_program("p :- q, q.\nr :- s, not s.\n", &warnings);
    EXPECT_EQ(warnings.size(), 2u);
    ASSERT_EQ(p.rules().size(), 1u);
    EXPECT_EQ(p.rules()[0].pos_body.size(), 1u);
}

TEST(Serialize, RoundTrip)
{
    const auto p = example1();
    const auto text = serialize_program(p);
    EXPECT_TRUE(structurally_equal(parse_program(text), p));
    EXPECT_EQ(serialize_program(DefiniteProgram{}), "");
    const auto n = example2();
    EXPECT_TRUE(structurally_equal(parse_program(serialize_program(n)), n));
}

TEST(Serialize, StandardizedOrRule)
{
    const auto p1 = standardize(example1()).first;
    const auto text = serialize_program(p1);
    const std::string u = p1.atoms().name(5), v = p1.atoms().name(6);
    EXPECT_NE(text.find("p :- " + u + "; " + v + "."), std::string::npos) << text;
    EXPECT_TRUE(structurally_equal(parse_standardized_program(text), p1));
}

TEST(SerializeProperty, RandomRoundTrips)
{
    std::mt19937_64 rng(21);
    for (int round = 0; round < 300; ++round) {
        const auto p = random_normal(rng, 1 + rng() % 15, rng() % 20, 4, 0.25);
        EXPECT_TRUE(structurally_equal(parse_program(serialize_program(p)), p));
    }
}

TEST(EdgeList, Basics)
{
    const auto g = load_edge_list("1 2\n2 3");
    EXPECT_EQ(g.node_count(), 3u);
    EXPECT_EQ(g.edge_count(), 2u);
    const auto dedup = load_edge_list("% comment\n1 2\n1 2");
    EXPECT_EQ(dedup.node_count(), 2u);
    EXPECT_EQ(dedup.edge_count(), 1u);
    const auto cycle = load_edge_list("a b\nb c\nc a");
    EXPECT_EQ(cycle.node_count(), 3u);
    EXPECT_EQ(cycle.edge_count(), 3u);
    EXPECT_EQ(load_edge_list("# c\n\n1\t2\t0.5\n").edge_count(), 1u);
}

TEST(EdgeList, Errors)
{
    try {
        load_edge_list("1 2\n3\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
    EXPECT_THROW(load_edge_list("a-b c\n"), ParseError);
}

TEST(Ground, ClosureMatchesBfs)
{
    for (const char* text : {"1 2\n2 3", "1 2", "a b\nb c\nc a", "a a", "x y\ny y\n"}) {
        const auto g = load_edge_list(text);
        const auto p = ground_transitive_closure(g);
        EXPECT_EQ(path_pairs(least_model_symbolic(p), p.atoms()), bfs_closure(g)) << text;
    }
    const auto chain = ground_transitive_closure(load_edge_list("1 2\n2 3"));
    EXPECT_EQ(path_pairs(least_model_symbolic(chain), chain.atoms()),
              (std::set<std::pair<std::string, std::string>>{{"1", "2"}, {"2", "3"}, {"1", "3"}}));
    const auto cycle = ground_transitive_closure(load_edge_list("a b\nb c\nc a"));
    EXPECT_EQ(path_pairs(least_model_symbolic(cycle), cycle.atoms()).size(), 9u);
}

TEST(Ground, EmptyGraph)
{
    try {
        ground_transitive_closure(load_edge_list("% nothing\n"));
        FAIL();
    } catch (const ParameterError& e) {
        EXPECT_STREQ(e.what(), "empty graph");
    }
}

TEST(ReadFile, MissingFile) { EXPECT_THROW(read_file("/nonexistent/file.lp"), IoError); }
