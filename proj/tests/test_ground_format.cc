#include "support/builder.hh"
#include "support/files.hh"
#include "support/generators.hh"

#include <bfasp/analysis.hh>
#include <bfasp/ground_format.hh>

#include <doctest.h>

using namespace bfasp;
using namespace bfasp::test;

TEST_CASE("members print in ground syntax")
{
    auto ex = example1();
    auto vars = ex.program.vars();
    CHECK(format_atom(atom({{1, ex.a}, {-1, ex.b}, {-1, ex.s}}, 0), vars) == "1*a - 1*b - 1*s >= 0");
    CHECK(format_atom(atom({{-2, ex.a}}, -4), vars) == "-2*a >= -4");
    CHECK(format_clause(clause({neg(ex.x)}, {atom({{1, ex.b}}, 8)}), vars) == "~x | 1*b >= 8");
    CHECK(format_clause(FlatClause{}, vars) == "false");
    CHECK(format_expr(LinearExpr{{{1, ex.x}, {3, ex.s}}, -2}, vars) == "1*x + 3*s - 2");
}

TEST_CASE("the example program prints as expected")
{
    auto ex = example1();
    CHECK(write_ground(ex.program) ==
        "var int 0..100 founded a;\n"
        "var int 0..100 founded b;\n"
        "var bool founded x;\n"
        "var bool founded y;\n"
        "var int 0..20 standard s;\n"
        "rule 1*a >= 0 head a;\n"
        "rule 1*b >= 0 head b;\n"
        "rule 1*a - 1*b - 1*s >= 0 head a;\n"
        "rule ~x | 1*b >= 8 head b;\n"
        "rule x | y | -1*a >= -4 head x;\n");
}

TEST_CASE("reading accepts comments, bracketed names and the empty clause")
{
    auto p = read_ground("# a comment\n"
                         "var bool standard dom[1];\n"
                         "var int -5..0 founded d[1,2];  # trailing\n"
                         "constraint ~dom[1] | 1*d[1,2] >= -3;\n"
                         "constraint false;\n"
                         "rule 1*d[1,2] >= 0 head d[1,2];\n"
                         "minimize 2*dom[1] + 1;\n");
    REQUIRE(p.num_vars() == 2);
    CHECK(p.name(VarId{1}) == "d[1,2]");
    CHECK(p.info(VarId{1}).lo == -5);
    REQUIRE(p.constraints().size() == 2);
    CHECK(p.constraints()[1].empty());
    CHECK(p.rules().size() == 1);
    REQUIRE(p.objective());
    CHECK(p.objective()->constant == 1);
}

TEST_CASE("reading reports located errors")
{
    CHECK_THROWS_WITH_AS((void) read_ground("var bool standard x;\nconstraint y;\n", "f.bfg"),
        "f.bfg:2:12: unknown variable 'y'", ParseError);
    CHECK_THROWS_AS((void) read_ground("var real standard x;\n"), ParseError);
    CHECK_THROWS_AS((void) read_ground("var bool standard x;\nvar bool founded x;\n"), ParseError);
    CHECK_THROWS_AS((void) read_ground("var bool founded x;\nrule x tail x;\n"), ParseError);
    CHECK_THROWS_AS((void) read_ground("var int 0..3 founded a;\nconstraint 1*a >= 99999999999999999999;\n"),
        ParseError);
}

TEST_CASE("writing then reading gives back the same program")
{
    SUBCASE("bundled models")
    {
        for (auto name : {"example1.bfz", "mcds.bfz"}) {
            auto p = ground_model(name);
            CHECK(read_ground(write_ground(p)) == p);
        }
    }

    SUBCASE("random programs")
    {
        Rng rng{21};
        for (int round = 0; round < 300; ++round) {
            auto p = random_program(rng, coin(rng));
            p = p.with_constraint(random_clause(rng, p));
            if (coin(rng, 0.1))
                p = p.with_constraint(FlatClause{});
            auto text = write_ground(p);
            auto q = read_ground(text);
            CHECK(q == p);
            CHECK(write_ground(q) == text);
        }
    }
}

TEST_CASE("reducts print as head-tagged rules")
{
    auto ex = example1();
    auto theta = valuation(ex.program, {{"x", boolean(true)}, {"y", boolean(false)}, {"b", fin(8)}, {"s", fin(9)},
                                           {"a", fin(17)}});
    CHECK(write_reduct(build_reduct(ex.program, theta)) ==
        "rule 1*a >= 0 head a;\n"
        "rule 1*b >= 0 head b;\n"
        "rule 1*a - 1*b >= 9 head a;\n"
        "rule ~x | 1*b >= 8 head b;\n"
        "rule x | -1*a >= -4 head x;\n");
    CHECK(write_valuation(ex.program, theta) == "a = 17;\nb = 8;\nx = true;\ny = false;\ns = 9;\n");
}
