#include "support/builder.hh"
#include "support/files.hh"

#include <bfasp/frontend/assignment.hh>

#include <doctest.h>

using namespace bfasp;
using namespace bfasp::test;

TEST_CASE("the example assignments")
{
    auto ex = example1();
    auto theta = parse_assignment(model_text("theta.bfa"), ex.program);
    CHECK(theta == valuation(ex.program, {{"x", boolean(true)}, {"y", boolean(false)}, {"b", fin(8)},
                                             {"s", fin(9)}, {"a", fin(17)}}));

    auto prime = parse_assignment("x=true; y=false; b=8; s=3; a=17;", ex.program);
    CHECK(prime[ex.s] == fin(3));
    CHECK(prime[ex.a] == fin(17));
}

TEST_CASE("founded integers may be -inf")
{
    auto p = ground_model("mcds.bfz");
    std::string text = "dom[1] = false; dom[2] = true; dom[3] = true; dom[4] = false;\n";
    for (int u = 1; u <= 4; ++u)
        for (int v = 1; v <= 4; ++v)
            text += "d[" + std::to_string(u) + "," + std::to_string(v) + "] = " + (u == v ? "0" : "-inf") + ";\n";
    auto v = parse_assignment(text, p);
    CHECK(v[*p.find("d[1,4]")] == neg_inf());
    CHECK(v[*p.find("d[2,2]")] == fin(0));
}

TEST_CASE("bad assignments are rejected")
{
    auto ex = example1();
    auto p = ex.program;
    CHECK_THROWS_AS((void) parse_assignment("x=true; y=false; b=8; s=9; a=17; z=1;", p), ParseError);
    CHECK_THROWS_AS((void) parse_assignment("x=true; x=false; y=false; b=8; s=9; a=17;", p), ParseError);
    CHECK_THROWS_AS((void) parse_assignment("x=true; y=false; b=8; s=21; a=17;", p), ParseError);
    CHECK_THROWS_AS((void) parse_assignment("x=true; y=false; b=8; s=-inf; a=17;", p), ParseError);
    CHECK_THROWS_AS((void) parse_assignment("x=1; y=false; b=8; s=9; a=17;", p), ParseError);
    CHECK_THROWS_AS((void) parse_assignment("x=true; y=false; b=8; s=9;", p), ParseError);
    CHECK_THROWS_AS((void) parse_assignment("x=true y=false;", p), ParseError);
}
