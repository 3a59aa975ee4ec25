#include "support/files.hh"
#include "support/generators.hh"

#include <bfasp/analysis.hh>
#include <bfasp/ground_format.hh>

#include <doctest.h>

using namespace bfasp;
using namespace bfasp::test;

namespace
{
    auto count_if_vars(const GroundProgram & p, VarKind kind, Sort sort) -> std::size_t
    {
        return std::count_if(p.vars().begin(), p.vars().end(),
            [&](const VarInfo & v) { return v.kind == kind && v.sort == sort; });
    }

    auto ground_error(const std::string & model, const std::string & data = "") -> std::string
    {
        try {
            (void) ground(parse_model(model, "m.bfz"), data.empty() ? DataBindings{} : parse_data(data, "d.bfd"));
        }
        catch (const ParseError & e) {
            return e.what();
        }
        return "";
    }

    auto constraint_lines(const GroundProgram & p) -> std::vector<std::string>
    {
        std::vector<std::string> lines;
        for (const auto & c : p.constraints())
            lines.push_back(format_clause(c, p.vars()));
        return lines;
    }
}

TEST_CASE("the appendix instance grounds to the expected shape")
{
    auto p = ground_model("mcds.bfz");
    CHECK(count_if_vars(p, VarKind::Standard, Sort::Bool) == 4);
    CHECK(count_if_vars(p, VarKind::Founded, Sort::Int) == 16);
    CHECK(p.num_vars() == 20);
    CHECK(p.rules().size() == 28);
    CHECK(p.constraints().size() == 16);
    REQUIRE(p.objective());
    CHECK(p.objective()->terms.size() == 4);
    CHECK(p.objective()->constant == 0);

    std::size_t base = 0;
    for (const auto & r : p.rules())
        if (r.clause.lits.empty() && r.clause.atoms.size() == 1 && r.clause.atoms[0].terms.size() == 1 &&
            r.clause.atoms[0].bound == 0)
            ++base;
    CHECK(base == 4);

    auto lines = constraint_lines(p);
    CHECK(std::count(lines.begin(), lines.end(), "~dom[2] | ~dom[3] | 1*d[2,3] >= -35") == 1);
    CHECK(std::count(lines.begin(), lines.end(), "dom[1] | dom[2]") == 1);

    auto rule = p.rules()[p.rules_for(*p.find("d[2,3]")).back()];
    CHECK(format_clause(rule.clause, p.vars()) == "~dom[2] | ~dom[3] | 1*d[2,3] - 1*d[3,3] >= -30");
}

TEST_CASE("every ground rule is well formed")
{
    auto p = ground_model("mcds.bfz");
    for (const auto & r : p.rules())
        CHECK_FALSE(validate_rule(p, r));
    CHECK(validate_program(p).ok());
}

TEST_CASE("empty ranges instantiate nothing")
{
    auto p = ground_text("var int in 0..5: h :: founded;\nrule forall (n in 1..0) (h >= n :: head(h));\n"
                         "constraint forall (n in 1..0) (false);\n");
    CHECK(p.rules().empty());
    CHECK(p.constraints().empty());
}

TEST_CASE("comparisons are normalised to lower bounds")
{
    auto p = ground_text("var int in 0..9: x;\nvar int in 0..9: y;\nvar bool: q;\n"
                         "constraint x <= 3;\nconstraint x < 3;\nconstraint x > 3;\nconstraint x = y + 1;\n"
                         "constraint x != 3;\nconstraint not (x >= 2 /\\ q);\n"
                         "constraint sum (i in 1..3) (i * x) >= 2 * y - 4;\nconstraint 3 <= 5 \\/ q;\n"
                         "constraint 3 >= 5;\n");
    CHECK(constraint_lines(p) ==
        std::vector<std::string>{"-1*x >= -3", "-1*x >= -2", "1*x >= 4", "1*x - 1*y >= 1", "-1*x + 1*y >= -1",
            "1*x >= 4 | -1*x >= -2", "~q | -1*x >= -1", "6*x - 2*y >= -4", "false"});
}

TEST_CASE("the verbatim appendix model needs an interval for its founded array")
{
    auto text = model_text("mcds_appendix.bfz");
    CHECK_THROWS_AS((void) ground(parse_model(text)), GroundError);

    auto with_default = ground(parse_model(text), {}, GroundOptions{std::pair<Integer, Integer>{-1000, 0}});
    CHECK(with_default == ground_model("mcds.bfz"));
}

TEST_CASE("separate data files bind parameters")
{
    auto p = ground_text(model_text("mcds_model.bfz"), model_text("mcds_k35.bfd"));
    CHECK(p == ground_model("mcds.bfz"));

    auto msg = ground_error(model_text("mcds.bfz"), "N = 4;");
    CHECK(msg.find("N") != std::string::npos);
    CHECK_FALSE(ground_error(model_text("mcds_model.bfz"), model_text("mcds_k35.bfd") + "Q = 1;").empty());
    CHECK_FALSE(ground_error(model_text("mcds_model.bfz"), "N = 4;").empty());
}

TEST_CASE("grounding errors point at the source")
{
    CHECK(ground_error("var int in 0..3: h :: founded;\nrule h <= 2 :: head(h);\n").starts_with("m.bfz:2:"));
    CHECK_FALSE(ground_error("var int: h :: founded;\nrule h >= 2 :: head(h);\n").empty());
    CHECK_FALSE(ground_error("var int: s;\n").empty());
    CHECK_FALSE(ground_error("var bool: x :: founded;\nvar bool: y;\n"
                             "rule exists (i in 1..2) (x \\/ y) :: head(x);\n")
                    .empty());
    CHECK_FALSE(ground_error("array[1..2] of var bool: p;\nconstraint p[3];\n").empty());
    CHECK_FALSE(ground_error("var bool: x;\nconstraint bool2int(x) >= 1;\n").empty());
}

TEST_CASE("instantiation counts follow the declared ranges")
{
    auto model = model_text("mcds_model.bfz");
    Rng rng{31};
    for (int round = 0; round < 60; ++round) {
        McdsInstance inst{random_digraph(rng, 1, 5, 9, coin(rng) ? 0.3 : 0.7), uniform(rng, 0, 40)};
        auto n = static_cast<std::size_t>(inst.graph.nodes);
        auto e = inst.graph.edges.size();
        auto p = ground_text(model, mcds_data(inst));
        CHECK(p.num_vars() == n + n * n);
        CHECK(p.rules().size() == n + e * n);
        CHECK(p.constraints().size() == n + n * (n - 1));
        CHECK(p.objective()->terms.size() == n);
    }
}

TEST_CASE("grounding is deterministic")
{
    auto model = parse_model(model_text("mcds_model.bfz"));
    Rng rng{32};
    for (int round = 0; round < 20; ++round) {
        McdsInstance inst{random_digraph(rng, 2, 5, 9, 0.5), 30};
        auto data = parse_data(mcds_data(inst));
        auto first = ground(model, data);
        auto second = ground(model, data);
        CHECK(first == second);
        CHECK(write_ground(first) == write_ground(second));
    }
}
