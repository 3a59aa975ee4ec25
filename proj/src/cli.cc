#include <bfasp/cli.hh>
#include <bfasp/frontend/assignment.hh>
#include <bfasp/frontend/grounder.hh>
#include <bfasp/frontend/parser.hh>
#include <bfasp/ground_format.hh>
#include <bfasp/solver.hh>

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using std::optional;
using std::ostream;
using std::string;
using std::vector;

using namespace bfasp;

namespace
{
    constexpr const char * separator = "----------";
    constexpr const char * complete = "==========";
    constexpr const char * unsatisfiable = "=====UNSATISFIABLE=====";
    constexpr const char * unknown = "=====UNKNOWN=====";

    struct Options
    {
        string model;
        string data;
        string assign;
        bool all = false;
        optional<std::size_t> limit;
        optional<double> time_budget;
        string founded_default;
        bool dump_reduct = false;
        bool trace_fixpoint = false;
        string prop = "clause";
    };

    auto read_file(const string & path) -> string
    {
        std::ifstream in{path, std::ios::binary};
        if (! in)
            throw Error{"cannot read '" + path + "'"};
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto parse_interval(const string & text) -> std::pair<Integer, Integer>
    {
        auto dots = text.find("..");
        auto parse = [&](std::string_view s) {
            Integer v = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
                throw Error{"--founded-default expects LO..HI, got '" + text + "'"};
            return v;
        };
        if (dots == string::npos)
            throw Error{"--founded-default expects LO..HI, got '" + text + "'"};
        std::string_view view{text};
        auto lo = parse(view.substr(0, dots)), hi = parse(view.substr(dots + 2));
        if (lo > hi)
            throw Error{"--founded-default interval is empty"};
        return {lo, hi};
    }

    auto load_program(const Options & opts) -> GroundProgram
    {
        GroundProgram program;
        if (std::filesystem::path{opts.model}.extension() == ".bfg") {
            if (! opts.data.empty())
                throw Error{"--data cannot be combined with a ground program"};
            program = read_ground(read_file(opts.model), opts.model);
        }
        else {
            auto ast = frontend::parse_model(read_file(opts.model), opts.model);
            frontend::DataBindings data;
            if (! opts.data.empty())
                data = frontend::parse_data(read_file(opts.data), opts.data);
            frontend::GroundOptions ground_options;
            if (! opts.founded_default.empty())
                ground_options.founded_default = parse_interval(opts.founded_default);
            program = frontend::ground(ast, data, ground_options);
        }

        auto report = validate_program(program);
        if (! report.ok()) {
            string message = "invalid program:";
            for (const auto & problem : report.problems)
                message += "\n  " + problem;
            throw Error{message};
        }
        return program;
    }

    auto make_trace(const GroundProgram & p, ostream & err) -> FixpointTrace
    {
        return [&p, &err](const BoundUpdate & u) {
            err << p.name(u.var) << " " << to_string(u.old_value) << " -> " << to_string(u.new_value) << " by clause#"
                << u.clause << "\n";
        };
    }

    auto search_config(const Options & opts, const GroundProgram & p, ostream & err) -> SearchConfig
    {
        SearchConfig config;
        config.propagation = opts.prop == "leaf" ? Propagation::LeafCheckOnly : Propagation::Clause;
        if (opts.time_budget)
            config.time_budget = std::chrono::duration<double>{*opts.time_budget};
        if (opts.trace_fixpoint)
            config.trace = make_trace(p, err);

        auto guess = guess_set(p);
        for (auto v : guess.vars()) {
            const auto & info = p.info(v);
            if (info.founded() && info.sort == Sort::Int)
                err << "warning: founded variable " << info.name << " is guessed over "
                    << (info.hi - info.lo + 2) << " values\n";
        }
        return config;
    }

    auto solve(const Options & opts, ostream & out, ostream & err) -> int
    {
        auto program = load_program(opts);
        auto config = search_config(opts, program, err);

        auto dump = [&](const Valuation & v) {
            if (opts.dump_reduct)
                err << write_reduct(build_reduct(program, v));
        };

        if (program.objective()) {
            auto result = optimize(program, config);
            if (result.best) {
                dump(*result.best);
                out << write_valuation(program, *result.best);
                out << "objective = " << *result.value << ";\n" << separator << "\n";
                if (result.outcome.status == SearchStatus::Exhausted) {
                    out << complete << "\n";
                    return cli::Success;
                }
                return cli::ResourceLimit;
            }
            if (result.outcome.status == SearchStatus::Exhausted) {
                out << unsatisfiable << "\n";
                return cli::NoStableModel;
            }
            out << unknown << "\n";
            return cli::ResourceLimit;
        }

        if (! opts.all)
            config.solution_limit = opts.limit.value_or(1);
        std::size_t found = 0;
        auto outcome = enumerate_stable(program, config, [&](const Valuation & v) {
            ++found;
            dump(v);
            out << write_valuation(program, v) << separator << "\n";
            return true;
        });

        switch (outcome.status) {
        case SearchStatus::Exhausted:
            if (found == 0) {
                out << unsatisfiable << "\n";
                return cli::NoStableModel;
            }
            out << complete << "\n";
            return cli::Success;
        case SearchStatus::SolutionLimit: return cli::Success;
        case SearchStatus::TimeLimit:
            if (found == 0)
                out << unknown << "\n";
            return cli::ResourceLimit;
        }
        return cli::Success;
    }

    auto check(const Options & opts, ostream & out, ostream & err) -> int
    {
        auto program = load_program(opts);
        auto valuation = frontend::parse_assignment(read_file(opts.assign), program, opts.assign);
        if (opts.dump_reduct)
            err << write_reduct(build_reduct(program, valuation));
        FixpointTrace trace;
        if (opts.trace_fixpoint)
            trace = make_trace(program, err);
        auto verdict = check_stable(program, valuation, trace);
        out << describe(verdict, program) << "\n";
        return is_stable(verdict) ? cli::Success : cli::NotStable;
    }

    auto ground(const Options & opts, ostream & out) -> int
    {
        out << write_ground(load_program(opts));
        return cli::Success;
    }
}

auto bfasp::cli::run(const vector<string> & args, ostream & out, ostream & err) -> int
{
    CLI::App app{"Bound founded answer set solver"};
    app.name("bfasp");
    app.require_subcommand(1);

    Options opts;
    auto common = [&](CLI::App * sub) {
        sub->add_option("model", opts.model, "model (.bfz) or ground program (.bfg)")->required();
        sub->add_option("--data", opts.data, "data file (.bfd)");
        sub->add_option("--founded-default", opts.founded_default, "interval LO..HI for founded ints without one");
    };

    auto solve_cmd = app.add_subcommand("solve", "find a stable model, all of them, or an optimal one");
    common(solve_cmd);
    auto all_flag = solve_cmd->add_flag("--all", opts.all, "enumerate every stable model");
    solve_cmd->add_option("--limit", opts.limit, "stop after N stable models")
        ->check(CLI::PositiveNumber)
        ->excludes(all_flag);
    solve_cmd->add_option("--time-budget", opts.time_budget, "give up after SECONDS")->check(CLI::PositiveNumber);
    solve_cmd->add_flag("--dump-reduct", opts.dump_reduct, "print the reduct of each reported model");
    solve_cmd->add_flag("--trace-fixpoint", opts.trace_fixpoint, "print every bound update");
    solve_cmd->add_option("--prop", opts.prop, "propagation level")->check(CLI::IsMember({"leaf", "clause"}));
    // accepted only to give a clearer message than "unexpected argument"
    solve_cmd->add_option("--assign", opts.assign)->group("");

    auto check_cmd = app.add_subcommand("check", "decide whether an assignment is a stable model");
    common(check_cmd);
    check_cmd->add_option("--assign", opts.assign, "assignment file (.bfa)")->required();
    check_cmd->add_flag("--dump-reduct", opts.dump_reduct, "print the reduct of the assignment");
    check_cmd->add_flag("--trace-fixpoint", opts.trace_fixpoint, "print every bound update");

    auto ground_cmd = app.add_subcommand("ground", "print the ground program");
    common(ground_cmd);

    try {
        vector<string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp & e) {
        app.exit(e, out, err);
        return Success;
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << "\n";
        return InputError;
    }

    try {
        if (*solve_cmd) {
            if (! opts.assign.empty())
                throw Error{"solve does not take --assign; use check"};
            return solve(opts, out, err);
        }
        if (*check_cmd)
            return check(opts, out, err);
        return ground(opts, out);
    }
    catch (const Error & e) {
        err << "error: " << e.what() << "\n";
        return InputError;
    }
}
