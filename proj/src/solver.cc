#include <bfasp/solver.hh>

#include <algorithm>
#include <limits>

using std::optional;
using std::size_t;
using std::string;
using std::vector;

using namespace bfasp;

namespace
{
    template <typename... Ts>
    struct Overloaded : Ts...
    {
        using Ts::operator()...;
    };
}

auto bfasp::is_stable(const StabilityVerdict & v) -> bool
{
    return std::holds_alternative<verdict::Stable>(v);
}

auto bfasp::describe(const StabilityVerdict & v, const GroundProgram & p) -> string
{
    return std::visit(Overloaded{
                          [](const verdict::Stable &) -> string { return "STABLE"; },
                          [](const verdict::ConstraintViolated & c) -> string {
                              return "NOT STABLE: constraint #" + std::to_string(c.clause) + " is violated";
                          },
                          [](const verdict::UndefinedEvaluation & c) -> string {
                              return "NOT STABLE: constraint #" + std::to_string(c.clause) +
                                  " is undefined (-inf meets +inf)";
                          },
                          [&](const verdict::MinimalModelMismatch & m) -> string {
                              return "NOT STABLE: " + p.name(m.var) + " = " + to_string(m.assigned) +
                                  " but minimal model gives " + to_string(m.minimal);
                          },
                          [](const verdict::ReductUnsat & u) -> string {
                              return "NOT STABLE: reduct has no minimal model (rule #" + std::to_string(u.rule) +
                                  " exceeds its head's domain)";
                          }},
        v);
}

auto bfasp::check_stable(const GroundProgram & p, const Valuation & v, const FixpointTrace & trace) -> StabilityVerdict
{
    if (auto report = check_constraints(p, v); ! report.satisfied) {
        if (report.failed_verdict == Truth::Undefined)
            return verdict::UndefinedEvaluation{*report.failed_clause};
        return verdict::ConstraintViolated{*report.failed_clause};
    }

    auto cp = build_reduct(p, v);
    auto result = minimal_model(cp, trace);
    if (auto unsat = std::get_if<FixpointUnsat>(&result))
        return verdict::ReductUnsat{unsat->clause, cp.clauses[unsat->clause].rule};

    const auto & model = std::get<MinimalModel>(result).model;
    for (size_t i = 0; i < p.num_vars(); ++i) {
        VarId x{static_cast<std::uint32_t>(i)};
        if (p.info(x).founded() && v[x] != model[x])
            return verdict::MinimalModelMismatch{x, v[x], model[x]};
    }
    return verdict::Stable{};
}

auto bfasp::objective_value(const GroundProgram & p, const Valuation & v) -> Integer
{
    if (! p.objective())
        throw SolveError{"program has no objective"};
    if (auto z = eval_expr(*p.objective(), v))
        return *z;
    for (const auto & term : p.objective()->terms)
        if (v[term.var].is_neg_inf())
            throw SolveError{"objective is not finite: " + p.name(term.var) + " = -inf"};
    throw SolveError{"objective is not finite"};
}

namespace
{
    using Clock = std::chrono::steady_clock;

    struct StopSearch
    {
        SearchStatus status;
    };

    class Search
    {
    public:
        Search(const GroundProgram & p, const SearchConfig & config) :
            _program(p),
            _config(config),
            _guess(guess_set(p)),
            _reduct(p),
            _current(Valuation::bottom(p)),
            _assigned(p.num_vars(), false)
        {
            if (config.time_budget)
                _deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(*config.time_budget);

            _order.assign(_guess.vars().begin(), _guess.vars().end());
            if (config.branching == BranchOrder::Activity) {
                vector<size_t> count(p.num_vars(), 0);
                auto tally = [&](const FlatClause & c) {
                    for (const auto & [var, m] : occurrences(c))
                        ++count[var.index];
                };
                for (const auto & c : p.constraints())
                    tally(c);
                for (const auto & r : p.rules())
                    tally(r.clause);
                std::stable_sort(_order.begin(), _order.end(),
                    [&](VarId a, VarId b) { return count[a.index] > count[b.index]; });
            }

            for (auto v : _order) {
                auto values = p.info(v).domain_values();
                if (config.values == ValueOrder::MaxFirst)
                    std::reverse(values.begin(), values.end());
                _values.push_back(std::move(values));
            }

            if (config.propagation == Propagation::Clause)
                build_watches();
        }

        auto run(const ModelCallback & on_model) -> SearchOutcome
        {
            _on_model = &on_model;
            SearchOutcome outcome;
            try {
                descend(0);
                outcome.status = SearchStatus::Exhausted;
            }
            catch (const StopSearch & stop) {
                outcome.status = stop.status;
            }
            outcome.stats = _stats;
            return outcome;
        }

        auto set_objective_bound(Integer bound) -> void { _objective_bound = bound; }

    private:
        const GroundProgram & _program;
        const SearchConfig & _config;
        GuessSet _guess;
        ReductBuilder _reduct;
        Valuation _current;
        vector<bool> _assigned;
        vector<VarId> _order;
        vector<vector<ExtValue>> _values;
        optional<Clock::time_point> _deadline;
        optional<Integer> _objective_bound;
        const ModelCallback * _on_model = nullptr;
        SearchStats _stats;

        // clause propagation: clauses whose variables are all guessed, checked
        // once the last of them is assigned
        vector<const FlatClause *> _watched;
        vector<size_t> _unassigned;
        vector<vector<size_t>> _watches_of;

        auto build_watches() -> void
        {
            _watches_of.assign(_program.num_vars(), {});
            auto consider = [&](const FlatClause & c) {
                auto occ = occurrences(c);
                for (const auto & [var, m] : occ)
                    if (! _guess.contains(var))
                        return;
                size_t id = _watched.size();
                _watched.push_back(&c);
                _unassigned.push_back(occ.size());
                for (const auto & [var, m] : occ)
                    _watches_of[var.index].push_back(id);
            };
            for (const auto & c : _program.constraints())
                consider(c);
            for (const auto & r : _program.rules())
                consider(r.clause);
        }

        auto assign(VarId v, const ExtValue & value) -> bool
        {
            _current[v] = value;
            _assigned[v.index] = true;
            bool ok = true;
            if (_config.propagation == Propagation::Clause) {
                for (auto id : _watches_of[v.index])
                    if (--_unassigned[id] == 0 && eval_clause(*_watched[id], _current) == Truth::False)
                        ok = false;
            }
            return ok;
        }

        auto unassign(VarId v) -> void
        {
            _assigned[v.index] = false;
            _current[v] = _program.info(v).bottom();
            if (_config.propagation == Propagation::Clause)
                for (auto id : _watches_of[v.index])
                    ++_unassigned[id];
        }

        // lowest objective value still reachable from the current partial guess
        auto objective_floor() const -> optional<Integer>
        {
            const auto & obj = *_program.objective();
            Integer floor = obj.constant;
            for (const auto & [coeff, var] : obj.terms) {
                const auto & info = _program.info(var);
                ExtValue v;
                if (_assigned[var.index])
                    v = _current[var];
                else if (coeff > 0)
                    v = info.bottom();
                else
                    v = info.sort == Sort::Bool ? ExtValue::boolean(true) : ExtValue::fin(info.hi);
                if (v.is_neg_inf())
                    return std::nullopt;
                floor = checked_add(floor, checked_mul(coeff, v.raw()));
            }
            return floor;
        }

        auto check_clock() -> void
        {
            if (_deadline && Clock::now() >= *_deadline)
                throw StopSearch{SearchStatus::TimeLimit};
        }

        auto descend(size_t depth) -> void
        {
            ++_stats.nodes;
            check_clock();

            if (_objective_bound && _config.propagation == Propagation::Clause) {
                if (auto floor = objective_floor(); floor && *floor > *_objective_bound)
                    return;
            }

            if (depth == _order.size()) {
                leaf();
                return;
            }

            auto var = _order[depth];
            for (const auto & value : _values[depth]) {
                if (assign(var, value))
                    descend(depth + 1);
                unassign(var);
            }
        }

        auto leaf() -> void
        {
            ++_stats.leaves;
            auto cp = _reduct.build(_current);
            auto result = minimal_model(cp, _config.trace);
            if (! std::holds_alternative<MinimalModel>(result))
                return;
            const auto & model = std::get<MinimalModel>(result).model;

            Valuation candidate = _current;
            for (size_t i = 0; i < _program.num_vars(); ++i) {
                VarId x{static_cast<std::uint32_t>(i)};
                if (! _program.info(x).founded())
                    continue;
                if (_guess.contains(x)) {
                    if (_current[x] != model[x])
                        return;
                }
                else
                    candidate[x] = model[x];
            }

            if (! satisfies(_program, candidate))
                return;
            if (_objective_bound && objective_value(_program, candidate) > *_objective_bound)
                return;

            ++_stats.solutions;
            bool keep_going = (*_on_model)(candidate);
            if (! keep_going)
                throw StopSearch{SearchStatus::SolutionLimit};
            if (_config.solution_limit && _stats.solutions >= *_config.solution_limit)
                throw StopSearch{SearchStatus::SolutionLimit};
        }
    };
}

auto bfasp::enumerate_stable(const GroundProgram & p, const SearchConfig & config, const ModelCallback & on_model)
    -> SearchOutcome
{
    Search search{p, config};
    return search.run(on_model);
}

auto bfasp::all_stable_models(const GroundProgram & p, const SearchConfig & config) -> vector<Valuation>
{
    vector<Valuation> models;
    enumerate_stable(p, config, [&](const Valuation & v) {
        models.push_back(v);
        return true;
    });
    return models;
}

auto bfasp::optimize(const GroundProgram & p, const SearchConfig & config, const ModelCallback & on_improvement)
    -> OptimizeResult
{
    if (! p.objective())
        throw SolveError{"optimize needs an objective"};

    SearchConfig bb_config = config;
    bb_config.solution_limit.reset();

    OptimizeResult result;
    Search search{p, bb_config};
    result.outcome = search.run([&](const Valuation & v) {
        auto z = objective_value(p, v);
        result.best = v;
        result.value = z;
        if (z == std::numeric_limits<Integer>::min())
            return false;
        search.set_objective_bound(z - 1);
        return on_improvement ? on_improvement(v) : true;
    });
    return result;
}
