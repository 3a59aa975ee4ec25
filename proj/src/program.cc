#include <bfasp/analysis.hh>
#include <bfasp/program.hh>

#include <set>

using std::optional;
using std::size_t;
using std::span;
using std::string;
using std::vector;

using namespace bfasp;

auto VarInfo::bottom() const -> ExtValue
{
    if (sort == Sort::Bool)
        return ExtValue::boolean(false);
    return founded() ? ExtValue::neg_inf() : ExtValue::fin(lo);
}

auto VarInfo::contains(const ExtValue & v) const -> bool
{
    if (sort == Sort::Bool)
        return v.is_bool();
    if (v.is_neg_inf())
        return founded();
    return v.is_fin() && lo <= v.raw() && v.raw() <= hi;
}

auto VarInfo::domain_values() const -> vector<ExtValue>
{
    vector<ExtValue> result;
    if (sort == Sort::Bool)
        return {ExtValue::boolean(false), ExtValue::boolean(true)};
    if (founded())
        result.push_back(ExtValue::neg_inf());
    for (Integer i = lo; i <= hi; ++i) {
        result.push_back(ExtValue::fin(i));
        if (i == hi)
            break;
    }
    return result;
}

GroundProgram::GroundProgram(vector<VarInfo> vars, vector<FlatClause> constraints, vector<Rule> rules,
    optional<LinearExpr> objective) :
    _vars(std::move(vars)),
    _constraints(std::move(constraints)),
    _rules(std::move(rules)),
    _objective(std::move(objective))
{
    for (size_t i = 0; i < _vars.size(); ++i)
        _by_name.emplace(_vars[i].name, VarId{static_cast<std::uint32_t>(i)});
}

auto GroundProgram::find(const string & name) const -> optional<VarId>
{
    if (auto it = _by_name.find(name); it != _by_name.end())
        return it->second;
    return std::nullopt;
}

auto GroundProgram::rules_for(VarId v) const -> vector<size_t>
{
    vector<size_t> result;
    for (size_t i = 0; i < _rules.size(); ++i)
        if (_rules[i].head == v)
            result.push_back(i);
    return result;
}

auto GroundProgram::with_constraint(FlatClause c) const -> GroundProgram
{
    auto constraints = _constraints;
    constraints.push_back(std::move(c));
    return GroundProgram{_vars, std::move(constraints), _rules, _objective};
}

auto GroundProgram::with_objective(optional<LinearExpr> o) const -> GroundProgram
{
    return GroundProgram{_vars, _constraints, _rules, std::move(o)};
}

auto GroundProgram::operator==(const GroundProgram & other) const -> bool
{
    if (_vars.size() != other._vars.size())
        return false;
    for (size_t i = 0; i < _vars.size(); ++i) {
        const auto &a = _vars[i], &b = other._vars[i];
        if (a.name != b.name || a.kind != b.kind || a.sort != b.sort)
            return false;
        if (a.sort == Sort::Int && (a.lo != b.lo || a.hi != b.hi))
            return false;
    }
    return _constraints == other._constraints && _rules == other._rules && _objective == other._objective;
}

auto Valuation::bottom(const GroundProgram & p) -> Valuation
{
    vector<ExtValue> values;
    values.reserve(p.num_vars());
    for (const auto & info : p.vars())
        values.push_back(info.bottom());
    return Valuation{std::move(values)};
}

auto bfasp::eval_linear(const LinearAtom & atom, span<const ExtValue> values) -> Truth
{
    bool neg_inf = false, pos_inf = false;
    Integer sum = 0;
    for (const auto & [coeff, var] : atom.terms) {
        const auto & v = values[var.index];
        if (v.is_neg_inf()) {
            (coeff > 0 ? neg_inf : pos_inf) = true;
            continue;
        }
        sum = checked_add(sum, checked_mul(coeff, v.raw()));
    }
    if (neg_inf && pos_inf)
        return Truth::Undefined;
    if (pos_inf)
        return Truth::True;
    if (neg_inf)
        return Truth::False;
    return sum >= atom.bound ? Truth::True : Truth::False;
}

auto bfasp::eval_linear(const LinearAtom & atom, const Valuation & v) -> Truth
{
    return eval_linear(atom, v.values());
}

auto bfasp::eval_literal(const Literal & lit, const Valuation & v) -> bool
{
    return v[lit.var].as_bool() == (lit.polarity == Polarity::Pos);
}

auto bfasp::eval_clause(const FlatClause & c, const Valuation & v) -> Truth
{
    for (const auto & lit : c.lits)
        if (eval_literal(lit, v))
            return Truth::True;
    bool undefined = false;
    for (const auto & atom : c.atoms) {
        switch (eval_linear(atom, v)) {
        case Truth::True: return Truth::True;
        case Truth::Undefined: undefined = true; break;
        case Truth::False: break;
        }
    }
    return undefined ? Truth::Undefined : Truth::False;
}

auto bfasp::eval_expr(const LinearExpr & e, const Valuation & v) -> optional<Integer>
{
    Integer sum = e.constant;
    for (const auto & [coeff, var] : e.terms) {
        const auto & value = v[var];
        if (value.is_neg_inf())
            return std::nullopt;
        sum = checked_add(sum, checked_mul(coeff, value.raw()));
    }
    return sum;
}

auto bfasp::check_constraints(const GroundProgram & p, const Valuation & v) -> ConstraintReport
{
    auto constraints = p.constraints();
    for (size_t i = 0; i < constraints.size(); ++i)
        if (auto t = eval_clause(constraints[i], v); t != Truth::True)
            return ConstraintReport{false, i, t};
    return ConstraintReport{};
}

auto bfasp::satisfies(const GroundProgram & p, const Valuation & v) -> bool
{
    return check_constraints(p, v).satisfied;
}

namespace
{
    auto check_ref(const GroundProgram & p, VarId v, const string & where, vector<string> & problems) -> bool
    {
        if (v.index >= p.num_vars()) {
            problems.push_back(where + ": dangling reference to variable #" + std::to_string(v.index));
            return false;
        }
        return true;
    }

    auto check_clause(const GroundProgram & p, const FlatClause & c, const string & where, vector<string> & problems) -> bool
    {
        bool ok = true;
        for (const auto & lit : c.lits) {
            if (! check_ref(p, lit.var, where, problems)) {
                ok = false;
                continue;
            }
            if (p.info(lit.var).sort != Sort::Bool) {
                problems.push_back(where + ": literal on non-Boolean variable " + p.name(lit.var));
                ok = false;
            }
        }
        for (const auto & atom : c.atoms) {
            std::set<VarId> seen;
            for (const auto & [coeff, var] : atom.terms) {
                if (! check_ref(p, var, where, problems)) {
                    ok = false;
                    continue;
                }
                if (p.info(var).sort != Sort::Int) {
                    problems.push_back(where + ": linear term over non-integer variable " + p.name(var));
                    ok = false;
                }
                if (coeff == 0) {
                    problems.push_back(where + ": zero coefficient on " + p.name(var));
                    ok = false;
                }
                if (! seen.insert(var).second) {
                    problems.push_back(where + ": variable " + p.name(var) + " appears twice in one atom");
                    ok = false;
                }
            }
        }
        return ok;
    }
}

auto bfasp::validate_program(const GroundProgram & p) -> ValidationReport
{
    ValidationReport report;
    auto & problems = report.problems;

    std::set<string> names;
    for (const auto & info : p.vars()) {
        if (info.name.empty())
            problems.push_back("variable with empty name");
        else if (! names.insert(info.name).second)
            problems.push_back("duplicate variable name " + info.name);
        if (info.sort == Sort::Int && info.lo > info.hi)
            problems.push_back("variable " + info.name + " has empty domain " + std::to_string(info.lo) + ".." +
                std::to_string(info.hi));
    }

    auto constraints = p.constraints();
    for (size_t i = 0; i < constraints.size(); ++i)
        check_clause(p, constraints[i], "constraint #" + std::to_string(i), problems);

    auto rules = p.rules();
    for (size_t i = 0; i < rules.size(); ++i) {
        string where = "rule #" + std::to_string(i);
        bool ok = check_clause(p, rules[i].clause, where, problems);
        ok = check_ref(p, rules[i].head, where, problems) && ok;
        if (! ok)
            continue;
        if (auto err = validate_rule(p, rules[i]))
            problems.push_back(where + " (head " + p.name(rules[i].head) + "): " + to_string(*err));
    }

    if (const auto & obj = p.objective())
        for (const auto & [coeff, var] : obj->terms)
            check_ref(p, var, "objective", problems);

    return report;
}

auto bfasp::domain_problems(const GroundProgram & p, const Valuation & v) -> vector<string>
{
    vector<string> problems;
    if (v.size() != p.num_vars()) {
        problems.push_back("valuation covers " + std::to_string(v.size()) + " variables, program has " +
            std::to_string(p.num_vars()));
        return problems;
    }
    for (size_t i = 0; i < p.num_vars(); ++i) {
        VarId id{static_cast<std::uint32_t>(i)};
        if (! p.info(id).contains(v[id]))
            problems.push_back(p.name(id) + " = " + to_string(v[id]) + " is outside its domain");
    }
    return problems;
}
