#include <bfasp/analysis.hh>

#include <algorithm>

using std::optional;
using std::pair;
using std::size_t;
using std::span;
using std::string;
using std::vector;

using namespace bfasp;

namespace
{
    auto combine(Monotonicity a, Monotonicity b) -> Monotonicity
    {
        if (a == Monotonicity::Constant)
            return b;
        if (b == Monotonicity::Constant || a == b)
            return a;
        return Monotonicity::NonMonotone;
    }

    auto sign_of(Integer coeff) -> Monotonicity
    {
        return coeff > 0 ? Monotonicity::Increasing : Monotonicity::Decreasing;
    }

    auto sign_of(Polarity p) -> Monotonicity
    {
        return p == Polarity::Pos ? Monotonicity::Increasing : Monotonicity::Decreasing;
    }
}

auto bfasp::to_string(Monotonicity m) -> string
{
    switch (m) {
    case Monotonicity::Increasing: return "increasing";
    case Monotonicity::Decreasing: return "decreasing";
    case Monotonicity::Constant: return "constant";
    case Monotonicity::NonMonotone: return "non-monotone";
    }
    return "?";
}

auto bfasp::monotonicity(const FlatClause & c, VarId x) -> Monotonicity
{
    auto result = Monotonicity::Constant;
    for (const auto & lit : c.lits)
        if (lit.var == x)
            result = combine(result, sign_of(lit.polarity));
    for (const auto & atom : c.atoms)
        for (const auto & term : atom.terms)
            if (term.var == x)
                result = combine(result, sign_of(term.coeff));
    return result;
}

auto bfasp::occurrences(const FlatClause & c) -> vector<pair<VarId, Monotonicity>>
{
    vector<pair<VarId, Monotonicity>> result;
    auto note = [&](VarId v, Monotonicity m) {
        auto it = std::find_if(result.begin(), result.end(), [&](const auto & e) { return e.first == v; });
        if (it == result.end())
            result.emplace_back(v, m);
        else
            it->second = combine(it->second, m);
    };
    for (const auto & lit : c.lits)
        note(lit.var, sign_of(lit.polarity));
    for (const auto & atom : c.atoms)
        for (const auto & term : atom.terms)
            note(term.var, sign_of(term.coeff));
    return result;
}

auto bfasp::to_string(RuleError e) -> string
{
    switch (e) {
    case RuleError::HeadNotFounded: return "head must be founded";
    case RuleError::HeadAbsent: return "head does not occur in the rule";
    case RuleError::HeadMultipleOccurrences: return "head occurs more than once in the rule";
    case RuleError::HeadNotIncreasing: return "rule is not increasing in its head";
    case RuleError::NonMonotoneOccurrence: return "rule has a variable with mixed polarity";
    }
    return "?";
}

auto bfasp::validate_rule(const GroundProgram & p, const Rule & r) -> optional<RuleError>
{
    return validate_rule(p.vars(), r);
}

auto bfasp::validate_rule(span<const VarInfo> vars, const Rule & r) -> optional<RuleError>
{
    if (! vars[r.head.index].founded())
        return RuleError::HeadNotFounded;

    size_t count = 0;
    bool increasing = true;
    for (const auto & lit : r.clause.lits)
        if (lit.var == r.head) {
            ++count;
            increasing = increasing && lit.polarity == Polarity::Pos;
        }
    for (const auto & atom : r.clause.atoms)
        for (const auto & term : atom.terms)
            if (term.var == r.head) {
                ++count;
                increasing = increasing && term.coeff > 0;
            }

    if (count == 0)
        return RuleError::HeadAbsent;
    if (count > 1)
        return RuleError::HeadMultipleOccurrences;
    if (! increasing)
        return RuleError::HeadNotIncreasing;

    for (const auto & [var, m] : occurrences(r.clause))
        if (m == Monotonicity::NonMonotone)
            return RuleError::NonMonotoneOccurrence;
    return std::nullopt;
}

GuessSet::GuessSet(vector<VarId> sorted_vars, size_t num_vars) :
    _vars(std::move(sorted_vars)),
    _member(num_vars, false)
{
    for (auto v : _vars)
        _member.at(v.index) = true;
}

auto bfasp::guess_set(const GroundProgram & p) -> GuessSet
{
    vector<bool> member(p.num_vars(), false);
    for (size_t i = 0; i < p.num_vars(); ++i)
        if (! p.vars()[i].founded())
            member[i] = true;

    for (const auto & rule : p.rules())
        for (const auto & [var, m] : occurrences(rule.clause))
            if (var != rule.head && m != Monotonicity::Decreasing && m != Monotonicity::Constant)
                member[var.index] = true;

    vector<VarId> vars;
    for (size_t i = 0; i < member.size(); ++i)
        if (member[i])
            vars.push_back(VarId{static_cast<std::uint32_t>(i)});
    return GuessSet{std::move(vars), p.num_vars()};
}

auto bfasp::positive_cp_problem(const PositiveCP & cp) -> optional<string>
{
    for (size_t i = 0; i < cp.clauses.size(); ++i) {
        const auto & pc = cp.clauses[i];
        auto name = [&](VarId v) { return v.index < cp.vars.size() ? cp.vars[v.index].name : "#" + std::to_string(v.index); };
        if (monotonicity(pc.clause, pc.head) != Monotonicity::Increasing)
            return "reduct clause #" + std::to_string(i) + " is not increasing in its head " + name(pc.head);
        for (const auto & [var, m] : occurrences(pc.clause))
            if (var != pc.head && m != Monotonicity::Decreasing)
                return "reduct clause #" + std::to_string(i) + " is " + to_string(m) + " in non-head " + name(var);
    }
    return std::nullopt;
}

auto bfasp::is_tautology(const FlatClause & c, span<const VarInfo> vars) -> bool
{
    for (size_t i = 0; i < c.lits.size(); ++i)
        for (size_t j = i + 1; j < c.lits.size(); ++j)
            if (c.lits[i].var == c.lits[j].var && c.lits[i].polarity != c.lits[j].polarity)
                return true;

    for (const auto & atom : c.atoms) {
        // least favourable value: bottom for positive coefficients, top for negative
        bool neg_inf = false, pos_inf = false;
        Integer sum = 0;
        for (const auto & [coeff, var] : atom.terms) {
            const auto & info = vars[var.index];
            if (coeff > 0) {
                auto b = info.bottom();
                if (b.is_neg_inf())
                    neg_inf = true;
                else
                    sum = checked_add(sum, checked_mul(coeff, b.raw()));
            }
            else
                sum = checked_add(sum, checked_mul(coeff, info.hi));
        }
        if (! neg_inf && (pos_inf || sum >= atom.bound))
            return true;
    }
    return false;
}

namespace
{
    auto substitutable(const GroundProgram & p, const Rule & r, VarId v) -> bool
    {
        if (v == r.head)
            return false;
        if (! p.info(v).founded())
            return true;
        return monotonicity(r.clause, v) != Monotonicity::Decreasing;
    }

    auto constant_true_member() -> LinearAtom
    {
        return LinearAtom{{}, 0};
    }
}

ReductBuilder::ReductBuilder(const GroundProgram & p) :
    _program(&p)
{
    _plans.reserve(p.rules().size());
    for (const auto & rule : p.rules()) {
        RulePlan plan;
        for (const auto & lit : rule.clause.lits)
            plan.substitute_lit.push_back(substitutable(p, rule, lit.var));
        for (const auto & atom : rule.clause.atoms) {
            auto & flags = plan.substitute_term.emplace_back();
            for (const auto & term : atom.terms)
                flags.push_back(substitutable(p, rule, term.var));
        }
        _plans.push_back(std::move(plan));
    }
}

auto ReductBuilder::build(const Valuation & v, ReductOptions options) const -> PositiveCP
{
    const auto & p = *_program;
    PositiveCP result{p.vars(), {}};
    auto rules = p.rules();

    for (size_t r = 0; r < rules.size(); ++r) {
        const auto & rule = rules[r];
        const auto & plan = _plans[r];
        FlatClause out;
        bool satisfied = false;

        for (size_t i = 0; i < rule.clause.lits.size(); ++i) {
            const auto & lit = rule.clause.lits[i];
            if (! plan.substitute_lit[i])
                out.lits.push_back(lit);
            else if (eval_literal(lit, v))
                satisfied = true;
        }

        for (size_t a = 0; a < rule.clause.atoms.size(); ++a) {
            const auto & atom = rule.clause.atoms[a];
            LinearAtom kept;
            Integer bound = atom.bound;
            bool neg_inf = false, pos_inf = false;
            for (size_t t = 0; t < atom.terms.size(); ++t) {
                const auto & term = atom.terms[t];
                if (! plan.substitute_term[a][t]) {
                    kept.terms.push_back(term);
                    continue;
                }
                const auto & value = v[term.var];
                if (value.is_neg_inf())
                    (term.coeff > 0 ? neg_inf : pos_inf) = true;
                else
                    bound = checked_sub(bound, checked_mul(term.coeff, value.raw()));
            }
            if (neg_inf && pos_inf)
                throw ReductError{"rule #" + std::to_string(r) + " (head " + p.name(rule.head) +
                    "): substituted values give -inf + +inf"};
            if (pos_inf)
                satisfied = true;
            else if (neg_inf)
                continue;
            else if (kept.terms.empty()) {
                if (0 >= bound)
                    satisfied = true;
            }
            else {
                kept.bound = bound;
                out.atoms.push_back(std::move(kept));
            }
        }

        if (satisfied || is_tautology(out, p.vars())) {
            if (! options.keep_tautologies)
                continue;
            if (satisfied)
                out.atoms.push_back(constant_true_member());
        }
        result.clauses.push_back(PositiveClause{std::move(out), rule.head, r});
    }
    return result;
}

auto bfasp::build_reduct(const GroundProgram & p, const Valuation & v, ReductOptions options) -> PositiveCP
{
    return ReductBuilder{p}.build(v, options);
}
