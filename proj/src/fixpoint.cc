#include <bfasp/fixpoint.hh>

#include <deque>
#include <string>

using std::optional;
using std::size_t;
using std::span;
using std::vector;

using namespace bfasp;

namespace
{
    auto literal_holds(const Literal & lit, span<const ExtValue> bounds) -> bool
    {
        return bounds[lit.var.index].as_bool() == (lit.polarity == Polarity::Pos);
    }

    auto no_support(const PositiveClause & c, span<const ExtValue> bounds) -> ExtValue
    {
        return bounds[c.head.index].is_bool() ? ExtValue::boolean(false) : ExtValue::neg_inf();
    }

    auto mentions(const LinearAtom & atom, VarId v) -> bool
    {
        for (const auto & term : atom.terms)
            if (term.var == v)
                return true;
        return false;
    }
}

auto bfasp::clause_requirement(const PositiveClause & c, span<const ExtValue> bounds) -> optional<ExtValue>
{
    const LinearAtom * head_atom = nullptr;
    bool head_literal = false;

    for (const auto & lit : c.clause.lits) {
        if (lit.var == c.head) {
            head_literal = true;
            continue;
        }
        if (literal_holds(lit, bounds))
            return no_support(c, bounds);
    }
    for (const auto & atom : c.clause.atoms) {
        if (mentions(atom, c.head)) {
            head_atom = &atom;
            continue;
        }
        if (eval_linear(atom, bounds) == Truth::True)
            return no_support(c, bounds);
    }

    if (head_literal)
        return ExtValue::boolean(true);
    if (! head_atom)
        throw Error{"positive-CP clause does not mention its head"};

    Integer head_coeff = 0, rest = 0;
    bool neg_inf = false, pos_inf = false;
    for (const auto & [coeff, var] : head_atom->terms) {
        if (var == c.head) {
            head_coeff = coeff;
            continue;
        }
        const auto & b = bounds[var.index];
        if (b.is_neg_inf())
            (coeff > 0 ? neg_inf : pos_inf) = true;
        else
            rest = checked_add(rest, checked_mul(coeff, b.raw()));
    }
    if (pos_inf)
        return ExtValue::neg_inf();
    if (neg_inf)
        return std::nullopt;
    return ExtValue::fin(ceil_div(checked_sub(head_atom->bound, rest), head_coeff));
}

auto bfasp::minimal_model(const PositiveCP & cp, const FixpointTrace & trace) -> FixpointResult
{
    vector<ExtValue> bounds;
    bounds.reserve(cp.vars.size());
    for (const auto & info : cp.vars)
        bounds.push_back(info.bottom());

    vector<vector<size_t>> watchers(cp.vars.size());
    size_t budget = cp.clauses.size();
    vector<bool> counted(cp.vars.size(), false);
    for (size_t i = 0; i < cp.clauses.size(); ++i) {
        const auto & pc = cp.clauses[i];
        for (const auto & [var, m] : occurrences(pc.clause))
            if (var != pc.head)
                watchers[var.index].push_back(i);
        if (! counted[pc.head.index]) {
            counted[pc.head.index] = true;
            const auto & info = cp.vars[pc.head.index];
            // -inf, then lo..hi: at most hi - lo + 1 raises per head
            budget += info.sort == Sort::Bool ? 1 : static_cast<size_t>(info.hi - info.lo) + 1;
        }
    }

    std::deque<size_t> queue;
    vector<bool> queued(cp.clauses.size(), true);
    for (size_t i = 0; i < cp.clauses.size(); ++i)
        queue.push_back(i);

    size_t updates = 0;
    while (! queue.empty()) {
        size_t ci = queue.front();
        queue.pop_front();
        queued[ci] = false;

        const auto & pc = cp.clauses[ci];
        auto requirement = clause_requirement(pc, bounds);
        if (! requirement)
            return FixpointUnsat{ci, pc.head, std::nullopt};

        const auto & info = cp.vars[pc.head.index];
        auto value = *requirement;
        if (value.is_fin()) {
            if (value.raw() > info.hi)
                return FixpointUnsat{ci, pc.head, value.raw()};
            if (value.raw() < info.lo)
                value = ExtValue::fin(info.lo);
        }

        auto & current = bounds[pc.head.index];
        if (value <= current)
            continue;

        if (trace)
            trace(BoundUpdate{pc.head, current, value, ci});
        current = value;
        if (++updates > budget)
            throw FixpointWatchdogError{"fixpoint exceeded " + std::to_string(budget) + " bound updates"};

        for (auto w : watchers[pc.head.index])
            if (! queued[w]) {
                queued[w] = true;
                queue.push_back(w);
            }
    }

    return MinimalModel{Valuation{std::move(bounds)}, updates};
}
