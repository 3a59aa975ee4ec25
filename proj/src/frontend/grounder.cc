#include <bfasp/analysis.hh>
#include <bfasp/frontend/grounder.hh>

#include <algorithm>
#include <functional>
#include <set>

using std::function;
using std::map;
using std::optional;
using std::pair;
using std::set;
using std::size_t;
using std::string;
using std::vector;

using namespace bfasp;
using namespace bfasp::frontend;

namespace
{
    using Dims = vector<pair<Integer, Integer>>;
    using Cnf = vector<FlatClause>; // empty: true; contains an empty clause: false

    constexpr size_t max_cnf_clauses = 100000;

    struct ParamValue
    {
        Dims dims;
        vector<Integer> values;
    };

    struct VarArray
    {
        Dims dims;
        std::uint32_t first = 0;
    };

    struct Linear
    {
        vector<Term> terms;
        Integer constant = 0;

        auto add(Integer coeff, VarId var) -> void
        {
            for (auto & t : terms)
                if (t.var == var) {
                    t.coeff = checked_add(t.coeff, coeff);
                    return;
                }
            terms.push_back(Term{coeff, var});
        }

        auto add(const Linear & other, Integer scale) -> void
        {
            for (const auto & t : other.terms)
                add(checked_mul(scale, t.coeff), t.var);
            constant = checked_add(constant, checked_mul(scale, other.constant));
        }

        auto compact() -> void
        {
            std::erase_if(terms, [](const Term & t) { return t.coeff == 0; });
        }
    };

    auto size_of(const Dims & dims) -> size_t
    {
        size_t n = 1;
        for (const auto & [lo, hi] : dims)
            n *= hi >= lo ? static_cast<size_t>(hi - lo + 1) : 0;
        return n;
    }

    auto cnf_true() -> Cnf { return {}; }
    auto cnf_false() -> Cnf { return {FlatClause{}}; }

    auto conj(Cnf a, Cnf b) -> Cnf
    {
        a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
        return a;
    }

    auto negate_atom(LinearAtom atom) -> LinearAtom
    {
        // not (T >= k)  <=>  -T >= 1 - k
        for (auto & t : atom.terms)
            t.coeff = checked_mul(-1, t.coeff);
        atom.bound = checked_sub(1, atom.bound);
        return atom;
    }

    class Grounder
    {
    public:
        Grounder(const ModelAST & ast, const DataBindings & data, const GroundOptions & options) :
            _ast(ast),
            _options(options)
        {
            for (const auto & item : ast.items)
                if (auto assign = std::get_if<DataAssign>(&item))
                    _data.emplace(assign->name, BoundData{assign->value, assign->span});
            for (const auto & [name, bound] : data)
                if (! _data.emplace(name, bound).second)
                    throw GroundError{bound.span, "'" + name + "' is assigned both in the model and in the data"};
        }

        auto run() -> GroundProgram
        {
            set<string> declared;
            for (const auto & item : _ast.items)
                if (auto p = std::get_if<ParamDecl>(&item))
                    declared.insert(p->name);
            for (const auto & [name, bound] : _data)
                if (! declared.contains(name))
                    throw GroundError{bound.span, "data for undeclared parameter '" + name + "'"};

            for (const auto & item : _ast.items)
                std::visit([&](const auto & i) { this->item(i); }, item);

            return GroundProgram{std::move(_vars), std::move(_constraints), std::move(_rules), std::move(_objective)};
        }

    private:
        const ModelAST & _ast;
        const GroundOptions & _options;
        map<string, BoundData> _data;
        map<string, ParamValue> _params;
        map<string, VarArray> _var_arrays;
        vector<pair<string, Integer>> _locals;

        vector<VarInfo> _vars;
        vector<FlatClause> _constraints;
        vector<Rule> _rules;
        optional<LinearExpr> _objective;

        [[noreturn]] static auto fail(const SourceSpan & at, const string & message) -> void
        {
            throw GroundError{at, message};
        }

        // ---- items ------------------------------------------------------

        auto eval_dims(const vector<Range> & ranges) -> Dims
        {
            Dims dims;
            for (const auto & r : ranges)
                dims.emplace_back(eval_int(*r.lo), eval_int(*r.hi));
            return dims;
        }

        auto item(const ParamDecl & decl) -> void
        {
            auto it = _data.find(decl.name);
            if (it == _data.end())
                fail(decl.span, "parameter '" + decl.name + "' has no value");
            const auto & value = it->second.value;
            const auto & at = it->second.span;

            ParamValue p;
            p.dims = eval_dims(decl.dims);
            if (p.dims.empty()) {
                if (value.is_array)
                    fail(at, "'" + decl.name + "' is a scalar but was given an array");
            }
            else {
                if (! value.is_array)
                    fail(at, "'" + decl.name + "' is an array but was given a scalar");
                if (value.values.size() != size_of(p.dims))
                    fail(at, "'" + decl.name + "' expects " + std::to_string(size_of(p.dims)) + " values, got " +
                            std::to_string(value.values.size()));
                if (value.shape) {
                    if (p.dims.size() != 2 || size_of({p.dims[0]}) != value.shape->first ||
                        size_of({p.dims[1]}) != value.shape->second)
                        fail(at, "2-D literal shape does not match the dimensions of '" + decl.name + "'");
                }
            }
            if (decl.element_range) {
                Integer lo = eval_int(*decl.element_range->lo), hi = eval_int(*decl.element_range->hi);
                for (auto v : value.values)
                    if (v < lo || v > hi)
                        fail(at, "value " + std::to_string(v) + " of '" + decl.name + "' is outside " +
                                std::to_string(lo) + ".." + std::to_string(hi));
            }
            p.values = value.values;
            _params.emplace(decl.name, std::move(p));
        }

        auto item(const VarDecl & decl) -> void
        {
            VarInfo proto;
            proto.sort = decl.sort;
            proto.kind = decl.founded ? VarKind::Founded : VarKind::Standard;
            if (decl.sort == Sort::Int) {
                if (decl.domain) {
                    proto.lo = eval_int(*decl.domain->lo);
                    proto.hi = eval_int(*decl.domain->hi);
                }
                else if (decl.founded && _options.founded_default) {
                    proto.lo = _options.founded_default->first;
                    proto.hi = _options.founded_default->second;
                }
                else if (decl.founded)
                    fail(decl.span, "founded int variable '" + decl.name +
                            "' needs an interval ('var int in lo..hi') or a default founded interval");
                else
                    fail(decl.span, "int variable '" + decl.name + "' needs an interval ('var int in lo..hi')");
                if (proto.lo > proto.hi)
                    fail(decl.span, "empty domain for '" + decl.name + "'");
            }

            VarArray array{eval_dims(decl.dims), static_cast<std::uint32_t>(_vars.size())};
            size_t count = size_of(array.dims);
            for (size_t i = 0; i < count; ++i) {
                VarInfo info = proto;
                info.name = decl.name;
                if (! array.dims.empty()) {
                    vector<Integer> idx(array.dims.size());
                    size_t rest = i;
                    for (size_t d = array.dims.size(); d-- > 0;) {
                        auto extent = static_cast<size_t>(array.dims[d].second - array.dims[d].first + 1);
                        idx[d] = array.dims[d].first + static_cast<Integer>(rest % extent);
                        rest /= extent;
                    }
                    info.name += "[";
                    for (size_t d = 0; d < idx.size(); ++d)
                        info.name += (d ? "," : "") + std::to_string(idx[d]);
                    info.name += "]";
                }
                _vars.push_back(std::move(info));
            }
            _var_arrays.emplace(decl.name, std::move(array));
        }

        auto item(const ConstraintItem & c) -> void
        {
            for (auto & clause : to_cnf(*c.expr, true, std::nullopt))
                if (auto f = finalize(std::move(clause), std::nullopt))
                    _constraints.push_back(std::move(*f));
        }

        auto item(const RuleItem & r) -> void { ground_rule(*r.expr); }

        auto item(const SolveItem & s) -> void
        {
            if (! s.objective)
                return;
            auto lin = linearize(*s.objective, true);
            lin.compact();
            _objective = LinearExpr{std::move(lin.terms), lin.constant};
        }

        auto item(const DataAssign &) -> void {}

        // ---- names ------------------------------------------------------

        auto local(const string & name) const -> optional<Integer>
        {
            for (auto it = _locals.rbegin(); it != _locals.rend(); ++it)
                if (it->first == name)
                    return it->second;
            return std::nullopt;
        }

        auto is_var_name(const string & name) const -> bool
        {
            return ! local(name) && _var_arrays.contains(name);
        }

        auto mentions_vars(const Expr & e, vector<string> & shadow) const -> bool
        {
            if (e.kind == ExprKind::Ident || e.kind == ExprKind::Index) {
                bool shadowed = std::find(shadow.begin(), shadow.end(), e.name) != shadow.end();
                if (! shadowed && is_var_name(e.name))
                    return true;
            }
            size_t mark = shadow.size();
            for (const auto & g : e.generators) {
                if (mentions_vars(*g.lo, shadow) || mentions_vars(*g.hi, shadow))
                    return true;
                shadow.insert(shadow.end(), g.names.begin(), g.names.end());
            }
            bool found = (e.guard && mentions_vars(*e.guard, shadow));
            for (const auto & a : e.args)
                found = found || mentions_vars(*a, shadow);
            shadow.resize(mark);
            return found;
        }

        auto mentions_vars(const Expr & e) const -> bool
        {
            vector<string> shadow;
            return mentions_vars(e, shadow);
        }

        auto flat_index(const Dims & dims, const vector<Integer> & idx, const string & name, const SourceSpan & at) const
            -> size_t
        {
            if (idx.size() != dims.size())
                fail(at, "'" + name + "' has " + std::to_string(dims.size()) + " dimensions, indexed with " +
                        std::to_string(idx.size()));
            size_t flat = 0;
            for (size_t d = 0; d < dims.size(); ++d) {
                auto [lo, hi] = dims[d];
                if (idx[d] < lo || idx[d] > hi)
                    fail(at, "index " + std::to_string(idx[d]) + " out of range " + std::to_string(lo) + ".." +
                            std::to_string(hi) + " for '" + name + "'");
                flat = flat * static_cast<size_t>(hi - lo + 1) + static_cast<size_t>(idx[d] - lo);
            }
            return flat;
        }

        auto resolve_var(const Expr & e) -> VarId
        {
            const auto & array = _var_arrays.at(e.name);
            vector<Integer> idx;
            for (const auto & a : e.args)
                idx.push_back(eval_int(*a));
            return VarId{array.first + static_cast<std::uint32_t>(flat_index(array.dims, idx, e.name, e.span))};
        }

        // ---- parameter expressions ----------------------------------------

        auto for_each_instance(const Expr & comp, const function<void()> & body) -> void
        {
            function<void(size_t, size_t)> step = [&](size_t g, size_t n) {
                if (g == comp.generators.size()) {
                    if (! comp.guard || eval_bool(*comp.guard))
                        body();
                    return;
                }
                const auto & gen = comp.generators[g];
                if (n == gen.names.size()) {
                    step(g + 1, 0);
                    return;
                }
                Integer lo = eval_int(*gen.lo), hi = eval_int(*gen.hi);
                for (Integer v = lo; v <= hi; ++v) {
                    _locals.emplace_back(gen.names[n], v);
                    step(g, n + 1);
                    _locals.pop_back();
                }
            };
            if (comp.guard && mentions_vars(*comp.guard))
                fail(comp.guard->span, "where guards may only depend on parameters");
            step(0, 0);
        }

        auto eval_int(const Expr & e) -> Integer
        {
            switch (e.kind) {
            case ExprKind::IntLit: return e.int_value;
            case ExprKind::Ident: {
                if (auto v = local(e.name))
                    return *v;
                if (auto it = _params.find(e.name); it != _params.end()) {
                    if (! it->second.dims.empty())
                        fail(e.span, "array '" + e.name + "' used as a scalar");
                    return it->second.values.at(0);
                }
                if (_var_arrays.contains(e.name))
                    fail(e.span, "decision variable '" + e.name + "' where a parameter is required");
                fail(e.span, "unbound parameter '" + e.name + "'");
            }
            case ExprKind::Index: {
                auto it = _params.find(e.name);
                if (it == _params.end()) {
                    if (_var_arrays.contains(e.name))
                        fail(e.span, "decision variable '" + e.name + "' where a parameter is required");
                    fail(e.span, "unbound parameter '" + e.name + "'");
                }
                vector<Integer> idx;
                for (const auto & a : e.args)
                    idx.push_back(eval_int(*a));
                return it->second.values.at(flat_index(it->second.dims, idx, e.name, e.span));
            }
            case ExprKind::Neg: return checked_mul(-1, eval_int(*e.args[0]));
            case ExprKind::Binary:
                switch (e.op) {
                case BinOp::Add: return checked_add(eval_int(*e.args[0]), eval_int(*e.args[1]));
                case BinOp::Sub: return checked_sub(eval_int(*e.args[0]), eval_int(*e.args[1]));
                case BinOp::Mul: return checked_mul(eval_int(*e.args[0]), eval_int(*e.args[1]));
                default: break;
                }
                break;
            case ExprKind::Comprehension:
                if (e.comprehension == ComprehensionKind::Sum) {
                    Integer total = 0;
                    for_each_instance(e, [&] { total = checked_add(total, eval_int(*e.args[0])); });
                    return total;
                }
                break;
            case ExprKind::Bool2Int: return eval_bool(*e.args[0]) ? 1 : 0;
            default: break;
            }
            fail(e.span, "expected an integer expression");
        }

        auto compare(BinOp op, Integer a, Integer b) const -> bool
        {
            switch (op) {
            case BinOp::Eq: return a == b;
            case BinOp::Ne: return a != b;
            case BinOp::Lt: return a < b;
            case BinOp::Le: return a <= b;
            case BinOp::Gt: return a > b;
            case BinOp::Ge: return a >= b;
            default: return false;
            }
        }

        static auto is_comparison(BinOp op) -> bool
        {
            return op == BinOp::Eq || op == BinOp::Ne || op == BinOp::Lt || op == BinOp::Le || op == BinOp::Gt ||
                op == BinOp::Ge;
        }

        auto eval_bool(const Expr & e) -> bool
        {
            if (mentions_vars(e))
                fail(e.span, "expected a parameter-only condition");
            switch (e.kind) {
            case ExprKind::BoolLit: return e.bool_value;
            case ExprKind::Not: return ! eval_bool(*e.args[0]);
            case ExprKind::Binary:
                switch (e.op) {
                case BinOp::And: return eval_bool(*e.args[0]) && eval_bool(*e.args[1]);
                case BinOp::Or: return eval_bool(*e.args[0]) || eval_bool(*e.args[1]);
                case BinOp::Implies: return ! eval_bool(*e.args[0]) || eval_bool(*e.args[1]);
                case BinOp::ImpliedBy: return eval_bool(*e.args[0]) || ! eval_bool(*e.args[1]);
                default:
                    if (is_comparison(e.op))
                        return compare(e.op, eval_int(*e.args[0]), eval_int(*e.args[1]));
                    break;
                }
                break;
            case ExprKind::Comprehension: {
                if (e.comprehension == ComprehensionKind::Sum)
                    break;
                bool forall = e.comprehension == ComprehensionKind::Forall;
                bool result = forall;
                for_each_instance(e, [&] {
                    bool b = eval_bool(*e.args[0]);
                    result = forall ? (result && b) : (result || b);
                });
                return result;
            }
            default: break;
            }
            fail(e.span, "expected a Boolean expression");
        }

        // ---- linear expressions -------------------------------------------

        auto linearize(const Expr & e, bool allow_bool2int) -> Linear
        {
            if (! mentions_vars(e))
                return Linear{{}, eval_int(e)};

            Linear result;
            switch (e.kind) {
            case ExprKind::Ident:
            case ExprKind::Index: {
                auto v = resolve_var(e);
                if (_vars[v.index].sort != Sort::Int)
                    fail(e.span, "Boolean variable '" + _vars[v.index].name + "' used as an integer");
                result.add(1, v);
                return result;
            }
            case ExprKind::Neg: result.add(linearize(*e.args[0], allow_bool2int), -1); return result;
            case ExprKind::Binary:
                switch (e.op) {
                case BinOp::Add:
                case BinOp::Sub:
                    result.add(linearize(*e.args[0], allow_bool2int), 1);
                    result.add(linearize(*e.args[1], allow_bool2int), e.op == BinOp::Add ? 1 : -1);
                    return result;
                case BinOp::Mul: {
                    bool left_var = mentions_vars(*e.args[0]), right_var = mentions_vars(*e.args[1]);
                    if (left_var && right_var)
                        fail(e.span, "non-linear expression: product of two variable terms");
                    const auto & var_side = left_var ? *e.args[0] : *e.args[1];
                    const auto & const_side = left_var ? *e.args[1] : *e.args[0];
                    result.add(linearize(var_side, allow_bool2int), eval_int(const_side));
                    return result;
                }
                default: break;
                }
                break;
            case ExprKind::Comprehension:
                if (e.comprehension == ComprehensionKind::Sum) {
                    for_each_instance(e, [&] { result.add(linearize(*e.args[0], allow_bool2int), 1); });
                    return result;
                }
                break;
            case ExprKind::Bool2Int: {
                if (! allow_bool2int)
                    fail(e.span, "bool2int of a variable is only supported in the objective");
                const auto & arg = *e.args[0];
                if (arg.kind != ExprKind::Ident && arg.kind != ExprKind::Index)
                    fail(arg.span, "bool2int needs a Boolean variable");
                auto v = resolve_var(arg);
                if (_vars[v.index].sort != Sort::Bool)
                    fail(arg.span, "bool2int of a non-Boolean variable");
                result.add(1, v);
                return result;
            }
            default: break;
            }
            fail(e.span, "expected a linear integer expression");
        }

        // ---- Boolean expressions to CNF -----------------------------------

        auto disj(const Cnf & a, const Cnf & b, const SourceSpan & at) const -> Cnf
        {
            if (a.size() * b.size() > max_cnf_clauses)
                fail(at, "expression expands to too many clauses");
            Cnf result;
            for (const auto & ca : a)
                for (const auto & cb : b) {
                    FlatClause c = ca;
                    c.lits.insert(c.lits.end(), cb.lits.begin(), cb.lits.end());
                    c.atoms.insert(c.atoms.end(), cb.atoms.begin(), cb.atoms.end());
                    result.push_back(std::move(c));
                }
            return result;
        }

        auto comparison(const Expr & e, bool positive) -> Cnf
        {
            BinOp op = e.op;
            if (! positive) {
                switch (op) {
                case BinOp::Eq: op = BinOp::Ne; break;
                case BinOp::Ne: op = BinOp::Eq; break;
                case BinOp::Lt: op = BinOp::Ge; break;
                case BinOp::Le: op = BinOp::Gt; break;
                case BinOp::Gt: op = BinOp::Le; break;
                case BinOp::Ge: op = BinOp::Lt; break;
                default: break;
                }
            }
            Linear diff = linearize(*e.args[0], false);
            diff.add(linearize(*e.args[1], false), -1);
            diff.compact();
            Integer k = checked_mul(-1, diff.constant);
            if (diff.terms.empty())
                return compare(op, 0, k) ? cnf_true() : cnf_false();

            LinearAtom ge{diff.terms, k};
            auto atom_clause = [](LinearAtom a) { return FlatClause{{}, {std::move(a)}}; };
            switch (op) {
            case BinOp::Ge: return {atom_clause(ge)};
            case BinOp::Lt: return {atom_clause(negate_atom(ge))};
            case BinOp::Gt: return {atom_clause(LinearAtom{ge.terms, checked_add(k, 1)})};
            case BinOp::Le: return {atom_clause(negate_atom(LinearAtom{ge.terms, checked_add(k, 1)}))};
            case BinOp::Eq:
                return {atom_clause(ge), atom_clause(negate_atom(LinearAtom{ge.terms, checked_add(k, 1)}))};
            case BinOp::Ne:
                return {FlatClause{{}, {LinearAtom{ge.terms, checked_add(k, 1)}, negate_atom(ge)}}};
            default: break;
            }
            fail(e.span, "unsupported comparison");
        }

        static auto mentions(const FlatClause & c, VarId v) -> bool
        {
            for (const auto & l : c.lits)
                if (l.var == v)
                    return true;
            for (const auto & a : c.atoms)
                for (const auto & t : a.terms)
                    if (t.var == v)
                        return true;
            return false;
        }

        auto to_cnf(const Expr & e, bool positive, optional<VarId> head) -> Cnf
        {
            if (! mentions_vars(e))
                return eval_bool(e) == positive ? cnf_true() : cnf_false();

            switch (e.kind) {
            case ExprKind::Ident:
            case ExprKind::Index: {
                auto v = resolve_var(e);
                if (_vars[v.index].sort != Sort::Bool)
                    fail(e.span, "integer variable '" + _vars[v.index].name + "' used as a Boolean");
                return {FlatClause{{Literal{v, positive ? Polarity::Pos : Polarity::Neg}}, {}}};
            }
            case ExprKind::Not: return to_cnf(*e.args[0], ! positive, head);
            case ExprKind::Binary: {
                if (is_comparison(e.op))
                    return comparison(e, positive);
                const auto & a = *e.args[0];
                const auto & b = *e.args[1];
                switch (e.op) {
                case BinOp::And:
                    return positive ? conj(to_cnf(a, true, head), to_cnf(b, true, head))
                                    : disj(to_cnf(a, false, head), to_cnf(b, false, head), e.span);
                case BinOp::Or:
                    return positive ? disj(to_cnf(a, true, head), to_cnf(b, true, head), e.span)
                                    : conj(to_cnf(a, false, head), to_cnf(b, false, head));
                case BinOp::Implies:
                    return positive ? disj(to_cnf(a, false, head), to_cnf(b, true, head), e.span)
                                    : conj(to_cnf(a, true, head), to_cnf(b, false, head));
                case BinOp::ImpliedBy:
                    return positive ? disj(to_cnf(a, true, head), to_cnf(b, false, head), e.span)
                                    : conj(to_cnf(a, false, head), to_cnf(b, true, head));
                default: break;
                }
                break;
            }
            case ExprKind::Comprehension: {
                if (e.comprehension == ComprehensionKind::Sum)
                    break;
                // forall is a conjunction when positive; exists is a disjunction
                bool conjunctive = (e.comprehension == ComprehensionKind::Forall) == positive;
                Cnf result = conjunctive ? cnf_true() : cnf_false();
                for_each_instance(e, [&] {
                    auto part = to_cnf(*e.args[0], positive, head);
                    if (head && e.comprehension == ComprehensionKind::Exists)
                        for (const auto & c : part)
                            if (mentions(c, *head))
                                fail(e.span, "exists inside a rule may not refer to the rule head '" +
                                        _vars[head->index].name + "'");
                    result = conjunctive ? conj(std::move(result), std::move(part)) : disj(result, part, e.span);
                });
                return result;
            }
            default: break;
            }
            fail(e.span, "expected a Boolean expression");
        }

        /// Merges duplicate literals and atoms; nullopt if the clause is trivially true.
        /// Literals on the head are left untouched so rule validation sees them.
        auto finalize(FlatClause c, optional<VarId> head) const -> optional<FlatClause>
        {
            FlatClause out;
            for (const auto & lit : c.lits) {
                if (head && lit.var == *head) {
                    out.lits.push_back(lit);
                    continue;
                }
                bool dup = false;
                for (const auto & seen : out.lits)
                    if (seen.var == lit.var) {
                        if (seen.polarity != lit.polarity)
                            return std::nullopt;
                        dup = true;
                    }
                if (! dup)
                    out.lits.push_back(lit);
            }
            for (auto & atom : c.atoms)
                if (std::find(out.atoms.begin(), out.atoms.end(), atom) == out.atoms.end())
                    out.atoms.push_back(std::move(atom));
            return out;
        }

        auto ground_rule(const Expr & e) -> void
        {
            switch (e.kind) {
            case ExprKind::Annotated: {
                const auto & lvalue = *e.args[1];
                if (! is_var_name(lvalue.name))
                    fail(lvalue.span, "rule head '" + lvalue.name + "' is not a decision variable");
                auto head = resolve_var(lvalue);
                if (! _vars[head.index].founded())
                    fail(lvalue.span, "rule head '" + _vars[head.index].name + "' must be a founded variable");
                for (auto & clause : to_cnf(*e.args[0], true, head)) {
                    auto f = finalize(std::move(clause), head);
                    if (! f)
                        continue;
                    Rule rule{std::move(*f), head};
                    if (auto err = validate_rule(std::span<const VarInfo>{_vars}, rule))
                        fail(e.span, "invalid rule for head '" + _vars[head.index].name + "': " + to_string(*err));
                    _rules.push_back(std::move(rule));
                }
                return;
            }
            case ExprKind::Comprehension:
                for_each_instance(e, [&] { ground_rule(*e.args[0]); });
                return;
            case ExprKind::Binary:
                ground_rule(*e.args[0]);
                ground_rule(*e.args[1]);
                return;
            default: fail(e.span, "rule needs a ':: head(...)' annotation");
            }
        }
    };
}

auto bfasp::frontend::ground(const ModelAST & ast, const DataBindings & data, const GroundOptions & options)
    -> GroundProgram
{
    return Grounder{ast, data, options}.run();
}
