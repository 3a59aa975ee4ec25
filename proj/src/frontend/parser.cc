#include <bfasp/frontend/parser.hh>

#include <cctype>
#include <charconv>
#include <set>
#include <vector>

using std::make_shared;
using std::optional;
using std::set;
using std::size_t;
using std::string;
using std::string_view;
using std::vector;

using namespace bfasp;
using namespace bfasp::frontend;

namespace
{
    enum class Tok
    {
        Ident,
        Int,
        Symbol,
        End
    };

    struct Token
    {
        Tok kind;
        string text;
        SourceSpan span;
    };

    // longest match first
    constexpr string_view symbols[] = {"[|", "|]", "::", "..", "==", "!=", "<=", ">=", "->", "<-", "/\\", "\\/", "[", "]",
        "(", ")", ",", ";", ":", "=", "<", ">", "+", "-", "*", "|"};

    auto lex(string_view text, const string & file) -> vector<Token>
    {
        vector<Token> tokens;
        int line = 1, col = 1;
        size_t i = 0;
        auto advance = [&](size_t n) {
            for (size_t k = 0; k < n; ++k, ++i) {
                if (text[i] == '\n') {
                    ++line;
                    col = 1;
                }
                else
                    ++col;
            }
        };

        while (i < text.size()) {
            char c = text[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance(1);
                continue;
            }
            if (c == '%' || c == '#') {
                while (i < text.size() && text[i] != '\n')
                    advance(1);
                continue;
            }
            SourceSpan span{file, line, col, line, col};
            size_t start = i;
            Tok kind;
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                kind = Tok::Ident;
                while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
                    advance(1);
            }
            else if (std::isdigit(static_cast<unsigned char>(c))) {
                kind = Tok::Int;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    advance(1);
            }
            else {
                kind = Tok::Symbol;
                auto rest = text.substr(i);
                size_t len = 0;
                for (auto s : symbols)
                    if (rest.starts_with(s)) {
                        len = s.size();
                        break;
                    }
                if (len == 0)
                    throw ParseError{span, string{"unexpected character '"} + c + "'"};
                advance(len);
            }
            span.end_line = line;
            span.end_column = col;
            tokens.push_back(Token{kind, string{text.substr(start, i - start)}, span});
        }
        tokens.push_back(Token{Tok::End, "<end of input>", SourceSpan{file, line, col, line, col}});
        return tokens;
    }

    const set<string> keywords = {"int", "bool", "var", "array", "of", "constraint", "rule", "solve", "minimize",
        "satisfy", "in", "where", "not", "forall", "exists", "sum", "bool2int", "true", "false", "head", "founded"};

    auto make(ExprKind kind, SourceSpan span) -> std::shared_ptr<Expr>
    {
        auto e = make_shared<Expr>();
        e->kind = kind;
        e->span = std::move(span);
        return e;
    }

    auto binary(BinOp op, ExprPtr lhs, ExprPtr rhs) -> ExprPtr
    {
        auto e = make(ExprKind::Binary, SourceSpan::join(lhs->span, rhs->span));
        e->op = op;
        e->args = {std::move(lhs), std::move(rhs)};
        return e;
    }

    class Parser
    {
    public:
        Parser(string_view text, const string & file, bool data_only) :
            _tokens(lex(text, file)),
            _data_only(data_only)
        {
        }

        auto parse() -> ModelAST
        {
            ModelAST ast;
            while (peek().kind != Tok::End)
                ast.items.push_back(parse_item());
            return ast;
        }

    private:
        vector<Token> _tokens;
        size_t _pos = 0;
        bool _data_only;
        set<string> _params, _vars, _assigned;
        vector<string> _locals;
        bool _seen_solve = false;

        auto peek(size_t ahead = 0) const -> const Token & { return _tokens[std::min(_pos + ahead, _tokens.size() - 1)]; }

        auto next() -> const Token &
        {
            const auto & t = _tokens[_pos];
            if (_pos + 1 < _tokens.size())
                ++_pos;
            return t;
        }

        auto is(const char * text, size_t ahead = 0) const -> bool
        {
            const auto & t = peek(ahead);
            return (t.kind == Tok::Symbol || t.kind == Tok::Ident) && t.text == text;
        }

        auto accept(const char * text) -> bool
        {
            if (! is(text))
                return false;
            next();
            return true;
        }

        [[noreturn]] auto fail(const Token & at, const string & message) const -> void { throw ParseError{at.span, message}; }

        auto expect(const char * text) -> const Token &
        {
            if (! is(text))
                fail(peek(), string{"expected '"} + text + "', found '" + peek().text + "'");
            return next();
        }

        auto expect_ident() -> const Token &
        {
            if (peek().kind != Tok::Ident || keywords.contains(peek().text))
                fail(peek(), "expected identifier, found '" + peek().text + "'");
            return next();
        }

        auto declare(const Token & name, set<string> & table) -> void
        {
            if (_params.contains(name.text) || _vars.contains(name.text))
                fail(name, "duplicate declaration of '" + name.text + "'");
            table.insert(name.text);
        }

        auto parse_item() -> Item
        {
            const auto & start = peek();
            if (_data_only && ! (start.kind == Tok::Ident && is("=", 1)))
                fail(start, "data files may only contain assignments");

            if (is("int"))
                return parse_scalar_param();
            if (is("array"))
                return parse_array_decl();
            if (is("var"))
                return parse_var_decl({}, start.span);
            if (is("constraint"))
                return parse_constraint();
            if (is("rule"))
                return parse_rule();
            if (is("solve"))
                return parse_solve();
            if (start.kind == Tok::Ident && is("=", 1))
                return parse_assign();
            fail(start, "expected an item, found '" + start.text + "'");
        }

        auto finish_span(SourceSpan span) const -> SourceSpan
        {
            const auto & last = _tokens[_pos == 0 ? 0 : _pos - 1];
            span.end_line = last.span.end_line;
            span.end_column = last.span.end_column;
            return span;
        }

        auto parse_scalar_param() -> Item
        {
            auto span = expect("int").span;
            expect(":");
            const auto & name = expect_ident();
            declare(name, _params);
            expect(";");
            return ParamDecl{name.text, {}, std::nullopt, finish_span(span)};
        }

        auto parse_range() -> Range
        {
            auto lo = parse_additive();
            expect("..");
            auto hi = parse_additive();
            return Range{std::move(lo), std::move(hi)};
        }

        auto parse_array_decl() -> Item
        {
            auto span = expect("array").span;
            expect("[");
            vector<Range> dims{parse_range()};
            while (accept(","))
                dims.push_back(parse_range());
            expect("]");
            expect("of");
            if (is("var"))
                return parse_var_decl(std::move(dims), span);

            optional<Range> element;
            if (! accept("int"))
                element = parse_range();
            expect(":");
            const auto & name = expect_ident();
            declare(name, _params);
            expect(";");
            return ParamDecl{name.text, std::move(dims), std::move(element), finish_span(span)};
        }

        auto parse_var_decl(vector<Range> dims, SourceSpan span) -> Item
        {
            expect("var");
            VarDecl decl;
            decl.dims = std::move(dims);
            if (accept("bool"))
                decl.sort = Sort::Bool;
            else if (accept("int")) {
                decl.sort = Sort::Int;
                if (accept("in"))
                    decl.domain = parse_range();
            }
            else
                fail(peek(), "expected 'bool' or 'int' after 'var'");
            expect(":");
            const auto & name = expect_ident();
            decl.name = name.text;
            if (accept("::")) {
                if (is("head"))
                    fail(peek(), "head annotations are only legal inside rules");
                expect("founded");
                decl.founded = true;
            }
            expect(";");
            declare(name, _vars);
            decl.span = finish_span(span);
            return decl;
        }

        auto parse_constraint() -> Item
        {
            auto span = expect("constraint").span;
            auto e = parse_expr();
            expect(";");
            check_no_annotation(e, "head annotations are only legal inside rules");
            return ConstraintItem{std::move(e), finish_span(span)};
        }

        auto parse_rule() -> Item
        {
            const auto & kw = expect("rule");
            auto span = kw.span;
            auto e = parse_expr();
            expect(";");
            span = finish_span(span);
            check_rule_shape(e, span);
            return RuleItem{std::move(e), span};
        }

        auto parse_solve() -> Item
        {
            const auto & kw = expect("solve");
            if (_seen_solve)
                fail(kw, "more than one solve item");
            _seen_solve = true;
            ExprPtr objective;
            if (! accept("satisfy")) {
                expect("minimize");
                objective = parse_expr();
                check_no_annotation(objective, "annotation not allowed in objective");
            }
            expect(";");
            return SolveItem{std::move(objective), finish_span(kw.span)};
        }

        auto parse_int_literal() -> Integer
        {
            bool negative = accept("-");
            if (peek().kind != Tok::Int)
                fail(peek(), "expected integer, found '" + peek().text + "'");
            const auto & t = next();
            Integer v = 0;
            auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
            if (ec != std::errc{})
                fail(t, "integer literal out of range");
            return negative ? -v : v;
        }

        auto parse_assign() -> Item
        {
            const auto & name = next();
            if (! _data_only) {
                if (_vars.contains(name.text))
                    fail(name, "cannot assign to decision variable '" + name.text + "'");
                if (! _params.contains(name.text))
                    fail(name, "unknown identifier '" + name.text + "'");
            }
            if (! _assigned.insert(name.text).second)
                fail(name, "'" + name.text + "' is assigned twice");
            expect("=");
            DataValue value;
            if (accept("[|")) {
                value.is_array = true;
                size_t rows = 0, cols = 0, in_row = 0;
                while (! is("|]")) {
                    value.values.push_back(parse_int_literal());
                    ++in_row;
                    if (accept(","))
                        continue;
                    if (is("|") || is("|]")) {
                        if (rows == 0)
                            cols = in_row;
                        else if (in_row != cols)
                            fail(peek(), "ragged 2-D array literal");
                        ++rows;
                        in_row = 0;
                        accept("|");
                        continue;
                    }
                    fail(peek(), "expected ',', '|' or '|]' in 2-D array literal");
                }
                expect("|]");
                value.shape = std::pair{rows, cols};
            }
            else if (accept("[")) {
                value.is_array = true;
                if (! is("]")) {
                    value.values.push_back(parse_int_literal());
                    while (accept(","))
                        value.values.push_back(parse_int_literal());
                }
                expect("]");
            }
            else
                value.values.push_back(parse_int_literal());
            expect(";");
            return DataAssign{name.text, std::move(value), finish_span(name.span)};
        }

        // expr ::= implied_by [ '::' 'head' '(' lvalue ')' ]
        auto parse_expr() -> ExprPtr
        {
            auto e = parse_implied_by();
            if (is("::")) {
                next();
                if (is("founded"))
                    fail(peek(), "'founded' annotation is only legal on declarations");
                expect("head");
                expect("(");
                auto lvalue = parse_primary();
                if (lvalue->kind != ExprKind::Ident && lvalue->kind != ExprKind::Index)
                    fail(peek(), "head annotation needs a variable");
                expect(")");
                auto a = make(ExprKind::Annotated, finish_span(e->span));
                a->args = {std::move(e), std::move(lvalue)};
                return a;
            }
            return e;
        }

        auto parse_implied_by() -> ExprPtr
        {
            auto lhs = parse_implies();
            while (accept("<-"))
                lhs = binary(BinOp::ImpliedBy, lhs, parse_implies());
            return lhs;
        }

        auto parse_implies() -> ExprPtr
        {
            auto lhs = parse_or();
            if (accept("->"))
                return binary(BinOp::Implies, lhs, parse_implies());
            return lhs;
        }

        auto parse_or() -> ExprPtr
        {
            auto lhs = parse_and();
            while (accept("\\/"))
                lhs = binary(BinOp::Or, lhs, parse_and());
            return lhs;
        }

        auto parse_and() -> ExprPtr
        {
            auto lhs = parse_not();
            while (accept("/\\"))
                lhs = binary(BinOp::And, lhs, parse_not());
            return lhs;
        }

        auto parse_not() -> ExprPtr
        {
            if (is("not")) {
                auto span = next().span;
                auto arg = parse_not();
                auto e = make(ExprKind::Not, SourceSpan::join(span, arg->span));
                e->args = {std::move(arg)};
                return e;
            }
            return parse_comparison();
        }

        auto parse_comparison() -> ExprPtr
        {
            auto lhs = parse_additive();
            static const std::pair<const char *, BinOp> ops[] = {{"=", BinOp::Eq}, {"==", BinOp::Eq},
                {"!=", BinOp::Ne}, {"<", BinOp::Lt}, {"<=", BinOp::Le}, {">", BinOp::Gt}, {">=", BinOp::Ge}};
            for (const auto & [text, op] : ops)
                if (accept(text))
                    return binary(op, lhs, parse_additive());
            return lhs;
        }

        auto parse_additive() -> ExprPtr
        {
            auto lhs = parse_multiplicative();
            while (true) {
                if (accept("+"))
                    lhs = binary(BinOp::Add, lhs, parse_multiplicative());
                else if (accept("-"))
                    lhs = binary(BinOp::Sub, lhs, parse_multiplicative());
                else
                    return lhs;
            }
        }

        auto parse_multiplicative() -> ExprPtr
        {
            auto lhs = parse_unary();
            while (accept("*"))
                lhs = binary(BinOp::Mul, lhs, parse_unary());
            return lhs;
        }

        auto parse_unary() -> ExprPtr
        {
            if (is("-")) {
                auto span = next().span;
                auto arg = parse_unary();
                auto e = make(ExprKind::Neg, SourceSpan::join(span, arg->span));
                e->args = {std::move(arg)};
                return e;
            }
            return parse_primary();
        }

        auto known(const string & name) const -> bool
        {
            return _params.contains(name) || _vars.contains(name) ||
                std::find(_locals.begin(), _locals.end(), name) != _locals.end();
        }

        auto parse_primary() -> ExprPtr
        {
            const auto & t = peek();
            if (t.kind == Tok::Int) {
                next();
                auto e = make(ExprKind::IntLit, t.span);
                auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), e->int_value);
                if (ec != std::errc{})
                    fail(t, "integer literal out of range");
                return e;
            }
            if (is("true") || is("false")) {
                next();
                auto e = make(ExprKind::BoolLit, t.span);
                e->bool_value = t.text == "true";
                return e;
            }
            if (accept("(")) {
                auto e = parse_expr();
                expect(")");
                return e;
            }
            if (is("forall") || is("exists") || is("sum"))
                return parse_comprehension();
            if (is("bool2int")) {
                auto span = next().span;
                expect("(");
                auto arg = parse_expr();
                expect(")");
                auto e = make(ExprKind::Bool2Int, finish_span(span));
                e->args = {std::move(arg)};
                return e;
            }
            if (t.kind == Tok::Ident && ! keywords.contains(t.text)) {
                next();
                if (! known(t.text))
                    fail(t, "unknown identifier '" + t.text + "'");
                if (accept("[")) {
                    auto e = make(ExprKind::Index, t.span);
                    e->name = t.text;
                    e->args.push_back(parse_additive());
                    while (accept(","))
                        e->args.push_back(parse_additive());
                    expect("]");
                    e->span = finish_span(e->span);
                    return e;
                }
                auto e = make(ExprKind::Ident, t.span);
                e->name = t.text;
                return e;
            }
            fail(t, "expected expression, found '" + t.text + "'");
        }

        auto parse_comprehension() -> ExprPtr
        {
            const auto & kw = next();
            auto e = make(ExprKind::Comprehension, kw.span);
            e->comprehension = kw.text == "forall" ? ComprehensionKind::Forall
                : kw.text == "exists"              ? ComprehensionKind::Exists
                                                   : ComprehensionKind::Sum;
            expect("(");
            size_t scope = _locals.size();
            do {
                Generator g;
                g.span = peek().span;
                g.names.push_back(expect_ident().text);
                while (accept(","))
                    g.names.push_back(expect_ident().text);
                expect("in");
                // the range may use names bound by earlier generators only
                auto range = parse_range();
                g.lo = std::move(range.lo);
                g.hi = std::move(range.hi);
                g.span = finish_span(g.span);
                for (const auto & n : g.names)
                    _locals.push_back(n);
                e->generators.push_back(std::move(g));
            } while (accept(","));
            if (accept("where"))
                e->guard = parse_expr();
            expect(")");
            expect("(");
            e->args = {parse_expr()};
            expect(")");
            _locals.resize(scope);
            e->span = finish_span(e->span);
            return e;
        }

        auto check_no_annotation(const ExprPtr & e, const char * message) const -> void
        {
            if (! e)
                return;
            if (e->kind == ExprKind::Annotated)
                throw ParseError{e->span, message};
            for (const auto & a : e->args)
                check_no_annotation(a, message);
            if (e->guard)
                check_no_annotation(e->guard, message);
        }

        // rule ::= forall(...)(rule) | rule /\ rule | expr :: head(lvalue)
        auto check_rule_shape(const ExprPtr & e, const SourceSpan & item) const -> void
        {
            switch (e->kind) {
            case ExprKind::Annotated:
                check_no_annotation(e->args[0], "nested head annotation");
                return;
            case ExprKind::Comprehension:
                if (e->comprehension == ComprehensionKind::Forall) {
                    check_no_annotation(e->guard, "head annotation inside a where guard");
                    check_rule_shape(e->args[0], item);
                    return;
                }
                break;
            case ExprKind::Binary:
                if (e->op == BinOp::And) {
                    check_rule_shape(e->args[0], item);
                    check_rule_shape(e->args[1], item);
                    return;
                }
                break;
            default: break;
            }
            throw ParseError{item, "rule needs a ':: head(...)' annotation"};
        }
    };
}

auto bfasp::frontend::parse_model(string_view text, const string & file) -> ModelAST
{
    return Parser{text, file, false}.parse();
}

auto bfasp::frontend::parse_data(string_view text, const string & file) -> DataBindings
{
    DataBindings bindings;
    for (auto & item : Parser{text, file, true}.parse().items) {
        auto & assign = std::get<DataAssign>(item);
        bindings.emplace(assign.name, BoundData{std::move(assign.value), assign.span});
    }
    return bindings;
}
