#include <bfasp/ground_format.hh>

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

using std::optional;
using std::size_t;
using std::span;
using std::string;
using std::string_view;
using std::vector;

using namespace bfasp;

namespace
{
    auto append_term(string & out, bool first, Integer coeff, const string & name) -> void
    {
        if (first)
            out += std::to_string(coeff);
        else if (coeff < 0)
            out += " - " + std::to_string(-coeff);
        else
            out += " + " + std::to_string(coeff);
        out += "*" + name;
    }

    auto format_terms(const vector<Term> & terms, span<const VarInfo> vars) -> string
    {
        string out;
        for (size_t i = 0; i < terms.size(); ++i)
            append_term(out, i == 0, terms[i].coeff, vars[terms[i].var.index].name);
        return out;
    }
}

auto bfasp::format_atom(const LinearAtom & atom, span<const VarInfo> vars) -> string
{
    string lhs = atom.terms.empty() ? "0" : format_terms(atom.terms, vars);
    return lhs + " >= " + std::to_string(atom.bound);
}

auto bfasp::format_clause(const FlatClause & c, span<const VarInfo> vars) -> string
{
    if (c.empty())
        return "false";
    string out;
    auto sep = [&] {
        if (! out.empty())
            out += " | ";
    };
    for (const auto & lit : c.lits) {
        sep();
        out += (lit.polarity == Polarity::Neg ? "~" : "") + vars[lit.var.index].name;
    }
    for (const auto & atom : c.atoms) {
        sep();
        out += format_atom(atom, vars);
    }
    return out;
}

auto bfasp::format_expr(const LinearExpr & e, span<const VarInfo> vars) -> string
{
    string out = format_terms(e.terms, vars);
    if (out.empty())
        return std::to_string(e.constant);
    if (e.constant > 0)
        out += " + " + std::to_string(e.constant);
    else if (e.constant < 0)
        out += " - " + std::to_string(-e.constant);
    return out;
}

auto bfasp::write_ground(const GroundProgram & p) -> string
{
    std::ostringstream out;
    auto vars = p.vars();
    for (const auto & info : vars) {
        out << "var ";
        if (info.sort == Sort::Bool)
            out << "bool";
        else
            out << "int " << info.lo << ".." << info.hi;
        out << (info.founded() ? " founded " : " standard ") << info.name << ";\n";
    }
    for (const auto & c : p.constraints())
        out << "constraint " << format_clause(c, vars) << ";\n";
    for (const auto & r : p.rules())
        out << "rule " << format_clause(r.clause, vars) << " head " << vars[r.head.index].name << ";\n";
    if (const auto & obj = p.objective())
        out << "minimize " << format_expr(*obj, vars) << ";\n";
    return out.str();
}

auto bfasp::write_reduct(const PositiveCP & cp) -> string
{
    string out;
    for (const auto & pc : cp.clauses)
        out += "rule " + format_clause(pc.clause, cp.vars) + " head " + cp.vars[pc.head.index].name + ";\n";
    return out;
}

auto bfasp::write_valuation(const GroundProgram & p, const Valuation & v) -> string
{
    string out;
    for (size_t i = 0; i < p.num_vars(); ++i)
        out += p.vars()[i].name + " = " + to_string(v.values()[i]) + ";\n";
    return out;
}

namespace
{
    enum class Tok
    {
        Name,
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

    auto is_name_start(char c) -> bool
    {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    auto is_name_char(char c) -> bool
    {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    }

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
            if (c == '#') {
                while (i < text.size() && text[i] != '\n')
                    advance(1);
                continue;
            }
            SourceSpan span{file, line, col, line, col};
            size_t start = i;
            Tok kind;
            if (is_name_start(c)) {
                kind = Tok::Name;
                while (i < text.size() && is_name_char(text[i]))
                    advance(1);
                if (i < text.size() && text[i] == '[') {
                    while (i < text.size() && text[i] != ']' && text[i] != '\n')
                        advance(1);
                    if (i >= text.size() || text[i] != ']')
                        throw ParseError{span, "unterminated index in variable name"};
                    advance(1);
                }
            }
            else if (std::isdigit(static_cast<unsigned char>(c))) {
                kind = Tok::Int;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    advance(1);
            }
            else {
                kind = Tok::Symbol;
                auto rest = text.substr(i);
                if (rest.starts_with("..") || rest.starts_with(">="))
                    advance(2);
                else if (string_view{"|~*+-;"}.find(c) != string_view::npos)
                    advance(1);
                else
                    throw ParseError{span, string{"unexpected character '"} + c + "'"};
            }
            span.end_line = line;
            span.end_column = col;
            tokens.push_back(Token{kind, string{text.substr(start, i - start)}, span});
        }
        tokens.push_back(Token{Tok::End, "", SourceSpan{file, line, col, line, col}});
        return tokens;
    }

    class GroundReader
    {
    public:
        GroundReader(string_view text, const string & file) :
            _tokens(lex(text, file))
        {
        }

        auto read() -> GroundProgram
        {
            while (peek().kind != Tok::End) {
                const auto & kw = expect(Tok::Name, "item keyword");
                if (kw.text == "var")
                    read_var();
                else if (kw.text == "constraint") {
                    _constraints.push_back(read_clause());
                    expect_symbol(";");
                }
                else if (kw.text == "rule") {
                    auto clause = read_clause();
                    auto & h = expect(Tok::Name, "'head'");
                    if (h.text != "head")
                        throw ParseError{h.span, "expected 'head', found '" + h.text + "'"};
                    auto head = read_var_ref();
                    expect_symbol(";");
                    _rules.push_back(Rule{std::move(clause), head});
                }
                else if (kw.text == "minimize") {
                    if (_objective)
                        throw ParseError{kw.span, "more than one minimize item"};
                    auto [terms, constant] = read_sum();
                    _objective = LinearExpr{std::move(terms), constant};
                    expect_symbol(";");
                }
                else
                    throw ParseError{kw.span, "unknown item '" + kw.text + "'"};
            }
            return GroundProgram{std::move(_vars), std::move(_constraints), std::move(_rules), std::move(_objective)};
        }

    private:
        vector<Token> _tokens;
        size_t _pos = 0;
        vector<VarInfo> _vars;
        std::unordered_map<string, VarId> _ids;
        vector<FlatClause> _constraints;
        vector<Rule> _rules;
        optional<LinearExpr> _objective;

        auto peek(size_t ahead = 0) const -> const Token & { return _tokens[std::min(_pos + ahead, _tokens.size() - 1)]; }

        auto next() -> const Token &
        {
            const auto & t = _tokens[_pos];
            if (_pos + 1 < _tokens.size())
                ++_pos;
            return t;
        }

        auto is_symbol(const char * s, size_t ahead = 0) const -> bool
        {
            return peek(ahead).kind == Tok::Symbol && peek(ahead).text == s;
        }

        auto expect(Tok kind, const char * what) -> const Token &
        {
            if (peek().kind != kind)
                throw ParseError{peek().span, string{"expected "} + what + ", found '" + peek().text + "'"};
            return next();
        }

        auto expect_symbol(const char * s) -> void
        {
            if (! is_symbol(s))
                throw ParseError{peek().span, string{"expected '"} + s + "', found '" + peek().text + "'"};
            next();
        }

        auto read_int() -> Integer
        {
            bool negative = false;
            if (is_symbol("-")) {
                next();
                negative = true;
            }
            const auto & t = expect(Tok::Int, "integer");
            Integer v = 0;
            auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
            if (ec != std::errc{})
                throw ParseError{t.span, "integer out of range"};
            return negative ? -v : v;
        }

        auto read_var_ref() -> VarId
        {
            const auto & t = expect(Tok::Name, "variable name");
            auto it = _ids.find(t.text);
            if (it == _ids.end())
                throw ParseError{t.span, "unknown variable '" + t.text + "'"};
            return it->second;
        }

        auto read_var() -> void
        {
            VarInfo info;
            const auto & sort = expect(Tok::Name, "'bool' or 'int'");
            if (sort.text == "bool")
                info.sort = Sort::Bool;
            else if (sort.text == "int") {
                info.sort = Sort::Int;
                info.lo = read_int();
                expect_symbol("..");
                info.hi = read_int();
            }
            else
                throw ParseError{sort.span, "expected 'bool' or 'int', found '" + sort.text + "'"};

            const auto & kind = expect(Tok::Name, "'standard' or 'founded'");
            if (kind.text == "standard")
                info.kind = VarKind::Standard;
            else if (kind.text == "founded")
                info.kind = VarKind::Founded;
            else
                throw ParseError{kind.span, "expected 'standard' or 'founded', found '" + kind.text + "'"};

            const auto & name = expect(Tok::Name, "variable name");
            if (_ids.contains(name.text))
                throw ParseError{name.span, "duplicate variable '" + name.text + "'"};
            info.name = name.text;
            _ids.emplace(info.name, VarId{static_cast<std::uint32_t>(_vars.size())});
            _vars.push_back(std::move(info));
            expect_symbol(";");
        }

        // [-] term {(+|-) term}, term := INT '*' NAME | NAME | INT
        auto read_sum() -> std::pair<vector<Term>, Integer>
        {
            vector<Term> terms;
            Integer constant = 0;
            bool first = true;
            while (true) {
                Integer sign = 1;
                if (! first || is_symbol("-")) {
                    if (is_symbol("+"))
                        next();
                    else if (is_symbol("-")) {
                        next();
                        sign = -1;
                    }
                    else if (! first)
                        break;
                }
                first = false;
                if (peek().kind == Tok::Int) {
                    Integer v = sign * read_int();
                    if (is_symbol("*")) {
                        next();
                        terms.push_back(Term{v, read_var_ref()});
                    }
                    else
                        constant = checked_add(constant, v);
                }
                else
                    terms.push_back(Term{sign, read_var_ref()});
            }
            return {std::move(terms), constant};
        }

        auto read_member(FlatClause & clause) -> void
        {
            if (is_symbol("~")) {
                next();
                clause.lits.push_back(Literal{read_var_ref(), Polarity::Neg});
                return;
            }
            if (peek().kind == Tok::Name && ! is_symbol(">=", 1) && ! is_symbol("+", 1) && ! is_symbol("-", 1)) {
                clause.lits.push_back(Literal{read_var_ref(), Polarity::Pos});
                return;
            }
            auto [terms, constant] = read_sum();
            expect_symbol(">=");
            Integer k = read_int();
            clause.atoms.push_back(LinearAtom{std::move(terms), checked_sub(k, constant)});
        }

        auto read_clause() -> FlatClause
        {
            FlatClause clause;
            if (peek().kind == Tok::Name && peek().text == "false") {
                next();
                return clause;
            }
            read_member(clause);
            while (is_symbol("|")) {
                next();
                read_member(clause);
            }
            return clause;
        }
    };
}

auto bfasp::read_ground(string_view text, const string & file) -> GroundProgram
{
    return GroundReader{text, file}.read();
}
