#include <bfasp/frontend/assignment.hh>

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

using std::optional;
using std::size_t;
using std::string;
using std::string_view;
using std::vector;

using namespace bfasp;

auto bfasp::frontend::parse_assignment(string_view text, const GroundProgram & p, const string & file) -> Valuation
{
    vector<optional<ExtValue>> values(p.num_vars());
    int line = 1, col = 1;
    size_t i = 0;

    auto here = [&] { return SourceSpan{file, line, col, line, col}; };
    auto advance = [&] {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        }
        else
            ++col;
        ++i;
    };
    auto skip_space = [&] {
        while (i < text.size()) {
            if (std::isspace(static_cast<unsigned char>(text[i])))
                advance();
            else if (text[i] == '#' || text[i] == '%')
                while (i < text.size() && text[i] != '\n')
                    advance();
            else
                break;
        }
    };
    auto take_while = [&](auto pred) {
        size_t start = i;
        while (i < text.size() && pred(text[i]))
            advance();
        return string{text.substr(start, i - start)};
    };
    auto expect = [&](char c) {
        skip_space();
        if (i >= text.size() || text[i] != c)
            throw ParseError{here(), string{"expected '"} + c + "'"};
        advance();
    };

    while (true) {
        skip_space();
        if (i >= text.size())
            break;

        auto at = here();
        auto name = take_while([](char c) { return ! std::isspace(static_cast<unsigned char>(c)) && c != '=' && c != ';'; });
        if (name.empty())
            throw ParseError{at, "expected a variable name"};
        auto id = p.find(name);
        if (! id)
            throw ParseError{at, "unknown variable '" + name + "'"};
        if (values[id->index])
            throw ParseError{at, "'" + name + "' is assigned twice"};
        expect('=');
        skip_space();

        auto value_at = here();
        auto word = take_while([](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_'; });
        ExtValue value;
        if (word == "true" || word == "false")
            value = ExtValue::boolean(word == "true");
        else if (word == "-inf")
            value = ExtValue::neg_inf();
        else {
            Integer v = 0;
            auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
            if (word.empty() || ec != std::errc{} || ptr != word.data() + word.size())
                throw ParseError{value_at, "expected true, false, an integer or -inf, found '" + word + "'"};
            value = ExtValue::fin(v);
        }
        if (! p.info(*id).contains(value))
            throw ParseError{value_at, to_string(value) + " is not in the domain of '" + name + "'"};
        values[id->index] = value;
        expect(';');
    }

    vector<ExtValue> total;
    total.reserve(values.size());
    for (size_t k = 0; k < values.size(); ++k) {
        if (! values[k])
            throw ParseError{here(), "no value for variable '" + p.vars()[k].name + "'"};
        total.push_back(*values[k]);
    }
    return Valuation{std::move(total)};
}
