#include <bfasp/source.hh>

#include <tuple>

using std::string;

using namespace bfasp;

auto SourceSpan::join(const SourceSpan & a, const SourceSpan & b) -> SourceSpan
{
    SourceSpan s = a;
    if (std::tie(b.line, b.column) < std::tie(a.line, a.column)) {
        s.line = b.line;
        s.column = b.column;
    }
    if (std::tie(b.end_line, b.end_column) > std::tie(a.end_line, a.end_column)) {
        s.end_line = b.end_line;
        s.end_column = b.end_column;
    }
    return s;
}

auto bfasp::to_string(const SourceSpan & s) -> string
{
    return s.file + ":" + std::to_string(s.line) + ":" + std::to_string(s.column);
}

ParseError::ParseError(SourceSpan where, const string & message) :
    Error(to_string(where) + ": " + message),
    _where(std::move(where)),
    _message(message)
{
}
