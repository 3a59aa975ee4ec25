#ifndef BFASP_GUARD_BFASP_SOURCE_HH
#define BFASP_GUARD_BFASP_SOURCE_HH

#include <bfasp/value.hh>

#include <string>

namespace bfasp
{
    /// 1-based line/column range in a named input.
    struct SourceSpan
    {
        std::string file;
        int line = 1;
        int column = 1;
        int end_line = 1;
        int end_column = 1;

        /// Smallest span covering both; file taken from `a`.
        [[nodiscard]] static auto join(const SourceSpan & a, const SourceSpan & b) -> SourceSpan;
    };

    [[nodiscard]] auto to_string(const SourceSpan & s) -> std::string;

    /// A syntax, declaration, or data error tied to a location.
    class ParseError : public Error
    {
    public:
        ParseError(SourceSpan where, const std::string & message);

        [[nodiscard]] auto where() const -> const SourceSpan & { return _where; }
        [[nodiscard]] auto message() const -> const std::string & { return _message; }

    private:
        SourceSpan _where;
        std::string _message;
    };
}

#endif
