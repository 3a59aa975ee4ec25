#ifndef BFASP_GUARD_BFASP_FRONTEND_PARSER_HH
#define BFASP_GUARD_BFASP_FRONTEND_PARSER_HH

#include <bfasp/frontend/ast.hh>

#include <string>
#include <string_view>

namespace bfasp::frontend
{
    /// Parses a model. Throws ParseError on syntax errors, duplicate
    /// declarations, identifiers used before declaration, and misplaced or
    /// missing `head` annotations.
    [[nodiscard]] auto parse_model(std::string_view text, const std::string & file = "<model>") -> ModelAST;

    /// Parses a data file: only `name = value;` items are allowed.
    [[nodiscard]] auto parse_data(std::string_view text, const std::string & file = "<data>") -> DataBindings;
}

#endif
