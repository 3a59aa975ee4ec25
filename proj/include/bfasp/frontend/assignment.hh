#ifndef BFASP_GUARD_BFASP_FRONTEND_ASSIGNMENT_HH
#define BFASP_GUARD_BFASP_FRONTEND_ASSIGNMENT_HH

#include <bfasp/program.hh>
#include <bfasp/source.hh>

#include <string>
#include <string_view>

namespace bfasp::frontend
{
    /// Reads `name = value;` lines (values `true`, `false`, integers, `-inf`)
    /// into a total valuation of p. Every variable must be given exactly
    /// once and within its domain.
    [[nodiscard]] auto parse_assignment(std::string_view text, const GroundProgram & p,
        const std::string & file = "<assignment>") -> Valuation;
}

#endif
