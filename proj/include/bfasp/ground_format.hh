#ifndef BFASP_GUARD_BFASP_GROUND_FORMAT_HH
#define BFASP_GUARD_BFASP_GROUND_FORMAT_HH

#include <bfasp/analysis.hh>
#include <bfasp/program.hh>
#include <bfasp/source.hh>

#include <span>
#include <string>
#include <string_view>

// Line-oriented text form of a ground program:
//
//   var bool standard dom[1];
//   var int -1000..0 founded d[1,2];
//   constraint ~dom[1] | ~dom[2] | 1*d[1,2] >= -35;
//   rule 1*d[1,1] >= 0 head d[1,1];
//   minimize 1*dom[1] + 1*dom[2];
//
// `#` starts a comment and `false` is the empty clause.

namespace bfasp
{
    [[nodiscard]] auto format_atom(const LinearAtom & atom, std::span<const VarInfo> vars) -> std::string;
    [[nodiscard]] auto format_clause(const FlatClause & c, std::span<const VarInfo> vars) -> std::string;
    [[nodiscard]] auto format_expr(const LinearExpr & e, std::span<const VarInfo> vars) -> std::string;

    [[nodiscard]] auto write_ground(const GroundProgram & p) -> std::string;
    [[nodiscard]] auto read_ground(std::string_view text, const std::string & file = "<ground>") -> GroundProgram;

    /// One `rule ... head NAME;` line per reduct clause.
    [[nodiscard]] auto write_reduct(const PositiveCP & cp) -> std::string;

    /// One `name = value;` line per variable, in declaration order.
    [[nodiscard]] auto write_valuation(const GroundProgram & p, const Valuation & v) -> std::string;
}

#endif
