#ifndef BFASP_GUARD_BFASP_FRONTEND_GROUNDER_HH
#define BFASP_GUARD_BFASP_FRONTEND_GROUNDER_HH

#include <bfasp/frontend/ast.hh>
#include <bfasp/program.hh>

#include <optional>
#include <utility>

namespace bfasp::frontend
{
    /// A grounding failure, located at the offending model construct.
    class GroundError : public ParseError
    {
    public:
        using ParseError::ParseError;
    };

    struct GroundOptions
    {
        /// Interval for founded `var int` declarations that give none.
        std::optional<std::pair<Integer, Integer>> founded_default;
    };

    /**
     * Instantiates every comprehension over the bound data and flattens the
     * result into clauses: `forall` becomes separate clauses or rules,
     * `exists` a disjunction, `sum` and `bool2int` linear terms, and every
     * comparison an atom of the form sum >= k. Items whose parameter-only
     * guards are false are dropped. Variables are numbered in declaration
     * order, arrays row-major, named like `d[2,3]`.
     *
     * `data` adds to (and may not repeat) the model's own assignments.
     */
    [[nodiscard]] auto ground(const ModelAST & ast, const DataBindings & data = {}, const GroundOptions & options = {})
        -> GroundProgram;
}

#endif
