#ifndef BFASP_GUARD_BFASP_ANALYSIS_HH
#define BFASP_GUARD_BFASP_ANALYSIS_HH

#include <bfasp/program.hh>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bfasp
{
    enum class Monotonicity : std::uint8_t
    {
        Increasing,
        Decreasing,
        Constant,
        NonMonotone
    };

    [[nodiscard]] auto to_string(Monotonicity m) -> std::string;

    /// Syntactic classification: positive literals and positive coefficients
    /// are increasing, negative ones decreasing, a mix is non-monotone.
    [[nodiscard]] auto monotonicity(const FlatClause & c, VarId x) -> Monotonicity;

    /// Every variable occurring in c, in first-occurrence order, with its classification.
    [[nodiscard]] auto occurrences(const FlatClause & c) -> std::vector<std::pair<VarId, Monotonicity>>;

    enum class RuleError : std::uint8_t
    {
        HeadNotFounded,
        HeadAbsent,
        HeadMultipleOccurrences,
        HeadNotIncreasing,
        NonMonotoneOccurrence
    };

    [[nodiscard]] auto to_string(RuleError e) -> std::string;

    /// nullopt when the rule is well formed. Assumes its variable ids exist.
    [[nodiscard]] auto validate_rule(const GroundProgram & p, const Rule & r) -> std::optional<RuleError>;
    [[nodiscard]] auto validate_rule(std::span<const VarInfo> vars, const Rule & r) -> std::optional<RuleError>;

    /// Variables whose values the reduct consumes, so search must guess them:
    /// every standard variable, plus every founded variable with a non-head
    /// rule occurrence that is not decreasing.
    class GuessSet
    {
    public:
        GuessSet() = default;
        explicit GuessSet(std::vector<VarId> sorted_vars, std::size_t num_vars);

        [[nodiscard]] auto vars() const -> std::span<const VarId> { return _vars; }
        [[nodiscard]] auto contains(VarId v) const -> bool { return v.index < _member.size() && _member[v.index]; }
        [[nodiscard]] auto size() const -> std::size_t { return _vars.size(); }

    private:
        std::vector<VarId> _vars;
        std::vector<bool> _member;
    };

    [[nodiscard]] auto guess_set(const GroundProgram & p) -> GuessSet;

    struct PositiveClause
    {
        FlatClause clause;
        VarId head;
        std::size_t rule = 0; ///< index of the source rule
    };

    /// Rules after substitution: each clause is increasing in its head and
    /// decreasing in everything else. Refers to the source program's
    /// variable table, which must outlive it.
    struct PositiveCP
    {
        std::span<const VarInfo> vars;
        std::vector<PositiveClause> clauses;
    };

    /// Returns a description of the first clause that breaks the positive-CP shape.
    [[nodiscard]] auto positive_cp_problem(const PositiveCP & cp) -> std::optional<std::string>;

    class ReductError : public Error
    {
    public:
        using Error::Error;
    };

    struct ReductOptions
    {
        /// Keep clauses made tautological by substitution, marked with a
        /// constant-true member. Only useful for checking that dropping them
        /// is harmless.
        bool keep_tautologies = false;
    };

    /// Builds reducts for one program, caching which occurrences get substituted.
    class ReductBuilder
    {
    public:
        explicit ReductBuilder(const GroundProgram & p);

        [[nodiscard]] auto build(const Valuation & v, ReductOptions options = {}) const -> PositiveCP;

    private:
        struct RulePlan
        {
            std::vector<bool> substitute_lit;
            std::vector<std::vector<bool>> substitute_term;
        };

        const GroundProgram * _program;
        std::vector<RulePlan> _plans;
    };

    /// The positive-CP obtained from p's rules by substituting v's values for
    /// standard and non-decreasing body occurrences, folding constants and
    /// dropping tautologies. Throws ReductError on mixed infinities.
    [[nodiscard]] auto build_reduct(const GroundProgram & p, const Valuation & v, ReductOptions options = {}) -> PositiveCP;

    /// Conservative check: a clause is reported tautological when it holds
    /// with every variable at its least favourable domain value, or it
    /// contains a complementary literal pair.
    [[nodiscard]] auto is_tautology(const FlatClause & c, std::span<const VarInfo> vars) -> bool;
}

#endif
