#ifndef BFASP_GUARD_BFASP_SOLVER_HH
#define BFASP_GUARD_BFASP_SOLVER_HH

#include <bfasp/analysis.hh>
#include <bfasp/fixpoint.hh>
#include <bfasp/program.hh>

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace bfasp
{
    namespace verdict
    {
        struct Stable
        {
        };

        struct ConstraintViolated
        {
            std::size_t clause;
        };

        struct UndefinedEvaluation
        {
            std::size_t clause;
        };

        struct MinimalModelMismatch
        {
            VarId var;
            ExtValue assigned;
            ExtValue minimal;
        };

        /// The reduct has no minimal model inside the declared domains.
        struct ReductUnsat
        {
            std::size_t reduct_clause;
            std::size_t rule;
        };
    }

    using StabilityVerdict = std::variant<verdict::Stable, verdict::ConstraintViolated, verdict::UndefinedEvaluation,
        verdict::MinimalModelMismatch, verdict::ReductUnsat>;

    [[nodiscard]] auto is_stable(const StabilityVerdict & v) -> bool;

    /// `STABLE`, or `NOT STABLE: <witness>`.
    [[nodiscard]] auto describe(const StabilityVerdict & v, const GroundProgram & p) -> std::string;

    /// A valuation is stable iff it satisfies the constraints and equals the
    /// minimal model of its own reduct on every founded variable.
    [[nodiscard]] auto check_stable(const GroundProgram & p, const Valuation & v, const FixpointTrace & trace = {})
        -> StabilityVerdict;

    enum class BranchOrder
    {
        Declaration,
        Activity ///< most occurrences first
    };

    enum class ValueOrder
    {
        MinFirst,
        MaxFirst
    };

    enum class Propagation
    {
        LeafCheckOnly,
        Clause ///< prune guesses that falsify a constraint or rule clause
    };

    struct SearchConfig
    {
        BranchOrder branching = BranchOrder::Declaration;
        ValueOrder values = ValueOrder::MinFirst;
        std::optional<std::size_t> solution_limit;
        std::optional<std::chrono::duration<double>> time_budget;
        Propagation propagation = Propagation::Clause;
        FixpointTrace trace;
    };

    enum class SearchStatus
    {
        Exhausted,      ///< every guess was explored
        SolutionLimit,  ///< stopped by the solution limit or the callback
        TimeLimit       ///< stopped by the time budget
    };

    struct SearchStats
    {
        std::size_t nodes = 0;
        std::size_t leaves = 0;
        std::size_t solutions = 0;
    };

    struct SearchOutcome
    {
        SearchStatus status = SearchStatus::Exhausted;
        SearchStats stats;
    };

    /// Return false to stop the search.
    using ModelCallback = std::function<auto(const Valuation &)->bool>;

    /// Raised when the objective cannot be evaluated on a stable model.
    class SolveError : public Error
    {
    public:
        using Error::Error;
    };

    /**
     * Depth-first search over the guess set. Each leaf builds the reduct,
     * computes its minimal model, and emits the combined valuation when the
     * guessed founded values agree with it and every constraint holds.
     * Emission order is fixed by the config.
     */
    auto enumerate_stable(const GroundProgram & p, const SearchConfig & config, const ModelCallback & on_model)
        -> SearchOutcome;

    /// Collects every emitted model; convenient for tests.
    [[nodiscard]] auto all_stable_models(const GroundProgram & p, const SearchConfig & config = {})
        -> std::vector<Valuation>;

    struct OptimizeResult
    {
        std::optional<Valuation> best;
        std::optional<Integer> value;
        SearchOutcome outcome;
    };

    /**
     * Branch and bound: each stable model with objective z tightens the
     * search to objective <= z - 1. When the outcome is Exhausted the last
     * model is optimal (or none exists).
     */
    [[nodiscard]] auto optimize(const GroundProgram & p, const SearchConfig & config,
        const ModelCallback & on_improvement = {}) -> OptimizeResult;

    [[nodiscard]] auto objective_value(const GroundProgram & p, const Valuation & v) -> Integer;
}

#endif
