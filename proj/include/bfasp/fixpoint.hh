#ifndef BFASP_GUARD_BFASP_FIXPOINT_HH
#define BFASP_GUARD_BFASP_FIXPOINT_HH

#include <bfasp/analysis.hh>
#include <bfasp/program.hh>

#include <functional>
#include <optional>
#include <span>
#include <variant>

namespace bfasp
{
    /**
     * Least value of the clause's head that satisfies it when every other
     * variable sits at its current lower bound. -inf means the clause gives
     * no support yet; nullopt means no head value can satisfy it.
     *
     * Integer heads use ceiling division by the head coefficient. A
     * decreasing variable at -inf contributes +inf to the rest of the sum,
     * which makes the clause vacuous. The result ignores the head's declared
     * interval; minimal_model applies it.
     */
    [[nodiscard]] auto clause_requirement(const PositiveClause & c, std::span<const ExtValue> bounds)
        -> std::optional<ExtValue>;

    struct MinimalModel
    {
        Valuation model; ///< standard variables are left at their lowest value
        std::size_t updates = 0;
    };

    struct FixpointUnsat
    {
        std::size_t clause = 0; ///< index into the positive-CP
        VarId head;
        std::optional<Integer> requirement; ///< nullopt for an unbounded requirement
    };

    using FixpointResult = std::variant<MinimalModel, FixpointUnsat>;

    struct BoundUpdate
    {
        VarId var;
        ExtValue old_value;
        ExtValue new_value;
        std::size_t clause = 0;
    };

    using FixpointTrace = std::function<auto(const BoundUpdate &)->void>;

    /// Raised when propagation runs past the lattice height, which means a bug.
    class FixpointWatchdogError : public Error
    {
    public:
        using Error::Error;
    };

    /**
     * The unique minimal solution of a positive-CP, computed by raising
     * every head from its bottom to the maximum requirement of its clauses
     * until nothing changes. Uses a FIFO worklist of clauses, re-queued when
     * one of their body variables is raised.
     *
     * A founded integer raised to a finite requirement below its declared
     * lower bound takes the lower bound; a requirement above the upper bound
     * stops propagation with FixpointUnsat.
     */
    [[nodiscard]] auto minimal_model(const PositiveCP & cp, const FixpointTrace & trace = {}) -> FixpointResult;
}

#endif
