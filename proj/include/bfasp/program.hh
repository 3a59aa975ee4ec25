#ifndef BFASP_GUARD_BFASP_PROGRAM_HH
#define BFASP_GUARD_BFASP_PROGRAM_HH

#include <bfasp/value.hh>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace bfasp
{
    /// Index into a program's variable table.
    struct VarId
    {
        std::uint32_t index = 0;

        [[nodiscard]] auto operator<=>(const VarId &) const = default;
    };

    enum class VarKind : std::uint8_t
    {
        Standard,
        Founded
    };

    enum class Sort : std::uint8_t
    {
        Bool,
        Int
    };

    struct VarInfo
    {
        std::string name;
        VarKind kind = VarKind::Standard;
        Sort sort = Sort::Bool;
        Integer lo = 0; ///< ignored for Bool
        Integer hi = 1; ///< ignored for Bool

        [[nodiscard]] auto founded() const -> bool { return kind == VarKind::Founded; }

        /// The default value: -inf for founded ints, false for founded bools,
        /// and the lowest domain value for standard variables.
        [[nodiscard]] auto bottom() const -> ExtValue;

        [[nodiscard]] auto contains(const ExtValue & v) const -> bool;

        /// Every admissible value in increasing order, bottom included.
        [[nodiscard]] auto domain_values() const -> std::vector<ExtValue>;
    };

    struct Term
    {
        Integer coeff;
        VarId var;

        [[nodiscard]] auto operator==(const Term &) const -> bool = default;
    };

    /// sum(coeff * var) >= bound, over Int variables.
    struct LinearAtom
    {
        std::vector<Term> terms;
        Integer bound = 0;

        [[nodiscard]] auto operator==(const LinearAtom &) const -> bool = default;
    };

    enum class Polarity : std::uint8_t
    {
        Pos,
        Neg
    };

    struct Literal
    {
        VarId var;
        Polarity polarity = Polarity::Pos;

        [[nodiscard]] auto operator==(const Literal &) const -> bool = default;
    };

    /// Disjunction of literals and linear atoms. The empty clause is false.
    struct FlatClause
    {
        std::vector<Literal> lits;
        std::vector<LinearAtom> atoms;

        [[nodiscard]] auto empty() const -> bool { return lits.empty() && atoms.empty(); }
        [[nodiscard]] auto operator==(const FlatClause &) const -> bool = default;
    };

    struct Rule
    {
        FlatClause clause;
        VarId head;

        [[nodiscard]] auto operator==(const Rule &) const -> bool = default;
    };

    /// sum(coeff * var) + constant. Bool variables count as 0/1.
    struct LinearExpr
    {
        std::vector<Term> terms;
        Integer constant = 0;

        [[nodiscard]] auto operator==(const LinearExpr &) const -> bool = default;
    };

    /**
     * A ground bound founded program: standard and founded variables,
     * constraints that every model must satisfy, rules that justify founded
     * values, and an optional objective to minimise.
     *
     * Immutable once built; the name index is computed at construction.
     */
    class GroundProgram
    {
    public:
        GroundProgram() = default;
        GroundProgram(std::vector<VarInfo> vars, std::vector<FlatClause> constraints, std::vector<Rule> rules,
            std::optional<LinearExpr> objective = std::nullopt);

        [[nodiscard]] auto vars() const -> std::span<const VarInfo> { return _vars; }
        [[nodiscard]] auto constraints() const -> std::span<const FlatClause> { return _constraints; }
        [[nodiscard]] auto rules() const -> std::span<const Rule> { return _rules; }
        [[nodiscard]] auto objective() const -> const std::optional<LinearExpr> & { return _objective; }

        [[nodiscard]] auto num_vars() const -> std::size_t { return _vars.size(); }
        [[nodiscard]] auto info(VarId v) const -> const VarInfo & { return _vars.at(v.index); }
        [[nodiscard]] auto name(VarId v) const -> const std::string & { return info(v).name; }
        [[nodiscard]] auto find(const std::string & name) const -> std::optional<VarId>;

        /// Indices of the rules whose head is v.
        [[nodiscard]] auto rules_for(VarId v) const -> std::vector<std::size_t>;

        /// A copy with one extra constraint appended.
        [[nodiscard]] auto with_constraint(FlatClause c) const -> GroundProgram;
        [[nodiscard]] auto with_objective(std::optional<LinearExpr> o) const -> GroundProgram;

        [[nodiscard]] auto operator==(const GroundProgram & other) const -> bool;

    private:
        std::vector<VarInfo> _vars;
        std::vector<FlatClause> _constraints;
        std::vector<Rule> _rules;
        std::optional<LinearExpr> _objective;
        std::unordered_map<std::string, VarId> _by_name;
    };

    /// A total assignment over a program's variables.
    class Valuation
    {
    public:
        Valuation() = default;
        explicit Valuation(std::vector<ExtValue> values) : _values(std::move(values)) {}

        /// Every variable at its bottom value.
        [[nodiscard]] static auto bottom(const GroundProgram & p) -> Valuation;

        [[nodiscard]] auto operator[](VarId v) const -> const ExtValue & { return _values.at(v.index); }
        [[nodiscard]] auto operator[](VarId v) -> ExtValue & { return _values.at(v.index); }
        [[nodiscard]] auto size() const -> std::size_t { return _values.size(); }
        [[nodiscard]] auto values() const -> std::span<const ExtValue> { return _values; }

        [[nodiscard]] auto operator==(const Valuation &) const -> bool = default;
        [[nodiscard]] auto operator<=>(const Valuation &) const = default;

    private:
        std::vector<ExtValue> _values;
    };

    [[nodiscard]] auto eval_linear(const LinearAtom & atom, std::span<const ExtValue> values) -> Truth;
    [[nodiscard]] auto eval_linear(const LinearAtom & atom, const Valuation & v) -> Truth;
    [[nodiscard]] auto eval_literal(const Literal & lit, const Valuation & v) -> bool;
    [[nodiscard]] auto eval_clause(const FlatClause & c, const Valuation & v) -> Truth;

    /// Finite value of a linear expression, or nullopt if it is +/-inf or undefined.
    [[nodiscard]] auto eval_expr(const LinearExpr & e, const Valuation & v) -> std::optional<Integer>;

    struct ConstraintReport
    {
        bool satisfied = true;
        std::optional<std::size_t> failed_clause; ///< first clause that is not True
        Truth failed_verdict = Truth::True;
    };

    /// Evaluates every constraint in order and reports the first failure.
    [[nodiscard]] auto check_constraints(const GroundProgram & p, const Valuation & v) -> ConstraintReport;

    /// True iff every constraint is True; Undefined counts as unsatisfied.
    [[nodiscard]] auto satisfies(const GroundProgram & p, const Valuation & v) -> bool;

    struct ValidationReport
    {
        std::vector<std::string> problems;

        [[nodiscard]] auto ok() const -> bool { return problems.empty(); }
    };

    [[nodiscard]] auto validate_program(const GroundProgram & p) -> ValidationReport;

    /// Human-readable list of a valuation's entries that fall outside their domains.
    [[nodiscard]] auto domain_problems(const GroundProgram & p, const Valuation & v) -> std::vector<std::string>;
}

#endif
