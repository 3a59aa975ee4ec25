#ifndef BFASP_GUARD_BFASP_FRONTEND_AST_HH
#define BFASP_GUARD_BFASP_FRONTEND_AST_HH

#include <bfasp/program.hh>
#include <bfasp/source.hh>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace bfasp::frontend
{
    enum class ExprKind
    {
        IntLit,
        BoolLit,
        Ident,
        Index,        ///< name[args...]
        Neg,          ///< -args[0]
        Not,          ///< not args[0]
        Binary,       ///< args[0] op args[1]
        Comprehension,
        Bool2Int,     ///< bool2int(args[0])
        Annotated     ///< args[0] :: head(args[1])
    };

    enum class BinOp
    {
        Add,
        Sub,
        Mul,
        Eq,
        Ne,
        Lt,
        Le,
        Gt,
        Ge,
        And,
        Or,
        Implies,
        ImpliedBy
    };

    enum class ComprehensionKind
    {
        Forall,
        Exists,
        Sum
    };

    struct Expr;
    using ExprPtr = std::shared_ptr<const Expr>;

    /// `u, v in lo..hi`
    struct Generator
    {
        std::vector<std::string> names;
        ExprPtr lo;
        ExprPtr hi;
        SourceSpan span;
    };

    struct Expr
    {
        ExprKind kind = ExprKind::IntLit;
        SourceSpan span;
        Integer int_value = 0;
        bool bool_value = false;
        std::string name;
        BinOp op = BinOp::Add;
        ComprehensionKind comprehension = ComprehensionKind::Forall;
        std::vector<ExprPtr> args;
        std::vector<Generator> generators;
        ExprPtr guard; ///< `where` condition, may be null
    };

    struct Range
    {
        ExprPtr lo;
        ExprPtr hi;
    };

    struct ParamDecl
    {
        std::string name;
        std::vector<Range> dims; ///< empty for a scalar
        std::optional<Range> element_range;
        SourceSpan span;
    };

    struct VarDecl
    {
        std::string name;
        std::vector<Range> dims;
        Sort sort = Sort::Bool;
        std::optional<Range> domain;
        bool founded = false;
        SourceSpan span;
    };

    struct ConstraintItem
    {
        ExprPtr expr;
        SourceSpan span;
    };

    struct RuleItem
    {
        ExprPtr expr;
        SourceSpan span;
    };

    struct SolveItem
    {
        ExprPtr objective; ///< null for `solve satisfy`
        SourceSpan span;
    };

    /// An integer, a flat array `[...]`, or a 2-D array `[| a, b | c, d |]`.
    struct DataValue
    {
        std::vector<Integer> values;
        bool is_array = false;
        std::optional<std::pair<std::size_t, std::size_t>> shape; ///< rows, columns for 2-D literals
    };

    struct DataAssign
    {
        std::string name;
        DataValue value;
        SourceSpan span;
    };

    using Item = std::variant<ParamDecl, VarDecl, ConstraintItem, RuleItem, SolveItem, DataAssign>;

    struct ModelAST
    {
        std::vector<Item> items;

        template <typename T>
        [[nodiscard]] auto count() const -> std::size_t
        {
            std::size_t n = 0;
            for (const auto & item : items)
                n += std::holds_alternative<T>(item) ? 1 : 0;
            return n;
        }
    };

    struct BoundData
    {
        DataValue value;
        SourceSpan span;
    };

    using DataBindings = std::map<std::string, BoundData>;
}

#endif
