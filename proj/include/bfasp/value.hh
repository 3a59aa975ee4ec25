#ifndef BFASP_GUARD_BFASP_VALUE_HH
#define BFASP_GUARD_BFASP_VALUE_HH

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bfasp
{
    using Integer = std::int64_t;

    /// Base class for every error the toolkit reports.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class OverflowError : public Error
    {
    public:
        using Error::Error;
    };

    [[nodiscard]] auto checked_add(Integer a, Integer b) -> Integer;
    [[nodiscard]] auto checked_sub(Integer a, Integer b) -> Integer;
    [[nodiscard]] auto checked_mul(Integer a, Integer b) -> Integer;

    /// Least integer q with q * divisor >= dividend. Divisor must be positive.
    [[nodiscard]] auto ceil_div(Integer dividend, Integer divisor) -> Integer;

    /**
     * A value in the extended lattice used by valuations: -inf, a finite
     * integer, or a Boolean. -inf is the bottom of every founded integer
     * variable; +inf never appears as a stored value.
     */
    class ExtValue
    {
    public:
        enum class Kind : std::uint8_t
        {
            NegInf,
            Fin,
            Bool
        };

        constexpr ExtValue() = default;

        [[nodiscard]] static constexpr auto neg_inf() -> ExtValue { return ExtValue{Kind::NegInf, 0}; }
        [[nodiscard]] static constexpr auto fin(Integer v) -> ExtValue { return ExtValue{Kind::Fin, v}; }
        [[nodiscard]] static constexpr auto boolean(bool b) -> ExtValue { return ExtValue{Kind::Bool, b ? 1 : 0}; }

        [[nodiscard]] constexpr auto kind() const -> Kind { return _kind; }
        [[nodiscard]] constexpr auto is_neg_inf() const -> bool { return _kind == Kind::NegInf; }
        [[nodiscard]] constexpr auto is_fin() const -> bool { return _kind == Kind::Fin; }
        [[nodiscard]] constexpr auto is_bool() const -> bool { return _kind == Kind::Bool; }

        /// The finite integer, or 0/1 for a Boolean. Undefined for -inf.
        [[nodiscard]] constexpr auto raw() const -> Integer { return _value; }
        [[nodiscard]] constexpr auto as_bool() const -> bool { return _value != 0; }

        // -inf sits below everything; remaining values order by number, with
        // kind as a tie-breaker so that the order stays total.
        [[nodiscard]] constexpr auto operator<=>(const ExtValue & other) const -> std::strong_ordering
        {
            if (is_neg_inf() || other.is_neg_inf())
                return (is_neg_inf() ? 0 : 1) <=> (other.is_neg_inf() ? 0 : 1);
            if (auto c = _value <=> other._value; c != 0)
                return c;
            return _kind <=> other._kind;
        }

        [[nodiscard]] constexpr auto operator==(const ExtValue & other) const -> bool
        {
            return _kind == other._kind && (is_neg_inf() || _value == other._value);
        }

    private:
        constexpr ExtValue(Kind k, Integer v) : _kind(k), _value(v) {}

        Kind _kind = Kind::NegInf;
        Integer _value = 0;
    };

    /// `-inf`, `true`/`false`, or the decimal integer.
    [[nodiscard]] auto to_string(const ExtValue & v) -> std::string;

    enum class Truth : std::uint8_t
    {
        False,
        True,
        Undefined
    };

    [[nodiscard]] auto to_string(Truth t) -> std::string;
}

#endif
