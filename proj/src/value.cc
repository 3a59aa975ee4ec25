#include <bfasp/value.hh>

using std::string;

auto bfasp::checked_add(Integer a, Integer b) -> Integer
{
    Integer r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError{"integer overflow in " + std::to_string(a) + " + " + std::to_string(b)};
    return r;
}

auto bfasp::checked_sub(Integer a, Integer b) -> Integer
{
    Integer r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError{"integer overflow in " + std::to_string(a) + " - " + std::to_string(b)};
    return r;
}

auto bfasp::checked_mul(Integer a, Integer b) -> Integer
{
    Integer r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError{"integer overflow in " + std::to_string(a) + " * " + std::to_string(b)};
    return r;
}

auto bfasp::ceil_div(Integer dividend, Integer divisor) -> Integer
{
    if (divisor <= 0)
        throw Error{"ceil_div requires a positive divisor"};
    Integer q = dividend / divisor;
    if (dividend % divisor != 0 && dividend > 0)
        ++q;
    return q;
}

auto bfasp::to_string(const ExtValue & v) -> string
{
    switch (v.kind()) {
    case ExtValue::Kind::NegInf: return "-inf";
    case ExtValue::Kind::Bool: return v.as_bool() ? "true" : "false";
    case ExtValue::Kind::Fin: return std::to_string(v.raw());
    }
    return "?";
}

auto bfasp::to_string(Truth t) -> string
{
    switch (t) {
    case Truth::False: return "false";
    case Truth::True: return "true";
    case Truth::Undefined: return "undefined";
    }
    return "?";
}
