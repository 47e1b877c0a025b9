#pragma once

#include <stdexcept>
#include <string>

namespace h3 {

enum class Err {
    OUT_OF_RANGE,
    DEGENERATE_EDGE,
    EMPTY_SIDE,
    NONPOSITIVE_Q,
    MODE_TOO_LARGE,
    NOT_LINEAR,
    PATTERN_TOO_LARGE,
    ORACLE_TOO_LARGE,
    NO_CONVERGENCE,
    COUNT_OVERFLOW,
    CONFIG_INVALID,
    IO_ERROR,
    INVALID_ARGUMENT,
};

inline const char* err_name(Err e)
{
    switch (e) {
        case Err::OUT_OF_RANGE:      return "OUT_OF_RANGE";
        case Err::DEGENERATE_EDGE:   return "DEGENERATE_EDGE";
        case Err::EMPTY_SIDE:        return "EMPTY_SIDE";
        case Err::NONPOSITIVE_Q:     return "NONPOSITIVE_Q";
        case Err::MODE_TOO_LARGE:    return "MODE_TOO_LARGE";
        case Err::NOT_LINEAR:        return "NOT_LINEAR";
        case Err::PATTERN_TOO_LARGE: return "PATTERN_TOO_LARGE";
        case Err::ORACLE_TOO_LARGE:  return "ORACLE_TOO_LARGE";
        case Err::NO_CONVERGENCE:    return "NO_CONVERGENCE";
        case Err::COUNT_OVERFLOW:    return "COUNT_OVERFLOW";
        case Err::CONFIG_INVALID:    return "CONFIG_INVALID";
        case Err::IO_ERROR:          return "IO_ERROR";
        case Err::INVALID_ARGUMENT:  return "INVALID_ARGUMENT";
    }
    return "UNKNOWN";
}

class H3Error : public std::runtime_error {
public:
    H3Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code)
    {
    }

    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what)
{
    throw H3Error(code, what);
}

inline void require(bool cond, Err code, const std::string& what)
{
    if (!cond)
        fail(code, what);
}

} // namespace h3
