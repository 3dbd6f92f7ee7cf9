#ifndef QVERIFY_ERRORS_HPP
#define QVERIFY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qv {

/// Base class for all qverify errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

struct UnsupportedRoot : Error {
    explicit UnsupportedRoot(const std::string& msg) : Error(msg) {}
};

struct CannotDetermineValuation : Error {
    explicit CannotDetermineValuation(const std::string& msg) : Error(msg) {}
};

struct InvalidSubstitution : Error {
    explicit InvalidSubstitution(const std::string& msg) : Error(msg) {}
};

struct PrecisionTooLow : Error {
    explicit PrecisionTooLow(const std::string& msg) : Error(msg) {}
};

struct NonGenericPole : Error {
    explicit NonGenericPole(const std::string& msg) : Error(msg) {}
};

struct PrefactorZero : Error {
    explicit PrefactorZero(const std::string& msg) : Error(msg) {}
};

struct DegenerateParameters : Error {
    explicit DegenerateParameters(const std::string& msg) : Error(msg) {}
};

struct UnsupportedArgument : Error {
    explicit UnsupportedArgument(const std::string& msg) : Error(msg) {}
};

struct UnsupportedForm : Error {
    explicit UnsupportedForm(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg), line(line_), column(col_) {}
};

struct EvalError : Error {
    explicit EvalError(const std::string& msg) : Error(msg) {}
};

} // namespace qv

#endif
