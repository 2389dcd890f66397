#pragma once

#include <stdexcept>
#include <string>

namespace arrangetop {

// Exit-code category used by the CLI: 1 = input/validation,
// 2 = precondition of an operation not met, 3 = internal audit failure.
enum class ErrorClass { Input = 1, Precondition = 2, Internal = 3 };

class Error : public std::runtime_error {
public:
    Error(ErrorClass cls, const std::string& what) : std::runtime_error(what), cls_(cls) {}
    ErrorClass error_class() const { return cls_; }

private:
    ErrorClass cls_;
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& w = "division by zero")
        : Error(ErrorClass::Precondition, w) {}
};

struct NotReal : Error {
    explicit NotReal(const std::string& w = "value is not fixed by conjugation")
        : Error(ErrorClass::Precondition, w) {}
};

struct InvalidForm : Error {
    explicit InvalidForm(const std::string& w = "zero linear form") : Error(ErrorClass::Input, w) {}
};

struct DuplicateLine : Error {
    DuplicateLine(int i, int j)
        : Error(ErrorClass::Input,
                "duplicate lines at indices " + std::to_string(i) + " and " + std::to_string(j)),
          first(i), second(j) {}
    int first;
    int second;
};

struct NotInTorusLie : Error {
    explicit NotInTorusLie(const std::string& w = "weight vector entries do not sum to zero")
        : Error(ErrorClass::Precondition, w) {}
};

struct NotAPencil : Error {
    explicit NotAPencil(const std::string& w) : Error(ErrorClass::Precondition, w) {}
};

struct NonIsolatedSingularity : Error {
    explicit NonIsolatedSingularity(const std::string& w = "binary form has a repeated factor")
        : Error(ErrorClass::Precondition, w) {}
};

struct PropositionHypothesesNotMet : Error {
    explicit PropositionHypothesesNotMet(const std::string& w)
        : Error(ErrorClass::Precondition, w) {}
};

struct NotAdmissible : Error {
    explicit NotAdmissible(const std::string& w) : Error(ErrorClass::Precondition, w) {}
};

struct NotGeneralType : Error {
    explicit NotGeneralType(const std::string& w) : Error(ErrorClass::Precondition, w) {}
};

struct InconsistentSpectrum : Error {
    explicit InconsistentSpectrum(const std::string& w) : Error(ErrorClass::Precondition, w) {}
};

struct GenericityFailure : Error {
    explicit GenericityFailure(const std::string& w) : Error(ErrorClass::Internal, w) {}
};

struct ParseError : Error {
    ParseError(int line, int col, const std::string& w)
        : Error(ErrorClass::Input,
                "parse error at line " + std::to_string(line) + ", column " + std::to_string(col) +
                    ": " + w),
          line(line), col(col) {}
    int line;
    int col;
};

struct UnknownBuiltin : Error {
    explicit UnknownBuiltin(const std::string& name)
        : Error(ErrorClass::Input, "unknown builtin arrangement '" + name + "'") {}
};

struct InternalError : Error {
    explicit InternalError(const std::string& w) : Error(ErrorClass::Internal, w) {}
};

} // namespace arrangetop
