#ifndef PLANAUT_ERRORS_HPP
#define PLANAUT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace planaut {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Failures that mean the input violates a stated hypothesis. The CLI maps
/// these to exit status 2.
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// A certificate step that cannot fail on verified inputs did fail: either an
/// implementation bug or a counterexample to a theorem. CLI exit status 4.
class CertificateFailure : public Error {
public:
    using Error::Error;
};

class InvalidLine : public HypothesisError {
public:
    InvalidLine() : HypothesisError("invalid line: a and b are both zero") {}
};

/// An operation was called outside its documented preconditions; `condition`
/// names the failed one.
class PreconditionViolated : public HypothesisError {
public:
    explicit PreconditionViolated(std::string cond)
        : HypothesisError("precondition violated: " + cond), condition(std::move(cond))
    {
    }
    std::string condition;
};

class DegenerateResultant : public Error {
public:
    DegenerateResultant() : Error("resultant_y needs both inputs of positive degree in y") {}
};

}  // namespace planaut

#endif
