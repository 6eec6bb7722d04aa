#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ttfal {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A polynomial was evaluated without a value for one of its variables.
class MissingVariable : public Error {
public:
    explicit MissingVariable(const std::string& var)
        : Error("missing value for variable '" + var + "'"), var_(var) {}
    const std::string& variable() const noexcept { return var_; }

private:
    std::string var_;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Malformed diagram input (bad JSON, wrong field types, failed validation).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Error raised while applying the FAL labeling rules.
class LabelingError : public Error {
public:
    enum class Kind { UntaggedSlot, ContradictoryIdentification, GenericDiagram };

    LabelingError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// A face whose equations cannot be formed (bigon, zero edge label, ...).
class DegenerateFace : public Error {
public:
    using Error::Error;
};

class EliminationError : public Error {
public:
    enum class Kind { Stuck, Inconsistent };

    EliminationError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

class NoGeometricRoot : public Error {
public:
    using Error::Error;
};

/// The root finder ran out of iterations; carries whatever it had.
class NonConvergence : public Error {
public:
    NonConvergence(const std::string& what, std::vector<std::complex<double>> partial)
        : Error(what), partial_(std::move(partial)) {}
    const std::vector<std::complex<double>>& partial_roots() const noexcept { return partial_; }

private:
    std::vector<std::complex<double>> partial_;
};

} // namespace ttfal
