#pragma once

#include <stdexcept>
#include <string>

namespace detnet {

// Stable error codes; the CLI maps each to a distinct process exit code.
enum class ErrorCode {
    Parse = 2,
    Validation = 3,
    UnknownNode = 4,
    Cycle = 5,
    DegenerateFiring = 6,
    IntractableSearch = 7,
    Io = 8,
    InconsistentJoint = 9,
    MissingParent = 10,
    InvalidWeights = 11,
    NotAParent = 12,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(ErrorCode::Parse, msg) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(ErrorCode::Validation, msg) {}
};

struct UnknownNodeError : Error {
    explicit UnknownNodeError(const std::string& msg) : Error(ErrorCode::UnknownNode, msg) {}
};

struct CycleError : Error {
    explicit CycleError(const std::string& msg) : Error(ErrorCode::Cycle, msg) {}
};

struct DegenerateFiringError : Error {
    explicit DegenerateFiringError(const std::string& msg)
        : Error(ErrorCode::DegenerateFiring, msg) {}
};

struct IntractableSearchError : Error {
    explicit IntractableSearchError(const std::string& msg)
        : Error(ErrorCode::IntractableSearch, msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(ErrorCode::Io, msg) {}
};

struct InconsistentJointError : Error {
    explicit InconsistentJointError(const std::string& msg)
        : Error(ErrorCode::InconsistentJoint, msg) {}
};

struct MissingParentError : Error {
    explicit MissingParentError(const std::string& msg)
        : Error(ErrorCode::MissingParent, msg) {}
};

struct InvalidWeightsError : Error {
    explicit InvalidWeightsError(const std::string& msg)
        : Error(ErrorCode::InvalidWeights, msg) {}
};

struct NotAParentError : Error {
    explicit NotAParentError(const std::string& msg) : Error(ErrorCode::NotAParent, msg) {}
};

}  // namespace detnet
