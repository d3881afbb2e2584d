#pragma once

#include <stdexcept>
#include <string>

namespace sortscope {

/// Unreadable or unwritable file.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Structurally broken input (wrong schema, too many bad lines, bad header).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller passed an argument outside the operation's contract.
class ParameterError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Data admits no defined answer (zero expected disagreement, empty group,
/// zero baseline count, counts violating a log-odds precondition).
class DegenerateDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A queried phrase has no vector in the embedding table.
class MissingEmbeddingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Wraps any error with the pipeline stage it occurred in.
class StageError : public std::runtime_error {
public:
    StageError(std::string stage, const std::string& message)
        : std::runtime_error(message), stage_(std::move(stage)) {}
    const std::string& stage() const noexcept { return stage_; }

private:
    std::string stage_;
};

}  // namespace sortscope
