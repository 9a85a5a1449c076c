#pragma once

#include <stdexcept>
#include <string>

namespace magni {

// Error categories map to distinct CLI exit codes.
enum class ErrorCategory { usage = 1, parse = 2, validation = 3, resource = 4, internal = 5 };

class Error : public std::runtime_error {
public:
    Error(ErrorCategory cat, std::string msg) : std::runtime_error(std::move(msg)), cat_(cat) {}
    ErrorCategory category() const { return cat_; }

private:
    ErrorCategory cat_;
};

class ParseError : public Error {
public:
    ParseError(int line, int col, const std::string& reason)
        : Error(ErrorCategory::parse,
                "line " + std::to_string(line) + " col " + std::to_string(col) + ": " + reason),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_, col_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(std::string msg) : Error(ErrorCategory::validation, std::move(msg)) {}
};

// A configured cap was exceeded. Reported with the offending count, never truncated.
class ResourceBoundError : public Error {
public:
    ResourceBoundError(std::string what_hit, long long count, long long cap)
        : Error(ErrorCategory::resource,
                what_hit + ": count " + std::to_string(count) + " exceeds cap " + std::to_string(cap)),
          count_(count), cap_(cap) {}
    long long count() const { return count_; }
    long long cap() const { return cap_; }

private:
    long long count_, cap_;
};

// A runtime invariant (e.g. a boundary composing to nonzero) failed. Always aborts the
// computation; partial results are never emitted past this point.
class InternalCheckError : public Error {
public:
    explicit InternalCheckError(std::string msg) : Error(ErrorCategory::internal, std::move(msg)) {}
};

class UsageError : public Error {
public:
    explicit UsageError(std::string msg) : Error(ErrorCategory::usage, std::move(msg)) {}
};

} // namespace magni
