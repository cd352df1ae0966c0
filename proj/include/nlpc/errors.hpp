#pragma once

#include <stdexcept>
#include <string>

namespace nlpc {

/// Malformed input document. `path()` is a JSON pointer to the offending value.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string path, const std::string& message)
        : std::runtime_error(path.empty() ? message : path + ": " + message), path_(std::move(path))
    {
    }

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// Well-formed input that violates a domain invariant (duplicate ids, dangling edges, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inputs that were each valid but do not belong together (scenes from different graphs, ...).
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace nlpc
