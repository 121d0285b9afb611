#pragma once

#include <stdexcept>
#include <string>

namespace escher {

enum class ErrorKind {
    InvalidArgument,
    ExcludedRule,
    Unsplittable,
    InvalidGeometry,
    MissingRule,
    Parse,
    InvalidParams,
    AmplitudeTooLarge,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace escher
