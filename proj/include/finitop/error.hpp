#pragma once

#include <stdexcept>
#include <string>

namespace finitop
{

enum class ErrorKind
{
    NotATopology,
    BadParams,
    InvalidMap,
    SpaceMismatch,
    ScopeTooLarge,
    ArityMismatch,
    Parse,
    InvariantBreach,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace finitop
