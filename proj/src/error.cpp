#include "finitop/error.hpp"

namespace finitop
{

const char* to_string(ErrorKind kind)
{
    switch (kind)
    {
    case ErrorKind::NotATopology: return "NotATopology";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::InvalidMap: return "InvalidMap";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::ScopeTooLarge: return "ScopeTooLarge";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InvariantBreach: return "InvariantBreach";
    }
    return "Unknown";
}

} // namespace finitop
