#pragma once

#include <stdexcept>

namespace cyclo {

/// A build exceeded the configured resource guard; carries its own exit
/// code in the CLI (3).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A "must never fire" internal consistency condition fired.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace cyclo
