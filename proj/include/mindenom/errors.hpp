#pragma once

#include <stdexcept>
#include <string>

namespace mindenom {

/// Raised when a bounded search (shell cap, denominator cap, search radius)
/// is exhausted before a witness is found.
class NotFoundError : public std::runtime_error {
public:
    explicit NotFoundError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by Psi evaluation when no holonomy vector of the set lies in the cone.
class EmptyConeError : public std::runtime_error {
public:
    explicit EmptyConeError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace mindenom
