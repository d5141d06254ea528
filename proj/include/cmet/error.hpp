#pragma once

#include <stdexcept>
#include <string>

namespace cmet {

// Invalid operation parameters (e.g. core collar >= half modulus).
struct ParamError : std::runtime_error {
    explicit ParamError(const std::string& what) : std::runtime_error(what) {}
};

// Domain membership / domain specification failures.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Grid solver could not connect the endpoints at the available resolutions,
// or a bisection bracket failed to close.
struct ResolutionError : std::runtime_error {
    explicit ResolutionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cmet
