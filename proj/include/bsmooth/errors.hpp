#pragma once

#include <stdexcept>
#include <string>

namespace bsmooth {

// Raised when a guarded high-precision evaluation cannot separate a value
// from a decision boundary even at the maximum working precision.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an iterative solver fails to converge within its iteration cap.
struct solver_error : std::runtime_error {
    explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bsmooth
