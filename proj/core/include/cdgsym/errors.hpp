#pragma once

#include <stdexcept>
#include <string>

namespace cdgsym {

// Thrown when a computed quantity breaks a structural guarantee
// (mass not conserved, TV increased along an evolution, ...).
// The CLI maps this to exit code 3; bad arguments map to exit code 2.
class InvariantViolation : public std::runtime_error {
public:
    explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cdgsym
