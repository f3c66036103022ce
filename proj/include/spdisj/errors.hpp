#pragma once

#include <stdexcept>
#include <string>

namespace spdisj {

// Request exceeds a configured enumeration or search bound.
class ScaleLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed user input: bad permutation, bad grid, bad file.
class InvalidInputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal identity failed (non-integral count, odd D, formula vs census).
// Always a bug, never a user error.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace spdisj
