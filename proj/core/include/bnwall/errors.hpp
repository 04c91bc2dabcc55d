#pragma once

#include <stdexcept>
#include <string>

namespace bnwall {

// Bad arguments or a violated precondition. The CLI maps this to exit code 1.
class invalid_input : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exact identity or internal invariant failed to hold. Results cannot be
// trusted past this point. The CLI maps this to exit code 2.
class consistency_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A requested polarization lies on the nef boundary rather than inside the
// ample cone, so chamber language does not apply to it.
class boundary_polarization : public invalid_input {
public:
    using invalid_input::invalid_input;
};

} // namespace bnwall
