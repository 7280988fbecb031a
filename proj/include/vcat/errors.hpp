#pragma once

#include <stdexcept>
#include <string>

namespace vcat {

// Base of every error the library throws.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text or structure.
struct parse_error : error {
    using error::error;
};

// A value outside the carrier, or a violated precondition.
struct domain_error : error {
    using error::error;
};

// The operation is not available for this quantale or functor.
struct unsupported_error : error {
    using error::error;
};

// An enumeration would exceed the configured cap.
struct resource_error : error {
    using error::error;
};

// A fixpoint iteration did not stabilise within its bound.
struct iteration_error : error {
    using error::error;
};

} // namespace vcat
