#pragma once

#include <stdexcept>
#include <string>

namespace rootcoh {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Unsupported (series, rank) pair.
struct InvalidType : Error {
    using Error::Error;
};

// Chain degree beyond the configured cap (default 4, see kDefaultDegreeCap).
struct DegreeCapExceeded : Error {
    using Error::Error;
};

// Cochain evaluated against a chain sum of a different degree.
struct DegreeMismatch : Error {
    using Error::Error;
};

// Automorphism group enumeration would exceed the requested cap.
struct GroupTooLarge : Error {
    using Error::Error;
};

// A 2-form that should have been symmetric is not.
struct NotSymmetric : Error {
    using Error::Error;
};

// Integration input failed the closedness precondition; the witness chain is
// carried by cohomology::NotCocycle (declared with the chain type available).

// Two decompositions of the same root produced different integrals.
struct WellDefinednessViolation : Error {
    using Error::Error;
};

// Natural-integrability asked of a form with a negative exponent.
struct NotNaturalInput : Error {
    using Error::Error;
};

// A structural property of a constructed root system failed; indicates a bug.
struct InternalInvariantViolation : Error {
    using Error::Error;
};

// Unparseable or inconsistent user input (files, flags).
struct MalformedInput : Error {
    using Error::Error;
};

} // namespace rootcoh
