#pragma once

#include <stdexcept>
#include <string>

namespace symgenus {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Signature measure is <= 0, so no Riemann-Hurwitz order relation exists.
struct NonHyperbolic : Error {
    using Error::Error;
};

/// order * measure / 2 is not an integer.
struct NonIntegralGenus : Error {
    using Error::Error;
};

/// Riemann-Hurwitz genus came out below 2.
struct GenusTooSmall : Error {
    using Error::Error;
};

/// The requested multiplier threshold admits an infinite signature family.
struct ThresholdTooLow : Error {
    using Error::Error;
};

/// Kernel-signature data does not solve to a non-negative integer genus.
struct InconsistentData : Error {
    using Error::Error;
};

/// Metacyclic parameter congruences are violated.
struct InvalidParams : Error {
    using Error::Error;
};

/// Group order exceeds a configured search cap.
struct CapExceeded : Error {
    using Error::Error;
};

/// Generating-vector shape does not match the signature.
struct ShapeMismatch : Error {
    using Error::Error;
};

/// A bound scan hit its genus cap before the bound could be decided.
struct GenusCapTooSmall : Error {
    using Error::Error;
};

/// A constructive family search found no witness.
struct NoWitness : Error {
    using Error::Error;
};

/// min_genus search exhausted its genus cap.
struct NotFoundWithinCap : Error {
    using Error::Error;
};

}  // namespace symgenus
