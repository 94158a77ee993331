#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace copperscope {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A modulus that was required to be prime failed the primality check.
struct NonPrimeModulus : Error {
    explicit NonPrimeModulus(const std::string& what) : Error(what) {}
};

/// A polynomial that was required to be monic (leading coefficient 1) is not.
struct NonMonicPolynomial : Error {
    explicit NonMonicPolynomial(const std::string& what) : Error(what) {}
};

/// Basis rows passed to a reduction are linearly dependent.
struct DependentRows : Error {
    explicit DependentRows(const std::string& what) : Error(what) {}
};

/// LLL parameter delta outside the admissible range (1/4, 1).
struct BadDelta : Error {
    explicit BadDelta(const std::string& what) : Error(what) {}
};

/// An input value is outside the domain of the requested computation
/// (non-positive radius, zero modulus, and the like).
struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& what) : Error(what) {}
};

/// The requested bound is below the validity threshold of the estimate.
struct DomainTooSmall : Error {
    explicit DomainTooSmall(const std::string& what) : Error(what) {}
};

/// A bounded search ran past its iteration cap without an answer.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

/// The norm certificate failed at the requested search radius.  Carries the
/// largest radius (possibly zero) at which the certificate did hold.
struct BoundNotCertified : Error {
    mpz_class certified_radius;
    BoundNotCertified(const std::string& what, mpz_class certified)
        : Error(what), certified_radius(std::move(certified)) {}
};

}  // namespace copperscope
