#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "copperscope/errors.hpp"

namespace copperscope {

// Arbitrary-precision scalar types used throughout the library.  Nat is an
// Int that is non-negative by contract; Rat is kept in lowest terms with a
// positive denominator (gmpxx canonicalizes eagerly).
using Int = mpz_class;
using Nat = mpz_class;
using Rat = mpq_class;

/**
 * Primality test.
 *
 * Deterministic Miller-Rabin with the 13-base set {2,...,41} for
 * n < 3317044064679887385961981 (~2^81, the largest proven bound for that
 * base set); beyond that, 64 additional Miller-Rabin rounds with bases drawn
 * from a deterministic generator seeded from n, so the one-sided error is
 * below 2^-128 and results are reproducible.
 */
bool is_prime(const Int& n);

/// p-adic valuation value: a finite integer, or +infinity for the valuation
/// of zero.  Infinity is its own state rather than a sentinel integer.
class PAdicVal {
  public:
    static PAdicVal infinity() { return PAdicVal(true, 0); }
    static PAdicVal finite(Int v) { return PAdicVal(false, std::move(v)); }

    bool is_infinity() const { return infinite_; }

    /// Finite value; must not be called on the infinite valuation.
    const Int& value() const {
        if (infinite_) throw Error("PAdicVal: value() on infinite valuation");
        return v_;
    }

    friend bool operator==(const PAdicVal& a, const PAdicVal& b) {
        if (a.infinite_ != b.infinite_) return false;
        return a.infinite_ || a.v_ == b.v_;
    }
    /// Order with infinity greater than every finite valuation.
    friend bool operator<(const PAdicVal& a, const PAdicVal& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.v_ < b.v_;
    }

  private:
    PAdicVal(bool inf, Int v) : infinite_(inf), v_(std::move(v)) {}
    bool infinite_;
    Int v_;
};

/**
 * v_p(x) for rational x: v_p(a/b) = v_p(a) - v_p(b), and v_p(0) = infinity.
 * Throws NonPrimeModulus if p is not prime.
 */
PAdicVal padic_valuation(const Rat& x, const Int& p);

/// |x|_p = p^{-v_p(x)} as an exact rational; |0|_p = 0.
Rat padic_abs(const Rat& x, const Int& p);

/// All primes <= m in ascending order (sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t m);

/// Least prime p <= m dividing n (n >= 2), or nullopt if there is none.
std::optional<Int> smallest_prime_factor_up_to(const Int& n, std::uint64_t m);

/// Exact sign of x^d - n, computed with integer arithmetic.  Requires d >= 1.
std::strong_ordering compare_power(const Int& x, unsigned long d, const Int& n);

/// base^e for e >= 0.
Int ipow(const Int& base, unsigned long e);

/// floor(n^{1/k}) for n >= 0, k >= 1.
Int iroot_floor(const Int& n, unsigned long k);

/// n!
Int factorial(unsigned long n);

/// ln(n) for n > 0, accurate for values far beyond double range.
double log_double(const Int& n);

/// ln(q) for q > 0.
double log_double(const Rat& q);

}  // namespace copperscope
