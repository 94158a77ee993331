#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "copperscope/arith.hpp"

namespace copperscope {

class RatPoly;

/**
 * Dense univariate polynomial with arbitrary-precision integer coefficients,
 * constant term first.  The zero polynomial is the empty coefficient vector;
 * the leading coefficient of a nonzero polynomial is nonzero.
 */
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<Int> coeffs) : c_(coeffs) { trim(); }

    /// coeff * x^k
    static IntPoly monomial(std::size_t k, Int coeff = Int(1));

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    const Int& coeff(std::size_t k) const;
    const std::vector<Int>& coeffs() const { return c_; }

    Int eval(const Int& x) const;
    Int eval_mod(const Int& x, const Int& mod) const;

    IntPoly shifted(const Int& a) const;  ///< p(x + a)

    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& s) const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly pow(unsigned long e) const;

    /// gcd of all coefficients (0 for the zero polynomial).
    Int content() const;

    RatPoly to_rat() const;

    friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  private:
    void trim();
    std::vector<Int> c_;
};

/**
 * Dense univariate polynomial over Q, constant term first.  Coefficients are
 * canonical rationals; the zero polynomial is the empty vector.
 */
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    RatPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

    static RatPoly monomial(std::size_t k, Rat coeff = Rat(1));

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const Rat& coeff(std::size_t k) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    std::size_t nonzero_terms() const;

    Rat eval(const Rat& x) const;

    RatPoly derivative() const;
    RatPoly shifted(const Rat& a) const;     ///< p(x + a)
    RatPoly scaled_arg(const Rat& s) const;  ///< p(s * x)

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rat& s) const;
    RatPoly operator-() const;

    /// Euclidean division: a = q * b + r with deg r < deg b.  b must be nonzero.
    static void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);

    /// Clear denominators: returns (g, den) with g integral, den > 0 and
    /// g = den * this.
    std::pair<IntPoly, Int> cleared() const;

    friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

  private:
    void trim();
    std::vector<Rat> c_;
};

/// Monic gcd over Q (1 for coprime inputs; 0 only if both inputs are 0).
RatPoly poly_gcd(RatPoly a, RatPoly b);

/// Primitive integer polynomial with the same roots as h, all multiplicities
/// reduced to one.
IntPoly squarefree_part(const RatPoly& h);

}  // namespace copperscope
