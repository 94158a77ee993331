#pragma once

#include <cstddef>
#include <vector>

#include "copperscope/arith.hpp"
#include "copperscope/poly.hpp"

namespace copperscope {

// Basis conversions and sup norms below are exact rational arithmetic.
// Transcendental quantities (log sums, arctan, lgamma) use double precision
// with per-term rounding error around 1e-15; every inequality those feed has
// slack orders of magnitude wider, and the analytic branches state their own
// margins.

/**
 * A polynomial expressed in the binomial basis: coeffs[i] multiplies
 * b_i(x) = x(x-1)...(x-i+1)/i!.  Trailing zeros are trimmed, so degree equals
 * the index of the last nonzero coefficient.
 */
struct BinomialCombo {
    std::vector<Rat> coeffs;

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    bool all_integer() const;
};

/// b_i(x) with exact rational coefficients.
RatPoly binomial_poly(std::size_t i);

/// Change of basis via forward differences: coeffs[i] = Delta^i h(0).
/// Exact, and inverse to from_binomial_basis.
BinomialCombo to_binomial_basis(const RatPoly& h);

RatPoly from_binomial_basis(const BinomialCombo& combo);

/// True iff h maps every integer to an integer, decided exactly through the
/// binomial-basis coefficients (integer combination <=> integer-valued).
bool is_integer_valued(const RatPoly& h);

/// b_{2t+1}(x + t) in the binomial basis; integral coefficients, degree
/// 2t + 1, vanishing at every integer in [-t, t].
BinomialCombo explicit_construction(std::size_t t);

/// Parameters of the explicit construction at disk radius r: the shape ratio
/// q = 2t/r and its reciprocal-scale xi = r/t.
struct ConstructionParams {
    std::size_t t;
    Rat r;
    Rat q;
    Rat xi;
    static ConstructionParams make(std::size_t t, const Rat& r);
};

struct SupNorm {
    Rat exact;         // r * prod_{j=1}^t (r^2 + j^2) / (2t+1)!
    double log_value;  // ln of the same quantity
};

/// Exact supremum of |b_{2t+1}(z + t)| over the complex disk |z| <= r; the
/// maximum is attained on the imaginary axis.
SupNorm construction_sup_norm(std::size_t t, const Rat& r);

/// ln of the sampled maximum of |b_{2t+1}(z + t)| over `samples` points evenly
/// spaced on the circle |z| = r.  Evaluated in log space through the factored
/// form, so it never overflows.
double sample_circle_max_log(std::size_t t, double r, std::size_t samples);

/// f(q) = q ln(4/q^2 + 1) + 4 arctan(q/2) - 2 ln(2) q, strictly decreasing on
/// [2, infinity); its unique positive zero separates bounded from unbounded
/// constructions.
double q0_equation(double q);

/// Bisection zero of q0_equation on [2, 64] with residual at most tolerance
/// (tolerance >= 1e-12).  The value is 3.80572 to five decimals.
double solve_q0(double tolerance);

/**
 * Smallest degree m <= cap such that the box of polynomials
 * sum q_i (x/r)^i with |q_i| <= 1/(m+2) has volume at least 2^{m+1} times the
 * covolume of the degree-<=m binomial-coefficient lattice, i.e.
 *
 *     sum_{i=0}^m ln i!  >=  (m+1) ln(m+2) + (m(m+1)/2) ln r.
 *
 * The geometry-of-numbers theorem then guarantees a nonzero integral
 * binomial combination of degree <= m bounded below 1 on the disk of radius
 * r.  Requires r >= 2 and a degree budget c > 1; the returned m satisfies the
 * inequality exactly and grows like e^{3/2} r, so budgets c below e^{3/2} are
 * reported by the caller as not met.  Throws CapExceeded if no m <= cap works.
 */
std::size_t minkowski_degree_bound(const Rat& r, const Rat& c, std::size_t cap = 1000000);

/**
 * Smallest prime Y with sum_{p <= Y} ln(p)/(p-1) > delta_log_n (the sum
 * diverges, so the cutoff always exists).  Exact by sieving while the target
 * is within sieve range (about 15.5, i.e. Y up to 10^7); beyond that the
 * returned cutoff is the analytic estimate exp(target + gamma + 0.05), which
 * overshoots the minimal prime by at most a factor e^0.1.
 */
Nat min_prime_cutoff_for_existence(double delta_log_n);

}  // namespace copperscope
