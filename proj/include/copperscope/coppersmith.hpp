#pragma once

#include <cstddef>
#include <vector>

#include "copperscope/arith.hpp"
#include "copperscope/lattice.hpp"
#include "copperscope/poly.hpp"

namespace copperscope {

/**
 * A small-root instance: find all integers r with |r| <= radius and
 * f(r) = 0 mod modulus, for monic f.  multiplicity is the power of the
 * modulus the lattice works modulo; extra_rows appends further shift rows on
 * top of the d*(multiplicity+1) base rows.
 */
struct Problem {
    IntPoly f;
    Nat modulus;
    Nat radius;
    unsigned multiplicity = 1;
    unsigned extra_rows = 0;

    void validate() const;
    std::size_t dimension() const {
        return static_cast<std::size_t>(f.degree()) * (multiplicity + 1) + extra_rows;
    }
};

/**
 * Pick lattice parameters for a requested radius: multiplicity grows as the
 * radius approaches modulus^(1/d) (ceil of the reciprocal gap, capped at 12)
 * and extra_rows defaults to d.
 */
Problem make_problem(IntPoly f, Nat modulus, Nat radius);

/**
 * Coefficient-vector lattice of the polynomials g_{ij}(x * radius) with
 *   g_{ij} = x^i * f^j * N^{m-j}   for 0 <= j <= m, 0 <= i < d,
 * plus extra shift rows x^{d+e} * f^m for 0 <= e < extra_rows, continuing the
 * degree ladder.  The basis is triangular with one row per degree
 * 0..dimension-1.
 */
LatticeBasis build_lattice(const Problem& p);

/**
 * Norm certificate: true iff |h(x * X)|_2 < N^m / sqrt(w) exactly, where w is
 * the number of nonzero terms of h.  When it holds, every integer r with
 * |r| <= X and f(r) = 0 mod N^m for the lattice's congruence family is a root
 * of h over the rationals.
 */
bool howgrave_graham_check(const RatPoly& h, const Nat& X, const Nat& N, unsigned m);

/**
 * Exactly the integers r with |r| <= X and h(r) = 0, ascending.  Sturm
 * real-root isolation down to unit intervals followed by exact evaluation at
 * the candidate integers; no floating point anywhere.
 */
std::vector<Int> isolate_integer_roots(const RatPoly& h, const Nat& X);

struct SolveReport {
    std::vector<Int> roots;      // all |r| <= radius with f(r) = 0 mod N
    RatPoly auxiliary;           // polynomial extracted from the reduced basis
    Rat scaled_norm_sq;          // |h(x*X)|_2^2, the certificate evidence
    std::size_t dimension = 0;   // lattice dimension w
    unsigned multiplicity = 0;
    unsigned extra_rows = 0;
    bool certified = false;      // certificate held at the requested radius
    Nat certified_radius;        // requested radius if certified, else the
                                 // largest radius certified by halving (0 if none)
    unsigned long swap_count = 0;
};

/// Build, reduce, certify, isolate, verify.  Roots are filled only when the
/// certificate holds; each returned root is re-verified against the congruence.
SolveReport run(const Problem& p);

/// As run(), but throws BoundNotCertified (carrying the halving-certified
/// radius) when the certificate fails at the requested radius.
std::vector<Int> solve(const Problem& p);

/// Largest radius <= from, stepping down by halving, at which the reduced
/// basis passes the norm certificate; 0 when even radius 1 fails.
Nat largest_certified_radius(const IntPoly& f, const Nat& modulus, unsigned multiplicity,
                             unsigned extra_rows, const Nat& from);

struct DemoReport {
    unsigned bits = 0;
    unsigned long seed = 0;
    Nat modulus;
    Nat ciphertext;
    Int known_prefix;   // the stereotyped approximation of the message
    Int planted;        // message minus prefix, the root to recover
    Nat radius;
    IntPoly f;
    std::vector<Int> roots;
    bool recovered = false;
    std::size_t dimension = 0;
    unsigned multiplicity = 0;
    unsigned extra_rows = 0;
    bool certified = false;
    Nat certified_radius;
    double build_ms = 0, reduce_ms = 0, total_ms = 0;
};

/**
 * Self-checking demonstration: generate an RSA modulus of the given size,
 * encrypt a message with public exponent 3 whose high part is known, and
 * recover the unknown low part as a small root of (prefix + x)^3 - c mod N.
 * Fully deterministic for a fixed seed.  bits must lie in [16, 512].
 */
DemoReport demo_stereotyped_rsa(unsigned bits, unsigned long seed);

}  // namespace copperscope
