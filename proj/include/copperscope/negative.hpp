#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "copperscope/arith.hpp"
#include "copperscope/poly.hpp"

namespace copperscope {

/// sum_{p <= M} ln(p)/(p-1), i.e. ln of prod_{p <= M} p^{1/(p-1)}.
double prime_product_log(std::uint64_t M);

/// -ln M + gamma - 1/ln M, valid for M >= 319 (throws DomainTooSmall below).
/// An explicit lower bound for -sum_{p <= M} ln(p)/(p-1).
double rosser_lower_bound(std::uint64_t M);

enum class NegativeVerdict { SmallFactorFound, ForcesSmallFactor, Inconclusive };

const char* to_string(NegativeVerdict v);

struct NegativeAnalysis {
    Nat modulus;
    unsigned degree = 0;
    Rat epsilon;
    std::uint64_t M = 0;

    std::optional<Int> small_factor;  // least prime <= M dividing the modulus
    double prime_product_log = 0;     // sum_{p <= M} ln(p)/(p-1)
    double capacity_log = 0;          // -prime_product_log + epsilon * ln(modulus)

    // Sufficient conditions for capacity_log > 0:
    bool constant_condition = false;  // 1.48744 * N^eps > M with M >= 319
    bool exact_condition = false;     // e^{gamma - 1/ln M} * N^eps > M (M >= 319)

    NegativeVerdict verdict = NegativeVerdict::Inconclusive;
    std::string note;
};

/**
 * Degree-capped binomial auxiliary polynomials cannot certify roots of size
 * modulus^(1/degree + epsilon) unless the modulus has a prime factor <= M.
 * The analysis first trial-divides by every prime <= M (SmallFactorFound);
 * otherwise it evaluates the capacity of the enlarged adelic set,
 *   capacity_log = -sum_{p <= M} ln(p)/(p-1) + epsilon * ln(modulus),
 * and reports ForcesSmallFactor when that is positive beyond 1e-9 slack,
 * Inconclusive otherwise.  The inclusive reading "factor <= M" is used.
 */
NegativeAnalysis analyze(const Nat& modulus, unsigned degree, const Rat& epsilon,
                         std::uint64_t M);

/**
 * Empirical check of the local boundedness the analysis relies on: for
 * integer combinations h(x) = sum a_ij b_i(x) b_j(f(x)/N), every sampled
 * integer z and every prime p <= M with p not dividing N must satisfy
 * v_p(h(z)) >= 0.  Violations (possible when some a_ij is not an integer)
 * are reported with their witness.
 */
struct LemmaBoundReport {
    struct Violation {
        Int z;
        Int p;
        Int valuation;
    };
    std::size_t samples = 0;
    std::size_t checks = 0;
    std::vector<Violation> violations;
};

LemmaBoundReport verify_lemma_bounds(const std::vector<std::vector<Rat>>& a,
                                     const IntPoly& f, const Nat& modulus,
                                     std::uint64_t M, std::size_t sample_count,
                                     unsigned long seed);

}  // namespace copperscope
