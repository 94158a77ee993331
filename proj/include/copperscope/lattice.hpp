#pragma once

#include <cstddef>
#include <vector>

#include "copperscope/arith.hpp"

namespace copperscope {

/**
 * A lattice basis: linearly independent rows of equal width, with rational
 * entries.  Row count must not exceed the width.
 */
struct LatticeBasis {
    std::vector<std::vector<Rat>> rows;

    std::size_t row_count() const { return rows.size(); }
    std::size_t width() const { return rows.empty() ? 0 : rows[0].size(); }

    /// Throws DegenerateInput on ragged rows or more rows than columns.
    void validate() const;
};

/// Exact Gram-Schmidt data: b_i = ortho_i + sum_{j<i} mu[i][j] * ortho_j.
struct GramSchmidt {
    std::vector<std::vector<Rat>> ortho;
    std::vector<std::vector<Rat>> mu;  // lower triangular, unit diagonal
    std::vector<Rat> norms_sq;         // |ortho_i|^2, all nonzero
};

/// Exact rational Gram-Schmidt orthogonalization; throws DependentRows.
GramSchmidt gram_schmidt(const LatticeBasis& b);

struct ReductionReport {
    LatticeBasis reduced;
    std::vector<std::vector<Int>> transform;  // reduced = transform * input
    Rat delta;
    unsigned long swap_count = 0;
};

/**
 * LLL reduction with exact arithmetic (integral de Weger representation; the
 * rational input is pre-scaled by the common denominator, which cancels in
 * all reduction conditions).  The output basis is size-reduced
 * (|mu_ij| <= 1/2) and satisfies the Lovasz condition for the given delta,
 * which must lie in (1/4, 1).
 */
ReductionReport lll_reduce(const LatticeBasis& b, const Rat& delta = Rat(99, 100));

}  // namespace copperscope
