#include "copperscope/lattice.hpp"

#include <utility>

namespace copperscope {

void LatticeBasis::validate() const {
    if (rows.empty()) throw DegenerateInput("LatticeBasis: empty basis");
    std::size_t w = rows[0].size();
    if (w == 0) throw DegenerateInput("LatticeBasis: zero-width rows");
    for (const auto& r : rows)
        if (r.size() != w) throw DegenerateInput("LatticeBasis: ragged rows");
    if (rows.size() > w)
        throw DegenerateInput("LatticeBasis: more rows than columns");
}

GramSchmidt gram_schmidt(const LatticeBasis& b) {
    b.validate();
    std::size_t n = b.row_count(), w = b.width();
    GramSchmidt g;
    g.ortho.assign(n, std::vector<Rat>(w, Rat(0)));
    g.mu.assign(n, std::vector<Rat>(n, Rat(0)));
    g.norms_sq.assign(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        g.ortho[i] = b.rows[i];
        g.mu[i][i] = 1;
        for (std::size_t j = 0; j < i; ++j) {
            Rat dot(0);
            for (std::size_t k = 0; k < w; ++k) dot += b.rows[i][k] * g.ortho[j][k];
            Rat m = dot / g.norms_sq[j];
            g.mu[i][j] = m;
            for (std::size_t k = 0; k < w; ++k) g.ortho[i][k] -= m * g.ortho[j][k];
        }
        Rat norm(0);
        for (std::size_t k = 0; k < w; ++k) norm += g.ortho[i][k] * g.ortho[i][k];
        if (norm == 0) throw DependentRows("gram_schmidt: dependent rows");
        g.norms_sq[i] = std::move(norm);
    }
    return g;
}

namespace {

// Integral LLL state (de Weger).  D[i] is the Gram determinant of the first
// i rows (D[0] = 1) and lam[i][j] = mu_ij * D[j+1]; all quantities stay
// integral throughout and every division below is exact.
struct LllState {
    std::size_t n, w;
    std::vector<std::vector<Int>> basis;
    std::vector<std::vector<Int>> transform;
    std::vector<std::vector<Int>> lam;
    std::vector<Int> D;
    unsigned long swaps = 0;

    explicit LllState(std::vector<std::vector<Int>> rows)
        : n(rows.size()), w(rows[0].size()), basis(std::move(rows)) {
        transform.assign(n, std::vector<Int>(n, Int(0)));
        for (std::size_t i = 0; i < n; ++i) transform[i][i] = 1;
        lam.assign(n, std::vector<Int>(n, Int(0)));
        D.assign(n + 1, Int(1));
    }

    Int dot(std::size_t i, std::size_t j) const {
        Int acc(0);
        for (std::size_t k = 0; k < w; ++k) acc += basis[i][k] * basis[j][k];
        return acc;
    }

    static Int exact_div(const Int& a, const Int& b) {
        Int q;
        mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }

    // Fill lam row k and D[k+1] from the current basis.
    void gram_row(std::size_t k) {
        for (std::size_t j = 0; j <= k; ++j) {
            Int u = dot(k, j);
            for (std::size_t i = 0; i < j; ++i)
                u = exact_div(D[i + 1] * u - lam[k][i] * lam[j][i], D[i]);
            if (j < k)
                lam[k][j] = std::move(u);
            else {
                if (u == 0) throw DependentRows("lll_reduce: dependent rows");
                D[k + 1] = std::move(u);
            }
        }
    }

    // Size-reduce row k against row l (l < k): afterwards |mu_kl| <= 1/2.
    void reduce(std::size_t k, std::size_t l) {
        Int two_lam = 2 * lam[k][l];
        if (cmp(abs(two_lam), D[l + 1]) <= 0) return;
        Int q;
        // round(lam / D[l+1]), ties toward +inf keep |mu| <= 1/2
        mpz_fdiv_q(q.get_mpz_t(), Int(two_lam + D[l + 1]).get_mpz_t(),
                   Int(2 * D[l + 1]).get_mpz_t());
        for (std::size_t c = 0; c < w; ++c)
            mpz_submul(basis[k][c].get_mpz_t(), q.get_mpz_t(), basis[l][c].get_mpz_t());
        for (std::size_t c = 0; c < n; ++c)
            mpz_submul(transform[k][c].get_mpz_t(), q.get_mpz_t(),
                       transform[l][c].get_mpz_t());
        mpz_submul(lam[k][l].get_mpz_t(), q.get_mpz_t(), D[l + 1].get_mpz_t());
        for (std::size_t i = 0; i < l; ++i)
            mpz_submul(lam[k][i].get_mpz_t(), q.get_mpz_t(), lam[l][i].get_mpz_t());
    }

    // Swap rows k and k-1, updating lam and D.
    void swap_rows(std::size_t k) {
        basis[k].swap(basis[k - 1]);
        transform[k].swap(transform[k - 1]);
        for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
        Int lambda = lam[k][k - 1];
        Int B = exact_div(D[k - 1] * D[k + 1] + lambda * lambda, D[k]);
        for (std::size_t i = k + 1; i < n; ++i) {
            Int t = lam[i][k];
            lam[i][k] = exact_div(D[k + 1] * lam[i][k - 1] - lambda * t, D[k]);
            lam[i][k - 1] = exact_div(B * t + lambda * lam[i][k], D[k + 1]);
        }
        D[k] = std::move(B);
        ++swaps;
    }
};

}  // namespace

namespace {

// One full reduction pass over an integer basis; the transform rows are
// updated in place.
unsigned long lll_pass(LllState& st, const Rat& delta) {
    const Int dp(delta.get_num()), dq(delta.get_den());
    std::size_t k = 1, kmax = 0;
    st.gram_row(0);
    while (k < st.n) {
        if (k > kmax) {
            kmax = k;
            st.gram_row(k);
        }
        st.reduce(k, k - 1);
        // Lovasz in integral form: swap when
        //   delta * D[k]^2 > D[k+1]*D[k-1] + lam_{k,k-1}^2.
        Int lhs = dp * st.D[k] * st.D[k];
        Int rhs = dq * (st.D[k + 1] * st.D[k - 1] + st.lam[k][k - 1] * st.lam[k][k - 1]);
        if (lhs > rhs) {
            st.swap_rows(k);
            k = k > 1 ? k - 1 : 1;
        } else {
            for (std::size_t l = k - 1; l-- > 0;) st.reduce(k, l);
            ++k;
        }
    }
    return st.swaps;
}

}  // namespace

ReductionReport lll_reduce(const LatticeBasis& b, const Rat& delta) {
    b.validate();
    if (!(delta > Rat(1, 4) && delta < 1))
        throw BadDelta("lll_reduce: delta must lie in (1/4, 1)");

    // Scale every entry by the common denominator; the Lovasz and
    // size-reduction conditions are invariant under uniform scaling.
    Int den(1);
    for (const auto& row : b.rows)
        for (const auto& v : row)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<std::vector<Int>> rows(b.row_count());
    for (std::size_t i = 0; i < b.row_count(); ++i) {
        rows[i].reserve(b.width());
        for (const auto& v : b.rows[i]) {
            Rat scaled = v * Rat(den);
            scaled.canonicalize();
            rows[i].emplace_back(scaled.get_num());
        }
    }

    unsigned long swaps = 0;
    std::vector<std::vector<Int>> transform;
    // Progressive reduction: coarse passes take the bulk of the swaps on a
    // cheaper state, the final pass at the requested delta then starts from
    // an almost reduced basis.  The composed transform stays unimodular and
    // the output satisfies the requested conditions.
    auto coarse_pass = [&](const Rat& d) {
        LllState coarse(std::move(rows));
        swaps += lll_pass(coarse, d);
        rows = std::move(coarse.basis);
        if (transform.empty()) {
            transform = std::move(coarse.transform);
            return;
        }
        std::size_t n = rows.size();
        std::vector<std::vector<Int>> composed(n, std::vector<Int>(n, Int(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                if (coarse.transform[i][l] == 0) continue;
                for (std::size_t j = 0; j < n; ++j)
                    composed[i][j] += coarse.transform[i][l] * transform[l][j];
            }
        transform = std::move(composed);
    };
    if (rows.size() > 4) {
        for (const Rat& d : {Rat(2, 5), Rat(3, 4)})
            if (delta > d) coarse_pass(d);
    }
    LllState st(std::move(rows));
    swaps += lll_pass(st, delta);

    ReductionReport rep;
    rep.delta = delta;
    rep.swap_count = swaps;
    if (transform.empty()) {
        rep.transform = std::move(st.transform);
    } else {
        std::size_t n = st.n;
        rep.transform.assign(n, std::vector<Int>(n, Int(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) {
                if (st.transform[i][l] == 0) continue;
                for (std::size_t j = 0; j < n; ++j)
                    rep.transform[i][j] += st.transform[i][l] * transform[l][j];
            }
    }
    rep.reduced.rows.assign(st.n, {});
    Rat inv_den(Int(1), den);
    inv_den.canonicalize();
    for (std::size_t i = 0; i < st.n; ++i) {
        rep.reduced.rows[i].reserve(st.w);
        for (const auto& v : st.basis[i]) {
            Rat r = Rat(v) * inv_den;
            r.canonicalize();
            rep.reduced.rows[i].push_back(std::move(r));
        }
    }
    return rep;
}

}  // namespace copperscope
