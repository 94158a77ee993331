#include "copperscope/coppersmith.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace copperscope {

namespace {

// Exact reduction stays tractable at desk scale up to this multiplicity
// (lattice dimension about 13 * degree).
constexpr unsigned kMultiplicityCap = 12;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Positive-scale normalization: clear denominators and divide by the content.
// Scaling factors are positive, so the sign pattern is unchanged.
IntPoly primitive_int(const RatPoly& p) {
    auto [ip, den] = p.cleared();
    Int cont = ip.content();
    if (cont <= 1) return ip;
    std::vector<Int> out;
    out.reserve(ip.coeffs().size());
    for (const auto& v : ip.coeffs()) out.push_back(v / cont);
    return IntPoly(std::move(out));
}

// Canonical Sturm chain of a squarefree primitive integer polynomial:
// s0 = g, s1 = g', s_{k+1} = -rem(s_{k-1}, s_k), each normalized primitive.
std::vector<IntPoly> sturm_chain(const IntPoly& g) {
    std::vector<IntPoly> chain;
    chain.push_back(g);
    if (g.degree() <= 0) return chain;
    chain.push_back(primitive_int(g.to_rat().derivative()));
    while (chain.back().degree() > 0) {
        RatPoly q, r;
        RatPoly::divmod(chain[chain.size() - 2].to_rat(), chain.back().to_rat(), q, r);
        if (r.is_zero()) break;  // cannot happen for squarefree input
        chain.push_back(primitive_int(-r));
    }
    return chain;
}

// Sign variations of the chain at integer t, zeros skipped.  With this
// convention V(a) - V(b) counts the distinct real roots in (a, b].
int variations_at(const std::vector<IntPoly>& chain, const Int& t) {
    int count = 0, last = 0;
    for (const auto& s : chain) {
        int sgn = mpz_sgn(Int(s.eval(t)).get_mpz_t());
        if (sgn == 0) continue;
        if (last != 0 && sgn != last) ++count;
        last = sgn;
    }
    return count;
}

void isolate_recurse(const std::vector<IntPoly>& chain, const IntPoly& g, const Int& lo,
                     const Int& hi, int vlo, int vhi, std::vector<Int>& out) {
    if (vlo == vhi) return;
    if (hi - lo == 1) {
        // Unit interval (lo, hi]: hi is the only integer candidate.
        if (g.eval(hi) == 0) out.push_back(hi);
        return;
    }
    Int mid = (lo + hi);
    mpz_fdiv_q_2exp(mid.get_mpz_t(), mid.get_mpz_t(), 1);
    int vmid = variations_at(chain, mid);
    isolate_recurse(chain, g, lo, mid, vlo, vmid, out);
    isolate_recurse(chain, g, mid, hi, vmid, vhi, out);
}

}  // namespace

void Problem::validate() const {
    if (f.degree() < 1 || !f.is_monic())
        throw NonMonicPolynomial("Problem: f must be monic of degree >= 1");
    if (modulus < 2) throw DegenerateInput("Problem: modulus must be >= 2");
    if (radius < 1) throw DegenerateInput("Problem: radius must be >= 1");
    if (multiplicity < 1) throw DegenerateInput("Problem: multiplicity must be >= 1");
}

Problem make_problem(IntPoly f, Nat modulus, Nat radius) {
    Problem p;
    p.f = std::move(f);
    p.modulus = std::move(modulus);
    p.radius = std::move(radius);
    if (p.f.degree() < 1 || !p.f.is_monic())
        throw NonMonicPolynomial("make_problem: f must be monic of degree >= 1");
    if (p.modulus < 2) throw DegenerateInput("make_problem: modulus must be >= 2");
    if (p.radius < 1) throw DegenerateInput("make_problem: radius must be >= 1");
    auto d = static_cast<unsigned>(p.f.degree());
    double gap = 1.0 - static_cast<double>(d) * log_double(p.radius) / log_double(p.modulus);
    unsigned m = kMultiplicityCap;
    if (gap > 1.0 / kMultiplicityCap) {
        double est = std::ceil(1.0 / gap - 1e-9);
        m = est < 1 ? 1
                    : (est > kMultiplicityCap ? kMultiplicityCap
                                              : static_cast<unsigned>(est));
    }
    p.multiplicity = m;
    p.extra_rows = d;
    return p;
}

LatticeBasis build_lattice(const Problem& p) {
    p.validate();
    auto d = static_cast<std::size_t>(p.f.degree());
    unsigned m = p.multiplicity;
    std::size_t w = p.dimension();

    std::vector<Int> xpow(w, Int(1));
    for (std::size_t k = 1; k < w; ++k) xpow[k] = xpow[k - 1] * p.radius;

    std::vector<IntPoly> fpow(m + 1);
    fpow[0] = IntPoly{Int(1)};
    for (unsigned j = 1; j <= m; ++j) fpow[j] = fpow[j - 1] * p.f;

    std::vector<Int> npow(m + 1, Int(1));
    for (unsigned j = 1; j <= m; ++j) npow[j] = npow[j - 1] * p.modulus;

    LatticeBasis basis;
    basis.rows.reserve(w);
    auto push_row = [&](const IntPoly& g) {
        std::vector<Rat> row(w, Rat(0));
        for (std::size_t k = 0; k <= static_cast<std::size_t>(g.degree()); ++k)
            row[k] = Rat(g.coeff(k) * xpow[k]);
        basis.rows.push_back(std::move(row));
    };

    for (unsigned j = 0; j <= m; ++j)
        for (std::size_t i = 0; i < d; ++i)
            push_row(IntPoly::monomial(i) * fpow[j] * npow[m - j]);
    // Shift rows continue the degree ladder above the j = m block.
    for (unsigned e = 0; e < p.extra_rows; ++e)
        push_row(IntPoly::monomial(d + e) * fpow[m]);
    return basis;
}

bool howgrave_graham_check(const RatPoly& h, const Nat& X, const Nat& N, unsigned m) {
    if (h.is_zero()) return false;
    RatPoly scaled = h.scaled_arg(Rat(X));
    Rat norm_sq(0);
    std::size_t terms = 0;
    for (const auto& c : scaled.coeffs()) {
        if (c == 0) continue;
        ++terms;
        norm_sq += c * c;
    }
    // |h(xX)|^2 * w < N^{2m}, squared to stay rational.
    Rat bound(ipow(N, 2ul * m));
    return norm_sq * Rat(static_cast<unsigned long>(terms)) < bound;
}

std::vector<Int> isolate_integer_roots(const RatPoly& h, const Nat& X) {
    if (h.is_zero()) throw DegenerateInput("isolate_integer_roots: zero polynomial");
    if (X < 0) throw DegenerateInput("isolate_integer_roots: negative radius");
    IntPoly g = squarefree_part(h);
    std::vector<Int> out;
    if (g.degree() <= 0) return out;
    std::vector<IntPoly> chain = sturm_chain(g);
    Int lo = -Int(X) - 1, hi = X;
    isolate_recurse(chain, g, lo, hi, variations_at(chain, lo), variations_at(chain, hi),
                    out);
    return out;  // ascending by construction
}

namespace {

struct Certified {
    bool ok = false;
    RatPoly aux;
    Rat scaled_norm_sq;
    unsigned long swaps = 0;
};

// Reduce the instance lattice and extract the first-row polynomial together
// with its certificate data.
Certified reduce_and_extract(const Problem& p) {
    LatticeBasis basis = build_lattice(p);
    ReductionReport rep = lll_reduce(basis, Rat(99, 100));

    const auto& row = rep.reduced.rows[0];
    std::vector<Rat> coeffs(row.size());
    Rat xinv(Int(1), p.radius);
    xinv.canonicalize();
    Rat scale(1);
    Rat norm_sq(0);
    for (std::size_t k = 0; k < row.size(); ++k) {
        coeffs[k] = row[k] * scale;  // h[k] = v[k] / X^k
        scale *= xinv;
        norm_sq += row[k] * row[k];
    }
    Certified c;
    c.aux = RatPoly(std::move(coeffs));
    c.scaled_norm_sq = std::move(norm_sq);
    c.swaps = rep.swap_count;
    c.ok = howgrave_graham_check(c.aux, p.radius, p.modulus, p.multiplicity);
    return c;
}

}  // namespace

SolveReport run(const Problem& p) {
    p.validate();
    SolveReport rep;
    rep.dimension = p.dimension();
    rep.multiplicity = p.multiplicity;
    rep.extra_rows = p.extra_rows;

    Certified c = reduce_and_extract(p);
    rep.auxiliary = std::move(c.aux);
    rep.scaled_norm_sq = std::move(c.scaled_norm_sq);
    rep.swap_count = c.swaps;
    rep.certified = c.ok;

    if (!rep.certified) {
        Nat half = p.radius / 2;
        rep.certified_radius =
            half < 1 ? Nat(0)
                     : largest_certified_radius(p.f, p.modulus, p.multiplicity,
                                                p.extra_rows, half);
        return rep;
    }
    rep.certified_radius = p.radius;

    for (Int& r : isolate_integer_roots(rep.auxiliary, p.radius)) {
        if (p.f.eval_mod(r, p.modulus) == 0) rep.roots.push_back(std::move(r));
    }
    return rep;
}

std::vector<Int> solve(const Problem& p) {
    SolveReport rep = run(p);
    if (!rep.certified) {
        std::string what = "solve: norm certificate failed at radius " +
                           p.radius.get_str() + " with multiplicity " +
                           std::to_string(p.multiplicity);
        if (p.multiplicity >= kMultiplicityCap) what += " (multiplicity cap reached)";
        what += "; largest certified radius " + rep.certified_radius.get_str();
        throw BoundNotCertified(what, rep.certified_radius);
    }
    return rep.roots;
}

Nat largest_certified_radius(const IntPoly& f, const Nat& modulus, unsigned multiplicity,
                             unsigned extra_rows, const Nat& from) {
    Problem p;
    p.f = f;
    p.modulus = modulus;
    p.multiplicity = multiplicity;
    p.extra_rows = extra_rows;
    for (Nat x = from; x >= 1; x /= 2) {
        p.radius = x;
        if (reduce_and_extract(p).ok) return x;
    }
    return Nat(0);
}

DemoReport demo_stereotyped_rsa(unsigned bits, unsigned long seed) {
    if (bits < 16 || bits > 512)
        throw DegenerateInput("demo_stereotyped_rsa: bits must lie in [16, 512]");
    auto t0 = Clock::now();

    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(seed);
    auto random_prime = [&](unsigned nbits) {
        for (;;) {
            Int cand = rng.get_z_bits(nbits);
            mpz_setbit(cand.get_mpz_t(), nbits - 1);
            mpz_setbit(cand.get_mpz_t(), 0);
            if (is_prime(cand)) return cand;
        }
    };

    DemoReport rep;
    rep.bits = bits;
    rep.seed = seed;
    Int p = random_prime(bits / 2);
    Int q = random_prime(bits / 2);
    while (q == p) q = random_prime(bits / 2);
    rep.modulus = p * q;
    const Nat& N = rep.modulus;

    // Radius: the stereotyped bound N^(1/3)/4, tightened to N^(4/15) so the
    // default schedule certifies it at every supported modulus size.
    Nat x_classic = iroot_floor(N, 3) / 4;
    Nat x_sched = iroot_floor(ipow(N, 4), 15);
    rep.radius = x_classic < x_sched ? x_classic : x_sched;
    if (rep.radius < 1) rep.radius = 1;

    rep.known_prefix = rng.get_z_range(N);
    rep.planted = rng.get_z_range(2 * rep.radius + 1) - rep.radius;

    Int message = rep.known_prefix + rep.planted;
    Int c;
    Int three(3);
    mpz_powm(c.get_mpz_t(), message.get_mpz_t(), three.get_mpz_t(), N.get_mpz_t());
    rep.ciphertext = c;

    auto reduce_mod = [&](Int v) {
        v %= N;
        if (v < 0) v += N;
        return v;
    };
    const Int& s = rep.known_prefix;
    rep.f = IntPoly{reduce_mod(s * s * s - c), reduce_mod(3 * s * s), reduce_mod(3 * s),
                    Int(1)};

    auto t_build = Clock::now();
    Problem prob = make_problem(rep.f, N, rep.radius);
    rep.multiplicity = prob.multiplicity;
    rep.extra_rows = prob.extra_rows;
    rep.dimension = prob.dimension();
    rep.build_ms = ms_since(t_build);

    auto t_reduce = Clock::now();
    SolveReport sol = run(prob);
    rep.reduce_ms = ms_since(t_reduce);

    rep.roots = sol.roots;
    rep.certified = sol.certified;
    rep.certified_radius = sol.certified_radius;
    rep.recovered =
        std::find(rep.roots.begin(), rep.roots.end(), rep.planted) != rep.roots.end();
    rep.total_ms = ms_since(t0);
    return rep;
}

}  // namespace copperscope
