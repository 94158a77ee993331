#include "copperscope/binomial.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace copperscope {

namespace {
constexpr double kEulerGamma = 0.5772156649015329;
}

bool BinomialCombo::all_integer() const {
    for (const auto& c : coeffs)
        if (c.get_den() != 1) return false;
    return true;
}

RatPoly binomial_poly(std::size_t i) {
    RatPoly b{Rat(1)};
    for (std::size_t k = 0; k < i; ++k)
        b = b * RatPoly{Rat(-static_cast<long>(k)), Rat(1)};  // (x - k)
    return b * Rat(Int(1), factorial(i));
}

BinomialCombo to_binomial_basis(const RatPoly& h) {
    BinomialCombo combo;
    if (h.is_zero()) return combo;
    auto n = static_cast<std::size_t>(h.degree());
    std::vector<Rat> vals(n + 1);
    for (std::size_t k = 0; k <= n; ++k) vals[k] = h.eval(Rat(static_cast<unsigned long>(k)));
    // In-place forward difference table; vals[i] becomes Delta^i h(0).
    for (std::size_t level = 1; level <= n; ++level)
        for (std::size_t j = n; j >= level; --j) vals[j] -= vals[j - 1];
    combo.coeffs = std::move(vals);
    while (!combo.coeffs.empty() && combo.coeffs.back() == 0) combo.coeffs.pop_back();
    return combo;
}

RatPoly from_binomial_basis(const BinomialCombo& combo) {
    RatPoly acc;
    RatPoly b{Rat(1)};
    for (std::size_t i = 0; i < combo.coeffs.size(); ++i) {
        if (i > 0) {
            // b_i = b_{i-1} * (x - (i-1)) / i
            b = b * RatPoly{Rat(-static_cast<long>(i - 1)), Rat(1)};
            b = b * Rat(Int(1), Int(static_cast<unsigned long>(i)));
        }
        if (combo.coeffs[i] != 0) acc = acc + b * combo.coeffs[i];
    }
    return acc;
}

bool is_integer_valued(const RatPoly& h) { return to_binomial_basis(h).all_integer(); }

BinomialCombo explicit_construction(std::size_t t) {
    if (t < 1) throw DegenerateInput("explicit_construction: t must be >= 1");
    // b_{2t+1}(x + t) = prod_{j=-t}^{t} (x - j) / (2t+1)!
    IntPoly prod{Int(1)};
    for (long j = -static_cast<long>(t); j <= static_cast<long>(t); ++j)
        prod = prod * IntPoly{Int(-j), Int(1)};
    RatPoly h = prod.to_rat() * Rat(Int(1), factorial(2 * t + 1));
    BinomialCombo combo = to_binomial_basis(h);
    if (!combo.all_integer())
        throw Error("explicit_construction: non-integral binomial coefficients");
    return combo;
}

ConstructionParams ConstructionParams::make(std::size_t t, const Rat& r) {
    if (t < 1) throw DegenerateInput("ConstructionParams: t must be >= 1");
    if (r <= 0) throw DegenerateInput("ConstructionParams: radius must be positive");
    ConstructionParams p;
    p.t = t;
    p.r = r;
    p.q = Rat(2 * Int(static_cast<unsigned long>(t))) / r;
    p.q.canonicalize();
    p.xi = r / Rat(Int(static_cast<unsigned long>(t)));
    p.xi.canonicalize();
    return p;
}

SupNorm construction_sup_norm(std::size_t t, const Rat& r) {
    if (t < 1) throw DegenerateInput("construction_sup_norm: t must be >= 1");
    if (r <= 0) throw DegenerateInput("construction_sup_norm: radius must be positive");
    Rat r2 = r * r;
    Rat prod = r;
    for (std::size_t j = 1; j <= t; ++j)
        prod *= r2 + Rat(static_cast<unsigned long>(j * j));
    prod /= Rat(factorial(2 * t + 1));
    prod.canonicalize();
    return SupNorm{prod, log_double(prod)};
}

double sample_circle_max_log(std::size_t t, double r, std::size_t samples) {
    if (t < 1 || r <= 0 || samples == 0)
        throw DegenerateInput("sample_circle_max_log: bad arguments");
    double lnfact = std::lgamma(static_cast<double>(2 * t + 2));
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < samples; ++k) {
        double theta = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(samples);
        std::complex<double> z = std::polar(r, theta);
        std::complex<double> z2 = z * z;
        double ln = std::log(r);
        for (std::size_t j = 1; j <= t; ++j)
            ln += std::log(std::abs(z2 - std::complex<double>(static_cast<double>(j) *
                                                              static_cast<double>(j))));
        best = std::max(best, ln - lnfact);
    }
    return best;
}

double q0_equation(double q) {
    return q * std::log(4.0 / (q * q) + 1.0) + 4.0 * std::atan(q / 2.0) -
           2.0 * std::log(2.0) * q;
}

double solve_q0(double tolerance) {
    if (tolerance < 1e-12)
        throw DegenerateInput("solve_q0: tolerance below supported resolution");
    double lo = 2.0, hi = 64.0;
    // f is strictly decreasing with f(2) > 0 > f(64); bisect to machine width.
    double mid = 0.5 * (lo + hi);
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        mid = 0.5 * (lo + hi);
        if (q0_equation(mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
    if (std::abs(q0_equation(mid)) > tolerance)
        throw Error("solve_q0: residual above tolerance");
    return mid;
}

std::size_t minkowski_degree_bound(const Rat& r, const Rat& c, std::size_t cap) {
    if (r < 2) throw DegenerateInput("minkowski_degree_bound: r must be >= 2");
    if (c <= 1) throw DegenerateInput("minkowski_degree_bound: budget c must be > 1");
    double lnr = log_double(r);
    double sum_lnfact = 0.0;  // sum_{i=0}^m ln i!, accumulated as m grows
    for (std::size_t m = 0; m <= cap; ++m) {
        if (m > 0) sum_lnfact += std::lgamma(static_cast<double>(m) + 1.0);
        double need = (static_cast<double>(m) + 1.0) * std::log(static_cast<double>(m) + 2.0) +
                      0.5 * static_cast<double>(m) * (static_cast<double>(m) + 1.0) * lnr;
        if (sum_lnfact >= need) return m;
    }
    throw CapExceeded("minkowski_degree_bound: no degree up to cap satisfies the bound");
}

Nat min_prime_cutoff_for_existence(double delta_log_n) {
    if (!(delta_log_n > 0))
        throw DegenerateInput("min_prime_cutoff_for_existence: target must be positive");
    constexpr std::uint64_t kSieveLimit = 10000000;  // sum reaches ~15.5 here
    double sum = 0.0;
    for (std::uint64_t p : primes_up_to(kSieveLimit)) {
        sum += std::log(static_cast<double>(p)) / static_cast<double>(p - 1);
        if (sum > delta_log_n) return Nat(static_cast<unsigned long>(p));
    }
    // Beyond sieve range: sum(Y) = ln Y - gamma + o(1), so exp(target + gamma)
    // is the crossover; the 0.05 margin absorbs the error term.
    double est = std::exp(delta_log_n + kEulerGamma + 0.05);
    Nat out;
    mpz_set_d(out.get_mpz_t(), est);
    return out + 1;
}

}  // namespace copperscope
