#include "copperscope/negative.hpp"

#include <cmath>
#include <sstream>

namespace copperscope {

namespace {
constexpr double kEulerGamma = 0.5772156649015329;
// Shortcut constant for the condition c * N^eps > M: any c below
// e^{gamma - 1/ln M} (>= 1.497445 for M >= 319) is sound; 1.48744 keeps a
// visible margin.  The exact form is always evaluated alongside and subsumes
// the shortcut.
constexpr double kShortcutConstant = 1.48744;

// Exact b_i evaluated at a rational: prod_{k=0}^{i-1} (w - k) / i!.
Rat binomial_value(const Rat& w, std::size_t i) {
    Rat prod(1);
    for (std::size_t k = 0; k < i; ++k) prod *= w - Rat(static_cast<unsigned long>(k));
    prod /= Rat(factorial(i));
    prod.canonicalize();
    return prod;
}
}  // namespace

double prime_product_log(std::uint64_t M) {
    if (M < 2) throw DegenerateInput("prime_product_log: M must be >= 2");
    double sum = 0.0;
    for (std::uint64_t p : primes_up_to(M))
        sum += std::log(static_cast<double>(p)) / static_cast<double>(p - 1);
    return sum;
}

double rosser_lower_bound(std::uint64_t M) {
    if (M < 319) throw DomainTooSmall("rosser_lower_bound: valid for M >= 319 only");
    double lnM = std::log(static_cast<double>(M));
    return -lnM + kEulerGamma - 1.0 / lnM;
}

const char* to_string(NegativeVerdict v) {
    switch (v) {
        case NegativeVerdict::SmallFactorFound: return "SmallFactorFound";
        case NegativeVerdict::ForcesSmallFactor: return "ForcesSmallFactor";
        case NegativeVerdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

NegativeAnalysis analyze(const Nat& modulus, unsigned degree, const Rat& epsilon,
                         std::uint64_t M) {
    if (modulus < 2) throw DegenerateInput("analyze: modulus must be >= 2");
    if (degree < 1) throw DegenerateInput("analyze: degree must be >= 1");
    if (epsilon <= 0) throw DegenerateInput("analyze: epsilon must be positive");
    if (M < 2) throw DegenerateInput("analyze: M must be >= 2");

    NegativeAnalysis a;
    a.modulus = modulus;
    a.degree = degree;
    a.epsilon = epsilon;
    a.M = M;

    a.prime_product_log = prime_product_log(M);
    double eps_ln_n = mpq_get_d(epsilon.get_mpq_t()) * log_double(modulus);
    a.capacity_log = -a.prime_product_log + eps_ln_n;

    double lnM = std::log(static_cast<double>(M));
    double n_eps = std::exp(eps_ln_n);  // may be inf for huge inputs; comparisons still work
    a.constant_condition = M >= 319 && kShortcutConstant * n_eps > static_cast<double>(M);
    a.exact_condition =
        M >= 319 && std::exp(kEulerGamma - 1.0 / lnM) * n_eps > static_cast<double>(M);

    a.small_factor = smallest_prime_factor_up_to(modulus, M);

    std::ostringstream note;
    if (a.small_factor) {
        a.verdict = NegativeVerdict::SmallFactorFound;
        note << "modulus has the prime factor " << a.small_factor->get_str() << " <= "
             << M;
    } else if (a.capacity_log > 1e-9) {
        a.verdict = NegativeVerdict::ForcesSmallFactor;
        note << "capacity exceeds one (log " << a.capacity_log
             << "): no bounded auxiliary polynomial with binomial indices up to " << M
             << " exists for roots of size modulus^(1/" << degree << " + "
             << epsilon.get_str() << ")";
    } else {
        a.verdict = NegativeVerdict::Inconclusive;
        note << "capacity does not exceed one (log " << a.capacity_log
             << "): the analysis is silent for this epsilon and M";
    }
    a.note = note.str();
    return a;
}

LemmaBoundReport verify_lemma_bounds(const std::vector<std::vector<Rat>>& a,
                                     const IntPoly& f, const Nat& modulus,
                                     std::uint64_t M, std::size_t sample_count,
                                     unsigned long seed) {
    if (modulus < 1) throw DegenerateInput("verify_lemma_bounds: modulus must be >= 1");
    LemmaBoundReport rep;
    rep.samples = sample_count;

    std::vector<std::uint64_t> primes = primes_up_to(M);
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(seed);

    for (std::size_t s = 0; s < sample_count; ++s) {
        Int z = rng.get_z_range(Int(2000001)) - 1000000;
        Rat fz_over_n(f.eval(z), modulus);
        fz_over_n.canonicalize();

        Rat h(0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i].empty()) continue;
            Rat bi = binomial_value(Rat(z), i);
            for (std::size_t j = 0; j < a[i].size(); ++j) {
                if (a[i][j] == 0) continue;
                h += a[i][j] * bi * binomial_value(fz_over_n, j);
            }
        }
        for (std::uint64_t pu : primes) {
            Int p(static_cast<unsigned long>(pu));
            if (mpz_divisible_p(modulus.get_mpz_t(), p.get_mpz_t())) continue;
            ++rep.checks;
            PAdicVal v = padic_valuation(h, p);
            if (!v.is_infinity() && v.value() < 0)
                rep.violations.push_back({z, p, v.value()});
        }
    }
    return rep;
}

}  // namespace copperscope
