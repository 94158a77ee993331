#include "copperscope/arith.hpp"

#include <cmath>
#include <cstddef>

namespace copperscope {

namespace {

// Largest n for which Miller-Rabin with bases 2..41 is a proven
// deterministic primality test.
const Int& deterministic_mr_bound() {
    static const Int bound("3317044064679887385961981");
    return bound;
}

constexpr unsigned long kSmallBases[] = {2,  3,  5,  7,  11, 13, 17,
                                         19, 23, 29, 31, 37, 41};

// One Miller-Rabin round: n - 1 = 2^s * d with d odd.  Returns true if n
// passes for this base (i.e. is possibly prime).
bool mr_round(const Int& n, const Int& base, const Int& d, unsigned long s) {
    Int x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    Int n1 = n - 1;
    if (x == 1 || x == n1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n1) return true;
        if (x == 1) return false;
    }
    return false;
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (unsigned long b : kSmallBases) {
        if (n == b) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
    }
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    for (unsigned long b : kSmallBases) {
        if (!mr_round(n, Int(b), d, s)) return false;
    }
    if (n < deterministic_mr_bound()) return true;

    // Large n: extra rounds with reproducible pseudo-random bases.
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(n);
    for (int i = 0; i < 64; ++i) {
        Int base = rng.get_z_range(n - 3) + 2;
        if (!mr_round(n, base, d, s)) return false;
    }
    return true;
}

PAdicVal padic_valuation(const Rat& x, const Int& p) {
    if (!is_prime(p))
        throw NonPrimeModulus("padic_valuation: modulus " + p.get_str() +
                              " is not prime");
    if (x == 0) return PAdicVal::infinity();
    Int scratch;
    long vnum = static_cast<long>(mpz_remove(
        scratch.get_mpz_t(), x.get_num().get_mpz_t(), p.get_mpz_t()));
    long vden = static_cast<long>(mpz_remove(
        scratch.get_mpz_t(), x.get_den().get_mpz_t(), p.get_mpz_t()));
    return PAdicVal::finite(Int(vnum - vden));
}

Rat padic_abs(const Rat& x, const Int& p) {
    PAdicVal v = padic_valuation(x, p);
    if (v.is_infinity()) return Rat(0);
    const Int& e = v.value();
    if (e >= 0) {
        Rat r(1, ipow(p, e.get_ui()));
        r.canonicalize();
        return r;
    }
    return Rat(ipow(p, Int(-e).get_ui()));
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t m) {
    if (m > 400000000ull)
        throw Error("primes_up_to: sieve bound too large for this build");
    std::vector<std::uint64_t> out;
    if (m < 2) return out;
    std::vector<bool> composite(m + 1, false);
    for (std::uint64_t i = 2; i * i <= m; ++i) {
        if (composite[i]) continue;
        for (std::uint64_t j = i * i; j <= m; j += i) composite[j] = true;
    }
    for (std::uint64_t i = 2; i <= m; ++i)
        if (!composite[i]) out.push_back(i);
    return out;
}

std::optional<Int> smallest_prime_factor_up_to(const Int& n, std::uint64_t m) {
    if (n < 2) throw DegenerateInput("smallest_prime_factor_up_to: n must be >= 2");
    for (std::uint64_t p : primes_up_to(m)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return Int(static_cast<unsigned long>(p));
    }
    return std::nullopt;
}

std::strong_ordering compare_power(const Int& x, unsigned long d, const Int& n) {
    if (d == 0) throw DegenerateInput("compare_power: exponent must be >= 1");
    Int xd;
    mpz_pow_ui(xd.get_mpz_t(), x.get_mpz_t(), d);
    int c = cmp(xd, n);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Int iroot_floor(const Int& n, unsigned long k) {
    if (n < 0) throw DegenerateInput("iroot_floor: negative radicand");
    if (k == 0) throw DegenerateInput("iroot_floor: zeroth root");
    Int r;
    mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

double log_double(const Int& n) {
    if (n <= 0) throw DegenerateInput("log_double: argument must be positive");
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}

double log_double(const Rat& q) {
    if (q <= 0) throw DegenerateInput("log_double: argument must be positive");
    return log_double(Int(q.get_num())) - log_double(Int(q.get_den()));
}

}  // namespace copperscope
