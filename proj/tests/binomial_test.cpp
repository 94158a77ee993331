#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "copperscope/binomial.hpp"

using namespace copperscope;

TEST_CASE("binomial_poly closed forms") {
    CHECK(binomial_poly(0) == RatPoly{Rat(1)});
    CHECK(binomial_poly(1) == RatPoly{Rat(0), Rat(1)});
    CHECK(binomial_poly(2) == RatPoly{Rat(0), Rat(-1, 2), Rat(1, 2)});
    CHECK(binomial_poly(5).eval(Rat(7)) == Rat(21));  // C(7,5)
    CHECK(binomial_poly(7).eval(Rat(3)) == Rat(0));   // C(3,7)
}

TEST_CASE("to_binomial_basis closed forms") {
    BinomialCombo c = to_binomial_basis(RatPoly{Rat(0), Rat(0), Rat(1)});  // x^2
    CHECK(c.coeffs == std::vector<Rat>{Rat(0), Rat(1), Rat(2)});

    BinomialCombo h = to_binomial_basis(RatPoly{Rat(0), Rat(1, 2), Rat(1, 2)});  // (x^2+x)/2
    CHECK(h.coeffs == std::vector<Rat>{Rat(0), Rat(1), Rat(1)});

    CHECK(to_binomial_basis(RatPoly{}).coeffs.empty());
}

TEST_CASE("basis roundtrip is exact on random polynomials") {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(31415ul);
    for (int iter = 0; iter < 60; ++iter) {
        std::size_t deg = 1 + Int(rng.get_z_range(Int(200))).get_ui();
        std::vector<Rat> coeffs(deg + 1);
        for (auto& c : coeffs) {
            Int num = rng.get_z_range(Int(2001)) - 1000;
            Int den = rng.get_z_range(Int(50)) + 1;
            c = Rat(num, den);
            c.canonicalize();
        }
        RatPoly h(std::move(coeffs));
        CHECK(from_binomial_basis(to_binomial_basis(h)) == h);
    }
    // and the reverse direction
    BinomialCombo combo;
    combo.coeffs = {Rat(3), Rat(-5), Rat(7, 2), Rat(0), Rat(11)};
    CHECK(to_binomial_basis(from_binomial_basis(combo)).coeffs == combo.coeffs);
}

TEST_CASE("integer-valued detection matches exhaustive evaluation") {
    CHECK_FALSE(is_integer_valued(RatPoly{Rat(0), Rat(0), Rat(1, 2)}));  // x^2/2
    CHECK(is_integer_valued(binomial_poly(7)));

    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(2718ul);
    for (int iter = 0; iter < 120; ++iter) {
        std::size_t deg = 1 + Int(rng.get_z_range(Int(12))).get_ui();
        std::vector<Rat> coeffs(deg + 1);
        for (auto& c : coeffs) {
            Int num = rng.get_z_range(Int(41)) - 20;
            Int den = rng.get_z_range(Int(6)) + 1;
            c = Rat(num, den);
            c.canonicalize();
        }
        RatPoly h(std::move(coeffs));
        // Polya: integrality of the finite differences at 0..deg decides
        // integer-valuedness everywhere.
        bool exhaustive = true;
        for (long k = -static_cast<long>(deg); k <= static_cast<long>(deg); ++k)
            if (h.eval(Rat(k)).get_den() != 1) {
                exhaustive = false;
                break;
            }
        CHECK(is_integer_valued(h) == exhaustive);
    }
}

TEST_CASE("explicit construction: integral, correct degree, vanishing on [-t, t]") {
    for (std::size_t t : {1ul, 2ul, 5ul, 9ul}) {
        BinomialCombo combo = explicit_construction(t);
        CHECK(combo.all_integer());
        CHECK(combo.degree() == static_cast<long>(2 * t + 1));
        RatPoly h = from_binomial_basis(combo);
        for (long k = -static_cast<long>(t); k <= static_cast<long>(t); ++k)
            CHECK(h.eval(Rat(k)) == 0);
        CHECK(h.eval(Rat(static_cast<long>(t) + 1)) != 0);
    }
    CHECK_THROWS_AS(explicit_construction(0), DegenerateInput);
}

TEST_CASE("construction parameters") {
    ConstructionParams p = ConstructionParams::make(10, Rat(4));
    CHECK(p.q == Rat(5));
    CHECK(p.xi == Rat(2, 5));
}

TEST_CASE("sup norm closed form") {
    SupNorm s = construction_sup_norm(1, Rat(1, 2));
    CHECK(s.exact == Rat(5, 48));
    CHECK(s.log_value == doctest::Approx(std::log(5.0 / 48.0)));

    CHECK(construction_sup_norm(1, Rat(10)).exact == Rat(505, 3));  // 10*(100+1)/3!

    // large t with 2t/r above the threshold ratio: bounded below one
    CHECK(construction_sup_norm(200, Rat(100)).exact < 1);
    CHECK(construction_sup_norm(200, Rat(100)).log_value < 0);
}

TEST_CASE("circle samples never exceed the closed form and attain it on the axis") {
    for (auto [t, r] : std::vector<std::pair<std::size_t, double>>{
             {1, 0.5}, {5, 10}, {20, 50}, {50, 100}}) {
        Rat rr(r);  // exact: these radii are representable doubles
        rr.canonicalize();
        double closed = construction_sup_norm(t, rr).log_value;
        double sampled = sample_circle_max_log(t, r, 10000);  // includes theta = pi/2
        CHECK(sampled <= closed + 1e-9);
        CHECK(sampled == doctest::Approx(closed).epsilon(1e-9));
    }
}

TEST_CASE("q0 solves the threshold equation") {
    double q0 = solve_q0(1e-9);
    CHECK(q0 > 3.80567);
    CHECK(q0 < 3.80577);
    CHECK(q0_equation(2.0) > 0);
    CHECK(q0_equation(8.0) < 0);
    CHECK(q0_equation(q0 - 1e-4) > 0);
    CHECK(q0_equation(q0 + 1e-4) < 0);
    CHECK_THROWS_AS(solve_q0(1e-13), DegenerateInput);
}

TEST_CASE("minkowski degree bound satisfies the exact inequality minimally") {
    auto condition = [](std::size_t m, double lnr) {
        // independent accumulation of sum_{i=0}^m ln i!
        double s = 0;
        for (std::size_t i = 2; i <= m; ++i) s += std::lgamma(static_cast<double>(i) + 1);
        return s >= (m + 1) * std::log(static_cast<double>(m) + 2) +
                        0.5 * static_cast<double>(m) * (static_cast<double>(m) + 1) * lnr;
    };

    CHECK_FALSE(condition(1, std::log(100.0)));  // condition false at m = 1, r = 100

    std::size_t m100 = minkowski_degree_bound(Rat(100), Rat(3));
    std::size_t m1000 = minkowski_degree_bound(Rat(1000), Rat(3));
    CHECK(condition(m100, std::log(100.0)));
    CHECK_FALSE(condition(m100 - 1, std::log(100.0)));
    CHECK(condition(m1000, std::log(1000.0)));
    CHECK(m1000 > m100);

    // the certified degree scales like e^{3/2} * r
    CHECK(m100 > 4 * 100);
    CHECK(m100 < 5 * 100);
    CHECK(m1000 > 4 * 1000);
    CHECK(m1000 < 5 * 1000);

    CHECK_THROWS_AS(minkowski_degree_bound(Rat(100), Rat(3), 50), CapExceeded);
    CHECK_THROWS_AS(minkowski_degree_bound(Rat(1), Rat(3)), DegenerateInput);
    CHECK_THROWS_AS(minkowski_degree_bound(Rat(100), Rat(1)), DegenerateInput);
}

TEST_CASE("prime cutoff for capacity below one") {
    CHECK(min_prime_cutoff_for_existence(0.5) == 2);
    CHECK(min_prime_cutoff_for_existence(1.0) == 3);
    // boundary around the p = 2 contribution ln 2
    CHECK(min_prime_cutoff_for_existence(0.6930) == 2);
    CHECK(min_prime_cutoff_for_existence(0.6932) == 3);

    // monotone in the target
    Nat prev(0);
    for (double target : {0.2, 1.0, 2.0, 5.0, 10.0, 15.0}) {
        Nat y = min_prime_cutoff_for_existence(target);
        CHECK(y >= prev);
        prev = y;
    }

    // the sum diverges: a cutoff exists for every input, far beyond the sieve
    Nat big = min_prime_cutoff_for_existence(50.0);
    CHECK(big > ipow(Nat(10), 20));
    CHECK_THROWS_AS(min_prime_cutoff_for_existence(0.0), DegenerateInput);
}
