#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "copperscope/arith.hpp"
#include "copperscope/poly.hpp"

namespace copperscope {

/**
 * Exact positive multiplicative value: the product of integer bases raised to
 * rational exponents.  Bases are kept exactly as supplied (never factored);
 * the empty product is 1.  Comparisons clear exponent denominators and
 * compare the resulting integer products, so they are exact regardless of
 * magnitude.
 */
class LogCapacity {
  public:
    LogCapacity() = default;  ///< the value 1

    static LogCapacity one() { return {}; }
    static LogCapacity from_integer(const Int& n);          ///< n >= 1
    static LogCapacity from_rational(const Rat& r);         ///< r > 0
    static LogCapacity power(const Int& base, const Rat& exponent);

    LogCapacity& operator*=(const LogCapacity& o);
    friend LogCapacity operator*(LogCapacity a, const LogCapacity& b) {
        a *= b;
        return a;
    }

    /// Value raised to a rational power.
    LogCapacity pow(const Rat& e) const;
    LogCapacity inverse() const { return pow(Rat(-1)); }

    /// Exact sign of (this - 1).
    std::strong_ordering compare_to_one() const;

    /// ln of the value, in double precision.
    double log_value() const;

    const std::map<Int, Rat>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    std::string str() const;

  private:
    std::map<Int, Rat> factors_;  // base >= 2 -> nonzero exponent
};

/// Exact radius expression for archimedean sets (covers plain rationals and
/// powers N^e with rational e).
using LogRadius = LogCapacity;

// -- Local (p-adic) set descriptors ----------------------------------------

/// {z : |z|_p <= |n|_p}, the p-adic disk of radius |n|_p about 0.
struct PDisk {
    Int p;
    Nat n;
};

/// The p-adic integers Z_p.
struct PIntegers {
    Int p;
};

/// The full integral closure at p (capacity 1; never stored explicitly in an
/// adelic set).
struct PDefault {};

struct Preimage;

using LocalSet = std::variant<PDisk, PIntegers, PDefault, Preimage>;

/// f^{-1}(inner) for a monic integer polynomial f of degree >= 1.
struct Preimage {
    IntPoly f;
    std::shared_ptr<const LocalSet> inner;
};

// -- Archimedean set descriptors --------------------------------------------

struct ComplexDisk {
    LogRadius radius;
};
struct RealInterval {
    LogRadius half_width;  // the interval [-r, r]
};
using ArchSet = std::variant<ComplexDisk, RealInterval>;

enum class ArchKind { Disk, Interval };

/**
 * The symbolic family "f^{-1}({|z|_p <= |N|_p}) at every prime p | N" for a
 * monic polynomial of the given degree.  Its total capacity contribution is
 * N^{-1/degree} by the product formula, so it never requires factoring N.
 */
struct ModulusFamily {
    Nat modulus;      // N >= 2
    unsigned degree;  // degree of the monic polynomial, >= 1
};

/**
 * An adelic set: finitely many exceptional places with explicit local sets,
 * an optional symbolic modulus family, and an archimedean component.  Every
 * prime not mentioned carries the default local set (capacity 1).
 */
class AdelicSet {
  public:
    explicit AdelicSet(ArchSet arch) : arch_(std::move(arch)) {}

    /// Install the local set at prime p.  Installing PDefault removes the
    /// entry.  The prime may not divide an installed modulus family.
    void set_local(const Int& p, LocalSet s);

    void set_family(ModulusFamily family);

    const std::map<Int, LocalSet>& exceptional() const { return exceptional_; }
    const std::optional<ModulusFamily>& family() const { return family_; }
    const ArchSet& arch() const { return arch_; }

  private:
    std::map<Int, LocalSet> exceptional_;
    std::optional<ModulusFamily> family_;
    ArchSet arch_;
};

// -- Capacity computations ---------------------------------------------------

/// Local capacity: disk |n|_p, Z_p gives p^{-1/(p-1)}, default gives 1,
/// preimage takes the 1/deg power.
LogCapacity local_capacity(const LocalSet& s);

/// Disk radius r gives r; interval [-r, r] gives r/2.
LogCapacity arch_capacity(const ArchSet& s);

/// Product of all local capacities with the archimedean capacity.
LogCapacity global_capacity(const AdelicSet& e);

/// Exact sign of c - 1.
std::strong_ordering compare_to_one(const LogCapacity& c);

// -- Feasibility verdicts ----------------------------------------------------

enum class Feasibility { Exists, NotExists, Boundary };

struct Verdict {
    Feasibility status;
    LogCapacity capacity;
    std::string note;
};

const char* to_string(Feasibility f);

/**
 * Decide whether an auxiliary polynomial bounded on the solution set of
 * f(x) = 0 mod N within the archimedean region of radius X can exist.  The
 * underlying adelic set takes the polynomial preimage of the p-adic disk of
 * radius |N|_p at every prime dividing N (handled symbolically, without
 * factoring N) together with the complex disk or real interval of radius X.
 *
 * Exists/NotExists follow from the global capacity being below/above 1; a
 * capacity of exactly 1 is reported as Boundary, where neither conclusion is
 * available.
 */
Verdict coppersmith_feasibility(const IntPoly& f, const Nat& N, const LogRadius& X,
                                ArchKind kind);

}  // namespace copperscope
