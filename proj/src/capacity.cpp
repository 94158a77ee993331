#include "copperscope/capacity.hpp"

#include <sstream>

namespace copperscope {

// ---------------------------------------------------------------------------
// LogCapacity

LogCapacity LogCapacity::from_integer(const Int& n) {
    if (n < 1) throw DegenerateInput("LogCapacity: integer value must be >= 1");
    return power(n, Rat(1));
}

LogCapacity LogCapacity::from_rational(const Rat& r) {
    if (r <= 0) throw DegenerateInput("LogCapacity: rational value must be positive");
    LogCapacity c = power(Int(r.get_num()), Rat(1));
    c *= power(Int(r.get_den()), Rat(-1));
    return c;
}

LogCapacity LogCapacity::power(const Int& base, const Rat& exponent) {
    if (base < 1) throw DegenerateInput("LogCapacity: base must be >= 1");
    LogCapacity c;
    if (base == 1 || exponent == 0) return c;
    c.factors_[base] = exponent;
    return c;
}

LogCapacity& LogCapacity::operator*=(const LogCapacity& o) {
    for (const auto& [base, exp] : o.factors_) {
        auto it = factors_.find(base);
        if (it == factors_.end()) {
            factors_.emplace(base, exp);
        } else {
            it->second += exp;
            if (it->second == 0) factors_.erase(it);
        }
    }
    return *this;
}

LogCapacity LogCapacity::pow(const Rat& e) const {
    LogCapacity c;
    if (e == 0) return c;
    for (const auto& [base, exp] : factors_) {
        Rat scaled = exp * e;
        scaled.canonicalize();
        c.factors_.emplace(base, std::move(scaled));
    }
    return c;
}

std::strong_ordering LogCapacity::compare_to_one() const {
    // Clear exponent denominators: with L = lcm of denominators, the value is
    // above/below 1 exactly when prod base^{L*e>0} exceeds prod base^{-L*e}.
    Int lcm(1);
    for (const auto& [base, exp] : factors_)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), exp.get_den().get_mpz_t());
    Int pos(1), neg(1);
    for (const auto& [base, exp] : factors_) {
        Int scaled = Int(exp.get_num()) * (lcm / Int(exp.get_den()));
        Int mag = abs(scaled);
        if (!mag.fits_ulong_p())
            throw Error("LogCapacity: exponent too large for exact comparison");
        Int piece = ipow(base, mag.get_ui());
        if (scaled > 0)
            pos *= piece;
        else
            neg *= piece;
    }
    int c = cmp(pos, neg);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

double LogCapacity::log_value() const {
    double acc = 0.0;
    for (const auto& [base, exp] : factors_)
        acc += mpq_get_d(exp.get_mpq_t()) * log_double(base);
    return acc;
}

std::string LogCapacity::str() const {
    if (factors_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [base, exp] : factors_) {
        if (!first) os << " * ";
        first = false;
        os << base.get_str();
        if (exp != 1) os << "^(" << exp.get_str() << ")";
    }
    return os.str();
}

std::strong_ordering compare_to_one(const LogCapacity& c) { return c.compare_to_one(); }

// ---------------------------------------------------------------------------
// Adelic sets

void AdelicSet::set_local(const Int& p, LocalSet s) {
    if (!is_prime(p))
        throw NonPrimeModulus("AdelicSet: place " + p.get_str() + " is not prime");
    if (family_ && mpz_divisible_p(family_->modulus.get_mpz_t(), p.get_mpz_t()))
        throw DegenerateInput("AdelicSet: place " + p.get_str() +
                              " already covered by the modulus family");
    if (std::holds_alternative<PDefault>(s)) {
        exceptional_.erase(p);
        return;
    }
    exceptional_.insert_or_assign(p, std::move(s));
}

void AdelicSet::set_family(ModulusFamily family) {
    if (family.modulus < 2) throw DegenerateInput("AdelicSet: family modulus must be >= 2");
    if (family.degree < 1) throw DegenerateInput("AdelicSet: family degree must be >= 1");
    for (const auto& [p, s] : exceptional_)
        if (mpz_divisible_p(family.modulus.get_mpz_t(), p.get_mpz_t()))
            throw DegenerateInput("AdelicSet: family overlaps explicit place " + p.get_str());
    family_ = std::move(family);
}

LogCapacity local_capacity(const LocalSet& s) {
    struct Visitor {
        LogCapacity operator()(const PDisk& d) const {
            if (d.n < 1) throw DegenerateInput("PDisk: radius parameter must be >= 1");
            PAdicVal v = padic_valuation(Rat(d.n), d.p);
            return LogCapacity::power(d.p, -Rat(v.value()));
        }
        LogCapacity operator()(const PIntegers& z) const {
            if (!is_prime(z.p))
                throw NonPrimeModulus("PIntegers: place " + z.p.get_str() + " is not prime");
            Rat e(-1, z.p - 1);
            e.canonicalize();
            return LogCapacity::power(z.p, e);
        }
        LogCapacity operator()(const PDefault&) const { return LogCapacity::one(); }
        LogCapacity operator()(const Preimage& pre) const {
            if (!pre.f.is_monic() || pre.f.degree() < 1)
                throw NonMonicPolynomial("Preimage: polynomial must be monic of degree >= 1");
            if (!pre.inner) throw DegenerateInput("Preimage: missing inner set");
            Rat inv_deg(1, static_cast<unsigned long>(pre.f.degree()));
            return local_capacity(*pre.inner).pow(inv_deg);
        }
    };
    return std::visit(Visitor{}, s);
}

LogCapacity arch_capacity(const ArchSet& s) {
    struct Visitor {
        LogCapacity operator()(const ComplexDisk& d) const { return d.radius; }
        LogCapacity operator()(const RealInterval& i) const {
            return i.half_width * LogCapacity::power(Int(2), Rat(-1));
        }
    };
    return std::visit(Visitor{}, s);
}

LogCapacity global_capacity(const AdelicSet& e) {
    LogCapacity c = arch_capacity(e.arch());
    for (const auto& [p, s] : e.exceptional()) c *= local_capacity(s);
    if (e.family()) {
        // Product over p | N of |N|_p^{1/d} is N^{-1/d}: the per-prime parts
        // assemble by the product formula without factoring N.
        Rat exp(-1, static_cast<unsigned long>(e.family()->degree));
        exp.canonicalize();
        c *= LogCapacity::power(e.family()->modulus, exp);
    }
    return c;
}

// ---------------------------------------------------------------------------
// Feasibility

const char* to_string(Feasibility f) {
    switch (f) {
        case Feasibility::Exists: return "Exists";
        case Feasibility::NotExists: return "NotExists";
        case Feasibility::Boundary: return "Boundary";
    }
    return "?";
}

Verdict coppersmith_feasibility(const IntPoly& f, const Nat& N, const LogRadius& X,
                                ArchKind kind) {
    if (f.degree() < 1 || !f.is_monic())
        throw NonMonicPolynomial("coppersmith_feasibility: f must be monic of degree >= 1");
    if (N < 2) throw DegenerateInput("coppersmith_feasibility: modulus must be >= 2");

    ArchSet arch = kind == ArchKind::Disk ? ArchSet(ComplexDisk{X})
                                          : ArchSet(RealInterval{X});
    AdelicSet e(std::move(arch));
    e.set_family(ModulusFamily{N, static_cast<unsigned>(f.degree())});

    Verdict v;
    v.capacity = global_capacity(e);
    auto order = v.capacity.compare_to_one();
    if (order < 0) {
        v.status = Feasibility::Exists;
        v.note =
            "capacity below one: a nonzero auxiliary polynomial bounded on the "
            "solution set exists";
    } else if (order > 0) {
        v.status = Feasibility::NotExists;
        v.note =
            "capacity above one: the admissible solution set is infinite, so no "
            "rational function can vanish on all of it";
    } else {
        v.status = Feasibility::Boundary;
        v.note = "capacity exactly one: existence is undecided at the threshold";
    }
    return v;
}

}  // namespace copperscope
