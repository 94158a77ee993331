#include "copperscope/poly.hpp"

#include <algorithm>

namespace copperscope {

namespace {
const Int kZeroInt(0);
const Rat kZeroRat(0);
}  // namespace

// ---------------------------------------------------------------------------
// IntPoly

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(std::size_t k, Int coeff) {
    std::vector<Int> c(k + 1, Int(0));
    c[k] = std::move(coeff);
    return IntPoly(std::move(c));
}

const Int& IntPoly::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : kZeroInt;
}

Int IntPoly::eval(const Int& x) const {
    Int acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Int IntPoly::eval_mod(const Int& x, const Int& mod) const {
    Int acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = (acc * x + c_[i]) % mod;
    }
    if (acc < 0) acc += mod;
    return acc;
}

IntPoly IntPoly::shifted(const Int& a) const {
    if (c_.empty()) return {};
    std::vector<Int> d = c_;
    std::size_t n = d.size() - 1;
    // Repeated Horner pass: after the loop d holds the coefficients of p(x+a).
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = n - 1; j + 1 > i; --j) d[j] += a * d[j + 1];
    return IntPoly(std::move(d));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<Int> out(c_.size() + o.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const Int& s) const {
    std::vector<Int> out = c_;
    for (auto& v : out) v *= s;
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> out(std::max(c_.size(), o.c_.size()), Int(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
    return IntPoly(std::move(out));
}

IntPoly IntPoly::pow(unsigned long e) const {
    IntPoly result{Int(1)};
    IntPoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Int IntPoly::content() const {
    Int g(0);
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

RatPoly IntPoly::to_rat() const {
    std::vector<Rat> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.emplace_back(v);
    return RatPoly(std::move(out));
}

// ---------------------------------------------------------------------------
// RatPoly

void RatPoly::trim() {
    for (auto& v : c_) v.canonicalize();
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::monomial(std::size_t k, Rat coeff) {
    std::vector<Rat> c(k + 1, Rat(0));
    c[k] = std::move(coeff);
    return RatPoly(std::move(c));
}

const Rat& RatPoly::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : kZeroRat;
}

std::size_t RatPoly::nonzero_terms() const {
    std::size_t n = 0;
    for (const auto& v : c_)
        if (v != 0) ++n;
    return n;
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rat(static_cast<unsigned long>(i));
    return RatPoly(std::move(out));
}

RatPoly RatPoly::shifted(const Rat& a) const {
    if (c_.empty()) return {};
    std::vector<Rat> d = c_;
    std::size_t n = d.size() - 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = n - 1; j + 1 > i; --j) d[j] += a * d[j + 1];
    return RatPoly(std::move(d));
}

RatPoly RatPoly::scaled_arg(const Rat& s) const {
    std::vector<Rat> out = c_;
    Rat power(1);
    for (std::size_t i = 1; i < out.size(); ++i) {
        power *= s;
        out[i] *= power;
    }
    return RatPoly(std::move(out));
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rat> out(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
    return RatPoly(std::move(out));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<Rat> out(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
    return RatPoly(std::move(out));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(out));
}

RatPoly RatPoly::operator*(const Rat& s) const {
    std::vector<Rat> out = c_;
    for (auto& v : out) v *= s;
    return RatPoly(std::move(out));
}

RatPoly RatPoly::operator-() const { return *this * Rat(-1); }

void RatPoly::divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    if (b.is_zero()) throw DegenerateInput("RatPoly::divmod: division by zero polynomial");
    std::vector<Rat> rem = a.c_;
    long db = b.degree();
    std::vector<Rat> quo;
    if (a.degree() >= db) quo.assign(a.degree() - db + 1, Rat(0));
    const Rat& lead = b.c_.back();
    while (static_cast<long>(rem.size()) - 1 >= db) {
        if (rem.back() == 0) {
            rem.pop_back();
            continue;
        }
        std::size_t shift = rem.size() - 1 - db;
        Rat f = rem.back() / lead;
        quo[shift] = f;
        for (long i = 0; i <= db; ++i) rem[shift + i] -= f * b.c_[i];
        rem.pop_back();  // leading term cancelled exactly
    }
    q = RatPoly(std::move(quo));
    r = RatPoly(std::move(rem));
}

std::pair<IntPoly, Int> RatPoly::cleared() const {
    Int den(1);
    for (const auto& v : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<Int> out;
    out.reserve(c_.size());
    for (const auto& v : c_) {
        Rat scaled = v * Rat(den);
        scaled.canonicalize();
        out.emplace_back(scaled.get_num());
    }
    return {IntPoly(std::move(out)), den};
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly q, r;
        RatPoly::divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rat(1) / a.coeff(a.degree()));  // monic normalization
}

IntPoly squarefree_part(const RatPoly& h) {
    if (h.is_zero()) return {};
    RatPoly g = poly_gcd(h, h.derivative());
    RatPoly q, r;
    RatPoly::divmod(h, g, q, r);
    auto [ip, den] = q.cleared();
    Int cont = ip.content();
    if (cont > 1) {
        std::vector<Int> scaled;
        scaled.reserve(ip.coeffs().size());
        for (const auto& v : ip.coeffs()) scaled.push_back(v / cont);
        ip = IntPoly(std::move(scaled));
    }
    return ip;
}

}  // namespace copperscope
