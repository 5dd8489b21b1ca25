#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dt4/poly.hpp"

namespace dt4 {

// Rational roots of a reduced denominator.  Irrational (or otherwise
// unfound) factors are not an error; they are reported via the flag.
struct PoleReport {
    std::set<Rat> rational;
    bool nonrational_present = false;
};

// Reduced quotient of univariate polynomials over Q: gcd(num, den) = 1 and
// den monic.  The coefficient field of every generating series here.
class RatFn {
public:
    RatFn() : num_(), den_(Rat(1)) {}
    RatFn(const Rat& c) : num_(c), den_(Rat(1)) {}   // NOLINT
    RatFn(int c) : num_(Rat(c)), den_(Rat(1)) {}     // NOLINT
    RatFn(const UniPoly& p) : num_(p), den_(Rat(1)) {} // NOLINT

    static RatFn reduce(const UniPoly& num, const UniPoly& den) {
        if (den.is_zero()) throw ComputationError("division by zero", "rational function with zero denominator");
        if (num.is_zero()) return RatFn();
        UniPoly n = num, d = den;
        const UniPoly g = poly_gcd(n, d);
        if (g.degree() > 0) {
            n = n.exact_div(g);
            d = d.exact_div(g);
        }
        const Rat lead_inv = d.leading().inv();
        RatFn r;
        r.num_ = lead_inv * n;
        r.den_ = lead_inv * d;
        return r;
    }

    // For callers that can guarantee gcd(num, den) = 1 with den monic
    // (e.g. products of linear factors with pairwise distinct roots).
    static RatFn from_coprime(UniPoly num, UniPoly den) {
        if (den.is_zero()) throw ComputationError("division by zero", "zero denominator");
        RatFn r;
        r.num_ = std::move(num);
        r.den_ = std::move(den);
        return r;
    }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    Rat eval(const Rat& x) const {
        const Rat d = den_.eval(x);
        if (d.is_zero()) throw ComputationError("evaluation at pole", "s1 = " + x.str());
        return num_.eval(x) / d;
    }

    RatFn operator-() const {
        RatFn r(*this);
        r.num_ = -r.num_;
        return r;
    }

    friend RatFn operator+(const RatFn& a, const RatFn& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const UniPoly g = poly_gcd(a.den_, b.den_);
        const UniPoly bq = g.degree() > 0 ? b.den_.exact_div(g) : b.den_;
        const UniPoly aq = g.degree() > 0 ? a.den_.exact_div(g) : a.den_;
        return reduce(a.num_ * bq + b.num_ * aq, a.den_ * bq);
    }
    friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }

    friend RatFn operator*(const RatFn& a, const RatFn& b) {
        if (a.is_zero() || b.is_zero()) return RatFn();
        // Cross-cancel before multiplying to keep degrees small.
        const UniPoly g1 = poly_gcd(a.num_, b.den_);
        const UniPoly g2 = poly_gcd(b.num_, a.den_);
        UniPoly n1 = g1.degree() > 0 ? a.num_.exact_div(g1) : a.num_;
        UniPoly d2 = g1.degree() > 0 ? b.den_.exact_div(g1) : b.den_;
        UniPoly n2 = g2.degree() > 0 ? b.num_.exact_div(g2) : b.num_;
        UniPoly d1 = g2.degree() > 0 ? a.den_.exact_div(g2) : a.den_;
        return reduce(n1 * n2, d1 * d2);
    }

    friend RatFn operator/(const RatFn& a, const RatFn& b) {
        if (b.is_zero()) throw ComputationError("division by zero", "rational function division by zero");
        RatFn binv = reduce(b.den_, b.num_);
        return a * binv;
    }

    RatFn& operator+=(const RatFn& o) { *this = *this + o; return *this; }
    RatFn& operator-=(const RatFn& o) { *this = *this - o; return *this; }
    RatFn& operator*=(const RatFn& o) { *this = *this * o; return *this; }
    RatFn& operator/=(const RatFn& o) { *this = *this / o; return *this; }

    friend bool operator==(const RatFn& a, const RatFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

    // Coefficient of s1^-1 in the Laurent expansion at s1 = 0; zero when
    // regular there.  Poles of order >= 2 are a hard error, never truncated.
    Rat residue_at_zero() const {
        if (is_zero()) return Rat(0);
        if (!den_.constant_term().is_zero()) return Rat(0);
        auto [d1, ok] = den_.deflate(Rat(0));
        (void)ok;
        if (d1.constant_term().is_zero())
            throw ComputationError("higher-order pole", "pole of order >= 2 at s1 = 0");
        return num_.constant_term() / d1.constant_term();
    }

    bool regular_at_zero() const { return is_zero() || !den_.constant_term().is_zero(); }

    // Order of vanishing of the denominator at s1 = 0 (0 = regular).
    int pole_order_at_zero() const {
        int k = 0;
        UniPoly d = den_;
        while (!d.is_zero() && d.constant_term().is_zero()) {
            d = d.deflate(Rat(0)).first;
            ++k;
        }
        return k;
    }

    PoleReport pole_locations() const;

    std::string str() const {
        if (den_ == UniPoly(Rat(1))) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const RatFn& f) { return os << f.str(); }

private:
    UniPoly num_;
    UniPoly den_;
};

namespace detail {

// Trial-division factorization; any cofactor beyond the bound is kept as a
// single (pseudo-prime) factor so its own divisibility can still be tried.
inline std::map<mpz_class, unsigned> factor_small(mpz_class n, unsigned long bound = 1000000) {
    std::map<mpz_class, unsigned> f;
    if (n < 0) n = -n;
    if (n <= 1) return f;
    for (mpz_class p = 2; p * p <= n && p <= bound; ++p) {
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    }
    if (n > 1) ++f[n];
    return f;
}

inline void divisors_from(const std::map<mpz_class, unsigned>& f, std::vector<mpz_class>& out) {
    out.clear();
    out.push_back(1);
    for (const auto& [p, e] : f) {
        const std::size_t base = out.size();
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) {
                out.push_back(out[i] * pk);
                if (out.size() > 2000000)
                    throw std::runtime_error("pole search: divisor set too large");
            }
        }
    }
}

} // namespace detail

inline PoleReport RatFn::pole_locations() const {
    PoleReport rep;
    if (is_zero() || den_.is_constant()) return rep;
    UniPoly d = den_;
    while (!d.is_zero() && d.constant_term().is_zero()) {
        rep.rational.insert(Rat(0));
        d = d.deflate(Rat(0)).first;
    }
    if (d.is_constant()) return rep;

    // Primitive integer form for the classical rational-root search.
    mpz_class den_lcm = 1;
    for (const auto& c : d.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> ic(d.coeffs().size());
    mpz_class content = 0;
    for (std::size_t i = 0; i < ic.size(); ++i) {
        ic[i] = d.coeffs()[i].num() * (den_lcm / d.coeffs()[i].den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ic[i].get_mpz_t());
    }
    if (content > 1)
        for (auto& c : ic) c /= content;

    std::vector<mpz_class> ps, qs;
    detail::divisors_from(detail::factor_small(ic.front()), ps);
    detail::divisors_from(detail::factor_small(ic.back()), qs);

    for (const auto& q : qs) {
        for (const auto& p : ps) {
            for (int s : {1, -1}) {
                const Rat cand(mpq_class(s * p, q));
                bool hit = false;
                while (true) {
                    auto [quot, ok] = d.deflate(cand);
                    if (!ok) break;
                    hit = true;
                    d = quot;
                }
                if (hit) rep.rational.insert(cand);
                if (d.is_constant()) return rep;
            }
        }
    }
    rep.nonrational_present = d.degree() > 0;
    return rep;
}

} // namespace dt4
