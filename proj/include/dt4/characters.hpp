#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dt4/context.hpp"
#include "dt4/partitions.hpp"
#include "dt4/ratfn.hpp"

namespace dt4 {

// Integer-linear torus weight cm*m + c1*s1 + c2*s2 + c3*s3 + c4*s4, the
// additive alias of e^(cm*m) t1^c1 t2^c2 t3^c3 t4^c4.  The CY relation
// s4 = -s1 - s2 - s3 is applied at reduction time only, so weights and
// characters stay context-free.
struct Weight {
    int cm = 0, c1 = 0, c2 = 0, c3 = 0, c4 = 0;

    auto operator<=>(const Weight&) const = default;

    Weight operator+(const Weight& o) const {
        return {cm + o.cm, c1 + o.c1, c2 + o.c2, c3 + o.c3, c4 + o.c4};
    }
    Weight operator-() const { return {-cm, -c1, -c2, -c3, -c4}; }

    // Representative of the class modulo t1*t2*t3*t4 = 1 with c4 = 0.
    Weight cy_normalized() const { return {cm, c1 - c4, c2 - c4, c3 - c4, 0}; }

    // Coefficients of the reduced linear form a*s1 + (constant from context).
    int s1_coeff() const { return c1 - c4; }
    Rat const_part(const ParamContext& ctx) const {
        return Rat(c2 - c4) * ctx.s2 + Rat(c3 - c4) * ctx.s3 + Rat(cm) * ctx.m;
    }

    bool is_zero_form() const { return cm == 0 && c1 == c4 && c2 == c4 && c3 == c4; }

    // Canonical pick from a dual pair {w, -w}: first nonzero of
    // (s1-coeff, s2-coeff, s3-coeff, m-coeff) after CY elimination is > 0.
    bool canonical_positive() const {
        for (int v : {c1 - c4, c2 - c4, c3 - c4, cm}) {
            if (v > 0) return true;
            if (v < 0) return false;
        }
        return false; // zero form
    }

    Rat value_at(const ParamContext& ctx, const Rat& s1) const {
        return Rat(s1_coeff()) * s1 + const_part(ctx);
    }

    std::string str() const {
        std::string out;
        auto term = [&](int c, const char* name) {
            if (c == 0) return;
            if (!out.empty()) out += c > 0 ? " + " : " - ";
            else if (c < 0) out += "-";
            const int a = c > 0 ? c : -c;
            if (a != 1) out += std::to_string(a) + "*";
            out += name;
        };
        term(cm, "m");
        term(c1, "s1");
        term(c2, "s2");
        term(c3, "s3");
        term(c4, "s4");
        return out.empty() ? "0" : out;
    }
};

// Finite multiset of weights with integer (possibly negative)
// multiplicities; houses Q_pi, T^vir, its square root, and the 3-fold
// vertex V_lambda.
class Character {
public:
    Character() = default;

    static Character unit() {
        Character c;
        c.add(Weight{}, 1);
        return c;
    }
    static Character monomial(const Weight& w, int mult = 1) {
        Character c;
        c.add(w, mult);
        return c;
    }

    void add(const Weight& w, int mult) {
        if (mult == 0) return;
        auto it = m_.find(w);
        if (it == m_.end()) {
            m_.emplace(w, mult);
        } else {
            it->second += mult;
            if (it->second == 0) m_.erase(it);
        }
    }

    const std::map<Weight, int>& terms() const { return m_; }
    bool empty() const { return m_.empty(); }

    int rank() const {
        int r = 0;
        for (const auto& [w, k] : m_) r += k;
        return r;
    }

    int multiplicity(const Weight& w) const {
        auto it = m_.find(w);
        return it == m_.end() ? 0 : it->second;
    }

    Character bar() const {
        Character c;
        for (const auto& [w, k] : m_) c.m_.emplace(-w, k);
        return c;
    }

    Character cy_normalized() const {
        Character c;
        for (const auto& [w, k] : m_) c.add(w.cy_normalized(), k);
        return c;
    }

    friend Character operator+(const Character& a, const Character& b) {
        Character c(a);
        for (const auto& [w, k] : b.m_) c.add(w, k);
        return c;
    }
    friend Character operator-(const Character& a, const Character& b) {
        Character c(a);
        for (const auto& [w, k] : b.m_) c.add(w, -k);
        return c;
    }
    friend Character operator*(const Character& a, const Character& b) {
        Character c;
        for (const auto& [wa, ka] : a.m_)
            for (const auto& [wb, kb] : b.m_) c.add(wa + wb, ka * kb);
        return c;
    }

    friend bool operator==(const Character& a, const Character& b) { return a.m_ == b.m_; }

    // Debug dump: one "form : mult" line per weight, canonically sorted.
    std::string str() const {
        std::string out;
        for (const auto& [w, k] : m_) {
            out += w.str() + " : " + std::to_string(k) + "\n";
        }
        return out;
    }

private:
    std::map<Weight, int> m_;
};

// H^0(O_Z) character of the monomial ideal of pi (the e^m twist stripped):
// sum over boxes of t1^(i-1) t2^(j-1) t3^(k-1) t4^(l-1).
inline Character q_char(const SolidPartition& pi) {
    Character c;
    for (const auto& b : pi.boxes()) c.add(Weight{0, b.i - 1, b.j - 1, b.k - 1, b.l - 1}, 1);
    return c;
}

inline Character q3_char(const PlanePartition& lam) {
    Character c;
    for (const auto& b : lam.boxes()) c.add(Weight{0, b.i - 1, b.j - 1, b.k - 1, 0}, 1);
    return c;
}

// Tautological-insertion weights m + (i-1)s1 + (j-1)s2 + (k-1)s3 + (l-1)s4,
// one per box; their Euler product is the fiber of L_m^[n] at pi.
inline std::vector<Weight> insertion_weights(const SolidPartition& pi) {
    std::vector<Weight> out;
    for (const auto& b : pi.boxes()) out.push_back(Weight{1, b.i - 1, b.j - 1, b.k - 1, b.l - 1});
    return out;
}

// Virtual tangent character at pi: Q + Qbar - Q*Qbar*P with
// P = prod_i (1 - t_i), stored modulo the CY relation.  Must be self-dual,
// of rank 2n, and free of the zero weight; each property is checked here
// and failure aborts the computation.
inline Character tvir_4d(const SolidPartition& pi) {
    const Character q = q_char(pi);
    const Character qb = q.bar();
    Character p = Character::unit();
    const Weight t[4] = {{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}};
    for (const auto& ti : t) {
        Character f = Character::unit();
        f.add(ti, -1);
        p = p * f;
    }
    Character tv = (q + qb - q * qb * p).cy_normalized();
    if (tv.multiplicity(Weight{}) != 0)
        throw ComputationError("self-dual zero weight",
                               "T^vir of " + pi.str() + " contains the zero weight");
    if (!(tv.bar().cy_normalized() == tv))
        throw ComputationError("vertex self-check failed", "T^vir not self-dual for " + pi.str());
    if (tv.rank() != 2 * pi.size())
        throw ComputationError("vertex self-check failed", "T^vir rank != 2n for " + pi.str());
    return tv;
}

// MNOP 3-fold vertex V_lambda = Q3 - Q3bar/(t1 t2 t3)
//   + Q3*Q3bar*(1-t1)(1-t2)(1-t3)/(t1 t2 t3); rank 0, no zero weight.
inline Character vertex_3d(const PlanePartition& lam) {
    const Character q3 = q3_char(lam);
    const Character q3b = q3.bar();
    const Character kappa_inv = Character::monomial(Weight{0, -1, -1, -1, 0});
    Character p3 = Character::unit();
    const Weight t[3] = {{0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}};
    for (const auto& ti : t) {
        Character f = Character::unit();
        f.add(ti, -1);
        p3 = p3 * f;
    }
    Character v = q3 - q3b * kappa_inv + q3 * q3b * p3 * kappa_inv;
    if (v.multiplicity(Weight{}) != 0)
        throw ComputationError("self-dual zero weight",
                               "V_lambda of " + lam.str() + " contains the zero weight");
    if (v.rank() != 0)
        throw ComputationError("vertex self-check failed", "V_lambda rank != 0 for " + lam.str());
    return v;
}

// Deterministic square root of a self-dual character: from each dual pair
// {w, -w} take the canonical-positive representative, with its multiplicity.
inline Character square_root(const Character& t) {
    if (t.multiplicity(Weight{}) != 0 || !(t.bar() == t))
        throw ComputationError("not self-dual", "square_root needs bar(T) = T and no zero weight");
    Character v;
    for (const auto& [w, k] : t.terms())
        if (w.canonical_positive()) v.add(w, k);
    return v;
}

// Product of linear factors (a*s1 + r)^mult kept factored: monic factors
// (s1 + c) with integer exponents plus a rational scalar.  Expansion yields
// an already-reduced RatFn (all roots distinct), so no gcd is ever needed
// on the localization hot path.
struct LinearFactors {
    Rat scalar = Rat(1);
    std::map<Rat, int> factors; // (s1 + c)^e, keyed by c
    bool zero = false;

    void mul_form(int a, const Rat& r, int mult) {
        if (mult == 0) return;
        if (a == 0 && r.is_zero()) {
            if (mult < 0)
                throw ComputationError("division by zero weight — regenerate context",
                                       "zero weight with negative multiplicity");
            zero = true;
            return;
        }
        if (zero) return;
        if (a == 0) {
            scalar *= r.pow(mult);
            return;
        }
        scalar *= Rat(a).pow(mult);
        const Rat c = r / Rat(a);
        auto it = factors.find(c);
        if (it == factors.end()) {
            factors.emplace(c, mult);
        } else {
            it->second += mult;
            if (it->second == 0) factors.erase(it);
        }
    }

    void mul(const LinearFactors& o) {
        if (o.zero) zero = true;
        if (zero) return;
        scalar *= o.scalar;
        for (const auto& [c, e] : o.factors) {
            auto it = factors.find(c);
            if (it == factors.end()) {
                factors.emplace(c, e);
            } else {
                it->second += e;
                if (it->second == 0) factors.erase(it);
            }
        }
    }

    RatFn expand() const {
        if (zero || scalar.is_zero()) return RatFn();
        UniPoly num(scalar), den(Rat(1));
        for (const auto& [c, e] : factors) {
            const UniPoly f = UniPoly::linear(Rat(1), c);
            if (e > 0)
                num *= poly_pow(f, static_cast<unsigned>(e));
            else
                den *= poly_pow(f, static_cast<unsigned>(-e));
        }
        return RatFn::from_coprime(num, den);
    }

    Rat value_at(const Rat& s1) const {
        if (zero) return Rat(0);
        Rat acc = scalar;
        bool vanishes = false;
        for (const auto& [c, e] : factors) {
            const Rat v = s1 + c;
            if (v.is_zero()) {
                if (e < 0)
                    throw ComputationError("evaluation at pole", "factor (s1 + " + c.str() + ")");
                vanishes = true;
                continue;
            }
            acc *= v.pow(e);
        }
        return vanishes ? Rat(0) : acc;
    }
};

// Equivariant Euler class: product over weights of the reduced linear form
// to its multiplicity.  A zero weight with positive multiplicity gives 0;
// with negative multiplicity the context is unusable.
inline LinearFactors euler_factors(const Character& x, const ParamContext& ctx) {
    LinearFactors lf;
    for (const auto& [w, k] : x.terms()) lf.mul_form(w.s1_coeff(), w.const_part(ctx), k);
    return lf;
}

inline RatFn euler(const Character& x, const ParamContext& ctx) {
    return euler_factors(x, ctx).expand();
}

inline Rat euler_at(const Character& x, const ParamContext& ctx, const Rat& s1) {
    Rat acc(1);
    bool vanishes = false;
    for (const auto& [w, k] : x.terms()) {
        const Rat v = w.value_at(ctx, s1);
        if (v.is_zero()) {
            if (k < 0)
                throw ComputationError("division by zero weight — regenerate context",
                                       "weight " + w.str() + " vanishes at the chosen point");
            vanishes = true;
            continue;
        }
        acc *= v.pow(k);
    }
    return vanishes ? Rat(0) : acc;
}

} // namespace dt4
