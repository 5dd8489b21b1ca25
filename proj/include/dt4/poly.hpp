#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "dt4/rational.hpp"

namespace dt4 {

// Univariate polynomial in the distinguished symbolic variable s1, with
// rational coefficients stored by ascending power.  Trailing zeros are
// always stripped; the zero polynomial has an empty coefficient list and
// degree() == -1.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Rat& c) { if (!c.is_zero()) c_.push_back(c); } // NOLINT
    UniPoly(int c) : UniPoly(Rat(c)) {}                          // NOLINT
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { strip(); }
    UniPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { strip(); }

    // a*s1 + b
    static UniPoly linear(const Rat& a, const Rat& b) { return UniPoly(std::vector<Rat>{b, a}); }
    static UniPoly variable() { return linear(Rat(1), Rat(0)); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }
    Rat constant_term() const { return coeff(0); }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPoly operator-() const {
        UniPoly r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(r));
    }

    UniPoly& operator+=(const UniPoly& o) { *this = *this + o; return *this; }
    UniPoly& operator-=(const UniPoly& o) { *this = *this - o; return *this; }
    UniPoly& operator*=(const UniPoly& o) { *this = *this * o; return *this; }

    friend UniPoly operator*(const Rat& a, const UniPoly& p) {
        if (a.is_zero()) return UniPoly();
        UniPoly r(p);
        for (auto& c : r.c_) c *= a;
        return r;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // Multiplies by s1^k.
    UniPoly shifted(std::size_t k) const {
        if (is_zero()) return UniPoly();
        std::vector<Rat> r(k, Rat(0));
        r.insert(r.end(), c_.begin(), c_.end());
        return UniPoly(std::move(r));
    }

    UniPoly monic() const {
        if (is_zero()) return UniPoly();
        return leading().inv() * *this;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<Rat> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rat(static_cast<long>(i)) * c_[i];
        return UniPoly(std::move(r));
    }

    // Euclidean division: *this = q*d + r with deg r < deg d.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw ComputationError("division by zero", "polynomial division by zero");
        UniPoly rem(*this), quot;
        const Rat dl_inv = d.leading().inv();
        std::vector<Rat> q;
        if (rem.degree() >= d.degree()) q.assign(rem.degree() - d.degree() + 1, Rat(0));
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            const int k = rem.degree() - d.degree();
            const Rat f = rem.leading() * dl_inv;
            q[static_cast<std::size_t>(k)] = f;
            rem -= f * d.shifted(static_cast<std::size_t>(k));
        }
        return {UniPoly(std::move(q)), rem};
    }

    UniPoly exact_div(const UniPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw std::invalid_argument("exact_div: nonzero remainder");
        return q;
    }

    // Synthetic division by (s1 - root); returns quotient if the remainder
    // vanishes, otherwise nullopt-like empty flag via the bool.
    std::pair<UniPoly, bool> deflate(const Rat& root) const {
        if (is_zero()) return {UniPoly(), false};
        std::vector<Rat> q(c_.size() - 1, Rat(0));
        Rat carry(0);
        for (std::size_t i = c_.size(); i-- > 1;) {
            carry = c_[i] + carry * root;
            q[i - 1] = carry;
        }
        const Rat rem = c_[0] + carry * root;
        if (!rem.is_zero()) return {UniPoly(), false};
        return {UniPoly(std::move(q)), true};
    }

    std::string str(const std::string& var = "s1") const;

private:
    void strip() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rat> c_;
};

// Monic gcd over the rationals; gcd(0, 0) = 0.
inline UniPoly poly_gcd(UniPoly a, UniPoly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = r.is_zero() ? UniPoly() : r.monic();
    }
    return a;
}

inline UniPoly poly_pow(const UniPoly& p, unsigned e) {
    UniPoly acc(Rat(1)), base(p);
    while (e) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

inline std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        const bool first = out.empty();
        const Rat& c = c_[i];
        std::string mag = c.abs().str();
        if (!first) out += c.sign() < 0 ? " - " : " + ";
        else if (c.sign() < 0) out += "-";
        if (i == 0) {
            out += mag;
        } else {
            if (mag != "1") out += mag + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

} // namespace dt4
