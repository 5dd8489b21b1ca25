#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <ostream>
#include <string>

#include "dt4/error.hpp"

namespace dt4 {

// Arbitrary-precision rational in canonical form: gcd(|num|, den) = 1,
// den > 0, zero is 0/1.  Wraps mpq_class so that all arithmetic returns
// plain values (no GMP expression templates leaking into templated code).
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}                // NOLINT: implicit by design
    Rat(int n) : v_(static_cast<long>(n)) {}
    Rat(long n, long d) : v_(n, d) {
        if (d == 0) throw ComputationError("division by zero", "rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    // Parses "p/q" (q > 0 after canonicalization) or a bare integer "p".
    static Rat parse(const std::string& s);

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rat operator-() const { return Rat(mpq_class(-v_)); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw ComputationError("division by zero", "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    Rat inv() const {
        if (is_zero()) throw ComputationError("division by zero", "inverse of zero");
        return Rat(mpq_class(1) / v_);
    }

    Rat pow(long e) const;

private:
    mpq_class v_;
};

inline Rat Rat::parse(const std::string& s) {
    std::string t;
    t.reserve(s.size());
    for (char c : s)
        if (c != ' ' && c != '\t') t.push_back(c);
    if (t.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = t.find('/');
    auto check_int = [](const std::string& x) {
        if (x.empty()) return false;
        std::size_t i = (x[0] == '-' || x[0] == '+') ? 1 : 0;
        if (i == x.size()) return false;
        for (; i < x.size(); ++i)
            if (x[i] < '0' || x[i] > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!check_int(t)) throw std::invalid_argument("bad rational literal: " + s);
        return Rat(mpq_class(mpz_class(t)));
    }
    const std::string ns = t.substr(0, slash);
    const std::string ds = t.substr(slash + 1);
    if (!check_int(ns) || !check_int(ds)) throw std::invalid_argument("bad rational literal: " + s);
    mpz_class d(ds);
    if (d == 0) throw ComputationError("division by zero", "rational literal with zero denominator");
    mpq_class q(mpz_class(ns), d);
    q.canonicalize();
    return Rat(std::move(q));
}

inline Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    if (is_zero()) {
        if (e < 0) throw ComputationError("division by zero", "negative power of zero");
        return Rat(0);
    }
    Rat base = e < 0 ? inv() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    Rat acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

} // namespace dt4
