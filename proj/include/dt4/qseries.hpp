#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "dt4/error.hpp"
#include "dt4/rational.hpp"

namespace dt4 {

// Truncated formal power series in q, coefficients q^0..q^order, over an
// exact coefficient field K (Rat or RatFn).  Every binary operation insists
// on matching truncation orders; silent order mixing is the dominant bug
// class in series code.
template <class K>
class QSeries {
public:
    explicit QSeries(int order) : order_(order), c_(static_cast<std::size_t>(order) + 1, K(0)) {
        if (order < 0) throw std::invalid_argument("negative series order");
    }
    QSeries(int order, std::vector<K> coeffs) : order_(order), c_(std::move(coeffs)) {
        if (c_.size() != static_cast<std::size_t>(order) + 1)
            throw std::invalid_argument("coefficient count does not match order");
    }

    static QSeries one(int order) {
        QSeries s(order);
        s.c_[0] = K(1);
        return s;
    }

    int order() const { return order_; }
    const K& coeff(int n) const { return c_.at(static_cast<std::size_t>(n)); }
    void set_coeff(int n, K v) { c_.at(static_cast<std::size_t>(n)) = std::move(v); }
    const std::vector<K>& coeffs() const { return c_; }

    bool is_one() const {
        if (!(c_[0] == K(1))) return false;
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (!(c_[i] == K(0))) return false;
        return true;
    }

    QSeries operator-() const {
        QSeries r(*this);
        for (auto& c : r.c_) c = K(0) - c;
        return r;
    }

    friend QSeries operator+(const QSeries& a, const QSeries& b) {
        a.check_order(b);
        QSeries r(a.order_);
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

    friend QSeries operator*(const QSeries& a, const QSeries& b) {
        a.check_order(b);
        QSeries r(a.order_);
        for (int i = 0; i <= a.order_; ++i) {
            if (a.c_[static_cast<std::size_t>(i)] == K(0)) continue;
            for (int j = 0; i + j <= a.order_; ++j)
                r.c_[static_cast<std::size_t>(i + j)] +=
                    a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
        }
        return r;
    }

    QSeries& operator+=(const QSeries& o) { *this = *this + o; return *this; }
    QSeries& operator-=(const QSeries& o) { *this = *this - o; return *this; }
    QSeries& operator*=(const QSeries& o) { *this = *this * o; return *this; }

    friend QSeries operator*(const K& s, const QSeries& a) {
        QSeries r(a);
        for (auto& c : r.c_) c = s * c;
        return r;
    }

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.order_ == b.order_ && a.c_ == b.c_;
    }
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    template <class K2, class F>
    QSeries<K2> map(F f) const {
        std::vector<K2> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(f(c));
        return QSeries<K2>(order_, std::move(out));
    }

    void check_order(const QSeries& o) const {
        if (order_ != o.order_)
            throw ComputationError("mismatched orders",
                                   std::to_string(order_) + " vs " + std::to_string(o.order_));
    }

private:
    int order_;
    std::vector<K> c_;
};

// log Z for Z with constant term 1, via n*Z_n = sum_k k*F_k*Z_{n-k}.
template <class K>
QSeries<K> series_log(const QSeries<K>& z) {
    if (!(z.coeff(0) == K(1)))
        throw ComputationError("log of non-unital series", "constant term must be 1");
    const int N = z.order();
    QSeries<K> f(N);
    for (int n = 1; n <= N; ++n) {
        K acc = z.coeff(n);
        for (int k = 1; k < n; ++k) acc = acc - f.coeff(k) * z.coeff(n - k) * K(k) / K(n);
        f.set_coeff(n, acc);
    }
    return f;
}

// exp F for F with constant term 0, via n*E_n = sum_k k*F_k*E_{n-k}.
template <class K>
QSeries<K> series_exp(const QSeries<K>& f) {
    if (!(f.coeff(0) == K(0)))
        throw ComputationError("exp of series with nonzero constant term", "constant term must be 0");
    const int N = f.order();
    QSeries<K> e(N);
    e.set_coeff(0, K(1));
    for (int n = 1; n <= N; ++n) {
        K acc(0);
        for (int k = 1; k <= n; ++k) acc = acc + K(k) * f.coeff(k) * e.coeff(n - k);
        e.set_coeff(n, acc / K(n));
    }
    return e;
}

// Multiplicative inverse of a series with unit constant term.
template <class K>
QSeries<K> series_inv(const QSeries<K>& a) {
    if (a.coeff(0) == K(0))
        throw ComputationError("division by zero", "series inverse needs a unit constant term");
    const int N = a.order();
    QSeries<K> b(N);
    const K inv0 = K(1) / a.coeff(0);
    b.set_coeff(0, inv0);
    for (int n = 1; n <= N; ++n) {
        K acc(0);
        for (int k = 1; k <= n; ++k) acc = acc + a.coeff(k) * b.coeff(n - k);
        b.set_coeff(n, K(0) - inv0 * acc);
    }
    return b;
}

template <class K>
QSeries<K> series_pow_int(const QSeries<K>& a, long e) {
    QSeries<K> base = e < 0 ? series_inv(a) : a;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    QSeries<K> acc = QSeries<K>::one(a.order());
    while (k) {
        if (k & 1u) acc *= base;
        base *= base;
        k >>= 1u;
    }
    return acc;
}

// MacMahon function M(q) = prod_{n>=1} (1-q^n)^{-n}; the q^n coefficient
// counts plane partitions of n.
inline QSeries<Rat> macmahon(int order) {
    QSeries<Rat> s = QSeries<Rat>::one(order);
    for (int k = 1; k <= order; ++k) {
        // geometric inverse of (1 - q^k), applied k times
        QSeries<Rat> g(order);
        for (int j = 0; j * k <= order; ++j) g.set_coeff(j * k, Rat(1));
        for (int rep = 0; rep < k; ++rep) s *= g;
    }
    return s;
}

inline QSeries<Rat> macmahon_neg(int order) {
    QSeries<Rat> s = macmahon(order);
    for (int n = 1; n <= order; n += 2) s.set_coeff(n, -s.coeff(n));
    return s;
}

// M(-q)^E = exp(E * log M(-q)) for a field element E; integer E agrees with
// the literal integer power.
template <class K>
QSeries<K> macmahon_power(const K& exponent, int order) {
    const QSeries<Rat> lneg = series_log(macmahon_neg(order));
    QSeries<K> lifted = lneg.template map<K>([](const Rat& r) { return K(r); });
    return series_exp(exponent * lifted);
}

// Degeneration-formula shadow: true iff coeff(Z, n) is the Cauchy
// convolution of Z- and Z+ for every n up to the shared order.
template <class K>
bool convolve_check(const QSeries<K>& z, const QSeries<K>& zm, const QSeries<K>& zp) {
    z.check_order(zm);
    z.check_order(zp);
    for (int n = 0; n <= z.order(); ++n) {
        K acc(0);
        for (int k = 0; k <= n; ++k) acc = acc + zm.coeff(k) * zp.coeff(n - k);
        if (!(acc == z.coeff(n))) return false;
    }
    return true;
}

} // namespace dt4
