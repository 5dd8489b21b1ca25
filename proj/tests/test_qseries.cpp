#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "dt4/qseries.hpp"
#include "dt4/ratfn.hpp"

using namespace dt4;

namespace {

QSeries<Rat> from_ints(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    const int order = static_cast<int>(v.size()) - 1;
    return QSeries<Rat>(order, std::move(v));
}

long sigma2(int n) {
    long s = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) s += static_cast<long>(d) * d;
    return s;
}

} // namespace

TEST_CASE("series_log basics") {
    SECTION("Mercator") {
        const QSeries<Rat> z = from_ints({1, 1, 0, 0});
        const QSeries<Rat> lg = series_log(z);
        CHECK(lg.coeff(1) == Rat(1));
        CHECK(lg.coeff(2) == Rat(-1, 2));
        CHECK(lg.coeff(3) == Rat(1, 3));
    }
    SECTION("log M(-q)") {
        const QSeries<Rat> lg = series_log(macmahon_neg(3));
        CHECK(lg.coeff(1) == Rat(-1));
        CHECK(lg.coeff(2) == Rat(5, 2));
        CHECK(lg.coeff(3) == Rat(-10, 3));
    }
    SECTION("log 1 = 0") {
        const QSeries<Rat> lg = series_log(QSeries<Rat>::one(4));
        for (int n = 0; n <= 4; ++n) CHECK(lg.coeff(n) == Rat(0));
    }
    SECTION("non-unital input rejected") {
        CHECK_THROWS_AS(series_log(from_ints({2, 1})), ComputationError);
    }
}

TEST_CASE("series_exp basics") {
    SECTION("exp 0 = 1") {
        CHECK(series_exp(QSeries<Rat>(3)) == QSeries<Rat>::one(3));
    }
    SECTION("exp of c*q") {
        QSeries<Rat> f(2);
        f.set_coeff(1, Rat(3));
        const QSeries<Rat> e = series_exp(f);
        CHECK(e.coeff(0) == Rat(1));
        CHECK(e.coeff(1) == Rat(3));
        CHECK(e.coeff(2) == Rat(9, 2));
    }
    SECTION("exp recovers M(-q)") {
        QSeries<Rat> f(3);
        f.set_coeff(1, Rat(-1));
        f.set_coeff(2, Rat(5, 2));
        f.set_coeff(3, Rat(-10, 3));
        CHECK(series_exp(f) == from_ints({1, -1, 3, -6}));
    }
    SECTION("nonzero constant rejected") {
        CHECK_THROWS_AS(series_exp(QSeries<Rat>::one(2)), ComputationError);
    }
}

TEST_CASE("exp/log round trips") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        QSeries<Rat> z(6);
        z.set_coeff(0, Rat(1));
        for (int n = 1; n <= 6; ++n)
            z.set_coeff(n, Rat(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 5) + 1));
        CHECK(series_exp(series_log(z)) == z);
        QSeries<Rat> f = z;
        f.set_coeff(0, Rat(0));
        CHECK(series_log(series_exp(f)) == f);
    }
}

TEST_CASE("macmahon expansion counts plane partitions") {
    CHECK(macmahon(4) == from_ints({1, 1, 3, 6, 13}));
    CHECK(macmahon(0) == from_ints({1}));
    const QSeries<Rat> m6 = macmahon(6);
    CHECK(m6.coeff(5) == Rat(24));
    CHECK(m6.coeff(6) == Rat(48));
    CHECK(macmahon_neg(3) == from_ints({1, -1, 3, -6}));
}

TEST_CASE("log macmahon follows the sigma2 law") {
    const int N = 8;
    const QSeries<Rat> lg = series_log(macmahon(N));
    for (int n = 1; n <= N; ++n) CHECK(lg.coeff(n) == Rat(sigma2(n), n));
    const QSeries<Rat> lgn = series_log(macmahon_neg(N));
    for (int n = 1; n <= N; ++n)
        CHECK(lgn.coeff(n) == (n % 2 ? -Rat(sigma2(n), n) : Rat(sigma2(n), n)));
}

TEST_CASE("macmahon_power") {
    SECTION("unit exponent") {
        CHECK(macmahon_power(Rat(1), 3) == from_ints({1, -1, 3, -6}));
    }
    SECTION("zero exponent") {
        CHECK(macmahon_power(Rat(0), 4) == QSeries<Rat>::one(4));
    }
    SECTION("square") {
        CHECK(macmahon_power(Rat(2), 2) == from_ints({1, -2, 7}));
        CHECK(macmahon_power(Rat(2), 6) == macmahon_neg(6) * macmahon_neg(6));
    }
    SECTION("integer exponents equal literal powers") {
        for (long e : {-3L, -1L, 2L, 5L}) {
            CHECK(macmahon_power(Rat(e), 6) == series_pow_int(macmahon_neg(6), e));
        }
    }
    SECTION("exponent additivity over RatFn") {
        std::mt19937_64 rng(23);
        const UniPoly s1 = UniPoly::variable();
        for (int i = 0; i < 5; ++i) {
            const RatFn e1 = RatFn::reduce(UniPoly(Rat(static_cast<long>(rng() % 7) + 1)),
                                           s1 + UniPoly(Rat(static_cast<long>(rng() % 5) + 1)));
            const RatFn e2 = RatFn::reduce(Rat(static_cast<long>(rng() % 7) + 1) * s1,
                                           s1 + UniPoly(Rat(static_cast<long>(rng() % 5) + 2)));
            CHECK(macmahon_power(e1 + e2, 5) == macmahon_power(e1, 5) * macmahon_power(e2, 5));
        }
    }
}

TEST_CASE("convolve_check") {
    SECTION("trivial") {
        CHECK(convolve_check(QSeries<Rat>::one(3), QSeries<Rat>::one(3), QSeries<Rat>::one(3)));
    }
    SECTION("M^2 against M * M") {
        const QSeries<Rat> m = macmahon_neg(6);
        CHECK(convolve_check(m * m, m, m));
    }
    SECTION("counterexample") {
        const QSeries<Rat> m = macmahon_neg(2);
        QSeries<Rat> other(2);
        other.set_coeff(0, Rat(1));
        other.set_coeff(1, Rat(1));
        CHECK_FALSE(convolve_check(m, m, other));
    }
    SECTION("order mismatch is an error") {
        CHECK_THROWS_AS(convolve_check(QSeries<Rat>::one(3), QSeries<Rat>::one(2), QSeries<Rat>::one(3)),
                        ComputationError);
    }
}

TEST_CASE("series over RatFn commute with evaluation") {
    const UniPoly s1 = UniPoly::variable();
    const RatFn e = RatFn::reduce(UniPoly(Rat(3)), s1 + UniPoly(Rat(2)));
    const QSeries<RatFn> a = macmahon_power(e, 4);
    const QSeries<RatFn> b = macmahon_power(e + RatFn(1), 4);
    const QSeries<RatFn> prod = a * b;
    const Rat x(5, 7);
    auto ev = [&x](const QSeries<RatFn>& s) {
        return s.map<Rat>([&x](const RatFn& f) { return f.eval(x); });
    };
    CHECK(ev(prod) == ev(a) * ev(b));
    CHECK(ev(a + b) == ev(a) + ev(b));
}
