#pragma once

#include <string>
#include <vector>

#include "dt4/context.hpp"
#include "dt4/qseries.hpp"
#include "dt4/ratfn.hpp"

namespace dt4 {

// e3(s1..s4) with s4 = -s1-s2-s3, as a polynomial in s1.  Equals
// -(s1+s2)(s1+s3)(s2+s3); both routes are exercised by tests.
inline UniPoly e3_poly(const ParamContext& ctx) {
    const UniPoly s1 = UniPoly::variable();
    const UniPoly s2(ctx.s2), s3(ctx.s3), s4 = ctx.s4_poly();
    return s2 * s3 * s4 + s1 * s3 * s4 + s1 * s2 * s4 + s1 * s2 * s3;
}

inline UniPoly e3bar_factored(const ParamContext& ctx) {
    const UniPoly s1 = UniPoly::variable();
    const UniPoly sum12 = s1 + UniPoly(ctx.s2);
    const UniPoly sum13 = s1 + UniPoly(ctx.s3);
    const UniPoly sum23((ctx.s2 + ctx.s3));
    return Rat(-1) * (sum12 * sum13 * sum23);
}

// Exponent of the C^4 tautological series: -m*e3 / (s1 s2 s3 s4).
inline RatFn ck_exponent(const ParamContext& ctx) {
    const UniPoly s1 = UniPoly::variable();
    const UniPoly den = Rat(ctx.s2 * ctx.s3) * (s1 * ctx.s4_poly());
    return RatFn::reduce(-(ctx.m * e3_poly(ctx)), den);
}

inline QSeries<RatFn> ck_closed_form(int order, const ParamContext& ctx) {
    return macmahon_power(ck_exponent(ctx), order);
}

// Wall series M(-q)^(m/s1); its log is F_{inf,0}/s1.
inline RatFn w_exponent(const ParamContext& ctx) {
    return RatFn::reduce(UniPoly(ctx.m), UniPoly::variable());
}

inline QSeries<RatFn> w_infinity(int order, const ParamContext& ctx) {
    return macmahon_power(w_exponent(ctx), order);
}

// Relative series exponent: -m (s2 s3 + s3 s4 + s2 s4) / (s2 s3 s4).
inline RatFn z_rel_exponent(const ParamContext& ctx) {
    const UniPoly s4 = ctx.s4_poly();
    const UniPoly num = UniPoly(ctx.s2 * ctx.s3) + Rat(ctx.s2 + ctx.s3) * s4;
    const UniPoly den = Rat(ctx.s2 * ctx.s3) * s4;
    return RatFn::reduce(-(ctx.m * num), den);
}

inline QSeries<RatFn> z_rel_closed(int order, const ParamContext& ctx) {
    return macmahon_power(z_rel_exponent(ctx), order);
}

// Twisted relative series, product route: Z(X, Dinf) * M(-q)^l.
inline QSeries<RatFn> z_rel_twisted(int l, int order, const ParamContext& ctx) {
    return z_rel_closed(order, ctx) * macmahon_power(RatFn(l), order);
}

// Twisted relative series, substitution route: the twist enters through the
// wall factor with m shifted to m + l*s1, i.e. Z(C^4) * M(-q)^((m+l*s1)/s1).
inline QSeries<RatFn> z_rel_twisted_subst(int l, int order, const ParamContext& ctx) {
    const UniPoly shifted = UniPoly::linear(Rat(l), ctx.m);
    const RatFn wexp = RatFn::reduce(shifted, UniPoly::variable());
    return ck_closed_form(order, ctx) * macmahon_power(wexp, order);
}

// F_{inf,0} = -(residue at s1 = 0) of log Z, coefficientwise.  For the C^4
// series this is m * log M(-q).
inline QSeries<Rat> f_inf0_residue(const QSeries<RatFn>& z) {
    const QSeries<RatFn> lg = series_log(z);
    return lg.map<Rat>([](const RatFn& f) { return -f.residue_at_zero(); });
}

// Topological data of a log CY local curve Tot_C(L1+L2+L3) with r
// anti-canonical fibers: deg L1 + deg L2 + deg L3 = 2g - 2 + r, r >= 0.
struct LocalCurveData {
    int g = 0, l1 = 0, l2 = 0, l3 = 0, l = 0;

    int r() const { return l1 + l2 + l3 - (2 * g - 2); }

    void validate() const {
        if (g < 0 || r() < 0)
            throw ComputationError("invalid topological data",
                                   "g = " + std::to_string(g) + ", r = " + std::to_string(r()));
    }

    std::string str() const {
        return "(" + std::to_string(g) + "; " + std::to_string(l1) + "," + std::to_string(l2) +
               "," + std::to_string(l3) + "; " + std::to_string(l) + ")";
    }
};

struct SplittingDatum {
    LocalCurveData left, right;

    bool splits(const LocalCurveData& whole) const {
        return left.g + right.g == whole.g && left.l1 + right.l1 == whole.l1 &&
               left.l2 + right.l2 == whole.l2 && left.l3 + right.l3 == whole.l3 &&
               left.l + right.l == whole.l && left.r() >= 0 && right.r() >= 0;
    }
};

// deg L - m (1/s2 + 1/s3 + 1/s4)(2 - 2g - r), a rational function of s1
// through s4.
inline RatFn local_curve_exponent(const LocalCurveData& data, const ParamContext& ctx) {
    data.validate();
    const Rat chi = Rat(2 - 2 * data.g - data.r());
    const Rat c23 = ctx.s2.inv() + ctx.s3.inv();
    const RatFn inv_s4 = RatFn::reduce(UniPoly(Rat(1)), ctx.s4_poly());
    return RatFn(Rat(data.l)) - RatFn(ctx.m * chi) * (RatFn(c23) + inv_s4);
}

inline QSeries<RatFn> local_curve_series(const LocalCurveData& data, int order,
                                         const ParamContext& ctx) {
    return macmahon_power(local_curve_exponent(data, ctx), order);
}

// Degeneration identity at the level of generating series: exact exponent
// additivity plus coefficientwise Cauchy convolution.
inline bool gluing_check(const LocalCurveData& whole, const SplittingDatum& split,
                         const ParamContext& ctx, int order) {
    whole.validate();
    split.left.validate();
    split.right.validate();
    if (!split.splits(whole))
        throw ComputationError("invalid topological data", "splitting does not sum to the whole");
    const RatFn ew = local_curve_exponent(whole, ctx);
    const RatFn el = local_curve_exponent(split.left, ctx);
    const RatFn er = local_curve_exponent(split.right, ctx);
    if (!(ew == el + er)) return false;
    return convolve_check(local_curve_series(whole, order, ctx),
                          local_curve_series(split.left, order, ctx),
                          local_curve_series(split.right, order, ctx));
}

} // namespace dt4
