#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "dt4/poly.hpp"
#include "dt4/ratfn.hpp"

namespace dt4 {

// Exact rational bindings for (s2, s3, m).  s1 stays symbolic; s4 is never
// stored, it is the affine map s1 -> -s1 - s2 - s3.  genericity_bound B
// controls the rejection rule: no bounded integer combination
// a*s2 + b*s3 + c*m + d*(s2+s3), |a|,|b|,|c|,|d| <= B, may vanish, so no
// Euler-class factor with zero s1-coefficient can collapse to 0/0.
struct ParamContext {
    Rat s2, s3, m;
    int genericity_bound = 20;

    Rat s4_at(const Rat& s1) const { return -s1 - s2 - s3; }
    UniPoly s4_poly() const { return UniPoly::linear(Rat(-1), -(s2 + s3)); }

    ParamContext scaled(const Rat& lambda) const {
        return ParamContext{s2 * lambda, s3 * lambda, m * lambda, genericity_bound};
    }

    std::string str() const {
        return "s2=" + s2.str() + " s3=" + s3.str() + " m=" + m.str();
    }
};

inline int default_genericity_bound(int n_max) { return 4 * (n_max + 1); }

namespace detail {

// int64 magnitude guard for the combination scans below: numerators and
// denominators are sampled from [1, 97], so cross products stay far below
// the int64 range for any realistic bound.
struct ScaledTriple {
    std::int64_t a2, a3, am; // s2, s3, m over a common denominator
};

inline ScaledTriple scale_triple(const Rat& s2, const Rat& s3, const Rat& m) {
    mpz_class q = s2.den() * s3.den() * m.den();
    mpz_class x2 = s2.num() * (q / s2.den());
    mpz_class x3 = s3.num() * (q / s3.den());
    mpz_class xm = m.num() * (q / m.den());
    if (!x2.fits_slong_p() || !x3.fits_slong_p() || !xm.fits_slong_p())
        throw std::invalid_argument("context values too large for genericity scan");
    return {x2.get_si(), x3.get_si(), xm.get_si()};
}

} // namespace detail

// Returns a description of the first vanishing bounded combination, if any.
// The scan covers (a+d)*s2 + (b+d)*s3 + c*m for |a|,|b|,|c|,|d| <= B as a
// superset: coefficients of s2 and s3 range over [-2B, 2B].
inline std::optional<std::string> genericity_violation(const Rat& s2, const Rat& s3, const Rat& m,
                                                       int bound) {
    const auto t = detail::scale_triple(s2, s3, m);
    const long B = bound;
    for (long a = -2 * B; a <= 2 * B; ++a)
        for (long b = -2 * B; b <= 2 * B; ++b) {
            const std::int64_t partial = a * t.a2 + b * t.a3;
            for (long c = -B; c <= B; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                if (partial + c * t.am == 0)
                    return std::to_string(a) + "*s2 + " + std::to_string(b) + "*s3 + " +
                           std::to_string(c) + "*m = 0";
            }
        }
    return std::nullopt;
}

inline bool is_generic(const Rat& s2, const Rat& s3, const Rat& m, int bound) {
    return !genericity_violation(s2, s3, m, bound).has_value();
}

// Validating constructor for user-supplied contexts.
inline ParamContext make_context(const Rat& s2, const Rat& s3, const Rat& m, int bound) {
    if (auto v = genericity_violation(s2, s3, m, bound))
        throw ComputationError("context not generic", *v);
    return ParamContext{s2, s3, m, bound};
}

// Deliberately special contexts (m = 0, m = -s4 bindings, ...) skip the
// rejection rule; numerators that vanish there are the point of the check.
inline ParamContext make_context_unchecked(const Rat& s2, const Rat& s3, const Rat& m, int bound) {
    return ParamContext{s2, s3, m, bound};
}

namespace detail {
// Deterministic across platforms (uniform_int_distribution is not).
inline long draw_1_97(std::mt19937_64& rng) { return static_cast<long>(rng() % 97) + 1; }
} // namespace detail

// Rejection sampling of generic contexts; numerators and denominators are
// drawn from [1, 97].
inline ParamContext sample_context(std::mt19937_64& rng, int bound, int max_attempts = 10000) {
    for (int att = 0; att < max_attempts; ++att) {
        Rat s2(detail::draw_1_97(rng), detail::draw_1_97(rng));
        Rat s3(detail::draw_1_97(rng), detail::draw_1_97(rng));
        Rat m(detail::draw_1_97(rng), detail::draw_1_97(rng));
        if (is_generic(s2, s3, m, bound)) return ParamContext{s2, s3, m, bound};
    }
    throw ComputationError("context sampling failed", "too many genericity rejections");
}

// Fully-numeric mode also binds s1.  The combination scan additionally
// covers the s1 coefficient, with enough slack that values stay generic
// under s1 <-> -s1-s2-s3 and under permutations of (s1, s2, s3).
inline bool is_generic_numeric(const Rat& s1, const ParamContext& ctx) {
    const auto t = detail::scale_triple(ctx.s2, ctx.s3, ctx.m);
    mpz_class q = ctx.s2.den() * ctx.s3.den() * ctx.m.den();
    mpz_class x1z = s1.num() * q; // s1 scaled by the triple's denominator...
    // ... then everything rescaled by s1's denominator:
    mpz_class d1 = s1.den();
    if (!(x1z).fits_slong_p()) return false;
    const std::int64_t B = ctx.genericity_bound;
    const std::int64_t a1 = x1z.get_si();
    if (!d1.fits_slong_p()) return false;
    const std::int64_t dd = d1.get_si();
    const std::int64_t a2 = t.a2 * dd, a3 = t.a3 * dd, am = t.am * dd;
    for (std::int64_t a = -2 * B; a <= 2 * B; ++a)
        for (std::int64_t b = -2 * B; b <= 2 * B; ++b) {
            const std::int64_t partial = a * a2 + b * a3;
            for (std::int64_t c = -1; c <= 1; ++c) {
                const std::int64_t pc = partial + c * am;
                for (std::int64_t e = -2 * B; e <= 2 * B; ++e) {
                    if (a == 0 && b == 0 && c == 0 && e == 0) continue;
                    if (pc + e * a1 == 0) return false;
                }
            }
        }
    return true;
}

inline Rat sample_numeric_s1(std::mt19937_64& rng, const ParamContext& ctx, int max_attempts = 10000) {
    for (int att = 0; att < max_attempts; ++att) {
        Rat s1(detail::draw_1_97(rng), detail::draw_1_97(rng));
        if (is_generic_numeric(s1, ctx)) return s1;
    }
    throw ComputationError("context sampling failed", "no generic numeric s1 found");
}

} // namespace dt4
