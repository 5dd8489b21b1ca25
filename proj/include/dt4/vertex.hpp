#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dt4/characters.hpp"
#include "dt4/formulas.hpp"
#include "dt4/qseries.hpp"

namespace dt4 {

// Per-partition box statistics entering the candidate sign statistics.
struct BoxStats {
    int size = 0;
    int l_gt1 = 0; // boxes with l > 1
    int i_eq_l = 0; // boxes with i = l
    int i_lt_l = 0; // boxes with i < l
};

inline BoxStats box_stats(const SolidPartition& pi) {
    BoxStats st;
    for (const auto& b : pi.boxes()) {
        ++st.size;
        if (b.l > 1) ++st.l_gt1;
        if (b.i == b.l) ++st.i_eq_l;
        if (b.i < b.l) ++st.i_lt_l;
    }
    return st;
}

// sigma(pi) = a*|pi| + b*#{l>1} + c*#{i=l} + d*#{i<l} mod 2, with a global
// orientation bit.  The family is searchable and extensible; candidates are
// identified by name in reports.
struct SignCandidate {
    bool a = false, b = false, c = false, d = false;
    int eps = 1;

    int sigma_parity(const BoxStats& st) const {
        int s = 0;
        if (a) s += st.size;
        if (b) s += st.l_gt1;
        if (c) s += st.i_eq_l;
        if (d) s += st.i_lt_l;
        return s & 1;
    }

    int sign(const BoxStats& st) const { return sigma_parity(st) ? -eps : eps; }

    std::string name() const {
        std::string out = eps > 0 ? "+" : "-";
        if (a) out += "|pi|";
        if (b) out += (out.size() > 1 ? "+" : "") + std::string("#(l>1)");
        if (c) out += (out.size() > 1 ? "+" : "") + std::string("#(i=l)");
        if (d) out += (out.size() > 1 ? "+" : "") + std::string("#(i<l)");
        if (out.size() == 1) out += "0";
        return out;
    }
};

inline std::vector<SignCandidate> sign_candidate_family() {
    std::vector<SignCandidate> out;
    for (int eps : {1, -1})
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                for (int c = 0; c < 2; ++c)
                    for (int d = 0; d < 2; ++d)
                        out.push_back(SignCandidate{a != 0, b != 0, c != 0, d != 0, eps});
    return out;
}

struct SignRule {
    std::vector<SignCandidate> survivors; // identical on the calibration range
    int n_cal = 0;
    std::vector<std::string> contexts_used;
    // Negative-control hook: flips the sign of every partition of size
    // >= corrupt_from_size (0 = off).
    int corrupt_from_size = 0;

    const SignCandidate& primary() const { return survivors.at(0); }

    int sign(const BoxStats& st) const {
        int s = primary().sign(st);
        if (corrupt_from_size > 0 && st.size >= corrupt_from_size) s = -s;
        return s;
    }
};

// One torus fixed point of Hilb^n(C^4): the partition, the context-free
// square root of its virtual tangent character, and everything the sign
// statistics and the divisor reduction need.
struct FixedPoint {
    SolidPartition pi;
    Character sqrt_tv;
    BoxStats stats;
    std::vector<Weight> ins;
    int plane_index = -1; // index into the 3-fold table when divisor-supported
};

struct FixedPointTable {
    int n_max = 0;
    std::vector<std::vector<FixedPoint>> solid;          // by size, 0..n_max
    std::vector<std::vector<PlanePartition>> planes;     // by size
    std::vector<std::vector<Character>> vertex3;         // V_lambda per plane partition
};

inline FixedPointTable build_fixed_point_table(int n_max) {
    if (n_max < 0 || n_max > kMaxPartitionSize)
        throw std::invalid_argument("n_max out of supported range");
    FixedPointTable t;
    t.n_max = n_max;
    t.solid.resize(static_cast<std::size_t>(n_max) + 1);
    t.planes.resize(static_cast<std::size_t>(n_max) + 1);
    t.vertex3.resize(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        t.planes[static_cast<std::size_t>(n)] = enumerate_plane(n);
        for (const auto& lam : t.planes[static_cast<std::size_t>(n)])
            t.vertex3[static_cast<std::size_t>(n)].push_back(n == 0 ? Character()
                                                                    : vertex_3d(lam));
        for (const auto& pi : enumerate_solid(n)) {
            FixedPoint fp;
            fp.pi = pi;
            fp.stats = box_stats(pi);
            fp.ins = insertion_weights(pi);
            if (n > 0) fp.sqrt_tv = square_root(tvir_4d(pi));
            if (auto lam = divisor_support(pi)) {
                const auto& ps = t.planes[static_cast<std::size_t>(n)];
                for (std::size_t i = 0; i < ps.size(); ++i)
                    if (ps[i] == *lam) {
                        fp.plane_index = static_cast<int>(i);
                        break;
                    }
            }
            t.solid[static_cast<std::size_t>(n)].push_back(std::move(fp));
        }
    }
    return t;
}

// --- factored accumulation -------------------------------------------------
//
// Localization sums are sums of products of linear factors.  Keeping the
// running denominator as a factor multiset avoids polynomial gcd entirely:
// common denominators are factorwise maxima and the final reduction is
// root-by-root deflation.
class FactoredSum {
public:
    void add(const LinearFactors& lf, const Rat& scale) {
        if (lf.zero || scale.is_zero() || lf.scalar.is_zero()) return;
        // split the term into numerator part and denominator factors
        UniPoly tnum(scale * lf.scalar);
        std::map<Rat, int> tden;
        for (const auto& [c, e] : lf.factors) {
            if (e > 0)
                tnum *= poly_pow(UniPoly::linear(Rat(1), c), static_cast<unsigned>(e));
            else
                tden.emplace(c, -e);
        }
        // raise both denominators to their factorwise maximum
        for (const auto& [c, e] : tden) {
            const int have = exponent(den_, c);
            if (e > have) {
                num_ *= poly_pow(UniPoly::linear(Rat(1), c), static_cast<unsigned>(e - have));
                den_[c] = e;
            }
        }
        for (const auto& [c, e] : den_) {
            const int termHas = exponent(tden, c);
            if (e > termHas)
                tnum *= poly_pow(UniPoly::linear(Rat(1), c), static_cast<unsigned>(e - termHas));
        }
        num_ += tnum;
    }

    RatFn finish() const {
        if (num_.is_zero()) return RatFn();
        UniPoly num = num_;
        UniPoly den(Rat(1));
        for (const auto& [c, e] : den_) {
            int rem = e;
            while (rem > 0) {
                auto [q, ok] = num.deflate(-c);
                if (!ok) break;
                num = q;
                --rem;
            }
            if (rem > 0) den *= poly_pow(UniPoly::linear(Rat(1), c), static_cast<unsigned>(rem));
        }
        return RatFn::from_coprime(num, den);
    }

private:
    static int exponent(const std::map<Rat, int>& m, const Rat& c) {
        auto it = m.find(c);
        return it == m.end() ? 0 : it->second;
    }

    UniPoly num_;
    std::map<Rat, int> den_; // positive exponents
};

// --- per-fixed-point contributions ------------------------------------------

inline LinearFactors contribution_factors(const FixedPoint& fp, const ParamContext& ctx,
                                          bool with_insertion) {
    LinearFactors lf;
    if (with_insertion)
        for (const auto& w : fp.ins) lf.mul_form(w.s1_coeff(), w.const_part(ctx), 1);
    for (const auto& [w, k] : fp.sqrt_tv.terms()) lf.mul_form(w.s1_coeff(), w.const_part(ctx), -k);
    return lf;
}

// sign(pi) * e(L_m^[n]|pi) / e(sqrt T^vir_pi), reduced.
inline RatFn contribution_4d(const SolidPartition& pi, const ParamContext& ctx,
                             const SignRule& rule) {
    FixedPoint fp;
    fp.pi = pi;
    fp.stats = box_stats(pi);
    fp.ins = insertion_weights(pi);
    fp.sqrt_tv = square_root(tvir_4d(pi));
    LinearFactors lf = contribution_factors(fp, ctx, true);
    RatFn val = lf.expand();
    return rule.sign(fp.stats) < 0 ? -val : val;
}

inline Rat contribution_value(const FixedPoint& fp, const ParamContext& ctx, const Rat& s1,
                              bool with_insertion, int sign) {
    Rat num(1);
    if (with_insertion)
        for (const auto& w : fp.ins) num *= w.value_at(ctx, s1);
    Rat den(1);
    for (const auto& [w, k] : fp.sqrt_tv.terms()) {
        const Rat v = w.value_at(ctx, s1);
        if (v.is_zero())
            throw ComputationError("division by zero weight — regenerate context",
                                   "square-root weight vanishes at the chosen s1");
        den *= v.pow(k);
    }
    Rat out = num / den;
    return sign < 0 ? -out : out;
}

// --- localization series -----------------------------------------------------

inline QSeries<RatFn> z_c4_localized(const FixedPointTable& table, const ParamContext& ctx,
                                     const SignRule& rule) {
    QSeries<RatFn> out(table.n_max);
    out.set_coeff(0, RatFn(1));
    for (int n = 1; n <= table.n_max; ++n) {
        FactoredSum acc;
        for (const auto& fp : table.solid[static_cast<std::size_t>(n)])
            acc.add(contribution_factors(fp, ctx, true), Rat(rule.sign(fp.stats)));
        out.set_coeff(n, acc.finish());
    }
    return out;
}

// Insertion-free series.  The closed form it must match carries the
// opposite orientation on each Hilb^n, so the per-point parity (-1)^n
// is part of the definition here.
inline QSeries<RatFn> z_c4_no_insertion(const FixedPointTable& table, const ParamContext& ctx,
                                        const SignRule& rule) {
    QSeries<RatFn> out(table.n_max);
    out.set_coeff(0, RatFn(1));
    for (int n = 1; n <= table.n_max; ++n) {
        FactoredSum acc;
        const Rat parity((n & 1) ? -1 : 1);
        for (const auto& fp : table.solid[static_cast<std::size_t>(n)])
            acc.add(contribution_factors(fp, ctx, false), parity * Rat(rule.sign(fp.stats)));
        out.set_coeff(n, acc.finish());
    }
    return out;
}

// MNOP degree-0 series: sum over plane partitions of e(-V_lambda).
inline QSeries<RatFn> z_c3_localized(const FixedPointTable& table, const ParamContext& ctx) {
    QSeries<RatFn> out(table.n_max);
    out.set_coeff(0, RatFn(1));
    for (int n = 1; n <= table.n_max; ++n) {
        FactoredSum acc;
        for (const auto& v : table.vertex3[static_cast<std::size_t>(n)]) {
            LinearFactors lf;
            for (const auto& [w, k] : v.terms()) lf.mul_form(w.s1_coeff(), w.const_part(ctx), -k);
            acc.add(lf, Rat(1));
        }
        out.set_coeff(n, acc.finish());
    }
    return out;
}

// Closed-form target for z_c3: M(-q)^(e3bar/(s1 s2 s3)).
inline RatFn mnop_exponent(const ParamContext& ctx) {
    const UniPoly den = Rat(ctx.s2 * ctx.s3) * UniPoly::variable();
    return RatFn::reduce(e3bar_factored(ctx), den);
}

// Fully-numeric q-series value at a bound s1 (fast mode for the symmetry
// and reduction batteries).
inline QSeries<Rat> z_c4_values(const FixedPointTable& table, const ParamContext& ctx,
                                const SignRule& rule, const Rat& s1) {
    QSeries<Rat> out(table.n_max);
    out.set_coeff(0, Rat(1));
    for (int n = 1; n <= table.n_max; ++n) {
        Rat acc(0);
        for (const auto& fp : table.solid[static_cast<std::size_t>(n)])
            acc += contribution_value(fp, ctx, s1, true, rule.sign(fp.stats));
        out.set_coeff(n, acc);
    }
    return out;
}

inline QSeries<Rat> z_c3_values(const FixedPointTable& table, const ParamContext& ctx,
                                const Rat& s1) {
    QSeries<Rat> out(table.n_max);
    out.set_coeff(0, Rat(1));
    for (int n = 1; n <= table.n_max; ++n) {
        Rat acc(0);
        for (const auto& v : table.vertex3[static_cast<std::size_t>(n)]) {
            Rat val(1);
            for (const auto& [w, k] : v.terms()) {
                const Rat x = w.value_at(ctx, s1);
                if (x.is_zero())
                    throw ComputationError("division by zero weight — regenerate context",
                                           "3-fold vertex weight vanishes at the chosen s1");
                val *= x.pow(-k);
            }
            acc += val;
        }
        out.set_coeff(n, acc);
    }
    return out;
}

// --- sign calibration ---------------------------------------------------------

// Fits the candidate family against the closed form on sizes <= n_cal at
// every supplied context.  Survivors are returned together; they are
// indistinguishable on the calibration range by construction.
inline SignRule calibrate_sign_rule(const FixedPointTable& table, int n_cal,
                                    const std::vector<ParamContext>& contexts) {
    if (n_cal < 1 || n_cal > 2) throw std::invalid_argument("calibration range is n_cal in {1, 2}");
    if (contexts.size() < 2) throw std::invalid_argument("calibration needs at least 2 contexts");
    if (table.n_max < n_cal) throw std::invalid_argument("table too small for calibration");

    std::vector<SignCandidate> alive = sign_candidate_family();
    for (const auto& ctx : contexts) {
        const QSeries<RatFn> target = ck_closed_form(n_cal, ctx);
        // sign-independent parts, once per context
        std::vector<std::vector<RatFn>> parts(static_cast<std::size_t>(n_cal) + 1);
        for (int n = 1; n <= n_cal; ++n)
            for (const auto& fp : table.solid[static_cast<std::size_t>(n)])
                parts[static_cast<std::size_t>(n)].push_back(
                    contribution_factors(fp, ctx, true).expand());
        std::vector<SignCandidate> next;
        for (const auto& cand : alive) {
            bool ok = true;
            for (int n = 1; ok && n <= n_cal; ++n) {
                RatFn sum;
                const auto& fps = table.solid[static_cast<std::size_t>(n)];
                for (std::size_t i = 0; i < fps.size(); ++i) {
                    const RatFn& p = parts[static_cast<std::size_t>(n)][i];
                    sum += cand.sign(fps[i].stats) < 0 ? -p : p;
                }
                ok = sum == target.coeff(n);
            }
            if (ok) next.push_back(cand);
        }
        alive = std::move(next);
        if (alive.empty()) break;
    }
    if (alive.empty())
        throw ComputationError("sign family insufficient — extend family",
                               "no candidate reproduces the closed form on the calibration range");
    SignRule rule;
    rule.survivors = std::move(alive);
    rule.n_cal = n_cal;
    for (const auto& ctx : contexts) rule.contexts_used.push_back(ctx.str());
    return rule;
}

// Blind validation on sizes 3..4: every calibration survivor is checked
// against the closed form; candidates that fail are reported, never
// silently dropped into the fit.
struct SignValidation {
    bool ok = false;
    SignRule rule;                        // passing survivors, primary first
    std::vector<std::string> eliminated;  // survivor names killed here
    std::string witness;                  // first mismatch when !ok
};

inline SignValidation validate_sign_rule(const FixedPointTable& table, const SignRule& fitted,
                                         const std::vector<ParamContext>& contexts) {
    SignValidation out;
    out.rule = fitted;
    out.rule.survivors.clear();
    const int lo = fitted.n_cal + 1;
    const int hi = std::min(4, table.n_max);
    if (lo > hi) {
        out.ok = !fitted.survivors.empty();
        out.rule.survivors = fitted.survivors;
        return out;
    }
    for (const auto& cand : fitted.survivors) {
        SignRule single;
        single.survivors = {cand};
        single.n_cal = fitted.n_cal;
        bool pass = true;
        std::string why;
        for (const auto& ctx : contexts) {
            const QSeries<RatFn> closed = ck_closed_form(hi, ctx);
            for (int n = lo; pass && n <= hi; ++n) {
                FactoredSum acc;
                for (const auto& fp : table.solid[static_cast<std::size_t>(n)])
                    acc.add(contribution_factors(fp, ctx, true), Rat(single.sign(fp.stats)));
                if (!(acc.finish() == closed.coeff(n))) {
                    pass = false;
                    why = "q^" + std::to_string(n) + " mismatch at " + ctx.str();
                }
            }
            if (!pass) break;
        }
        if (pass)
            out.rule.survivors.push_back(cand);
        else
            out.eliminated.push_back(cand.name() + " (" + why + ")");
    }
    if (out.rule.survivors.empty()) {
        out.ok = false;
        out.witness = out.eliminated.empty() ? "no survivors" : out.eliminated.front();
        return out;
    }
    // passing survivors must be indistinguishable on every size we expose
    for (int n = 1; n <= table.n_max; ++n)
        for (const auto& fp : table.solid[static_cast<std::size_t>(n)])
            for (std::size_t i = 1; i < out.rule.survivors.size(); ++i)
                if (out.rule.survivors[i].sign(fp.stats) != out.rule.survivors[0].sign(fp.stats)) {
                    out.ok = false;
                    out.witness = "validated survivors disagree on " + fp.pi.str();
                    return out;
                }
    out.ok = true;
    return out;
}

} // namespace dt4
