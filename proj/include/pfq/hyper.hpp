#pragma once

#include <climits>
#include <functional>
#include <vector>

#include "pfq/gamma.hpp"
#include "pfq/params.hpp"
#include "pfq/real.hpp"

namespace pfq {

struct HypInput {
    ParamVec upper;
    ParamVec lower;
    Rat argument;
};

// Value of an adaptively truncated sum together with its tail bound.
struct SeriesValue {
    Real value;
    Real tail;
    long terms = 0;
};

namespace detail {

// Largest admissible index for a parameter group: (x)_k vanishes for
// k > |x| when x is a nonpositive integer.
inline long termination_bound(const ParamVec& v) {
    long bound = LONG_MAX;
    for (const auto& x : v)
        if (x.is_nonpos_integer()) bound = std::min(bound, (-x).to_long());
    return bound;
}

} // namespace detail

// Terminating pFq at exact rational argument: one upper entry must be a
// nonpositive integer; lower entries must stay clear of {0,-1,...,-(N-1)}.
inline Rat hyp_terminating(const HypInput& h) {
    long n = detail::termination_bound(h.upper);
    if (n == LONG_MAX)
        throw domain_error("hyp_terminating: no nonpositive-integer upper parameter");
    for (const auto& b : h.lower)
        if (b.is_nonpos_integer() && (-b).to_long() <= n - 1)
            throw pole_error("hyp_terminating: lower parameter " + b.str() +
                             " vanishes inside the summation range");
    Rat sum(0), term(1);
    for (long k = 0;; ++k) {
        sum += term;
        if (k == n) break;
        Rat num(1), den(1);
        for (const auto& a : h.upper) num *= a + Rat(k);
        for (const auto& b : h.lower) den *= b + Rat(k);
        den *= Rat(k + 1);
        term *= h.argument * num / den;
    }
    return sum;
}

inline Rat hyp_terminating(const ParamVec& upper, const ParamVec& lower, const Rat& z = Rat(1)) {
    return hyp_terminating(HypInput{upper, lower, z});
}

namespace detail {

// Adaptive summation of sum_{n>=0} t_n whose terms eventually decay like
// C n^{-sigma}. The constant is fitted from the trailing terms and the tail
// bounded by the comparison integral C N^{1-sigma}/(sigma-1); N escalates
// geometrically until the bound meets the target or n_max is hit.
template <class TermFn>
SeriesValue sum_adaptive(TermFn&& term_at, const Rat& sigma, prec_t prec, long n_max,
                         const Real& rel_target) {
    if (sigma <= Rat(1))
        throw domain_error("sum_adaptive: decay exponent must exceed 1 (got " +
                           sigma.str() + ")");
    Real sum = Real::zero(prec);
    Real scale = Real::zero(prec);  // largest |term| seen
    std::vector<Real> window;       // last 8 |terms|
    long n = 0;
    long batch_end = 64;
    for (;;) {
        for (; n < batch_end; ++n) {
            Real t = term_at(n);
            sum += t;
            Real a = t.abs();
            if (a > scale) scale = a;
            window.push_back(a);
            if (window.size() > 8) window.erase(window.begin());
        }
        // fit C in |t_k| ~ C k^-sigma from the window, bound the tail by
        // integral_N^inf C x^-sigma dx
        Real c = Real::zero(prec);
        Real fit_first(prec), fit_last(prec);
        long k_first = 0, k_last = 0;
        for (std::size_t i = 0; i < window.size(); ++i) {
            long k = n - static_cast<long>(window.size()) + static_cast<long>(i);
            if (k <= 0) continue;
            Real fit = window[i] * pow(Real::of(k, prec), Rat(sigma));
            if (fit > c) c = fit;
            if (k_first == 0) { fit_first = fit; k_first = k; }
            fit_last = fit; k_last = k;
        }
        // |t_k| k^sigma drifts like C (1 + c1/k); when it is still rising the
        // window maximum undershoots C, so extrapolate the 1/k model to k=inf.
        if (k_first > 0 && k_last > k_first && fit_last > fit_first && fit_first.sign() > 0) {
            Real slope = (fit_last - fit_first) /
                         (Real::of(Rat(1, k_first) - Rat(1, k_last), prec));
            Real extrap = fit_last + slope * Real::of(Rat(1, k_last), prec);
            if (extrap > c) c = extrap;
        }
        c = c * Real::of(Rat(5, 4), prec);
        Real tail = c * pow(Real::of(n, prec), Rat(1) - sigma) / Real::of(sigma - Rat(1), prec);
        Real floor_ = sum.abs();
        if (scale * ldexp2(Real::of(1L, prec), -static_cast<long>(prec)) > floor_)
            floor_ = scale * ldexp2(Real::of(1L, prec), -static_cast<long>(prec));
        if (tail <= rel_target * floor_ || tail.is_zero())
            return SeriesValue{sum, tail, n};
        if (batch_end >= n_max) {
            throw unconverged_error("series tail estimate " + tail.str() +
                                    " above target after " + std::to_string(n) + " terms");
        }
        batch_end = std::min(n_max, batch_end * 2);
    }
}

// pFq at argument +-1 with an optional per-term exact rational weight
// (for Pochhammer-quotient factors that are really polynomial ratios).
// sigma must be the true decay exponent of weighted terms.
inline SeriesValue pfq_unit_core(const ParamVec& upper, const ParamVec& lower, int arg_sign,
                                 const Rat& sigma, prec_t prec, long n_max,
                                 const Real& rel_target,
                                 const std::function<Rat(long)>* weight = nullptr) {
    for (const auto& b : lower)
        if (b.is_nonpos_integer())
            throw pole_error("pFq(1): nonpositive-integer lower parameter " + b.str());
    prec_t work = prec + 32;
    Real base = Real::of(1L, work);
    long state_n = 0;
    auto term_at = [&, upper, lower, arg_sign](long nn) -> Real {
        // terms are requested consecutively from 0
        if (nn != state_n)
            throw domain_error("pfq_unit_core: nonconsecutive term request");
        Real t = base;
        if (weight) t = t * Real::of((*weight)(nn), work);
        Rat num(1), den(1);
        for (const auto& a : upper) num *= a + Rat(nn);
        for (const auto& b : lower) den *= b + Rat(nn);
        den *= Rat(nn + 1);
        if (den.is_zero()) throw pole_error("pFq(1): zero denominator at n=" + std::to_string(nn + 1));
        if (arg_sign < 0) num = -num;
        base = base * Real::of(num / den, work);
        ++state_n;
        return t;
    };
    SeriesValue r = detail::sum_adaptive(term_at, sigma, work, n_max, rel_target);
    Real v(prec), t(prec);
    mpfr_set(v.raw(), r.value.raw(), MPFR_RNDN);
    mpfr_set(t.raw(), r.tail.raw(), MPFR_RNDN);
    return SeriesValue{v, t, r.terms};
}

} // namespace detail

// Nonterminating pFq at unit argument; requires positive parametric excess.
// rel_target of zero precision means "as good as the working precision".
inline SeriesValue hyp_unit_direct(const ParamVec& upper, const ParamVec& lower, prec_t prec,
                                   long n_max = 1 << 20, const Real* rel_target = nullptr) {
    for (const auto& b : lower)
        if (b.is_nonpos_integer())
            throw pole_error("pFq(1): nonpositive-integer lower parameter " + b.str());
    Rat excess = nu(upper, lower);
    if (!(excess > Rat(0)))
        throw domain_error("pFq(1) diverges: parametric excess " + excess.str() +
                           " is not positive");
    if (detail::termination_bound(upper) != LONG_MAX)
        throw domain_error("pFq(1): terminating input, use hyp_terminating");
    Real target = rel_target ? *rel_target
                             : ldexp2(Real::of(1L, prec), 16 - static_cast<long>(prec));
    return detail::pfq_unit_core(upper, lower, +1, Rat(1) + excess, prec, n_max, target);
}

// Kampe de Feriet double series
//   sum_{k,l} (a)_{k+l} (c)_k (e)_l / ((b)_{k+l} (d)_k (f)_l) z^k w^l / (k! l!)
// for terminating inputs, evaluated exactly.
struct KdFInput {
    ParamVec a, c, e;  // upper: linked, z-only, w-only
    ParamVec b, d, f;  // lower: linked, z-only, w-only
    Rat z, w;
};

inline Rat kdf_terminating(const KdFInput& in) {
    long bound_kl = detail::termination_bound(in.a);
    long bound_k = detail::termination_bound(in.c);
    long bound_l = detail::termination_bound(in.e);
    if (bound_kl == LONG_MAX && (bound_k == LONG_MAX || bound_l == LONG_MAX))
        throw domain_error("kdf_terminating: series does not terminate");
    long kmax = std::min(bound_k, bound_kl);
    Rat sum(0);
    for (long k = 0; k <= kmax; ++k) {
        long lmax = std::min(bound_l, bound_kl == LONG_MAX ? LONG_MAX : bound_kl - k);
        for (long l = 0; l <= lmax; ++l) {
            Rat den = pochhammer_vec(in.b, k + l) * pochhammer_vec(in.d, k) *
                      pochhammer_vec(in.f, l);
            if (den.is_zero())
                throw pole_error("kdf_terminating: denominator vanishes at (k,l)=(" +
                                 std::to_string(k) + "," + std::to_string(l) + ")");
            Rat num = pochhammer_vec(in.a, k + l) * pochhammer_vec(in.c, k) *
                      pochhammer_vec(in.e, l);
            sum += num / den * in.z.pow(k) * in.w.pow(l) / (factorial(k) * factorial(l));
        }
    }
    return sum;
}

// Srivastava triple series with fully-linked (n+k+l), pairwise-linked and
// single-index groups, terminating, exact.
struct F3Input {
    ParamVec a;             // (n+k+l)
    ParamVec c, cp, cpp;    // (n+k), (k+l), (n+l)
    ParamVec e, ep, epp;    // (n), (k), (l)
    ParamVec b;             // lower (n+k+l)
    ParamVec d, dp, dpp;    // lower (n+k), (k+l), (n+l)
    ParamVec f, fp, fpp;    // lower (n), (k), (l)
    Rat z, w, u;
};

inline Rat f3_terminating(const F3Input& in) {
    long b_nkl = detail::termination_bound(in.a);
    long b_nk = detail::termination_bound(in.c);
    long b_kl = detail::termination_bound(in.cp);
    long b_nl = detail::termination_bound(in.cpp);
    long b_n = std::min(detail::termination_bound(in.e), std::min(b_nkl, std::min(b_nk, b_nl)));
    long b_k = std::min(detail::termination_bound(in.ep), std::min(b_nkl, std::min(b_nk, b_kl)));
    long b_l = std::min(detail::termination_bound(in.epp), std::min(b_nkl, std::min(b_kl, b_nl)));
    if (b_nkl == LONG_MAX && (b_n == LONG_MAX || b_k == LONG_MAX || b_l == LONG_MAX))
        throw domain_error("f3_terminating: series does not terminate");
    auto cap = [&](long x) { return x == LONG_MAX ? b_nkl : x; };
    b_n = cap(b_n); b_k = cap(b_k); b_l = cap(b_l);
    Rat sum(0);
    for (long n = 0; n <= b_n; ++n)
        for (long k = 0; k <= b_k; ++k) {
            if (b_nkl != LONG_MAX && n + k > b_nkl) break;
            if (n + k > b_nk) break;
            for (long l = 0; l <= b_l; ++l) {
                if (b_nkl != LONG_MAX && n + k + l > b_nkl) break;
                if (k + l > b_kl || n + l > b_nl) break;
                Rat den = pochhammer_vec(in.b, n + k + l) * pochhammer_vec(in.d, n + k) *
                          pochhammer_vec(in.dp, k + l) * pochhammer_vec(in.dpp, n + l) *
                          pochhammer_vec(in.f, n) * pochhammer_vec(in.fp, k) *
                          pochhammer_vec(in.fpp, l);
                if (den.is_zero())
                    throw pole_error("f3_terminating: denominator vanishes at (" +
                                     std::to_string(n) + "," + std::to_string(k) + "," +
                                     std::to_string(l) + ")");
                Rat num = pochhammer_vec(in.a, n + k + l) * pochhammer_vec(in.c, n + k) *
                          pochhammer_vec(in.cp, k + l) * pochhammer_vec(in.cpp, n + l) *
                          pochhammer_vec(in.e, n) * pochhammer_vec(in.ep, k) *
                          pochhammer_vec(in.epp, l);
                sum += num / den * in.z.pow(n) * in.w.pow(k) * in.u.pow(l) /
                       (factorial(n) * factorial(k) * factorial(l));
            }
        }
    return sum;
}

// pFq power series at exact |z| < 1, summed until the geometric tail bound
// meets the target.
inline SeriesValue hyp_inside_disk(const ParamVec& upper, const ParamVec& lower, const Rat& z,
                                   prec_t prec, const Real& rel_target, long n_max = 1 << 22) {
    for (const auto& b : lower)
        if (b.is_nonpos_integer())
            throw pole_error("pFq(z): nonpositive-integer lower parameter " + b.str());
    Rat az = z.abs();
    if (!(az < Rat(1))) throw domain_error("hyp_inside_disk: need |z| < 1");
    prec_t work = prec + 32;
    Real sum = Real::zero(work), term = Real::of(1L, work);
    Real q = Real::of(az, work);
    Real last_ratio = Real::of(1L, work);
    long n = 0;
    for (;;) {
        sum += term;
        // The term ratio is |z| (1 + c/n + O(1/n^2)); once settled, bound the
        // later ratios by max(measured, |z|) with a 1 + 4/n pad and sum the
        // geometric tail.
        if (n >= 16) {
            Real rho = last_ratio > q ? last_ratio : q;
            rho = rho * (Real::of(1L, work) + Real::of(Rat(4, n), work));
            if (rho < Real::of(1L, work)) {
                Real tail = term.abs() * rho / (Real::of(1L, work) - rho);
                Real floor_ = sum.abs();
                if (tail <= rel_target * floor_) {
                    Real v(prec), t(prec);
                    mpfr_set(v.raw(), sum.raw(), MPFR_RNDN);
                    mpfr_set(t.raw(), tail.raw(), MPFR_RNDN);
                    return SeriesValue{v, t, n};
                }
            }
        }
        if (n >= n_max) throw unconverged_error("hyp_inside_disk: no convergence");
        Rat num(1), den(1);
        for (const auto& a : upper) num *= a + Rat(n);
        for (const auto& b : lower) den *= b + Rat(n);
        den *= Rat(n + 1);
        Rat ratio = z * num / den;
        last_ratio = Real::of(ratio.abs(), work);
        term = term * Real::of(ratio, work);
        ++n;
    }
}

} // namespace pfq
