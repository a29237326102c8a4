#pragma once

#include <string>

#include "pfq/params.hpp"
#include "pfq/real.hpp"

namespace pfq {

namespace detail {

// Distance from x to the nearest nonpositive integer, as a Real; infinite
// (well, just large) when x > 1/2.
inline bool near_nonpos_integer(const Real& x, prec_t prec) {
    if (x > Real::of(Rat(1, 2), prec)) return false;
    Real r(x.prec());
    mpfr_round(r.raw(), x.raw());
    Real d = (x - r).abs();
    Real cutoff = ldexp2(Real::of(1L, prec), -static_cast<long>(prec / 2));
    return d < cutoff;
}

} // namespace detail

// Gamma on a tracked-precision value. Errors within 2^(-prec/2) of a
// nonpositive integer; callers that need a finite answer there use rgamma.
inline Real gamma(const Real& x) {
    prec_t prec = x.prec();
    if (detail::near_nonpos_integer(x, prec))
        throw pole_error("gamma: pole at " + x.str());
    Real g(prec);
    mpfr_gamma(g.raw(), x.raw(), MPFR_RNDN);
    return g;
}

// Exact-rational argument: evaluate with guard bits so the result is accurate
// at `prec` despite the argument not being binary-representable.
inline Real gamma(const Rat& x, prec_t prec) {
    if (x.is_nonpos_integer()) throw pole_error("gamma: pole at " + x.str());
    Real g = gamma(Real::of(x, prec + 32));
    Real out(prec);
    mpfr_set(out.raw(), g.raw(), MPFR_RNDN);
    return out;
}

// 1/Gamma, entire: exactly 0 at the poles of Gamma.
inline Real rgamma(const Real& x) {
    prec_t prec = x.prec();
    if (x.is_integer() && x.sign() <= 0) return Real::zero(prec);
    if (detail::near_nonpos_integer(x, prec)) {
        // Too close to a pole to invert meaningfully at this precision.
        return Real::zero(prec);
    }
    Real g(prec);
    mpfr_gamma(g.raw(), x.raw(), MPFR_RNDN);
    return Real::of(1L, prec) / g;
}

inline Real rgamma(const Rat& x, prec_t prec) {
    if (x.is_nonpos_integer()) return Real::zero(prec);
    Real g = gamma(x, prec + 32);
    Real out(prec);
    mpfr_si_div(out.raw(), 1, g.raw(), MPFR_RNDN);
    return out;
}

// Gamma(a) = prod Gamma(a_i); empty product is 1. Pole errors name the index.
inline Real gamma_vec(const ParamVec& a, prec_t prec) {
    Real p = Real::of(1L, prec);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_nonpos_integer())
            throw pole_error("gamma_vec: pole at entry " + std::to_string(i + 1) +
                             " = " + a[i].str());
        p *= gamma(a[i], prec);
    }
    return p;
}

// prod_i 1/Gamma(a_i); zero whenever any entry is a nonpositive integer.
inline Real rgamma_vec(const ParamVec& a, prec_t prec) {
    Real p = Real::of(1L, prec);
    for (std::size_t i = 0; i < a.size(); ++i) p *= rgamma(a[i], prec);
    return p;
}

// sin(pi x) with exact range reduction of rational x modulo 2, so integer
// inputs give exact zero and half-integers give exactly +-1.
inline Real sin_pi(const Rat& x, prec_t prec) {
    // u = x mod 2 in [0,2)
    Rat u = x - Rat(2) * (x / Rat(2)).round();
    if (u < Rat(0)) u += Rat(2);
    if (u >= Rat(2)) u -= Rat(2);

    int sgn = 1;
    if (u >= Rat(1)) {
        sgn = -1;
        u -= Rat(1);
    }
    // now sin(pi x) = sgn * sin(pi u), u in [0,1)
    if (u.is_zero()) return Real::zero(prec);
    if (u == Rat(1, 2)) return Real::of(static_cast<long>(sgn), prec);
    if (u > Rat(1, 2)) u = Rat(1) - u;  // sin symmetric about 1/2

    prec_t work = prec + 32;
    Real s = Real::pi(work) * Real::of(u, work);
    Real out(prec);
    mpfr_sin(out.raw(), s.raw(), MPFR_RNDN);
    return sgn < 0 ? -out : out;
}

inline Real sin_pi(const Real& x) {
    prec_t prec = x.prec();
    if (x.is_integer()) return Real::zero(prec);
    Real work(prec + 32);
    mpfr_mul(work.raw(), Real::pi(prec + 32).raw(), x.raw(), MPFR_RNDN);
    Real out(prec);
    mpfr_sin(out.raw(), work.raw(), MPFR_RNDN);
    return out;
}

} // namespace pfq
