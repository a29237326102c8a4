#pragma once

#include "pfq/gamma.hpp"
#include "pfq/hyper.hpp"
#include "pfq/norlund.hpp"

namespace pfq {

enum class MeijerRoute { hyp_expansion, norlund_expansion };

namespace detail {

inline bool pairwise_distinct_mod_integers(const ParamVec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if ((v[i] - v[j]).is_integer()) return false;
    return true;
}

} // namespace detail

// G^{p,0}_{p,p}(t | b; a) on 0 < t < 1, upper row b, lower row a.
//
// hyp_expansion sums p power series in t around 0 (simple-pole case only);
// norlund_expansion uses the coefficient expansion around t = 1,
//   t^{a_omega} (1-t)^{nu-1} sum_n g_n(a_[omega]; b) / Gamma(nu+n) (1-t)^n,
// which converges for |1-t| < 1.
inline Real meijer_gpp(const Rat& t, const ParamVec& b_upper, const ParamVec& a_lower,
                       MeijerRoute route, prec_t prec, long order = 1 << 14,
                       std::size_t omega = 1) {
    if (b_upper.size() != a_lower.size() || a_lower.empty())
        throw domain_error("meijer_gpp: rows must have equal positive length");
    if (!(t > Rat(0) && t < Rat(1)))
        throw domain_error("meijer_gpp: argument must lie in (0,1)");
    std::size_t p = a_lower.size();
    prec_t work = prec + 64;
    Real target = ldexp2(Real::of(1L, work), 24 - static_cast<long>(work));

    Real total = Real::zero(work);
    if (route == MeijerRoute::hyp_expansion) {
        if (!detail::pairwise_distinct_mod_integers(a_lower))
            throw domain_error(
                "meijer_gpp: coincident lower parameters (logarithmic case) unsupported");
        for (std::size_t k = 1; k <= p; ++k) {
            const Rat& ak = a_lower[k - 1];
            ParamVec others = a_lower.drop(k);
            Real coef = gamma_vec(others.shifted(-ak), work) *
                        rgamma_vec(b_upper.shifted(-ak), work);
            ParamVec up = b_upper.shifted(-ak).one_minus();   // 1 - b + a_k
            ParamVec lo = others.shifted(-ak).one_minus();    // 1 - a_[k] + a_k
            SeriesValue inner = hyp_inside_disk(up, lo, t, work, target);
            total += coef * pow(Real::of(t, work), ak) * inner.value;
        }
    } else {
        if (omega < 1 || omega > p) throw domain_error("meijer_gpp: omega out of range");
        Rat excess = nu(a_lower, b_upper);
        if (p == 1) {
            // single coefficient: t^a (1-t)^{nu-1} / Gamma(nu)
            Real v = pow(Real::of(t, work), a_lower[0]) *
                     pow(Real::of(Rat(1) - t, work), excess - Rat(1)) * rgamma(excess, work);
            Real out1(prec);
            mpfr_set(out1.raw(), v.raw(), MPFR_RNDN);
            return out1;
        }
        ParamVec x = a_lower.drop(omega);
        Real one = Real::of(1L, work);
        Real omt = Real::of(Rat(1) - t, work);
        long cap = 64;
        std::vector<Real> g = norlund_table_f(x, b_upper, cap, work + 64);
        Real sum = Real::zero(work);
        Real zpow = one;
        Real prev_abs = Real::zero(work);
        long n = 0;
        long zero_run = 0;
        for (;;) {
            if (n > cap) {
                cap *= 2;
                if (cap > order)
                    throw unconverged_error("meijer_gpp: expansion around 1 not converged by order " +
                                            std::to_string(order));
                g = norlund_table_f(x, b_upper, cap, work + 64);
            }
            Real term = g[static_cast<std::size_t>(n)] * rgamma(excess + Rat(n), work + 64) * zpow;
            sum += term;
            Real a = term.abs();
            zero_run = a.is_zero() ? zero_run + 1 : 0;
            if (zero_run >= 48 && n >= 64) break;  // terminating coefficient table
            if (n >= 16 && a.sign() > 0 && prev_abs.sign() > 0) {
                Real rho = (a / prev_abs) * (one + Real::of(Rat(4, n), work));
                Real qmin = omt * (one + Real::of(Rat(4, n), work));
                if (qmin > rho) rho = qmin;
                if (rho < one) {
                    Real tail = a * rho / (one - rho);
                    if (tail <= target * sum.abs() && !sum.is_zero()) break;
                }
            }
            if (a.sign() > 0) prev_abs = a;
            zpow *= omt;
            ++n;
        }
        total = pow(Real::of(t, work), a_lower[omega - 1]) *
                pow(omt, excess - Rat(1)) * sum;
    }
    Real out(prec);
    mpfr_set(out.raw(), total.raw(), MPFR_RNDN);
    return out;
}

} // namespace pfq
