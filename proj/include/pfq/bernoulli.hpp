#pragma once

#include <vector>

#include "pfq/params.hpp"
#include "pfq/series.hpp"

namespace pfq {

namespace detail {

// t/(e^t - 1) through the requested order: reciprocal of sum t^k/(k+1)!.
inline TruncatedSeries bernoulli_base(std::size_t order) {
    TruncatedSeries e(order);
    Rat f(1);
    for (std::size_t k = 0; k <= order; ++k) {
        f /= Rat(static_cast<long>(k + 1));
        e[k] = f;  // 1/(k+1)!
    }
    return series_exp(series_log(e).scaled(Rat(-1)));
}

} // namespace detail

// Classical Bernoulli polynomial B_n(x), exact.
inline Rat bernoulli_poly(long n, const Rat& x) {
    TruncatedSeries base = detail::bernoulli_base(static_cast<std::size_t>(n));
    Rat acc(0);
    Rat xpow(1);
    // B_n(x) = sum_k C(n,k) B_k x^(n-k), B_k = k! * [t^k] t/(e^t-1)
    for (long k = n; k >= 0; --k) {
        acc += binomial(n, k) * base[static_cast<std::size_t>(k)] * factorial(k) * xpow;
        xpow *= x;
    }
    return acc;
}

// Generalized Bernoulli polynomial of (possibly rational) order sigma:
// generating function t^sigma e^{xt} / (e^t-1)^sigma.
inline Rat bernoulli_norlund(long n, const Rat& sigma, const Rat& x) {
    TruncatedSeries powed =
        series_pow(detail::bernoulli_base(static_cast<std::size_t>(n)), sigma);
    Rat acc(0);
    Rat xpow(1);
    for (long k = n; k >= 0; --k) {
        acc += binomial(n, k) * powed[static_cast<std::size_t>(k)] * factorial(k) * xpow;
        xpow *= x;
    }
    return acc;
}

// Complete exponential Bell polynomial Y_r(z_1..z_r), via the generating
// exponential; Y_0 = 1.
inline Rat bell_complete(long r, const std::vector<Rat>& z) {
    if (r < 0) throw domain_error("bell_complete: negative order");
    if (static_cast<long>(z.size()) < r) throw domain_error("bell_complete: too few arguments");
    if (r == 0) return Rat(1);
    TruncatedSeries gen(static_cast<std::size_t>(r));
    for (long m = 1; m <= r; ++m)
        gen[static_cast<std::size_t>(m)] = z[static_cast<std::size_t>(m - 1)] / factorial(m);
    return series_exp(gen)[static_cast<std::size_t>(r)] * factorial(r);
}

// q_m(x;y;alpha), the Bernoulli-sum seed of the single-sum representation of
// the Norlund coefficients. Requires len(y) = len(x)+1.
inline Rat q_coeff(long m, const ParamVec& x, const ParamVec& y, const Rat& alpha) {
    if (y.size() != x.size() + 1) throw domain_error("q_coeff: len(y) must be len(x)+1");
    if (m < 1) throw domain_error("q_coeff: m must be positive");
    Rat s = bernoulli_poly(m + 1, alpha);
    for (const auto& xi : x) s += bernoulli_poly(m + 1, xi);
    for (const auto& yi : y) s -= bernoulli_poly(m + 1, yi);
    Rat sign = (m % 2 == 0) ? Rat(-1) : Rat(1);  // (-1)^(m+1)
    return sign * s / Rat(m + 1);
}

// l_r by the recurrence l_r = (1/r) sum_m q_m l_{r-m}, l_0 = 1.
inline Rat l_coeff(long r, const ParamVec& x, const ParamVec& y, const Rat& alpha) {
    if (r < 0) throw domain_error("l_coeff: negative order");
    std::vector<Rat> q(static_cast<std::size_t>(r) + 1, Rat(0));
    for (long m = 1; m <= r; ++m) q[static_cast<std::size_t>(m)] = q_coeff(m, x, y, alpha);
    std::vector<Rat> l(static_cast<std::size_t>(r) + 1, Rat(0));
    l[0] = Rat(1);
    for (long k = 1; k <= r; ++k) {
        Rat acc(0);
        for (long m = 1; m <= k; ++m)
            acc += q[static_cast<std::size_t>(m)] * l[static_cast<std::size_t>(k - m)];
        l[static_cast<std::size_t>(k)] = acc / Rat(k);
    }
    return l[static_cast<std::size_t>(r)];
}

// The duality-side coefficient polynomials q_p(k): q_{-1} = 0, q_0 = 1,
//   q_p = (1/p) sum_{j=1..p} (-1)^(j+1)/(j+1) Q_j q_{p-j},
// with Q_j the four-fold Bernoulli sum over the parameter/shift vectors.
inline Rat qp_poly(long p, const Rat& k, const ParamVec& a, const ParamVec& b,
                   const IntVec& m, const IntVec& n) {
    if (a.size() != b.size() || a.size() != m.size() || a.size() != n.size())
        throw domain_error("qp_poly: vector length mismatch");
    if (p <= -1) return Rat(0);
    if (p == 0) return Rat(1);
    std::vector<Rat> bigq(static_cast<std::size_t>(p) + 1, Rat(0));
    for (long j = 1; j <= p; ++j) {
        Rat s(0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            s += bernoulli_poly(j + 1, -a[i] - k);
            s -= bernoulli_poly(j + 1, Rat(1) - b[i] - k);
            s += bernoulli_poly(j + 1, Rat(1) - b[i] + Rat(m[i]));
            s -= bernoulli_poly(j + 1, Rat(1) - a[i] + Rat(n[i]));
        }
        bigq[static_cast<std::size_t>(j)] = s;
    }
    std::vector<Rat> q(static_cast<std::size_t>(p) + 1, Rat(0));
    q[0] = Rat(1);
    for (long s = 1; s <= p; ++s) {
        Rat acc(0);
        for (long j = 1; j <= s; ++j) {
            Rat sign = (j % 2 == 1) ? Rat(1) : Rat(-1);
            acc += sign / Rat(j + 1) * bigq[static_cast<std::size_t>(j)] *
                   q[static_cast<std::size_t>(s - j)];
        }
        q[static_cast<std::size_t>(s)] = acc / Rat(s);
    }
    return q[static_cast<std::size_t>(p)];
}

} // namespace pfq
