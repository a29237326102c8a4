#pragma once

#include <utility>
#include <vector>

#include "pfq/bernoulli.hpp"
#include "pfq/hyper.hpp"
#include "pfq/params.hpp"

namespace pfq {

// Coefficient query g_n^p(x; y) with len(x) = p-1, len(y) = p.
struct NorlundQuery {
    ParamVec x;
    ParamVec y;
    long n = 0;
};

namespace detail {

inline void validate(const NorlundQuery& q) {
    if (q.y.empty()) throw domain_error("norlund: y must be nonempty");
    if (q.x.size() + 1 != q.y.size())
        throw domain_error("norlund: len(y) must equal len(x)+1");
    if (q.n < 0) throw domain_error("norlund: negative index");
}

// Partial excesses nu_m = sum_{k<=m} (y_k - x_k), m = 1..p-1.
inline std::vector<Rat> partial_excess(const ParamVec& x, const ParamVec& y) {
    std::vector<Rat> nus;
    Rat acc(0);
    for (std::size_t m = 0; m < x.size(); ++m) {
        acc += y[m] - x[m];
        nus.push_back(acc);
    }
    return nus;
}

} // namespace detail

// g_0..g_N by the order-raising recurrence
//   g_n^p(x;y) = sum_m (y_p - x_{p-1})_{n-m}/(n-m)! (nu_{p-1}+m)_{n-m}
//                g_m^{p-1}(x_{[p-1]}; y_{[p]}),
// with g^1 = (1, 0, 0, ...). Tables are call-local.
inline std::vector<Rat> norlund_table(const ParamVec& x, const ParamVec& y, long N) {
    std::size_t p = y.size();
    if (x.size() + 1 != p) throw domain_error("norlund_table: len(y) must equal len(x)+1");
    std::vector<Rat> table(static_cast<std::size_t>(N) + 1, Rat(0));
    if (p == 1) {
        table[0] = Rat(1);
        return table;
    }
    std::vector<Rat> sub = norlund_table(x.drop(p - 1), y.drop(p), N);
    Rat c1 = y[p - 1] - x[p - 2];
    Rat nu_sub = nu(x, y.drop(p));

    std::vector<Rat> a(static_cast<std::size_t>(N) + 1);  // (c1)_j / j!
    a[0] = Rat(1);
    for (long j = 0; j < N; ++j)
        a[static_cast<std::size_t>(j + 1)] =
            a[static_cast<std::size_t>(j)] * (c1 + Rat(j)) / Rat(j + 1);

    // (nu+m)_{n-m} = prod_{i=m}^{n-1} (nu+i): prefix products over the nonzero
    // factors plus a zero count give every cell in O(1), poles included.
    std::vector<Rat> pref(static_cast<std::size_t>(N) + 1, Rat(1));
    std::vector<long> zeros(static_cast<std::size_t>(N) + 1, 0);
    for (long j = 0; j < N; ++j) {
        Rat f = nu_sub + Rat(j);
        pref[static_cast<std::size_t>(j + 1)] =
            pref[static_cast<std::size_t>(j)] * (f.is_zero() ? Rat(1) : f);
        zeros[static_cast<std::size_t>(j + 1)] =
            zeros[static_cast<std::size_t>(j)] + (f.is_zero() ? 1 : 0);
    }
    for (long n = 0; n <= N; ++n) {
        Rat acc(0);
        for (long m = 0; m <= n; ++m) {
            if (zeros[static_cast<std::size_t>(n)] > zeros[static_cast<std::size_t>(m)])
                continue;  // a vanishing factor kills the whole product
            Rat rising =
                pref[static_cast<std::size_t>(n)] / pref[static_cast<std::size_t>(m)];
            acc += a[static_cast<std::size_t>(n - m)] * rising * sub[static_cast<std::size_t>(m)];
        }
        table[static_cast<std::size_t>(n)] = acc;
    }
    return table;
}

// Route 1: the order recurrence.
inline Rat g_rec(const NorlundQuery& q) {
    detail::validate(q);
    return norlund_table(q.x, q.y, q.n)[static_cast<std::size_t>(q.n)];
}

// Same recurrence carried in floating point, for the deep tables the
// t -> 1 expansions need. Intermediate cancellation is polynomially bounded,
// so a fixed guard on top of the working precision is enough.
inline std::vector<Real> norlund_table_f(const ParamVec& x, const ParamVec& y, long N,
                                         prec_t prec) {
    std::size_t p = y.size();
    if (x.size() + 1 != p) throw domain_error("norlund_table_f: len(y) must equal len(x)+1");
    std::vector<Real> table(static_cast<std::size_t>(N) + 1, Real::zero(prec));
    if (p == 1) {
        table[0] = Real::of(1L, prec);
        return table;
    }
    std::vector<Real> sub = norlund_table_f(x.drop(p - 1), y.drop(p), N, prec);
    Rat c1 = y[p - 1] - x[p - 2];
    Rat nu_sub = nu(x, y.drop(p));
    std::vector<Real> a(static_cast<std::size_t>(N) + 1, Real::zero(prec));
    a[0] = Real::of(1L, prec);
    for (long j = 0; j < N; ++j)
        a[static_cast<std::size_t>(j + 1)] =
            a[static_cast<std::size_t>(j)] * Real::of((c1 + Rat(j)) / Rat(j + 1), prec);
    std::vector<Real> pref(static_cast<std::size_t>(N) + 1, Real::of(1L, prec));
    std::vector<long> zeros(static_cast<std::size_t>(N) + 1, 0);
    for (long j = 0; j < N; ++j) {
        Rat f = nu_sub + Rat(j);
        pref[static_cast<std::size_t>(j + 1)] =
            pref[static_cast<std::size_t>(j)] * Real::of(f.is_zero() ? Rat(1) : f, prec);
        zeros[static_cast<std::size_t>(j + 1)] =
            zeros[static_cast<std::size_t>(j)] + (f.is_zero() ? 1 : 0);
    }
    for (long n = 0; n <= N; ++n) {
        Real acc = Real::zero(prec);
        for (long m = 0; m <= n; ++m) {
            if (zeros[static_cast<std::size_t>(n)] > zeros[static_cast<std::size_t>(m)]) continue;
            acc += a[static_cast<std::size_t>(n - m)] *
                   (pref[static_cast<std::size_t>(n)] / pref[static_cast<std::size_t>(m)]) *
                   sub[static_cast<std::size_t>(m)];
        }
        table[static_cast<std::size_t>(n)] = acc;
    }
    return table;
}

// Route 2: the solved multiple sum over 0 <= j_1 <= ... <= j_{p-2} <= n.
inline Rat g_explicit(const NorlundQuery& q) {
    detail::validate(q);
    std::size_t p = q.y.size();
    if (p < 2) throw domain_error("g_explicit: needs p >= 2");
    std::vector<Rat> nus = detail::partial_excess(q.x, q.y);
    Rat total(0);
    std::vector<long> j(p, 0);  // j[0]=0, j[1..p-2] free, j[p-1]=n
    j[p - 1] = q.n;
    auto product = [&]() {
        Rat prod(1);
        for (std::size_t m = 1; m <= p - 1; ++m) {
            long step = j[m] - j[m - 1];
            prod *= pochhammer(nus[m - 1] + Rat(j[m - 1]), step) / factorial(step) *
                    pochhammer(q.y[m] - q.x[m - 1], step);
        }
        return prod;
    };
    // walk the nondecreasing interior indices j_1 <= ... <= j_{p-2} <= n
    std::size_t levels = p - 2;
    std::function<void(std::size_t, long)> walk = [&](std::size_t level, long lo) {
        if (level == levels) {
            total += product();
            return;
        }
        for (long v = lo; v <= q.n; ++v) {
            j[level + 1] = v;
            walk(level + 1, v);
        }
    };
    walk(0, 0);
    return total;
}

// Route 3: the reversed recurrence through (1-y, 1-x); p = 2 falls back to
// the closed form.
inline Rat g_rev(const NorlundQuery& q) {
    detail::validate(q);
    std::size_t p = q.y.size();
    if (p < 2) throw domain_error("g_rev: needs p >= 2");
    if (p == 2)
        return pochhammer(q.y[1] - q.x[0], q.n) * pochhammer(q.y[0] - q.x[0], q.n) /
               factorial(q.n);
    Rat w = nu(q.x, q.y);
    Rat u1 = w - q.y[p - 2], u2 = w - q.y[p - 1];
    ParamVec xs = q.y.drop2(p - 1, p).one_minus();  // 1 - y_{[p-1,p]}
    ParamVec ys = q.x.one_minus();                  // 1 - x
    std::vector<Rat> sub = norlund_table(xs, ys, q.n);
    Rat sum(0);
    Rat front(1);  // (-n)_s / ((u1)_s (u2)_s)
    for (long s = 0; s <= q.n; ++s) {
        sum += front * sub[static_cast<std::size_t>(s)];
        Rat den = (u1 + Rat(s)) * (u2 + Rat(s));
        if (den.is_zero()) throw pole_error("g_rev: zero denominator in the reversed sum");
        front *= Rat(-q.n + s) / den;
    }
    return pochhammer(u1, q.n) * pochhammer(u2, q.n) / factorial(q.n) * sum;
}

// Route 4: single sum mixing complete Bell polynomials with generalized
// Bernoulli values; the free parameter alpha must not change the result.
inline Rat g_bell(const NorlundQuery& q, const Rat& alpha) {
    detail::validate(q);
    Rat excess = nu(q.x, q.y);
    long n = q.n;
    // l_r = Y_r(qhat)/r! read off exp(sum q_m t^m / m) in one pass
    TruncatedSeries gen(static_cast<std::size_t>(n));
    for (long m = 1; m <= n; ++m)
        gen[static_cast<std::size_t>(m)] = q_coeff(m, q.x, q.y, alpha) / Rat(m);
    TruncatedSeries ell = series_exp(gen);
    Rat sum(0);
    for (long r = 0; r <= n; ++r) {
        Rat coef = pochhammer(Rat(1) + alpha - excess - Rat(n), n - r) / factorial(n - r);
        Rat bern = bernoulli_norlund(n - r, Rat(n) + excess - alpha, Rat(1) - alpha);
        sum += coef * ell[static_cast<std::size_t>(r)] * bern;
    }
    return sum;
}

enum class HypformVariant { p3_front, p3_back, p4_kdf1, p4_kdf2, p5_f3_1, p5_f3_2 };

// The displayed single/double/triple terminating-series forms for p = 3,4,5.
inline Rat g_hypform(const NorlundQuery& q, HypformVariant variant) {
    detail::validate(q);
    std::size_t p = q.y.size();
    std::vector<Rat> nus = detail::partial_excess(q.x, q.y);
    const long n = q.n;
    const Rat neg_n = Rat(-n);
    const ParamVec& x = q.x;
    const ParamVec& y = q.y;
    switch (variant) {
        case HypformVariant::p3_front: {
            if (p != 3) throw domain_error("g_hypform: p3 variant needs p=3");
            Rat pref = pochhammer(nus[1], n) * pochhammer(y[2] - x[1], n) / factorial(n);
            Rat f = hyp_terminating(ParamVec{neg_n, y[0] - x[0], y[1] - x[0]},
                                    ParamVec{Rat(1) - y[2] + x[1] - Rat(n), nus[1]});
            return pref * f;
        }
        case HypformVariant::p3_back: {
            if (p != 3) throw domain_error("g_hypform: p3 variant needs p=3");
            Rat w = nu(x, y);
            Rat pref = pochhammer(w - y[1], n) * pochhammer(w - y[2], n) / factorial(n);
            Rat f = hyp_terminating(ParamVec{neg_n, y[0] - x[0], y[0] - x[1]},
                                    ParamVec{w - y[1], w - y[2]});
            return pref * f;
        }
        case HypformVariant::p4_kdf1: {
            if (p != 4) throw domain_error("g_hypform: p4 variant needs p=4");
            KdFInput in{ParamVec{neg_n, nus[1]},
                        ParamVec{nus[0], y[1] - x[0]},
                        ParamVec{y[2] - x[1]},
                        ParamVec{Rat(1) - y[3] + x[2] - Rat(n), nus[2]},
                        ParamVec{nus[1]},
                        ParamVec{},
                        Rat(1),
                        Rat(1)};
            return pochhammer(y[3] - x[2], n) * pochhammer(nus[2], n) / factorial(n) *
                   kdf_terminating(in);
        }
        case HypformVariant::p4_kdf2: {
            if (p != 4) throw domain_error("g_hypform: p4 variant needs p=4");
            KdFInput in{ParamVec{neg_n, nus[1], nus[1] + x[1] - x[2]},
                        ParamVec{nus[0], y[1] - x[0]},
                        ParamVec{},
                        ParamVec{nus[2], nus[2] + y[3] - y[2]},
                        ParamVec{nus[1], nus[1] + x[1] - x[2]},
                        ParamVec{},
                        Rat(-1),
                        Rat(1)};
            return pochhammer(nus[2], n) * pochhammer(nus[2] - y[2] + y[3], n) / factorial(n) *
                   kdf_terminating(in);
        }
        case HypformVariant::p5_f3_1: {
            if (p != 5) throw domain_error("g_hypform: p5 variant needs p=5");
            F3Input in;
            in.a = ParamVec{neg_n, nus[2]};
            in.c = ParamVec{nus[1]};
            in.e = ParamVec{nus[0], y[1] - x[0]};
            in.ep = ParamVec{y[2] - x[1]};
            in.epp = ParamVec{y[3] - x[2]};
            in.b = ParamVec{Rat(1) - y[4] + x[3] - Rat(n), nus[3]};
            in.d = ParamVec{nus[2]};
            in.f = ParamVec{nus[1]};
            in.z = Rat(1); in.w = Rat(1); in.u = Rat(1);
            return pochhammer(nus[3], n) * pochhammer(y[4] - x[3], n) / factorial(n) *
                   f3_terminating(in);
        }
        case HypformVariant::p5_f3_2: {
            if (p != 5) throw domain_error("g_hypform: p5 variant needs p=5");
            F3Input in;
            in.a = ParamVec{neg_n, nus[2], nus[2] + x[2] - x[3]};
            in.c = ParamVec{nus[1], nus[1] + y[2] - y[1]};
            in.e = ParamVec{nus[0], y[0] - x[1]};
            in.b = ParamVec{nus[3], nus[3] + y[4] - y[3]};
            in.d = ParamVec{nus[2], nus[2] + x[2] - x[3]};
            in.f = ParamVec{nus[1], nus[1] + y[2] - y[1]};
            in.z = Rat(1); in.w = Rat(-1); in.u = Rat(1);
            return pochhammer(nus[3], n) * pochhammer(nus[3] + y[4] - y[3], n) / factorial(n) *
                   f3_terminating(in);
        }
    }
    throw domain_error("g_hypform: unknown variant");
}

// Reflection device: when nu(x;y) = -m with m = n-1, deleting any x-entry and
// appending nu+m leaves g_n unchanged. Returns both sides (via the
// recurrence) for the caller to compare.
inline std::pair<Rat, Rat> g_reflect_check(const NorlundQuery& q, std::size_t omega) {
    detail::validate(q);
    if (q.n < 1) throw domain_error("g_reflect_check: needs n >= 1");
    Rat excess = nu(q.x, q.y);
    Rat m = Rat(q.n - 1);
    if (excess != -m)
        throw domain_error("g_reflect_check: requires nu(x;y) = -(n-1), got " + excess.str());
    if (omega < 1 || omega > q.x.size())
        throw domain_error("g_reflect_check: omega out of range");
    NorlundQuery reflected{q.x.drop(omega).appended(excess + m), q.y, q.n};
    return {g_rec(q), g_rec(reflected)};
}

} // namespace pfq
