#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "pfq/gamma.hpp"
#include "pfq/hyper.hpp"
#include "pfq/norlund.hpp"

namespace pfq {

enum class UnitRoute { automatic, direct, norlund_35, thm31_36 };

struct UnitEvalRequest {
    ParamVec upper;  // p+1 entries
    ParamVec lower;  // p entries
    prec_t precision = 192;
    UnitRoute route = UnitRoute::automatic;
};

struct UnitValue {
    Real value;
    Real tail;
    long terms = 0;
    std::string route;
};

namespace detail {

// Lazily deepened exact coefficient table.
struct GTable {
    ParamVec x, y;
    long cap = -1;
    std::vector<Rat> t;

    GTable(ParamVec x_, ParamVec y_) : x(std::move(x_)), y(std::move(y_)) {}
    const Rat& get(long n) {
        if (n > cap) {
            cap = std::max({cap * 2, n, 64L});
            t = norlund_table(x, y, cap);
        }
        return t[static_cast<std::size_t>(n)];
    }
};

inline void check_unit_shapes(const ParamVec& upper, const ParamVec& lower) {
    if (lower.empty() || upper.size() != lower.size() + 1)
        throw domain_error("continuation: need p+1 upper and p >= 1 lower parameters");
    for (const auto& b : lower)
        if (b.is_nonpos_integer())
            throw pole_error("continuation: nonpositive-integer lower parameter " + b.str());
}

inline Rat min_entry(const ParamVec& v) {
    Rat m = v[0];
    for (const auto& e : v)
        if (e < m) m = e;
    return m;
}

// First index from which 1/Gamma(c + n) stops vanishing.
inline long first_live_index(const Rat& c) {
    if (c.is_nonpos_integer()) return 1 + (-c).to_long();
    return 0;
}

} // namespace detail

// Continuation of pFq(1) in the parameters through the coefficient series
//   F = Gamma(b)/Gamma(a_{[1,2]})
//       sum_n Gamma(nu+n) g_n(a_{[1,2]}; b) / (Gamma(nu+a1+n) Gamma(nu+a2+n)),
// convergent whenever the kept upper parameters have positive real part.
inline SeriesValue pfq1_norlund(const ParamVec& upper, const ParamVec& lower, prec_t prec,
                                long n_max = 1 << 16, const Real* rel_target = nullptr) {
    detail::check_unit_shapes(upper, lower);
    Rat excess = nu(upper, lower);
    if (excess.is_nonpos_integer())
        throw pole_error("pfq1_norlund: pole of the continuation at excess " + excess.str());
    ParamVec kept = upper.drop2(1, 2);
    if (!kept.empty() && !(detail::min_entry(kept) > Rat(0)))
        throw domain_error("pfq1_norlund: kept upper parameters must be positive");
    const Rat a1 = upper[0], a2 = upper[1];

    prec_t work = prec + 32;
    long n0 = std::max(detail::first_live_index(excess + a1),
                       detail::first_live_index(excess + a2));
    Real base = gamma(excess + Rat(n0), work) * rgamma(excess + a1 + Rat(n0), work) *
                rgamma(excess + a2 + Rat(n0), work);
    detail::GTable table(kept, lower);
    long state = n0;
    auto term_at = [&](long n) -> Real {
        if (n < n0) return Real::zero(work);
        if (n != state) throw domain_error("pfq1_norlund: nonconsecutive term request");
        Real t = base * Real::of(table.get(n), work);
        base = base * Real::of((excess + Rat(n)) /
                                   ((excess + a1 + Rat(n)) * (excess + a2 + Rat(n))),
                               work);
        ++state;
        return t;
    };
    Rat sigma = kept.empty() ? Rat(10) : Rat(1) + detail::min_entry(kept);
    Real target = rel_target ? *rel_target : ldexp2(Real::of(1L, work), -48);
    SeriesValue s = detail::sum_adaptive(term_at, sigma, work, n_max, target);
    Real pref = gamma_vec(lower, work) * rgamma_vec(kept, work);
    Real v(prec), tl(prec);
    mpfr_set(v.raw(), (pref * s.value).raw(), MPFR_RNDN);
    mpfr_set(tl.raw(), (pref.abs() * s.tail).raw(), MPFR_RNDN);
    return SeriesValue{v, tl, s.terms};
}

namespace detail {

// Exact evaluation of the terminating polynomials P_n = sum_j (-n)_j d_j with
// cached columns d_j = prod (uu)_j / (prod (vv)_j j!).
struct PolyColumns {
    ParamVec uu, vv;
    std::vector<Rat> d{Rat(1)};

    Rat eval(long n) {
        while (static_cast<long>(d.size()) <= n) {
            long j = static_cast<long>(d.size()) - 1;
            Rat num(1), den(1);
            for (const auto& u : uu) num *= u + Rat(j);
            for (const auto& v : vv) den *= v + Rat(j);
            den *= Rat(j + 1);
            if (den.is_zero())
                throw pole_error("inner polynomial: vanishing lower factor");
            d.push_back(d.back() * num / den);
        }
        Rat acc(0), falling(1);  // falling = (-n)_j
        for (long j = 0; j <= n; ++j) {
            acc += falling * d[static_cast<std::size_t>(j)];
            falling *= Rat(j - n);
        }
        return acc;
    }
};

} // namespace detail

// Continuation through the lower-parameter residue sum: for noninteger
// excess and lower parameters distinct modulo integers,
//   F = Gamma(b)/Gamma(a_{[1,2]}) * pi/sin(pi nu) *
//       sum_k Gamma(b_k - b_{[k]})/Gamma(b_k - a) *
//       sum_n (1-b_k+a1)_n (1-b_k+a2)_n / (Gamma(1-b_k+a1+a2+n) n!) *
//             pF_{p-1}(-n, 1-b_k+a_{[1,2]}; 1-b_k+b_{[k]}).
// Inner terminating polynomials are evaluated exactly.
inline SeriesValue pfq1_thm31(const ParamVec& upper, const ParamVec& lower, prec_t prec,
                              long n_max = 1 << 16, const Real* rel_target = nullptr) {
    detail::check_unit_shapes(upper, lower);
    Rat excess = nu(upper, lower);
    if (excess.is_integer())
        throw domain_error("pfq1_thm31: integer excess unsupported");
    for (std::size_t i = 0; i < lower.size(); ++i)
        for (std::size_t j = i + 1; j < lower.size(); ++j)
            if ((lower[i] - lower[j]).is_integer())
                throw domain_error("pfq1_thm31: lower parameters coincide modulo integers");
    ParamVec kept = upper.drop2(1, 2);
    if (!kept.empty() && !(detail::min_entry(kept) > Rat(0)))
        throw domain_error("pfq1_thm31: kept upper parameters must be positive");
    const Rat a1 = upper[0], a2 = upper[1];
    prec_t work = prec + 32;
    Rat sigma = kept.empty() ? Rat(10) : Rat(2) + detail::min_entry(kept);
    Real target = rel_target ? *rel_target : ldexp2(Real::of(1L, work), -48);

    Real acc = Real::zero(work);
    Real acc_tail = Real::zero(work);
    long total_terms = 0;
    for (std::size_t k = 1; k <= lower.size(); ++k) {
        const Rat bk = lower[k - 1];
        ParamVec others = lower.drop(k);
        Real coef = Real::of(1L, work);
        for (const auto& bj : others) coef *= gamma(bk - bj, work);
        for (const auto& ai : upper) coef *= rgamma(bk - ai, work);
        detail::PolyColumns poly{kept.shifted(Rat(1) - bk), others.shifted(Rat(1) - bk)};
        Rat u1 = Rat(1) - bk + a1, u2 = Rat(1) - bk + a2, w = Rat(1) - bk + a1 + a2;
        long n0 = detail::first_live_index(w);
        Real base = Real::of(pochhammer(u1, n0) * pochhammer(u2, n0) / factorial(n0), work) *
                    rgamma(w + Rat(n0), work);
        long state = n0;
        auto term_at = [&](long n) -> Real {
            if (n < n0) return Real::zero(work);
            if (n != state) throw domain_error("pfq1_thm31: nonconsecutive term request");
            Real t = base * Real::of(poly.eval(n), work);
            base = base * Real::of((u1 + Rat(n)) * (u2 + Rat(n)) /
                                       ((w + Rat(n)) * Rat(n + 1)),
                                   work);
            ++state;
            return t;
        };
        SeriesValue s = detail::sum_adaptive(term_at, sigma, work, n_max, target);
        acc += coef * s.value;
        acc_tail += coef.abs() * s.tail;
        total_terms += s.terms;
    }
    Real pref = gamma_vec(lower, work) * rgamma_vec(kept, work) * Real::pi(work) /
                sin_pi(excess, work);
    Real v(prec), tl(prec);
    mpfr_set(v.raw(), (pref * acc).raw(), MPFR_RNDN);
    mpfr_set(tl.raw(), (pref.abs() * acc_tail).raw(), MPFR_RNDN);
    return SeriesValue{v, tl, total_terms};
}

// The alternative residue sum with the higher-order terminating polynomial;
// same hypotheses as pfq1_thm31 plus a1 not a nonpositive integer.
inline SeriesValue pfq1_remark32(const ParamVec& upper, const ParamVec& lower, prec_t prec,
                                 long n_max = 1 << 16, const Real* rel_target = nullptr) {
    detail::check_unit_shapes(upper, lower);
    Rat excess = nu(upper, lower);
    if (excess.is_integer())
        throw domain_error("pfq1_remark32: integer excess unsupported");
    for (std::size_t i = 0; i < lower.size(); ++i)
        for (std::size_t j = i + 1; j < lower.size(); ++j)
            if ((lower[i] - lower[j]).is_integer())
                throw domain_error("pfq1_remark32: lower parameters coincide modulo integers");
    const Rat a1 = upper[0];
    if (a1.is_nonpos_integer())
        throw pole_error("pfq1_remark32: a1 must not be a nonpositive integer");
    ParamVec rest = upper.drop(1);
    if (!(detail::min_entry(rest) > Rat(0)))
        throw domain_error("pfq1_remark32: upper parameters after the first must be positive");
    prec_t work = prec + 32;
    Rat sigma = Rat(2) + detail::min_entry(rest);
    Real target = rel_target ? *rel_target : ldexp2(Real::of(1L, work), -48);

    Real acc = Real::zero(work), acc_tail = Real::zero(work);
    long total_terms = 0;
    for (std::size_t k = 1; k <= lower.size(); ++k) {
        const Rat bk = lower[k - 1];
        ParamVec others = lower.drop(k);
        Real coef = gamma(bk, work);
        for (const auto& bj : others) coef *= gamma(bk - bj, work);
        for (const auto& ai : upper) coef *= rgamma(bk - ai, work);
        ParamVec vv = others.shifted(Rat(1) - bk).appended(Rat(1));
        detail::PolyColumns poly{rest.shifted(Rat(1) - bk), vv};
        Rat u1 = Rat(1) - bk + a1;
        Real base = Real::of(Rat(1) / a1, work);  // (u1)_0 / (a1)_1
        long state = 0;
        auto term_at = [&](long n) -> Real {
            if (n != state) throw domain_error("pfq1_remark32: nonconsecutive term request");
            Real t = base * Real::of(poly.eval(n), work);
            base = base * Real::of((u1 + Rat(n)) / (a1 + Rat(n + 1)), work);
            ++state;
            return t;
        };
        SeriesValue s = detail::sum_adaptive(term_at, sigma, work, n_max, target);
        acc += coef * s.value;
        acc_tail += coef.abs() * s.tail;
        total_terms += s.terms;
    }
    Real pref = gamma_vec(lower, work) * rgamma_vec(upper, work) * Real::pi(work) /
                sin_pi(excess, work);
    Real v(prec), tl(prec);
    mpfr_set(v.raw(), (pref * acc).raw(), MPFR_RNDN);
    mpfr_set(tl.raw(), (pref.abs() * acc_tail).raw(), MPFR_RNDN);
    return SeriesValue{v, tl, total_terms};
}

// F(a;b;1) = head + prefactor * F(a+M,1; b+M,M+1; 1): an exact head of M
// terms plus a wrapped tail whose parametric excess is unchanged.
struct ShiftDecomposition {
    Rat head;
    Rat prefactor;
    ParamVec tail_upper;
    ParamVec tail_lower;
};

inline ShiftDecomposition shift_decompose(const ParamVec& upper, const ParamVec& lower, long M) {
    if (M < 0) throw domain_error("shift_decompose: M must be nonnegative");
    for (const auto& b : lower)
        if (b.is_integer() && b <= Rat(0) && b > Rat(-M))
            throw pole_error("shift_decompose: lower parameter " + b.str() +
                             " poles inside the head");
    Rat head(0), term(1);
    for (long k = 0; k < M; ++k) {
        head += term;
        Rat num(1), den(1);
        for (const auto& a : upper) num *= a + Rat(k);
        for (const auto& b : lower) den *= b + Rat(k);
        den *= Rat(k + 1);
        if (den.is_zero()) throw pole_error("shift_decompose: zero denominator in head");
        term *= num / den;
    }
    // term now carries (a)_M / ((b)_M M!)
    return ShiftDecomposition{head, term, upper.shifted(Rat(M)).appended(Rat(1)),
                              lower.shifted(Rat(M)).appended(Rat(M + 1))};
}

// Expansion of Gamma(a)/Gamma(b) pFq(z) around z = 1 with K terms of each of
// the two coefficient families, for noninteger excess:
//   (1-z)^nu sum_k f_k (1-z)^k + sum_k h_k (1-z)^k,
//   f_k = Gamma(-nu)/(1+nu)_k g_k^{p+1}(1-b; 1-a),
//   h_k = Gamma(nu)Gamma(a1+k)Gamma(a2+k)/((1-nu)_k k!) *
//         sum_n g_n(a_{[1,2]}; b)(nu-k)_n / (Gamma(nu+a1+n)Gamma(nu+a2+n)).
inline SeriesValue expand_near_unity(const ParamVec& upper, const ParamVec& lower, const Rat& z,
                                     long K, prec_t prec, long n_max = 1 << 16,
                                     const Real* inner_target = nullptr) {
    detail::check_unit_shapes(upper, lower);
    if (!(z > Rat(0) && z < Rat(1)))
        throw domain_error("expand_near_unity: need 0 < z < 1");
    if (K < 1) throw domain_error("expand_near_unity: need K >= 1");
    Rat excess = nu(upper, lower);
    if (excess.is_integer())
        throw domain_error("expand_near_unity: integer excess unsupported");
    ParamVec kept = upper.drop2(1, 2);
    if (!kept.empty() && !(detail::min_entry(kept) > Rat(0)))
        throw domain_error("expand_near_unity: kept upper parameters must be positive");
    const Rat a1 = upper[0], a2 = upper[1];
    prec_t work = prec + 32;
    Real target = inner_target ? *inner_target : ldexp2(Real::of(1L, work), -56);

    // singular family
    std::vector<Rat> gf = norlund_table(lower.one_minus(), upper.one_minus(), K - 1);
    Real gm = gamma(-excess, work);
    Real fsum = Real::zero(work);
    Real omz = Real::of(Rat(1) - z, work);
    Real zpow = Real::of(1L, work);
    Real last_f = Real::zero(work);
    for (long k = 0; k < K; ++k) {
        Real fk = gm * Real::of(gf[static_cast<std::size_t>(k)] / pochhammer(Rat(1) + excess, k),
                                work);
        last_f = fk.abs() * zpow;
        fsum += fk * zpow;
        zpow *= omz;
    }

    // analytic family; the coefficient table is shared across k
    detail::GTable table(kept, lower);
    long n0 = std::max(detail::first_live_index(excess + a1),
                       detail::first_live_index(excess + a2));
    Real hsum = Real::zero(work), htail = Real::zero(work);
    Real last_h = Real::zero(work);
    long total_terms = 0;
    zpow = Real::of(1L, work);
    for (long k = 0; k < K; ++k) {
        Real base = rgamma(excess + a1 + Rat(n0), work) * rgamma(excess + a2 + Rat(n0), work) *
                    Real::of(pochhammer(excess - Rat(k), n0), work);
        long state = n0;
        auto term_at = [&](long n) -> Real {
            if (n < n0) return Real::zero(work);
            if (n != state) throw domain_error("expand_near_unity: nonconsecutive term request");
            Real t = base * Real::of(table.get(n), work);
            base = base * Real::of((excess - Rat(k) + Rat(n)) /
                                       ((excess + a1 + Rat(n)) * (excess + a2 + Rat(n))),
                                   work);
            ++state;
            return t;
        };
        Rat sigma = (kept.empty() ? Rat(10) : Rat(1) + detail::min_entry(kept)) + Rat(k);
        SeriesValue s = detail::sum_adaptive(term_at, sigma, work, n_max, target);
        total_terms += s.terms;
        Real hk = gamma(excess, work) * gamma(a1 + Rat(k), work) * gamma(a2 + Rat(k), work) /
                  Real::of(pochhammer(Rat(1) - excess, k) * factorial(k), work) * s.value;
        hsum += hk * zpow;
        htail += (gamma(excess, work) * gamma(a1 + Rat(k), work) * gamma(a2 + Rat(k), work) /
                  Real::of(pochhammer(Rat(1) - excess, k) * factorial(k), work))
                     .abs() *
                 s.tail * zpow;
        last_h = hk.abs() * zpow;
        zpow *= omz;
    }

    Real pref = gamma_vec(lower, work) * rgamma_vec(upper, work);
    Real omz_nu = pow(omz, excess);
    Real value = pref * (omz_nu * fsum + hsum);
    // truncation-in-K remainder, estimated geometrically from the last kept terms
    Real trunc = (last_f * omz_nu.abs() + last_h) * omz * Real::of(4L, work) /
                 (Real::of(1L, work) - omz);
    Real tail = pref.abs() * (htail + trunc);
    Real v(prec), tl(prec);
    mpfr_set(v.raw(), value.raw(), MPFR_RNDN);
    mpfr_set(tl.raw(), tail.raw(), MPFR_RNDN);
    return SeriesValue{v, tl, total_terms};
}

// Route selection: direct summation when the excess is comfortably positive,
// else the coefficient continuation, with a minimal head split when kept
// parameters are not positive. The upper row is reordered (allowed by
// symmetry) so the two smallest entries host the continuation pair.
inline UnitValue eval_unit(const UnitEvalRequest& req, long n_max = 1 << 16,
                           const Real* rel_target = nullptr) {
    const ParamVec& upper = req.upper;
    const ParamVec& lower = req.lower;
    prec_t prec = req.precision;
    if (req.route == UnitRoute::direct) {
        SeriesValue s = hyp_unit_direct(upper, lower, prec, n_max, rel_target);
        return UnitValue{s.value, s.tail, s.terms, "direct"};
    }
    if (req.route == UnitRoute::norlund_35) {
        SeriesValue s = pfq1_norlund(upper, lower, prec, n_max, rel_target);
        return UnitValue{s.value, s.tail, s.terms, "norlund_35"};
    }
    if (req.route == UnitRoute::thm31_36) {
        SeriesValue s = pfq1_thm31(upper, lower, prec, n_max, rel_target);
        return UnitValue{s.value, s.tail, s.terms, "thm31_36"};
    }
    // automatic
    if (detail::termination_bound(upper) != LONG_MAX) {
        Rat v = hyp_terminating(upper, lower, Rat(1));
        return UnitValue{Real::of(v, prec), Real::zero(prec), 0, "terminating"};
    }
    detail::check_unit_shapes(upper, lower);
    Rat excess = nu(upper, lower);
    if (excess > Rat(3)) {
        SeriesValue s = hyp_unit_direct(upper, lower, prec, n_max, rel_target);
        return UnitValue{s.value, s.tail, s.terms, "direct"};
    }
    std::vector<Rat> sorted;
    for (const auto& a : upper) sorted.push_back(a);
    std::sort(sorted.begin(), sorted.end());
    ParamVec arranged{std::vector<Rat>(sorted.begin(), sorted.end())};
    ParamVec kept = arranged.drop2(1, 2);
    if (kept.empty() || detail::min_entry(kept) > Rat(0)) {
        SeriesValue s = pfq1_norlund(arranged, lower, prec, n_max, rel_target);
        return UnitValue{s.value, s.tail, s.terms, "norlund_35"};
    }
    Rat low = detail::min_entry(kept);
    long M = 1;
    while (!(low + Rat(M) > Rat(0))) ++M;
    ShiftDecomposition d = shift_decompose(arranged, lower, M);
    SeriesValue s = pfq1_norlund(d.tail_upper, d.tail_lower, prec, n_max, rel_target);
    Real value = Real::of(d.head, prec) + Real::of(d.prefactor, prec) * s.value;
    Real tail = Real::of(d.prefactor, prec).abs() * s.tail;
    return UnitValue{value, tail, s.terms, "shift+norlund_35"};
}

} // namespace pfq
