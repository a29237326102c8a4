#include <catch2/catch_amalgamated.hpp>

#include "pfq/meijer.hpp"
#include "pfq/rng.hpp"

using namespace pfq;

namespace {

Real rel_diff(const Real& a, const Real& b) {
    Real m = a.abs() > b.abs() ? a.abs() : b.abs();
    if (m.is_zero()) return Real::zero(a.prec());
    return (a - b).abs() / m;
}

} // namespace

TEST_CASE("p=1 closed form") {
    prec_t prec = 192;
    Rng rng(61);
    for (int i = 0; i < 10; ++i) {
        Rat a = rng.rat_noninteger(6, 5);
        Rat b = a + rng.rat_in(Rat(1, 2), Rat(4));  // nu > 1/2, not integer
        if ((b - a).is_integer()) continue;
        Rat t(rng.int_in(1, 9), 10);
        if (!(t > Rat(0) && t < Rat(1))) continue;
        Real expect = pow(Real::of(t, prec), a) *
                      pow(Real::of(Rat(1) - t, prec), b - a - Rat(1)) * rgamma(b - a, prec);
        Real got = meijer_gpp(t, ParamVec{b}, ParamVec{a}, MeijerRoute::norlund_expansion, prec);
        CHECK(rel_diff(got, expect) < Real::of(1e-50, prec));
        Real got1 = meijer_gpp(t, ParamVec{b}, ParamVec{a}, MeijerRoute::hyp_expansion, prec);
        CHECK(rel_diff(got1, expect) < Real::of(1e-50, prec));
    }
}

TEST_CASE("route agreement for p = 2 and 3") {
    prec_t prec = 192;
    Rng rng(62);
    int done = 0;
    while (done < 20) {
        std::size_t p = 2 + (done % 2);
        ParamVec a, b;
        for (std::size_t i = 0; i < p; ++i) {
            a.push_back(rng.rat_noninteger(8, 5));
            b.push_back(rng.rat_noninteger(8, 5));
        }
        if (!detail::pairwise_distinct_mod_integers(a)) continue;
        Rat t = Rat(rng.int_in(1, 3), 4);
        try {
            Real r1 = meijer_gpp(t, b, a, MeijerRoute::hyp_expansion, prec);
            Real r2 = meijer_gpp(t, b, a, MeijerRoute::norlund_expansion, prec);
            CHECK(rel_diff(r1, r2) < Real::of(1e-30, prec));
            ++done;
        } catch (const unconverged_error&) {
            // admissible for extreme nu draws
        }
    }
}

TEST_CASE("omega choice does not matter") {
    prec_t prec = 192;
    Rng rng(63);
    ParamVec a{rng.rat_noninteger(), rng.rat_noninteger(), rng.rat_noninteger()};
    ParamVec b{rng.rat_noninteger(), rng.rat_noninteger(), rng.rat_noninteger()};
    Rat t(1, 2);
    Real r1 = meijer_gpp(t, b, a, MeijerRoute::norlund_expansion, prec, 1 << 14, 1);
    Real r2 = meijer_gpp(t, b, a, MeijerRoute::norlund_expansion, prec, 1 << 14, 2);
    Real r3 = meijer_gpp(t, b, a, MeijerRoute::norlund_expansion, prec, 1 << 14, 3);
    CHECK(rel_diff(r1, r2) < Real::of(1e-40, prec));
    CHECK(rel_diff(r1, r3) < Real::of(1e-40, prec));
}

TEST_CASE("vanishing leading coefficients at nonpositive integer excess") {
    // nu = -m: coefficients below (1-t)^{m+1} vanish exactly, so the value
    // carries the prefactor t^{a_omega} and starts at the (m+1)-th term.
    prec_t prec = 192;
    Rng rng(64);
    for (long m = 0; m <= 2; ++m) {
        ParamVec a{rng.rat_noninteger(6, 5), rng.rat_noninteger(6, 5)};
        ParamVec b{rng.rat_noninteger(6, 5)};
        b.push_back(Rat(-m) + a.sum() - b.sum());  // forces nu(a;b) = -m
        for (long n = 0; n <= m; ++n) CHECK(rgamma(nu(a, b) + Rat(n), prec).is_zero());
        CHECK_NOTHROW(meijer_gpp(Rat(1, 3), b, a, MeijerRoute::norlund_expansion, prec));
    }
}

TEST_CASE("domain guards") {
    ParamVec a{Rat(1, 3), Rat(4, 3)};  // coincident mod 1
    ParamVec b{Rat(1, 2), Rat(1, 5)};
    CHECK_THROWS_AS(meijer_gpp(Rat(1, 2), b, a, MeijerRoute::hyp_expansion, 128), domain_error);
    CHECK_THROWS_AS(
        meijer_gpp(Rat(3, 2), b, ParamVec{Rat(1, 3), Rat(1, 5)}, MeijerRoute::hyp_expansion, 128),
        domain_error);
}
