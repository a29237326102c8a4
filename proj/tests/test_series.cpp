#include <catch2/catch_amalgamated.hpp>

#include "pfq/rng.hpp"
#include "pfq/series.hpp"

using namespace pfq;

TEST_CASE("series exp/log basics") {
    TruncatedSeries zero(8);
    TruncatedSeries one = TruncatedSeries::constant(Rat(1), 8);
    CHECK(series_exp(zero) == one);
    CHECK_THROWS_AS(series_exp(TruncatedSeries::constant(Rat(2), 4)), domain_error);
    CHECK_THROWS_AS(series_log(TruncatedSeries::constant(Rat(2), 4)), domain_error);

    // log(exp(s)) == s for zero-constant s
    Rng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        TruncatedSeries s(10);
        for (std::size_t i = 1; i <= 10; ++i) s[i] = rng.rat();
        CHECK(series_log(series_exp(s)) == s);
    }
}

TEST_CASE("series pow against the binomial series") {
    // (1+t)^(1/2) = 1 + t/2 - t^2/8 + t^3/16 - ...
    TruncatedSeries s(6);
    s[0] = Rat(1);
    s[1] = Rat(1);
    TruncatedSeries h = series_pow(s, Rat(1, 2));
    CHECK(h[0] == Rat(1));
    CHECK(h[1] == Rat(1, 2));
    CHECK(h[2] == Rat(-1, 8));
    CHECK(h[3] == Rat(1, 16));

    // general binomial oracle: coefficient k of (1+t)^sigma is C(sigma, k)
    Rng rng(4);
    for (int trial = 0; trial < 8; ++trial) {
        Rat sigma = rng.rat();
        TruncatedSeries p = series_pow(s, sigma);
        Rat coef(1);
        for (long k = 0; k <= 6; ++k) {
            CHECK(p[static_cast<std::size_t>(k)] == coef);
            coef *= (sigma - Rat(k)) / Rat(k + 1);
        }
    }
}

TEST_CASE("series exp of log is identity through order 16") {
    Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        TruncatedSeries s(16);
        s[0] = Rat(1);
        for (std::size_t i = 1; i <= 16; ++i) s[i] = rng.rat();
        CHECK(series_exp(series_log(s)) == s);
    }
}

TEST_CASE("laurent series basics") {
    CHECK(laurent_binom(Rat(0), 5).at(0) == Rat(1));
    CHECK(laurent_binom(Rat(0), 5).at(3) == Rat(0));
    for (long k = 0; k <= 5; ++k) CHECK(laurent_binom(Rat(1), 5).at(k) == Rat(1));

    // (1-z)^{-c} (1-z)^{c} = 1 through the window
    Rng rng(6);
    for (int trial = 0; trial < 10; ++trial) {
        Rat c = rng.rat();
        LaurentSeries prod = laurent_mul(laurent_binom(c, 9), laurent_binom(-c, 9));
        CHECK(prod.at(0) == Rat(1));
        for (long k = 1; k <= 9; ++k) CHECK(prod.at(k) == Rat(0));
    }
}

TEST_CASE("laurent offsets and windows") {
    LaurentSeries a(-2, {Rat(1), Rat(2), Rat(3)});  // z^-2 + 2 z^-1 + 3
    LaurentSeries b(1, {Rat(5), Rat(7)});           // 5 z + 7 z^2
    LaurentSeries p = laurent_mul(a, b);
    CHECK(p.offset() == -1);
    CHECK(p.at(-1) == Rat(5));
    CHECK(p.at(0) == Rat(17));
    CHECK_THROWS_AS(p.at(3), domain_error);
    CHECK(a.at(-5) == Rat(0));  // below the window: identically zero

    LaurentSeries s = a + b.shifted(-3);  // windows [-2,0] and [-2,-1]
    CHECK(s.offset() == -2);
    CHECK(s.hi() == -1);
    CHECK(s.at(-2) == Rat(1) + Rat(5));
}
