#include <catch2/catch_amalgamated.hpp>

#include "pfq/bernoulli.hpp"
#include "pfq/rng.hpp"

using namespace pfq;

TEST_CASE("bernoulli polynomials, low orders") {
    Rng rng(21);
    Rat x = rng.rat();
    CHECK(bernoulli_poly(0, x) == Rat(1));
    CHECK(bernoulli_poly(1, Rat(0)) == Rat(-1, 2));
    CHECK(bernoulli_poly(2, Rat(1)) == Rat(1, 6));
    // B_2(x) = x^2 - x + 1/6, B_3(x) = x^3 - 3/2 x^2 + 1/2 x
    for (int i = 0; i < 10; ++i) {
        Rat t = rng.rat();
        CHECK(bernoulli_poly(2, t) == t * t - t + Rat(1, 6));
        CHECK(bernoulli_poly(3, t) == t.pow(3) - Rat(3, 2) * t * t + Rat(1, 2) * t);
    }
}

TEST_CASE("bernoulli difference property") {
    // B_n(1) - B_n(0) = [n == 1]
    for (long n = 0; n <= 12; ++n) {
        Rat d = bernoulli_poly(n, Rat(1)) - bernoulli_poly(n, Rat(0));
        CHECK(d == (n == 1 ? Rat(1) : Rat(0)));
    }
}

TEST_CASE("generalized bernoulli reduces to classical at sigma=1") {
    Rng rng(22);
    for (long n = 0; n <= 12; ++n) {
        for (int i = 0; i < 3; ++i) {
            Rat x = rng.rat();
            CHECK(bernoulli_norlund(n, Rat(1), x) == bernoulli_poly(n, x));
        }
    }
    // order-1 expansion of the generator: B^(sigma)_1(z) = z - sigma/2
    for (int i = 0; i < 10; ++i) {
        Rat sigma = rng.rat(), z = rng.rat();
        CHECK(bernoulli_norlund(1, sigma, z) == z - sigma / Rat(2));
        CHECK(bernoulli_norlund(0, sigma, z) == Rat(1));
    }
}

TEST_CASE("complete Bell polynomials") {
    CHECK(bell_complete(0, {}) == Rat(1));
    Rng rng(23);
    for (int i = 0; i < 10; ++i) {
        Rat z1 = rng.rat(), z2 = rng.rat(), z3 = rng.rat();
        CHECK(bell_complete(1, {z1}) == z1);
        CHECK(bell_complete(2, {z1, z2}) == z1 * z1 + z2);
        CHECK(bell_complete(3, {z1, z2, z3}) == z1.pow(3) + Rat(3) * z1 * z2 + z3);
    }
}

TEST_CASE("q coefficients") {
    // q_1 with x=(1/2), y=(1/2,1/2), alpha=1/2: all four B_2 terms cancel
    CHECK(q_coeff(1, ParamVec{Rat(1, 2)}, ParamVec{Rat(1, 2), Rat(1, 2)}, Rat(1, 2)) == Rat(0));
    CHECK_THROWS_AS(q_coeff(1, ParamVec{Rat(1)}, ParamVec{Rat(1)}, Rat(0)), domain_error);

    // direct Bernoulli-sum oracle at random rational points
    Rng rng(24);
    for (int i = 0; i < 12; ++i) {
        ParamVec x{rng.rat(), rng.rat()};
        ParamVec y{rng.rat(), rng.rat(), rng.rat()};
        Rat alpha = rng.rat();
        for (long m : {1L, 2L}) {
            Rat expect = bernoulli_poly(m + 1, alpha);
            for (const auto& xi : x) expect += bernoulli_poly(m + 1, xi);
            for (const auto& yi : y) expect -= bernoulli_poly(m + 1, yi);
            expect *= Rat(m % 2 == 0 ? -1 : 1) / Rat(m + 1);
            CHECK(q_coeff(m, x, y, alpha) == expect);
        }
    }
}

TEST_CASE("l coefficients: recurrence equals the Bell route") {
    Rng rng(25);
    for (int i = 0; i < 10; ++i) {
        ParamVec x{rng.rat(), rng.rat()};
        ParamVec y{rng.rat(), rng.rat(), rng.rat()};
        Rat alpha = rng.rat();
        CHECK(l_coeff(0, x, y, alpha) == Rat(1));
        CHECK(l_coeff(1, x, y, alpha) == q_coeff(1, x, y, alpha));
        for (long r = 0; r <= 10; ++r) {
            std::vector<Rat> qhat;
            for (long m = 1; m <= r; ++m)
                qhat.push_back(factorial(m - 1) * q_coeff(m, x, y, alpha));
            CHECK(l_coeff(r, x, y, alpha) == bell_complete(r, qhat) / factorial(r));
        }
    }
}

TEST_CASE("qp polynomials") {
    Rng rng(26);
    ParamVec a{rng.rat_noninteger(), rng.rat_noninteger()};
    ParamVec b{rng.rat_noninteger(), rng.rat_noninteger()};
    IntVec m{1, -2}, n{0, 1};
    Rat k = rng.rat();
    CHECK(qp_poly(-1, k, a, b, m, n) == Rat(0));
    CHECK(qp_poly(0, k, a, b, m, n) == Rat(1));

    auto bigq = [&](long j) {
        Rat s(0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            s += bernoulli_poly(j + 1, -a[i] - k);
            s -= bernoulli_poly(j + 1, Rat(1) - b[i] - k);
            s += bernoulli_poly(j + 1, Rat(1) - b[i] + Rat(m[i]));
            s -= bernoulli_poly(j + 1, Rat(1) - a[i] + Rat(n[i]));
        }
        return s;
    };
    CHECK(qp_poly(1, k, a, b, m, n) == bigq(1) / Rat(2));
    CHECK(qp_poly(2, k, a, b, m, n) == bigq(1) * bigq(1) / Rat(8) - bigq(2) / Rat(6));
}
