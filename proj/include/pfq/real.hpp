#pragma once

#include <mpfr.h>

#include <algorithm>
#include <ostream>
#include <string>

#include "pfq/rational.hpp"

namespace pfq {

using prec_t = mpfr_prec_t;

// Floating value with an explicit working precision in bits. Combining two
// values computes at the minimum of their precisions; conversions from Rat
// round to the requested precision.
class Real {
  public:
    Real() : Real(64) {}
    explicit Real(prec_t prec) {
        mpfr_init2(x_, std::max<prec_t>(prec, MPFR_PREC_MIN));
        mpfr_set_nan(x_);
    }
    Real(const Real& o) {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(x_, mpfr_get_prec(o.x_));
        mpfr_swap(x_, o.x_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(x_, mpfr_get_prec(o.x_));
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(x_, o.x_);
        return *this;
    }
    ~Real() { mpfr_clear(x_); }

    static Real of(const Rat& q, prec_t prec) {
        Real r(prec);
        mpfr_set_q(r.x_, q.raw(), MPFR_RNDN);
        return r;
    }
    static Real of(long n, prec_t prec) {
        Real r(prec);
        mpfr_set_si(r.x_, n, MPFR_RNDN);
        return r;
    }
    static Real of(double d, prec_t prec) {
        Real r(prec);
        mpfr_set_d(r.x_, d, MPFR_RNDN);
        return r;
    }
    static Real zero(prec_t prec) { return of(0L, prec); }
    static Real pi(prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.x_, MPFR_RNDN);
        return r;
    }

    prec_t prec() const { return mpfr_get_prec(x_); }
    bool is_nan() const { return mpfr_nan_p(x_) != 0; }
    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    bool is_integer() const { return mpfr_integer_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    // Full-working-precision decimal, deterministic across runs.
    std::string str() const {
        if (is_nan()) return "nan";
        long digits = static_cast<long>(prec() * 0.30103) + 3;
        char* raw = nullptr;
        mpfr_asprintf(&raw, "%.*Re", static_cast<int>(digits - 1), x_);
        std::string out(raw);
        mpfr_free_str(raw);
        return out;
    }

    friend Real operator+(const Real& a, const Real& b) {
        Real r(combined(a, b));
        mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r(combined(a, b));
        mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r(combined(a, b));
        mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        Real r(combined(a, b));
        mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    Real operator-() const {
        Real r(prec());
        mpfr_neg(r.x_, x_, MPFR_RNDN);
        return r;
    }
    Real& operator+=(const Real& b) { *this = *this + b; return *this; }
    Real& operator-=(const Real& b) { *this = *this - b; return *this; }
    Real& operator*=(const Real& b) { *this = *this * b; return *this; }
    Real& operator/=(const Real& b) { *this = *this / b; return *this; }

    friend Real operator*(const Real& a, const Rat& q) { return a * Real::of(q, a.prec()); }
    friend Real operator*(const Rat& q, const Real& a) { return a * q; }
    friend Real operator/(const Real& a, const Rat& q) { return a / Real::of(q, a.prec()); }
    friend Real operator+(const Real& a, const Rat& q) { return a + Real::of(q, a.prec()); }
    friend Real operator-(const Real& a, const Rat& q) { return a - Real::of(q, a.prec()); }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.x_, b.x_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.x_, b.x_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.x_, b.x_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.x_, b.x_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.x_, b.x_) != 0; }

    Real abs() const {
        Real r(prec());
        mpfr_abs(r.x_, x_, MPFR_RNDN);
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const Real& r) { return os << r.str(); }

    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }

  private:
    static prec_t combined(const Real& a, const Real& b) {
        return std::min(a.prec(), b.prec());
    }
    mpfr_t x_;
};

inline Real sqrt(const Real& a) {
    Real r(a.prec());
    mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real exp(const Real& a) {
    Real r(a.prec());
    mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real log(const Real& a) {
    Real r(a.prec());
    mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
// base^e for positive base (the only case the expansions need).
inline Real pow(const Real& base, const Real& e) {
    Real r(std::min(base.prec(), e.prec()));
    mpfr_pow(r.raw(), base.raw(), e.raw(), MPFR_RNDN);
    return r;
}
inline Real pow(const Real& base, const Rat& e) { return pow(base, Real::of(e, base.prec())); }

inline Real ldexp2(const Real& a, long e) {  // a * 2^e
    Real r(a.prec());
    mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

// Plumbing for the numeric root-finding oracle in the tests; the library
// itself never manufactures complex values.
struct Complex {
    Real re, im;

    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    static Complex of(const Rat& r, prec_t prec) {
        return {Real::of(r, prec), Real::zero(prec)};
    }
    friend Complex operator+(const Complex& a, const Complex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Real abs() const { return pfq::sqrt(re * re + im * im); }
};

} // namespace pfq
