#pragma once

#include <gmp.h>

#include <cctype>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "pfq/errors.hpp"

namespace pfq {

// Arbitrary-precision rational, kept canonical: lowest terms, positive
// denominator. All arithmetic is exact; division by zero throws.
class Rat {
  public:
    Rat() { mpq_init(q_); }
    Rat(long n) { mpq_init(q_); mpq_set_si(q_, n, 1); }
    Rat(long num, long den) {
        mpq_init(q_);
        if (den == 0) { mpq_clear(q_); throw domain_error("Rat: zero denominator"); }
        if (den < 0) { num = -num; den = -den; }
        mpq_set_si(q_, num, static_cast<unsigned long>(den));
        mpq_canonicalize(q_);
    }
    Rat(const Rat& o) { mpq_init(q_); mpq_set(q_, o.q_); }
    Rat(Rat&& o) noexcept { mpq_init(q_); mpq_swap(q_, o.q_); }
    Rat& operator=(const Rat& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rat& operator=(Rat&& o) noexcept {
        if (this != &o) mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rat() { mpq_clear(q_); }

    // Literal grammar: optional sign, integer, optional "/" positive-integer.
    // No whitespace, no empty numerator or denominator.
    static Rat parse(const std::string& s) {
        if (s.empty()) throw parse_error("empty rational literal");
        std::size_t i = 0;
        if (s[i] == '+' || s[i] == '-') ++i;
        std::size_t digits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++digits; }
        if (digits == 0) throw parse_error("bad rational literal: \"" + s + "\"");
        if (i < s.size()) {
            if (s[i] != '/') throw parse_error("bad rational literal: \"" + s + "\"");
            ++i;
            std::size_t dd = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++dd; }
            if (dd == 0 || i != s.size())
                throw parse_error("bad rational literal: \"" + s + "\"");
        }
        Rat r;
        const std::string body = (s[0] == '+') ? s.substr(1) : s;  // GMP rejects '+'
        if (mpq_set_str(r.q_, body.c_str(), 10) != 0)
            throw parse_error("bad rational literal: \"" + s + "\"");
        if (mpz_sgn(mpq_denref(r.q_)) == 0)
            throw parse_error("zero denominator: \"" + s + "\"");
        mpq_canonicalize(r.q_);
        return r;
    }

    std::string str() const {
        char* raw = mpq_get_str(nullptr, 10, q_);
        std::string out(raw);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(raw, out.size() + 1);
        return out;
    }

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    bool is_nonpos_integer() const { return is_integer() && sign() <= 0; }

    bool fits_long() const { return is_integer() && mpz_fits_slong_p(mpq_numref(q_)); }
    long to_long() const {
        if (!fits_long()) throw domain_error("Rat: not a machine integer: " + str());
        return mpz_get_si(mpq_numref(q_));
    }
    double to_double() const { return mpq_get_d(q_); }

    // Nearest integer, half-up. Callers only ever look at |x - round(x)|.
    Rat round() const {
        Rat shifted = *this + Rat(1, 2);
        mpz_t n;
        mpz_init(n);
        mpz_fdiv_q(n, mpq_numref(shifted.q_), mpq_denref(shifted.q_));
        Rat out;
        mpq_set_z(out.q_, n);
        mpz_clear(n);
        return out;
    }

    friend Rat operator+(const Rat& a, const Rat& b) { Rat r; mpq_add(r.q_, a.q_, b.q_); return r; }
    friend Rat operator-(const Rat& a, const Rat& b) { Rat r; mpq_sub(r.q_, a.q_, b.q_); return r; }
    friend Rat operator*(const Rat& a, const Rat& b) { Rat r; mpq_mul(r.q_, a.q_, b.q_); return r; }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw domain_error("Rat: division by zero");
        Rat r;
        mpq_div(r.q_, a.q_, b.q_);
        return r;
    }
    Rat operator-() const { Rat r; mpq_neg(r.q_, q_); return r; }
    Rat& operator+=(const Rat& b) { mpq_add(q_, q_, b.q_); return *this; }
    Rat& operator-=(const Rat& b) { mpq_sub(q_, q_, b.q_); return *this; }
    Rat& operator*=(const Rat& b) { mpq_mul(q_, q_, b.q_); return *this; }
    Rat& operator/=(const Rat& b) { *this = *this / b; return *this; }

    Rat abs() const { Rat r; mpq_abs(r.q_, q_); return r; }

    Rat pow(long e) const {
        if (e == 0) return Rat(1);
        if (is_zero() && e < 0) throw domain_error("Rat: 0 to negative power");
        Rat base = e < 0 ? Rat(1) / *this : *this;
        unsigned long n = e < 0 ? -(unsigned long)e : (unsigned long)e;
        Rat acc(1);
        while (n) {
            if (n & 1) acc *= base;
            mpq_mul(base.q_, base.q_, base.q_);
            n >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

    const __mpq_struct* raw() const { return q_; }

  private:
    mpq_t q_;
};

inline Rat factorial(long n) {
    if (n < 0) throw domain_error("factorial of negative integer");
    Rat r(1);
    for (long i = 2; i <= n; ++i) r *= Rat(i);
    return r;
}

inline Rat binomial(long n, long k) {
    if (k < 0 || k > n) return Rat(0);
    Rat r(1);
    for (long i = 0; i < k; ++i) r *= Rat(n - i, i + 1);
    return r;
}

} // namespace pfq
