#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pfq/params.hpp"
#include "pfq/rational.hpp"

namespace pfq {

// Power series truncated at a fixed order, exact rational coefficients.
// Binary operations truncate at the smaller operand order.
class TruncatedSeries {
  public:
    explicit TruncatedSeries(std::size_t order) : c_(order + 1, Rat(0)) {}
    TruncatedSeries(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.push_back(Rat(0));
    }

    static TruncatedSeries constant(const Rat& v, std::size_t order) {
        TruncatedSeries s(order);
        s.c_[0] = v;
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const Rat& operator[](std::size_t i) const { return c_[i]; }
    Rat& operator[](std::size_t i) { return c_[i]; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        std::size_t ord = std::min(a.order(), b.order());
        TruncatedSeries r(ord);
        for (std::size_t i = 0; i <= ord; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        std::size_t ord = std::min(a.order(), b.order());
        TruncatedSeries r(ord);
        for (std::size_t i = 0; i <= ord; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        std::size_t ord = std::min(a.order(), b.order());
        TruncatedSeries r(ord);
        for (std::size_t i = 0; i <= ord; ++i)
            for (std::size_t j = 0; i + j <= ord; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        return r;
    }
    TruncatedSeries scaled(const Rat& k) const {
        TruncatedSeries r(order());
        for (std::size_t i = 0; i <= order(); ++i) r.c_[i] = c_[i] * k;
        return r;
    }

    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += c_[i].str();
        }
        return s + "]";
    }

  private:
    std::vector<Rat> c_;
};

// exp(s) for series with zero constant term (rational coefficients demand it):
// n b_n = sum_{k=1..n} k a_k b_{n-k}.
inline TruncatedSeries series_exp(const TruncatedSeries& a) {
    if (!a[0].is_zero())
        throw domain_error("series_exp: constant term must be 0, got " + a[0].str());
    std::size_t ord = a.order();
    TruncatedSeries b(ord);
    b[0] = Rat(1);
    for (std::size_t n = 1; n <= ord; ++n) {
        Rat acc(0);
        for (std::size_t k = 1; k <= n; ++k) acc += Rat(static_cast<long>(k)) * a[k] * b[n - k];
        b[n] = acc / Rat(static_cast<long>(n));
    }
    return b;
}

// log(s) for series with unit constant term:
// l_n = a_n - (1/n) sum_{k=1..n-1} k l_k a_{n-k}.
inline TruncatedSeries series_log(const TruncatedSeries& a) {
    if (a[0] != Rat(1))
        throw domain_error("series_log: constant term must be 1, got " + a[0].str());
    std::size_t ord = a.order();
    TruncatedSeries l(ord);
    for (std::size_t n = 1; n <= ord; ++n) {
        Rat acc(0);
        for (std::size_t k = 1; k < n; ++k) acc += Rat(static_cast<long>(k)) * l[k] * a[n - k];
        l[n] = a[n] - acc / Rat(static_cast<long>(n));
    }
    return l;
}

// s^sigma = exp(sigma log s) for rational sigma; unit constant term required.
inline TruncatedSeries series_pow(const TruncatedSeries& a, const Rat& sigma) {
    return series_exp(series_log(a).scaled(sigma));
}

// Formal series with an integer starting offset: coefficients of
// z^(offset), ..., z^(offset + len - 1). Offsets add under multiplication;
// the exact window shrinks to what both operands determine.
class LaurentSeries {
  public:
    LaurentSeries(long offset, std::vector<Rat> coeffs)
        : off_(offset), c_(std::move(coeffs)) {
        if (c_.empty()) throw domain_error("LaurentSeries: empty coefficient window");
    }
    static LaurentSeries zero(long offset, std::size_t len) {
        return LaurentSeries(offset, std::vector<Rat>(len, Rat(0)));
    }
    static LaurentSeries from(const TruncatedSeries& s) {
        std::vector<Rat> c;
        for (std::size_t i = 0; i <= s.order(); ++i) c.push_back(s[i]);
        return LaurentSeries(0, std::move(c));
    }

    long offset() const { return off_; }
    long hi() const { return off_ + static_cast<long>(c_.size()) - 1; }  // last exact power
    std::size_t len() const { return c_.size(); }

    // Coefficient of z^k; zero below the offset, out-of-window above errors.
    const Rat& at(long k) const {
        static const Rat zero_(0);
        if (k < off_) return zero_;
        if (k > hi()) throw domain_error("LaurentSeries: power beyond exact window");
        return c_[static_cast<std::size_t>(k - off_)];
    }

    LaurentSeries shifted(long dz) const {  // multiply by z^dz
        LaurentSeries r = *this;
        r.off_ += dz;
        return r;
    }
    LaurentSeries scaled(const Rat& k) const {
        LaurentSeries r = *this;
        for (auto& x : r.c_) x *= k;
        return r;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        long off = std::min(a.off_, b.off_);
        long hi = std::min(a.hi(), b.hi());
        if (hi < off) throw domain_error("LaurentSeries: disjoint exact windows");
        LaurentSeries r = zero(off, static_cast<std::size_t>(hi - off + 1));
        for (long k = off; k <= hi; ++k)
            r.c_[static_cast<std::size_t>(k - off)] = a.at(k) + b.at(k);
        return r;
    }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
        return a + b.scaled(Rat(-1));
    }

    bool operator==(const LaurentSeries& o) const {
        long lo = std::min(off_, o.off_);
        long hi_ = std::min(hi(), o.hi());
        for (long k = lo; k <= hi_; ++k)
            if (at(k) != o.at(k)) return false;
        return true;
    }

    std::string str() const {
        std::string s = "z^" + std::to_string(off_) + "*[";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) s += ",";
            s += c_[i].str();
        }
        return s + "]";
    }

  private:
    long off_;
    std::vector<Rat> c_;
};

// Product window: offsets add, length is the smaller operand length (the
// coefficients beyond that would need truncated-away terms).
inline LaurentSeries laurent_mul(const LaurentSeries& a, const LaurentSeries& b) {
    std::size_t len = std::min(a.len(), b.len());
    std::vector<Rat> coeffs(len, Rat(0));
    for (std::size_t i = 0; i < len; ++i) {
        Rat acc(0);
        for (std::size_t j = 0; j <= i; ++j)
            acc += a.at(a.offset() + static_cast<long>(j)) *
                   b.at(b.offset() + static_cast<long>(i - j));
        coeffs[i] = acc;
    }
    return LaurentSeries(a.offset() + b.offset(), std::move(coeffs));
}

// (1-z)^(-c) truncated: sum_k (c)_k / k! z^k.
inline LaurentSeries laurent_binom(const Rat& c, std::size_t order) {
    std::vector<Rat> coeffs(order + 1);
    Rat t(1);
    coeffs[0] = t;
    for (std::size_t k = 0; k < order; ++k) {
        t *= (c + Rat(static_cast<long>(k))) / Rat(static_cast<long>(k + 1));
        coeffs[k + 1] = t;
    }
    return LaurentSeries(0, std::move(coeffs));
}

} // namespace pfq
