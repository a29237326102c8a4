#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "pfq/rational.hpp"

namespace pfq {

using IntVec = std::vector<long>;

// Ordered list of exact rational parameters, modelling the vectors a, b, x, y
// with the usual empty-vector conventions: Gamma(empty) = 1, (empty)_k = 1,
// sum over empty = 0.
class ParamVec {
  public:
    ParamVec() = default;
    ParamVec(std::initializer_list<Rat> xs) : v_(xs) {}
    explicit ParamVec(std::vector<Rat> xs) : v_(std::move(xs)) {}

    static ParamVec parse(const std::string& csv) {
        ParamVec out;
        if (csv.empty()) return out;
        std::stringstream ss(csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.v_.push_back(Rat::parse(tok));
        return out;
    }

    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }
    const Rat& operator[](std::size_t i) const { return v_[i]; }
    Rat& operator[](std::size_t i) { return v_[i]; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }
    void push_back(Rat r) { v_.push_back(std::move(r)); }

    // Deletion a_[k], 1-based.
    ParamVec drop(std::size_t k) const {
        if (k < 1 || k > v_.size()) throw domain_error("ParamVec::drop: index out of range");
        std::vector<Rat> out;
        out.reserve(v_.size() - 1);
        for (std::size_t i = 0; i < v_.size(); ++i)
            if (i + 1 != k) out.push_back(v_[i]);
        return ParamVec(std::move(out));
    }
    ParamVec drop2(std::size_t k1, std::size_t k2) const {
        if (k1 == k2) throw domain_error("ParamVec::drop2: equal indices");
        if (k1 > k2) std::swap(k1, k2);
        return drop(k2).drop(k1);
    }

    ParamVec shifted(const Rat& beta) const {
        std::vector<Rat> out;
        out.reserve(v_.size());
        for (const auto& x : v_) out.push_back(x + beta);
        return ParamVec(std::move(out));
    }
    // 1 - a, componentwise; shows up all over the reversed recurrences.
    ParamVec one_minus() const {
        std::vector<Rat> out;
        out.reserve(v_.size());
        for (const auto& x : v_) out.push_back(Rat(1) - x);
        return ParamVec(std::move(out));
    }

    ParamVec appended(Rat x) const {
        ParamVec out = *this;
        out.push_back(std::move(x));
        return out;
    }
    static ParamVec concat(const ParamVec& a, const ParamVec& b) {
        ParamVec out = a;
        for (const auto& x : b) out.push_back(x);
        return out;
    }

    Rat sum() const {
        Rat s(0);
        for (const auto& x : v_) s += x;
        return s;
    }

    bool any_nonpos_integer() const {
        for (const auto& x : v_)
            if (x.is_nonpos_integer()) return true;
        return false;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i) s += ",";
            s += v_[i].str();
        }
        return s + ")";
    }

  private:
    std::vector<Rat> v_;
};

// nu(a;b) = sum(b) - sum(a), the parametric excess.
inline Rat nu(const ParamVec& a, const ParamVec& b) { return b.sum() - a.sum(); }

// Rising factorial (a)_k, extended to negative k by
// (a)_{-r} = (-1)^r / (1-a)_r. Exact on exact input.
inline Rat pochhammer(const Rat& a, long k) {
    if (k >= 0) {
        Rat p(1);
        for (long j = 0; j < k; ++j) p *= a + Rat(j);
        return p;
    }
    long r = -k;
    Rat d(1);
    for (long j = 0; j < r; ++j) d *= Rat(1) - a + Rat(j);
    if (d.is_zero())
        throw pole_error("pochhammer: (" + a.str() + ")_" + std::to_string(k) + " undefined");
    Rat s = (r % 2 == 0) ? Rat(1) : Rat(-1);
    return s / d;
}

// Componentwise product prod_j (c_j)_k; scalar shift broadcasts.
inline Rat pochhammer_vec(const ParamVec& c, long k) {
    Rat p(1);
    for (const auto& x : c) p *= pochhammer(x, k);
    return p;
}

inline Rat pochhammer_vec(const ParamVec& c, const IntVec& shifts) {
    if (c.size() != shifts.size())
        throw domain_error("pochhammer_vec: length mismatch");
    Rat p(1);
    for (std::size_t j = 0; j < c.size(); ++j) p *= pochhammer(c[j], shifts[j]);
    return p;
}

} // namespace pfq
