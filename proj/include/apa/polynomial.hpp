#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "apa/rational.hpp"

namespace apa {

// Polynomial in the formal variable z, coefficient index = degree.
// Normal form: no trailing zero coefficients; zero polynomial = empty list.
class PolyZ {
public:
    PolyZ() = default;
    PolyZ(Rat constant) {  // NOLINT: implicit by design, scalars embed
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }
    PolyZ(long long constant) : PolyZ(Rat(constant)) {}
    PolyZ(int constant) : PolyZ(Rat(constant)) {}

    static PolyZ z() { return monomial(1, 1); }

    static PolyZ monomial(std::size_t degree, Rat coeff) {
        PolyZ p;
        if (coeff != 0) {
            p.coeffs_.assign(degree + 1, Rat(0));
            p.coeffs_[degree] = std::move(coeff);
        }
        return p;
    }

    const std::vector<Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is reported as 0
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

    friend PolyZ operator+(const PolyZ& a, const PolyZ& b) {
        PolyZ r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r.coeffs_[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
        r.trim();
        return r;
    }

    friend PolyZ operator-(const PolyZ& a, const PolyZ& b) { return a + (-b); }

    PolyZ operator-() const {
        PolyZ r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend PolyZ operator*(const PolyZ& a, const PolyZ& b) {
        if (a.is_zero() || b.is_zero()) return {};
        PolyZ r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        r.trim();
        return r;
    }

    PolyZ& operator+=(const PolyZ& o) { return *this = *this + o; }
    PolyZ& operator-=(const PolyZ& o) { return *this = *this - o; }
    PolyZ& operator*=(const PolyZ& o) { return *this = *this * o; }

    // multiply by z^m
    PolyZ shifted(std::size_t m) const {
        if (is_zero() || m == 0) return *this;
        PolyZ r;
        r.coeffs_.assign(coeffs_.size() + m, Rat(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i + m] = coeffs_[i];
        return r;
    }

    PolyZ pow(unsigned e) const {
        PolyZ r(1);
        for (unsigned i = 0; i < e; ++i) r *= *this;
        return r;
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend bool operator==(const PolyZ& a, const PolyZ& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const PolyZ& a, const PolyZ& b) { return !(a == b); }
    friend bool operator<(const PolyZ& a, const PolyZ& b) { return a.coeffs_ < b.coeffs_; }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t d = coeffs_.size(); d-- > 0;) {
            if (coeffs_[d] == 0) continue;
            if (!s.empty()) s += " + ";
            if (d == 0 || coeffs_[d] != 1) s += rat_to_string(coeffs_[d]);
            if (d >= 1) {
                if (coeffs_[d] != 1) s += "*";
                s += "z";
                if (d > 1) s += "^" + std::to_string(d);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rat> coeffs_;
};

}  // namespace apa
