#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "apa/rational.hpp"

namespace apa {

// Basis key of H_k in normal form: y-monomial (exponent vector) on the left,
// one-line permutation of [k] on the right.
struct HeckeKey {
    std::vector<int> exps;    // length k, entries >= 0
    std::vector<int> images;  // one-line notation, images[i] = w(i+1)
    friend auto operator<=>(const HeckeKey&, const HeckeKey&) = default;
};

class HeckeElement {
public:
    HeckeElement() : k_(0) {}
    explicit HeckeElement(int k) : k_(k) {}

    static HeckeElement one(int k);
    static HeckeElement y(int i, int k);
    static HeckeElement s(int i, int k);

    int k() const { return k_; }
    const std::map<HeckeKey, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const HeckeKey& key, const Rat& c);

    HeckeElement operator-() const;
    friend HeckeElement operator+(const HeckeElement& a, const HeckeElement& b);
    friend HeckeElement operator-(const HeckeElement& a, const HeckeElement& b);
    friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
    friend HeckeElement operator*(const Rat& c, const HeckeElement& a);
    HeckeElement& operator+=(const HeckeElement& o) { return *this = *this + o; }
    HeckeElement& operator*=(const HeckeElement& o) { return *this = *this * o; }

    friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
        return a.k_ == b.k_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const HeckeElement& a, const HeckeElement& b) { return !(a == b); }

    std::string str() const;

private:
    int k_;
    std::map<HeckeKey, Rat> terms_;
};

// Element of H_k (x) H_k, keyed by pairs of normal-form basis keys.
class HeckeTensorElement {
public:
    HeckeTensorElement() : k_(0) {}
    explicit HeckeTensorElement(int k) : k_(k) {}

    static HeckeTensorElement one(int k);
    static HeckeTensorElement of(const HeckeElement& left, const HeckeElement& right);

    int k() const { return k_; }
    const std::map<std::pair<HeckeKey, HeckeKey>, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const HeckeKey& l, const HeckeKey& r, const Rat& c);

    friend HeckeTensorElement operator+(const HeckeTensorElement& a, const HeckeTensorElement& b);
    friend HeckeTensorElement operator-(const HeckeTensorElement& a, const HeckeTensorElement& b);
    friend HeckeTensorElement operator*(const HeckeTensorElement& a, const HeckeTensorElement& b);
    friend HeckeTensorElement operator*(const Rat& c, const HeckeTensorElement& a);
    HeckeTensorElement& operator+=(const HeckeTensorElement& o) { return *this = *this + o; }
    HeckeTensorElement& operator*=(const HeckeTensorElement& o) { return *this = *this * o; }

    friend bool operator==(const HeckeTensorElement& a, const HeckeTensorElement& b) {
        return a.k_ == b.k_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const HeckeTensorElement& a, const HeckeTensorElement& b) {
        return !(a == b);
    }

    std::string str() const;

private:
    int k_;
    std::map<std::pair<HeckeKey, HeckeKey>, Rat> terms_;
};

}  // namespace apa
