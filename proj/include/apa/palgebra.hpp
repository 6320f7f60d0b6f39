#pragma once

#include <map>
#include <string>
#include <vector>

#include "apa/partition.hpp"
#include "apa/polynomial.hpp"

namespace apa {

// Element of the partition algebra at size k: a finite map from diagrams to
// polynomials in z. No zero values are stored.
class PAElement {
public:
    PAElement() : k_(0) {}
    explicit PAElement(int k) : k_(k) {}
    PAElement(const SetPartitionDiagram& d, PolyZ c = PolyZ(1));

    static PAElement zero(int k) { return PAElement(k); }
    static PAElement one(int k) { return PAElement(SetPartitionDiagram::identity(k)); }

    int k() const { return k_; }
    const std::map<SetPartitionDiagram, PolyZ>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t z_degree() const;

    void add_term(const SetPartitionDiagram& d, const PolyZ& c);

    PAElement operator-() const;
    friend PAElement operator+(const PAElement& a, const PAElement& b);
    friend PAElement operator-(const PAElement& a, const PAElement& b);
    friend PAElement operator*(const PAElement& a, const PAElement& b);
    friend PAElement operator*(const PolyZ& c, const PAElement& a);
    PAElement& operator+=(const PAElement& o) { return *this = *this + o; }
    PAElement& operator-=(const PAElement& o) { return *this = *this - o; }
    PAElement& operator*=(const PAElement& o) { return *this = *this * o; }

    // anti-involution: flip every diagram
    PAElement star() const;

    friend bool operator==(const PAElement& a, const PAElement& b) {
        return a.k_ == b.k_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const PAElement& a, const PAElement& b) { return !(a == b); }

    std::string str() const;

private:
    int k_;
    std::map<SetPartitionDiagram, PolyZ> terms_;
};

// Specialization of every coefficient at z = delta; values become rationals.
std::map<SetPartitionDiagram, Rat> specialize(const PAElement& a, const Rat& delta);

// Named generators at size k, embedded in A_{2k}.
PAElement pa_one(int k);
PAElement pa_z(int k);
PAElement pa_s(int i, int k);
PAElement pa_e(int m, int k);

// Jucys-Murphy elements L_1..L_{2k} and the crossing elements sigma_2..sigma_{2k-1},
// computed from the mutual recursion and memoized per k.
const PAElement& jm_L(int i, int k);
const PAElement& enyang_sigma(int i, int k);

// Normalized elements: X_i = z-1-L_i (i odd), L_i-1 (i even);
// t_{2i} = sigma_{2i} - e_{2i}, t_{2i+1} = sigma_{2i+1} - e_{2i}.
PAElement norm_X(int i, int k);
PAElement norm_t(int i, int k);

// p_n(X_1,...,X_{2k}) = X_1^n + X_3^n + ... - (X_2^n + X_4^n + ...).
PAElement power_sum(int n, int k);

// Commutation with all s_i, e_j generators.
bool central_check(const PAElement& c);

}  // namespace apa
