#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "apa/palgebra.hpp"
#include "apa/rational.hpp"

namespace apa {

// one-line notation, images[i-1] = pi(i)
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_transposition(int a, int b, int n);
Perm perm_mul(const Perm& u, const Perm& v);  // (uv)(i) = u(v(i))
Perm perm_inverse(const Perm& u);
std::vector<Perm> symmetric_group(int n);

// Element of the rational group algebra of S(n).
class GroupAlgebraElement {
public:
    GroupAlgebraElement() : n_(0) {}
    explicit GroupAlgebraElement(int n) : n_(n) {}

    static GroupAlgebraElement one(int n);
    static GroupAlgebraElement of(const Perm& p);

    int n() const { return n_; }
    const std::map<Perm, Rat>& terms() const { return terms_; }
    void add_term(const Perm& p, const Rat& c);

    friend GroupAlgebraElement operator+(const GroupAlgebraElement& a,
                                         const GroupAlgebraElement& b);
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a,
                                         const GroupAlgebraElement& b);
    friend GroupAlgebraElement operator*(const Rat& c, const GroupAlgebraElement& a);
    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) { return *this = *this + o; }

    friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    int n_;
    std::map<Perm, Rat> terms_;
};

// T_{n,b}: sum of all transpositions through b.
GroupAlgebraElement t_sum(int n, int b);
// Z_{n,l}: sum over b of T_{n,b}^l; central in the group algebra.
GroupAlgebraElement z_central(int n, int l);
bool is_central(const GroupAlgebraElement& a);

// An S(n)-module presented by exact matrices for the adjacent transpositions.
class SnModule {
public:
    static SnModule trivial(int n);
    static SnModule permutation(int n);  // the module V with basis v_1..v_n
    static SnModule regular(int n);      // group algebra, left translation

    int n() const { return n_; }
    int dim() const { return dim_; }
    const std::string& name() const { return name_; }

    // matrix entries of pi acting on the module: column j maps to
    // sum_i mat[i][j] basis_i
    std::vector<std::vector<Rat>> matrix(const Perm& p) const;
    std::vector<std::vector<Rat>> matrix(const GroupAlgebraElement& a) const;

    // matrix of s_i, 1 <= i <= n-1
    const std::vector<std::vector<Rat>>& adjacent(int i) const { return adjacent_[i - 1]; }

private:
    SnModule(int n, int dim, std::string name,
             std::vector<std::vector<std::vector<Rat>>> adjacent);

    int n_;
    int dim_;
    std::string name_;
    // adjacent_[i] = matrix of s_{i+1}
    std::vector<std::vector<std::vector<Rat>>> adjacent_;
};

// Basis vector index of M (x) V^{(x)k}: a0 picks a module basis element
// (1-based), a the tensor labels in [n]^k.
struct TensorIndex {
    int a0;
    std::vector<int> a;
    friend auto operator<=>(const TensorIndex&, const TensorIndex&) = default;
};

using TensorVec = std::map<TensorIndex, Rat>;

// Linear operator on M (x) V^{(x)k}, held as a function on basis vectors.
class TensorOperator {
public:
    TensorOperator() = default;
    TensorOperator(int n, int k, std::shared_ptr<const SnModule> module,
                   std::function<TensorVec(const TensorIndex&)> apply);

    static TensorOperator identity(int n, int k, std::shared_ptr<const SnModule> module);

    int n() const { return n_; }
    int k() const { return k_; }
    const std::shared_ptr<const SnModule>& module() const { return module_; }

    TensorVec operator()(const TensorIndex& idx) const { return apply_(idx); }
    TensorVec operator()(const TensorVec& v) const;

    // composition: (a then this)
    TensorOperator after(const TensorOperator& a) const;
    friend TensorOperator operator*(const TensorOperator& f, const TensorOperator& g);
    friend TensorOperator operator+(const TensorOperator& f, const TensorOperator& g);
    friend TensorOperator operator*(const Rat& c, const TensorOperator& f);

    // exhaustive comparison over all d * n^k basis vectors
    friend bool operator==(const TensorOperator& f, const TensorOperator& g);

private:
    int n_ = 0;
    int k_ = 0;
    std::shared_ptr<const SnModule> module_;
    std::function<TensorVec(const TensorIndex&)> apply_;
};

std::vector<TensorIndex> tensor_basis(int n, int k, const SnModule& module);

// Action of a named generator on M (x) V^{(x)k}. Supported names:
// e<m>, tau<i>, x<r>, z<l>, s<i>, t<i> (alias of tau), X<r> (alias of x).
TensorOperator psi_generator(const std::string& gen, int n, int k,
                             std::shared_ptr<const SnModule> module);

// Operator of a partition-algebra element (z evaluated at n), computed from
// the set-partition matrix rule.
TensorOperator psi_element(const PAElement& a, int n, int k,
                           std::shared_ptr<const SnModule> module);
// Same operator through a factorization of each diagram into s/e generators.
TensorOperator psi_element_by_factorization(const PAElement& a, int n, int k,
                                            std::shared_ptr<const SnModule> module);

// Writes a diagram as a word in the s_i / e_m generators whose product (with
// z-power scale) recovers it; the polynomial factor of the word is z^0.
std::vector<std::string> factor_diagram(const SetPartitionDiagram& d);

// Interpolation-based identity check: equality of operators on V^{(x)k} for
// n = 2k .. 2k + D, D = max z-degree of both sides.
bool certify_identity(const PAElement& lhs, const PAElement& rhs);

// Exact rank of the span of {T_{n,a}^m : 0 <= m <= max_m} inside the group
// algebra, computed from images of x_1^m e_2 e_1 on a free module.
int witness_rank(int max_m, int n);
bool witness_independence(int max_m, int n);

}  // namespace apa
