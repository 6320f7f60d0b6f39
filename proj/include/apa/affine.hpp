#pragma once

#include <map>
#include <string>
#include <vector>

#include "apa/hecke.hpp"
#include "apa/palgebra.hpp"
#include "apa/schur_weyl.hpp"

namespace apa {

// Generator of the affine algebra. Kinds: 't' (tau), 'e', 'x', 'z' and the
// derived Coxeter letter 's' (tau_{2i} tau_{2i+1} + e_{2i}), which every
// evaluation target implements natively.
struct AffineGen {
    char kind;
    int index;
    friend auto operator<=>(const AffineGen&, const AffineGen&) = default;
};

using AffineWord = std::vector<AffineGen>;

// Formal rational combination of words in the generators; never normalized,
// only evaluated through homomorphisms.
class AffineElement {
public:
    AffineElement() : k_(0) {}
    explicit AffineElement(int k) : k_(k) {}

    static AffineElement one(int k) { return word(k, {}); }
    static AffineElement word(int k, AffineWord w, Rat c = Rat(1));
    static AffineElement gen(int k, char kind, int index);

    int k() const { return k_; }
    const std::map<AffineWord, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const AffineWord& w, const Rat& c);

    AffineElement operator-() const;
    friend AffineElement operator+(const AffineElement& a, const AffineElement& b);
    friend AffineElement operator-(const AffineElement& a, const AffineElement& b);
    friend AffineElement operator*(const AffineElement& a, const AffineElement& b);
    friend AffineElement operator*(const Rat& c, const AffineElement& a);
    AffineElement& operator+=(const AffineElement& o) { return *this = *this + o; }
    AffineElement& operator-=(const AffineElement& o) { return *this = *this - o; }
    AffineElement& operator*=(const AffineElement& o) { return *this = *this * o; }

    // word reversal, the anti-automorphism fixing the generators
    AffineElement star() const;

    friend bool operator==(const AffineElement& a, const AffineElement& b) {
        return a.k_ == b.k_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    int k_;
    std::map<AffineWord, Rat> terms_;
};

bool affine_gen_legal(const AffineGen& g, int k);

// token form: t4, e3, x2, z1, s2
std::string gen_token(const AffineGen& g);
AffineGen parse_gen_token(const std::string& token);

struct AffineRelation {
    std::string label;
    AffineElement lhs, rhs;
};

// The defining relation table, fully instantiated over legal indices;
// central-generator instances bounded by max_l.
std::vector<AffineRelation> affine_relations(int k, int max_l = 3);
// Derived identities: the mixed, recursive, preparatory, tau-recursion,
// crossing-commutation and power suites (power forms up to max_n).
std::vector<AffineRelation> affine_lemma_relations(int k, int max_n = 3);

// Generic word-table evaluation: a model supplies the generator images.
template <class Model>
typename Model::Value eval_affine(const AffineElement& a, const Model& model) {
    using V = typename Model::Value;
    V acc = model.zero();
    for (const auto& [w, c] : a.terms()) {
        V prod = model.one();
        for (const auto& g : w) prod = model.mul(prod, model.gen(g));
        acc = model.add(acc, model.scale(c, prod));
    }
    return acc;
}

// evaluation into the diagram algebra: tau -> t, e -> e, x -> X, z_l -> z(z-1)^l
PAElement eval_pr(const AffineElement& a);

// evaluation into H_k (x) H_k with central values lambda_l (default l+1)
HeckeTensorElement eval_f_lambda(const AffineElement& a, const std::vector<Rat>& lambda = {});

// evaluation on M (x) V^{(x)k}
TensorOperator eval_psi_M(const AffineElement& a, int n, std::shared_ptr<const SnModule> module);

// Words in the s_i / e_j / z alphabet, the generating set shared with the
// diagram presentation.
struct HRGen {
    char kind;  // 's', 'e', 'z'
    int index;  // unused for 'z'
};
using HRWord = std::vector<HRGen>;

AffineElement eval_iota(const HRWord& w, int k);
PAElement hr_word_value(const HRWord& w, int k);
// checks pr(iota(w)) == diagram value of w on generators and random words
bool iota_roundtrip_check(int k, int samples, unsigned seed = 1);

// tau_i as a combination over {e, s, x, z}. Routes: "direct" unfolds the
// affine recursion relation for x, "recursive" uses the two-step tau
// recursion with the direct expression as base case.
AffineElement express_tau(int i, int k, const std::string& route = "direct");

}  // namespace apa
