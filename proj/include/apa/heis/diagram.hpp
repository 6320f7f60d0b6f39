#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "apa/rational.hpp"

namespace apa::heis {

enum class Arrow : std::uint8_t { Up, Down };

inline Arrow flip(Arrow a) { return a == Arrow::Up ? Arrow::Down : Arrow::Up; }

using ObjectWord = std::vector<Arrow>;

ObjectWord updown_power(int k);          // (up down)^k
ObjectWord word_star(const ObjectWord&); // reverse arrows, keep order
std::string word_str(const ObjectWord&);
ObjectWord parse_word(const std::string& s);  // e.g. "ud" or "^v" style "u"/"d"

// One elementary layer tensored with identities. Layers are listed from the
// top boundary down to the bottom one; positions are 1-based in the word
// directly above the layer for Cross/Cup/Dot and below it for Cap... see
// SliceDiagram::validate for the exact word bookkeeping.
struct SliceLayer {
    enum Kind : std::uint8_t { Cross, Cup, Cap, Dot } kind;
    int pos;
    Arrow left = Arrow::Up;  // left arrow of the created (Cup) or closed (Cap) pair
    friend auto operator<=>(const SliceLayer&, const SliceLayer&) = default;
};

struct SliceDiagram {
    ObjectWord top, bottom;
    std::vector<SliceLayer> layers;

    // checks layer boundaries compose; returns the interface words from top
    // (index 0 = top word) to bottom
    std::vector<ObjectWord> interfaces() const;

    // vertical concatenation: this diagram above `below`
    SliceDiagram stacked_on(const SliceDiagram& below) const;
    // horizontal juxtaposition, this diagram to the left
    SliceDiagram beside(const SliceDiagram& other) const;
};

SliceDiagram identity_slices(const ObjectWord& w);

// Matching of the endpoint set; codes: +j = top position j, -i = bottom i.
struct Matching {
    std::vector<std::pair<int, int>> pairs;  // each sorted (code order), list sorted
    friend auto operator<=>(const Matching&, const Matching&) = default;

    static Matching of(std::vector<std::pair<int, int>> raw);
    int partner(int code) const;
};

bool matching_valid(const Matching& m, const ObjectWord& top, const ObjectWord& bottom);

// source = flow begins there: top Down or bottom Up
bool endpoint_is_source(int code, const ObjectWord& top, const ObjectWord& bottom);

// Normal-form basis datum: a simple diagram (its matching) with dot counts at
// target endpoints.
struct BasisDiagram {
    Matching matching;
    std::map<int, int> dots;  // endpoint code -> count, targets only, no zeros
    friend auto operator<=>(const BasisDiagram&, const BasisDiagram&) = default;
};

// multiset of clockwise bubbles: dot weight -> multiplicity
using BubbleMonomial = std::map<int, int>;

class HeisMorphism {
public:
    HeisMorphism() = default;
    HeisMorphism(ObjectWord top, ObjectWord bottom)
        : top_(std::move(top)), bottom_(std::move(bottom)) {}

    static HeisMorphism identity(const ObjectWord& w);

    const ObjectWord& top() const { return top_; }
    const ObjectWord& bottom() const { return bottom_; }
    const std::map<std::pair<BubbleMonomial, BasisDiagram>, Rat>& terms() const {
        return terms_;
    }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const BubbleMonomial& b, const BasisDiagram& d, const Rat& c);

    HeisMorphism operator-() const;
    friend HeisMorphism operator+(const HeisMorphism& a, const HeisMorphism& b);
    friend HeisMorphism operator-(const HeisMorphism& a, const HeisMorphism& b);
    friend HeisMorphism operator*(const Rat& c, const HeisMorphism& a);
    HeisMorphism& operator+=(const HeisMorphism& o) { return *this = *this + o; }

    friend bool operator==(const HeisMorphism& a, const HeisMorphism& b) {
        return a.top_ == b.top_ && a.bottom_ == b.bottom_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    ObjectWord top_, bottom_;
    std::map<std::pair<BubbleMonomial, BasisDiagram>, Rat> terms_;
};

// Normal form of a slice diagram in the diagram basis. The step budget guards
// the rewriting loop; exceeding it throws ReduceStuck.
struct ReduceStuck : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long reduce_step_budget();  // RELATION_STEP_BUDGET env var, default 1e6

HeisMorphism reduce(const SliceDiagram& d);
HeisMorphism reduce(const std::vector<std::pair<Rat, SliceDiagram>>& sum);

// randomized rule-application order, for the confluence checks
HeisMorphism reduce_shuffled(const SliceDiagram& d, unsigned seed);

// vertical composition f over g and horizontal tensor
HeisMorphism compose(const HeisMorphism& f, const HeisMorphism& g);
HeisMorphism tensor(const HeisMorphism& f, const HeisMorphism& g);

// slice presentation of a basis diagram (pairwise-minimal crossings, dots at
// their target endpoints)
SliceDiagram basis_to_slices(const BasisDiagram& b, const ObjectWord& top,
                             const ObjectWord& bottom);

// anticlockwise bubble with w dots as a polynomial in the clockwise bubbles
std::map<BubbleMonomial, Rat> ccw_bubble_convert(int w);

}  // namespace apa::heis
