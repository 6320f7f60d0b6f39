#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "apa/hecke.hpp"

using namespace apa;

namespace {

HeckeElement random_element(int k, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> exp(0, 2), coeff(-2, 2), gen(1, k - 1);
    HeckeElement r(k);
    for (int t = 0; t < 3; ++t) {
        HeckeElement m = HeckeElement::one(k);
        for (int i = 1; i <= k; ++i)
            for (int j = 0; j < exp(rng); ++j) m *= HeckeElement::y(i, k);
        for (int j = 0; j < exp(rng); ++j) m *= HeckeElement::s(gen(rng), k);
        r += Rat(coeff(rng)) * m;
    }
    return r;
}

}  // namespace

TEST_CASE("defining relations") {
    const int k = 3;
    auto y = [k](int i) { return HeckeElement::y(i, k); };
    auto s = [k](int i) { return HeckeElement::s(i, k); };
    for (int i = 1; i <= k - 1; ++i) {
        CHECK(s(i) * s(i) == HeckeElement::one(k));
        CHECK(y(i + 1) == s(i) * y(i) * s(i) + s(i));
    }
    CHECK(s(1) * y(3) == y(3) * s(1));
    CHECK(s(2) * y(1) == y(1) * s(2));
    CHECK(y(1) * y(2) == y(2) * y(1));
    CHECK(s(1) * s(2) * s(1) == s(2) * s(1) * s(2));
}

TEST_CASE("straightening example") {
    // s_1 y_1 = y_2 s_1 - 1 in H_2
    auto lhs = HeckeElement::s(1, 2) * HeckeElement::y(1, 2);
    auto rhs = HeckeElement::y(2, 2) * HeckeElement::s(1, 2) - HeckeElement::one(2);
    CHECK(lhs == rhs);
}

TEST_CASE("normal form keys are independent") {
    // product of basis monomials keeps a single term when no straightening occurs
    auto m = HeckeElement::y(1, 2) * HeckeElement::y(1, 2) * HeckeElement::s(1, 2);
    CHECK(m.terms().size() == 1);
    CHECK(m.terms().begin()->first.exps == std::vector<int>{2, 0});
}

TEST_CASE("associativity on random triples") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_element(3, rng);
        auto b = random_element(3, rng);
        auto c = random_element(3, rng);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("tensor factors") {
    const int k = 2;
    auto one = HeckeElement::one(k);
    auto s1 = HeckeElement::s(1, k);
    auto y1 = HeckeElement::y(1, k);
    auto L = HeckeTensorElement::of(s1, one);
    auto R = HeckeTensorElement::of(one, s1);
    CHECK(L * R == HeckeTensorElement::of(s1, s1));
    CHECK(R * L == HeckeTensorElement::of(s1, s1));
    CHECK(L * L == HeckeTensorElement::one(k));
    auto lhs = R * HeckeTensorElement::of(Rat(-1) * one, y1) * R;
    auto rhs = HeckeTensorElement::of(Rat(-1) * one, HeckeElement::y(2, k) - s1);
    CHECK(lhs == rhs);
}
