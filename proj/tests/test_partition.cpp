#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "apa/partition.hpp"

using namespace apa;

namespace {

SetPartitionDiagram d(int k, std::vector<std::vector<int>> blocks) {
    return SetPartitionDiagram(k, std::move(blocks));
}

SetPartitionDiagram random_diagram(int k, std::mt19937_64& rng) {
    // random assignment of 2k vertices to blocks via restricted growth
    std::vector<std::vector<int>> blocks;
    auto place = [&](int v) {
        std::uniform_int_distribution<int> pick(0, static_cast<int>(blocks.size()));
        int b = pick(rng);
        if (b == static_cast<int>(blocks.size()))
            blocks.push_back({v});
        else
            blocks[b].push_back(v);
    };
    for (int i = 1; i <= k; ++i) place(i);
    for (int i = 1; i <= k; ++i) place(-i);
    return SetPartitionDiagram(k, std::move(blocks));
}

}  // namespace

TEST_CASE("worked product at k=5") {
    auto alpha = d(5, {{1, 2, -2, 3}, {-3}, {-1, 4, -4}, {5, -5}});
    auto beta = d(5, {{1, -1, -2}, {2, -4}, {3}, {4}, {5, -3, -5}});
    auto r = compose(alpha, beta);
    CHECK(r.diagram == d(5, {{1, 2, 3, -4}, {4, -1, -2}, {5, -3, -5}}));
    CHECK(r.middle_components == 1);
}

TEST_CASE("identity composes trivially") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_diagram(4, rng);
        auto one = SetPartitionDiagram::identity(4);
        auto l = compose(one, a);
        auto r = compose(a, one);
        CHECK(l.diagram == a);
        CHECK(l.middle_components == 0);
        CHECK(r.diagram == a);
        CHECK(r.middle_components == 0);
    }
}

TEST_CASE("e1 squared gives one middle component") {
    auto e1 = SetPartitionDiagram::e_odd(1, 2);
    auto r = compose(e1, e1);
    CHECK(r.diagram == e1);
    CHECK(r.middle_components == 1);
}

TEST_CASE("generator shapes") {
    CHECK(SetPartitionDiagram::e_odd(1, 1) == d(1, {{1}, {-1}}));
    CHECK(SetPartitionDiagram::s(1, 2) == d(2, {{1, -2}, {2, -1}}));
    CHECK(SetPartitionDiagram::e_even(1, 2) == d(2, {{1, 2, -1, -2}}));
}

TEST_CASE("flip basics") {
    CHECK(SetPartitionDiagram::s(1, 2).flipped() == SetPartitionDiagram::s(1, 2));
    CHECK(d(2, {{1}, {-1, 2, -2}}).flipped() == d(2, {{-1}, {1, 2, -2}}));
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_diagram(4, rng);
        CHECK(a.flipped().flipped() == a);
    }
}

TEST_CASE("flip is an anti-homomorphism with matching middle counts") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = random_diagram(3, rng);
        auto b = random_diagram(3, rng);
        auto ab = compose(a, b);
        auto fba = compose(b.flipped(), a.flipped());
        CHECK(ab.diagram.flipped() == fba.diagram);
        CHECK(ab.middle_components == fba.middle_components);
    }
}

TEST_CASE("associativity with summed middle counts") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_diagram(4, rng);
        auto b = random_diagram(4, rng);
        auto c = random_diagram(4, rng);
        auto ab = compose(a, b);
        auto ab_c = compose(ab.diagram, c);
        auto bc = compose(b, c);
        auto a_bc = compose(a, bc.diagram);
        CHECK(ab_c.diagram == a_bc.diagram);
        CHECK(ab.middle_components + ab_c.middle_components ==
              bc.middle_components + a_bc.middle_components);
    }
}

TEST_CASE("enumerate counts are Bell numbers") {
    CHECK(enumerate_diagrams(2).size() == 2);
    CHECK(enumerate_diagrams(3).size() == 5);
    CHECK(enumerate_diagrams(4).size() == 15);
    CHECK(enumerate_diagrams(5).size() == 52);
    CHECK(enumerate_diagrams(6).size() == 203);
}

TEST_CASE("odd enumerate keeps last column joined") {
    for (const auto& a : enumerate_diagrams(3)) CHECK(a.in_odd_submonoid());
}

TEST_CASE("generators generate the monoid") {
    for (int k = 1; k <= 3; ++k) {
        std::vector<SetPartitionDiagram> gens;
        gens.push_back(SetPartitionDiagram::identity(k));
        for (int i = 1; i <= k - 1; ++i) gens.push_back(SetPartitionDiagram::s(i, k));
        for (int m = 1; m <= 2 * k - 1; ++m) gens.push_back(SetPartitionDiagram::e(m, k));
        std::set<SetPartitionDiagram> closure(gens.begin(), gens.end());
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<SetPartitionDiagram> cur(closure.begin(), closure.end());
            for (const auto& a : cur)
                for (const auto& g : gens)
                    if (closure.insert(compose(a, g).diagram).second) grew = true;
        }
        auto all = enumerate_diagrams(2 * k);
        CHECK(closure.size() == all.size());
    }
}

TEST_CASE("embedding") {
    auto e1k1 = SetPartitionDiagram::e_odd(1, 1);
    CHECK(e1k1.embedded(3) == d(3, {{1}, {-1}, {2, -2}, {3, -3}}));
    std::mt19937_64 rng(23);
    auto a = random_diagram(2, rng);
    CHECK(a.embedded(2) == a);
    CHECK(a.embedded(3).embedded(5) == a.embedded(5));
}

TEST_CASE("compose rejects size mismatch") {
    CHECK_THROWS(compose(SetPartitionDiagram::identity(2), SetPartitionDiagram::identity(3)));
}
