#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "apa/affine.hpp"

using namespace apa;

namespace {

std::shared_ptr<SnModule> triv(int n) { return std::make_shared<SnModule>(SnModule::trivial(n)); }
std::shared_ptr<SnModule> permmod(int n) {
    return std::make_shared<SnModule>(SnModule::permutation(n));
}

}  // namespace

TEST_CASE("instance count at k=2 is stable") {
    CHECK(affine_relations(2, 3).size() == 88);
    CHECK(affine_lemma_relations(2, 3).size() == 25);
}

TEST_CASE("sample relations") {
    auto rels = affine_relations(2);
    bool found = false;
    for (const auto& r : rels) {
        if (r.label == "(3)(iii)a i=1") {
            found = true;
            CHECK(r.lhs == AffineElement::gen(2, 't', 3) * AffineElement::gen(2, 'e', 2));
            CHECK(r.rhs.is_zero());
        }
    }
    CHECK(found);
}

TEST_CASE("word reversal preserves the relation suite") {
    // Every starred relation instance is again an identity. All instances
    // except the two braid-like families are even literally symmetric.
    for (int k = 2; k <= 3; ++k) {
        auto rels = affine_relations(k, 2);
        std::set<std::pair<std::map<AffineWord, Rat>, std::map<AffineWord, Rat>>> set;
        for (const auto& r : rels) set.insert({r.lhs.terms(), r.rhs.terms()});
        int nonliteral = 0;
        for (const auto& r : rels) {
            auto ls = r.lhs.star(), rs = r.rhs.star();
            bool literal = set.count({ls.terms(), rs.terms()}) ||
                           set.count({rs.terms(), ls.terms()});
            if (!literal) {
                ++nonliteral;
                INFO("k=", k, " ", r.label);
                CHECK(eval_pr(ls) == eval_pr(rs));
                bool expected = r.label.find("(7)(i)") != std::string::npos ||
                                r.label.find("(7)(ii)") != std::string::npos ||
                                r.label.find("(10)(i)") != std::string::npos ||
                                r.label.find("(2)(iv)") != std::string::npos ||
                                r.label.find("(3)(i)") != std::string::npos;
                CHECK(expected);
            }
        }
        CHECK(nonliteral > 0);
    }
}

TEST_CASE("defining relations map to identities under pr") {
    for (int k = 2; k <= 3; ++k)
        for (const auto& r : affine_relations(k)) {
            INFO("k=", k, " ", r.label);
            CHECK(eval_pr(r.lhs) == eval_pr(r.rhs));
        }
}

TEST_CASE("lemma relations map to identities under pr") {
    for (int k = 2; k <= 3; ++k)
        for (const auto& r : affine_lemma_relations(k)) {
            INFO("k=", k, " ", r.label);
            CHECK(eval_pr(r.lhs) == eval_pr(r.rhs));
        }
}

TEST_CASE("defining relations hold in the Hecke tensor square") {
    for (int k = 2; k <= 3; ++k)
        for (const auto& r : affine_relations(k)) {
            INFO("k=", k, " ", r.label);
            CHECK(eval_f_lambda(r.lhs) == eval_f_lambda(r.rhs));
        }
    for (const auto& r : affine_lemma_relations(2)) {
        INFO(r.label);
        CHECK(eval_f_lambda(r.lhs) == eval_f_lambda(r.rhs));
    }
}

TEST_CASE("defining relations act identically on tensor space") {
    const int k = 2;
    for (int n = 2; n <= 4; ++n) {
        for (auto module : {triv(n), permmod(n)}) {
            for (const auto& r : affine_relations(k, 2)) {
                INFO("n=", n, " module=", module->name(), " ", r.label);
                CHECK(eval_psi_M(r.lhs, n, module) == eval_psi_M(r.rhs, n, module));
            }
        }
    }
    auto reg3 = std::make_shared<SnModule>(SnModule::regular(3));
    for (const auto& r : affine_relations(k, 1)) {
        INFO("regular n=3 ", r.label);
        CHECK(eval_psi_M(r.lhs, 3, reg3) == eval_psi_M(r.rhs, 3, reg3));
    }
}

TEST_CASE("lemma relations act identically on tensor space at k=2") {
    const int k = 2;
    for (int n = 2; n <= 4; ++n)
        for (const auto& r : affine_lemma_relations(k)) {
            INFO("n=", n, " ", r.label);
            CHECK(eval_psi_M(r.lhs, n, triv(n)) == eval_psi_M(r.rhs, n, triv(n)));
            CHECK(eval_psi_M(r.lhs, n, permmod(n)) == eval_psi_M(r.rhs, n, permmod(n)));
        }
}

TEST_CASE("pr images of the generators") {
    CHECK(eval_pr(AffineElement::gen(2, 'x', 1)) == pa_z(2) - pa_one(2));
    // tau_4 tau_5 + e_4 maps to s_2 at k=3
    AffineElement s2 = AffineElement::gen(3, 't', 4) * AffineElement::gen(3, 't', 5) +
                       AffineElement::gen(3, 'e', 4);
    CHECK(eval_pr(s2) == pa_s(2, 3));
}

TEST_CASE("iota embeds and pr retracts") {
    CHECK(iota_roundtrip_check(2, 100, 3));
    CHECK(iota_roundtrip_check(3, 100, 5));
    // pr(iota(s1 e2 s1)) equals the diagram product
    HRWord w{{'s', 1}, {'e', 2}, {'s', 1}};
    CHECK(eval_pr(eval_iota(w, 2)) == pa_s(1, 2) * pa_e(2, 2) * pa_s(1, 2));
}

TEST_CASE("f_lambda examples") {
    const int k = 2;
    CHECK(eval_f_lambda(AffineElement::gen(k, 'e', 3)).is_zero());
    // x-monomials of degree <= 2 in x_1..x_4 have independent images
    std::vector<HeckeTensorElement> images;
    for (int a1 = 0; a1 <= 2; ++a1)
        for (int a2 = 0; a2 <= 2; ++a2)
            for (int a3 = 0; a3 <= 2; ++a3)
                for (int a4 = 0; a4 <= 2; ++a4) {
                    AffineWord w;
                    for (int j = 0; j < a1; ++j) w.push_back({'x', 1});
                    for (int j = 0; j < a2; ++j) w.push_back({'x', 2});
                    for (int j = 0; j < a3; ++j) w.push_back({'x', 3});
                    for (int j = 0; j < a4; ++j) w.push_back({'x', 4});
                    images.push_back(eval_f_lambda(AffineElement::word(k, w)));
                }
    // distinct leading keys: each image is a single basis tensor monomial
    std::set<std::pair<HeckeKey, HeckeKey>> keys;
    for (const auto& img : images) {
        REQUIRE(img.terms().size() == 1);
        keys.insert(img.terms().begin()->first);
    }
    CHECK(keys.size() == images.size());
}

TEST_CASE("supersymmetric power sums are central under the evaluations") {
    const int k = 2;
    std::vector<AffineElement> ps;
    for (int deg = 1; deg <= 2; ++deg) {
        AffineElement p(k);
        for (int i = 1; i <= 2 * k; ++i) {
            AffineWord w(static_cast<std::size_t>(deg), AffineGen{'x', i});
            p += AffineElement::word(k, w, Rat(i % 2 == 1 ? 1 : -1));
        }
        ps.push_back(p);
    }
    std::vector<AffineElement> gens;
    for (int i = 2; i <= 2 * k - 1; ++i) gens.push_back(AffineElement::gen(k, 't', i));
    for (int m = 1; m <= 2 * k - 1; ++m) gens.push_back(AffineElement::gen(k, 'e', m));
    for (int r = 1; r <= 2 * k; ++r) gens.push_back(AffineElement::gen(k, 'x', r));
    for (const auto& p : ps)
        for (const auto& g : gens) {
            AffineElement lhs = p * g, rhs = g * p;
            CHECK(eval_pr(lhs) == eval_pr(rhs));
            CHECK(eval_f_lambda(lhs) == eval_f_lambda(rhs));
            for (int n = 1; n <= 2; ++n)
                CHECK(eval_psi_M(lhs, n, triv(n)) == eval_psi_M(rhs, n, triv(n)));
        }
}

TEST_CASE("express_tau under the evaluations") {
    for (int k = 2; k <= 3; ++k) {
        for (int i = 2; i <= 2 * k - 1; ++i) {
            for (const std::string route : {"direct", "recursive"}) {
                auto w = express_tau(i, k, route);
                // tau-free output
                for (const auto& [word, c] : w.terms())
                    for (const auto& g : word) CHECK(g.kind != 't');
                AffineElement diff = w - AffineElement::gen(k, 't', i);
                INFO("k=", k, " i=", i, " route=", route);
                CHECK(eval_pr(diff).is_zero());
                CHECK(eval_f_lambda(diff).is_zero());
                auto z = eval_psi_M(diff, 4, triv(4));
                CHECK(z == Rat(0) * TensorOperator::identity(4, k, triv(4)));
            }
        }
    }
}

TEST_CASE("d_m image on a free module") {
    const int k = 2, n = 4;
    auto reg = std::make_shared<SnModule>(SnModule::regular(n));
    AffineElement d1 =
        AffineElement::gen(k, 'x', 1) * AffineElement::gen(k, 'e', 2) * AffineElement::gen(k, 'e', 1);
    auto op = eval_psi_M(d1, n, reg);
    auto group = symmetric_group(n);
    std::map<Perm, int> index;
    for (std::size_t i = 0; i < group.size(); ++i) index[group[i]] = static_cast<int>(i);
    TensorIndex start{index[perm_identity(n)] + 1, {1, 2}};
    auto img = op(start);
    // (T_{n,a_2} f) (x) v_{a_2} (x) v_{a_2}
    TensorVec expect;
    auto tsum = t_sum(n, 2);
    for (const auto& [p, c] : tsum.terms()) expect[{index[p] + 1, {2, 2}}] = c;
    CHECK(img == expect);
}

TEST_CASE("eval_psi_M of z0 on the trivial module is n") {
    for (int n = 2; n <= 4; ++n) {
        auto z0 = AffineElement::gen(2, 'z', 0);
        CHECK(eval_psi_M(z0, n, triv(n)) == Rat(n) * TensorOperator::identity(n, 2, triv(n)));
    }
}

TEST_CASE("token round trip") {
    for (const std::string t : {"t4", "e3", "x2", "z1", "s2"}) {
        auto g = parse_gen_token(t);
        CHECK(gen_token(g) == t);
    }
}
