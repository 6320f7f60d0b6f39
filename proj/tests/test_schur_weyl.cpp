#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "apa/pa_suites.hpp"
#include "apa/schur_weyl.hpp"

using namespace apa;

namespace {

std::shared_ptr<SnModule> triv(int n) { return std::make_shared<SnModule>(SnModule::trivial(n)); }

TensorVec unit(TensorIndex idx) { return TensorVec{{idx, Rat(1)}}; }

}  // namespace

TEST_CASE("generator action formulas") {
    const int n = 2, k = 2;
    auto m = triv(n);
    auto e2 = psi_generator("e2", n, k, m);
    CHECK(e2(TensorIndex{1, {1, 1}}) == unit({1, {1, 1}}));
    CHECK(e2(TensorIndex{1, {1, 2}}).empty());
    auto s1 = psi_generator("s1", n, k, m);
    CHECK(s1(TensorIndex{1, {1, 2}}) == unit({1, {2, 1}}));
    auto e1 = psi_generator("e1", n, k, m);
    TensorVec expect{{{1, {1, 2}}, Rat(1)}, {{1, {2, 2}}, Rat(1)}};
    CHECK(e1(TensorIndex{1, {1, 2}}) == expect);
}

TEST_CASE("X_1 acts by n-1") {
    const int n = 3, k = 2;
    auto m = triv(n);
    auto x1 = psi_generator("x1", n, k, m);
    auto expected = Rat(n - 1) * TensorOperator::identity(n, k, m);
    CHECK(x1 == expected);
    CHECK(psi_element(norm_X(1, k), n, k, m) == expected);
}

TEST_CASE("matrix rule is a homomorphism and matches the generator route") {
    const int k = 2;
    for (int n = 2; n <= 3; ++n) {
        auto m = triv(n);
        CHECK(psi_element(pa_e(1, k) * pa_e(1, k), n, k, m) ==
              Rat(n) * psi_element(pa_e(1, k), n, k, m));
        CHECK(psi_element(pa_one(k), n, k, m) == TensorOperator::identity(n, k, m));
        std::mt19937_64 rng(47);
        auto all = enumerate_diagrams(2 * k);
        for (const auto& d : all) {
            PAElement a(d);
            CHECK(psi_element(a, n, k, m) == psi_element_by_factorization(a, n, k, m));
        }
    }
}

TEST_CASE("factorization rebuilds diagrams at k=3") {
    for (const auto& d : enumerate_diagrams(6)) CHECK_NOTHROW(factor_diagram(d));
}

TEST_CASE("closed forms of Props match the recursive elements") {
    const int k = 2;
    for (int n = 2; n <= 4; ++n) {
        auto m = triv(n);
        for (int i = 2; i <= 2 * k - 1; ++i) {
            CHECK(psi_generator("t" + std::to_string(i), n, k, m) ==
                  psi_element(norm_t(i, k), n, k, m));
        }
        for (int i = 1; i <= 2 * k; ++i) {
            CHECK(psi_generator("x" + std::to_string(i), n, k, m) ==
                  psi_element(norm_X(i, k), n, k, m));
        }
    }
    // L_3 against the closed form for X_3 at n=3, k=2
    const int n = 3;
    auto m = triv(n);
    auto viaL = psi_element(pa_z(2) - pa_one(2) - jm_L(3, 2), n, 2, m);
    CHECK(viaL == psi_generator("x3", n, 2, m));
}

TEST_CASE("homomorphism respects HR relations for n <= 4, k <= 2") {
    for (int k = 2; k <= 2; ++k)
        for (int n = 1; n <= 4; ++n) {
            auto m = triv(n);
            for (const auto& r : pa_suite("HR", k)) {
                INFO("n=", n, " ", r.label);
                CHECK(psi_element(r.lhs, n, k, m) == psi_element(r.rhs, n, k, m));
            }
        }
}

TEST_CASE("equivariance under the diagonal action") {
    const int k = 2;
    std::vector<std::shared_ptr<SnModule>> modules;
    for (int n = 2; n <= 4; ++n) {
        modules = {triv(n), std::make_shared<SnModule>(SnModule::permutation(n))};
        if (n <= 3) modules.push_back(std::make_shared<SnModule>(SnModule::regular(n)));
        for (const auto& m : modules) {
            std::vector<std::string> gens = {"e1", "e2", "e3", "x1", "x2", "x3", "x4",
                                             "t2", "t3", "z0", "z1", "s1"};
            for (const auto& g : gens) {
                auto op = psi_generator(g, n, k, m);
                for (int i = 1; i < n; ++i) {
                    // diagonal action of s_i on module and all tensor slots
                    auto diag = TensorOperator(n, k, m, [m, i, n](const TensorIndex& idx) {
                        TensorIndex o = idx;
                        for (auto& v : o.a) v = (v == i) ? i + 1 : (v == i + 1 ? i : v);
                        TensorVec out;
                        const auto& mat = m->adjacent(i);
                        for (int r = 0; r < m->dim(); ++r)
                            if (mat[r][idx.a0 - 1] != 0) {
                                TensorIndex oo = o;
                                oo.a0 = r + 1;
                                out.emplace(oo, mat[r][idx.a0 - 1]);
                            }
                        return out;
                    });
                    INFO("n=", n, " module=", m->name(), " gen=", g, " i=", i);
                    CHECK(diag * op == op * diag);
                }
            }
        }
    }
}

TEST_CASE("certify_identity") {
    CHECK(certify_identity(pa_e(1, 1) * pa_e(1, 1), PolyZ::z() * pa_e(1, 1)));
    CHECK_FALSE(certify_identity(pa_s(1, 2), pa_e(1, 2)));
    for (const auto& r : pa_suite("AffPrep", 3)) {
        if (r.label.find("(7)") == std::string::npos) continue;
        INFO(r.label);
        CHECK(certify_identity(r.lhs, r.rhs));
    }
    // at a single n below 2k the check would confuse distinct elements:
    // psi_{1,1} cannot tell e_1 from the identity
    auto m = triv(1);
    CHECK(psi_element(pa_e(1, 1), 1, 1, m) == psi_element(pa_one(1), 1, 1, m));
    CHECK_FALSE(certify_identity(pa_e(1, 1), pa_one(1)));
}

TEST_CASE("central group algebra elements") {
    CHECK(z_central(2, 1) == Rat(2) * GroupAlgebraElement::of(perm_transposition(1, 2, 2)));
    CHECK(z_central(3, 0) == Rat(3) * GroupAlgebraElement::one(3));
    for (int l = 0; l <= 3; ++l) CHECK(is_central(z_central(4, l)));
    // pi T_{n,b} pi^{-1} = T_{n,pi(b)}
    const int n = 4;
    for (const auto& p : symmetric_group(n)) {
        for (int b = 1; b <= n; ++b) {
            auto lhs = GroupAlgebraElement::of(p) * t_sum(n, b) *
                       GroupAlgebraElement::of(perm_inverse(p));
            CHECK(lhs == t_sum(n, p[b - 1]));
        }
    }
}

TEST_CASE("z_l acts by a scalar on the trivial module") {
    const int n = 4, k = 2;
    auto m = triv(n);
    for (int l = 0; l <= 2; ++l) {
        Rat scalar = Rat(n);
        for (int j = 0; j < l; ++j) scalar *= Rat(n - 1);
        CHECK(psi_generator("z" + std::to_string(l), n, k, m) ==
              scalar * TensorOperator::identity(n, k, m));
    }
}

TEST_CASE("independence witness") {
    CHECK(witness_independence(0, 3));
    CHECK(witness_rank(2, 4) == 3);
    CHECK(witness_independence(3, 5));
    CHECK(witness_rank(3, 5) == 4);
}
