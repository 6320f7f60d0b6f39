#include "apa/pa_suites.hpp"

#include <functional>
#include <stdexcept>

namespace apa {

namespace {

std::string idx(const std::string& base, int i) { return base + " i=" + std::to_string(i); }
std::string idx2(const std::string& base, int i, int j) {
    return base + " i=" + std::to_string(i) + " j=" + std::to_string(j);
}

void hr_suite(int k, std::vector<PARelation>& out) {
    PAElement one = pa_one(k), z = pa_z(k);
    auto s = [k](int i) { return pa_s(i, k); };
    auto e = [k](int m) { return pa_e(m, k); };
    for (int i = 1; i <= k - 1; ++i) out.push_back({idx("(HR1)(i)", i), s(i) * s(i), one});
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 1; j <= k - 1; ++j)
            if (std::abs(i - j) >= 2)
                out.push_back({idx2("(HR1)(ii)", i, j), s(i) * s(j), s(j) * s(i)});
    for (int i = 1; i <= k - 2; ++i)
        out.push_back({idx("(HR1)(iii)", i), s(i) * s(i + 1) * s(i), s(i + 1) * s(i) * s(i + 1)});
    for (int i = 1; i <= k; ++i)
        out.push_back({idx("(HR2)(i)", i), e(2 * i - 1) * e(2 * i - 1), z * e(2 * i - 1)});
    for (int i = 1; i <= k - 1; ++i)
        out.push_back({idx("(HR2)(ii)", i), e(2 * i) * e(2 * i), e(2 * i)});
    for (int i = 1; i <= k - 1; ++i) {
        out.push_back({idx("(HR2)(iii)a", i), s(i) * e(2 * i), e(2 * i)});
        out.push_back({idx("(HR2)(iii)b", i), e(2 * i) * s(i), e(2 * i)});
    }
    for (int i = 1; i <= k - 1; ++i) {
        PAElement ee = e(2 * i - 1) * e(2 * i + 1);
        out.push_back({idx("(HR2)(iv)a", i), s(i) * ee, ee});
        out.push_back({idx("(HR2)(iv)b", i), ee * s(i), ee});
    }
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            out.push_back({idx2("(HR3)(i)", i, j), e(2 * i - 1) * e(2 * j - 1),
                           e(2 * j - 1) * e(2 * i - 1)});
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 1; j <= k - 1; ++j)
            out.push_back({idx2("(HR3)(ii)", i, j), e(2 * i) * e(2 * j), e(2 * j) * e(2 * i)});
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k - 1; ++j)
            if (j != i - 1 && j != i)
                out.push_back(
                    {idx2("(HR3)(iii)", i, j), e(2 * i - 1) * e(2 * j), e(2 * j) * e(2 * i - 1)});
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 1; j <= k; ++j)
            if (j != i && j != i + 1)
                out.push_back(
                    {idx2("(HR3)(iv)", i, j), s(i) * e(2 * j - 1), e(2 * j - 1) * s(i)});
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 1; j <= k - 1; ++j)
            if (j != i - 1 && j != i + 1)
                out.push_back({idx2("(HR3)(v)", i, j), s(i) * e(2 * j), e(2 * j) * s(i)});
    for (int i = 1; i <= k - 1; ++i)
        out.push_back({idx("(HR3)(vi)", i), s(i) * e(2 * i - 1) * s(i), e(2 * i + 1)});
    for (int i = 2; i <= k - 1; ++i)
        out.push_back({idx("(HR3)(vii)", i), s(i) * e(2 * i - 2) * s(i),
                       s(i - 1) * e(2 * i) * s(i - 1)});
    for (int i = 1; i <= 2 * k - 2; ++i) {
        out.push_back({idx("(HR4)(i)", i), e(i) * e(i + 1) * e(i), e(i)});
        out.push_back({idx("(HR4)(ii)", i), e(i + 1) * e(i) * e(i + 1), e(i + 1)});
    }
}

void enyang_suite(int k, std::vector<PARelation>& out) {
    PAElement one = pa_one(k), z = pa_z(k);
    auto sg = [k](int i) { return enyang_sigma(i, k); };
    auto e = [k](int m) { return pa_e(m, k); };
    auto cox = [&](int j) {  // Coxeter generator expressed in the sigma alphabet
        return j == 1 ? sg(3) : sg(2 * j) * sg(2 * j + 1);
    };
    for (int i = 1; i <= k - 2; ++i)
        out.push_back({idx("(E1)(i)", i), sg(2 * i + 2) * sg(2 * i + 2), one});
    for (int i = 1; i <= k - 1; ++i)
        out.push_back({idx("(E1)(ii)", i), sg(2 * i + 1) * sg(2 * i + 1), one});
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 2; j <= k - 1; ++j)
            if (j != i + 1)
                out.push_back(
                    {idx2("(E2)(i)", i, j), sg(2 * i + 1) * sg(2 * j), sg(2 * j) * sg(2 * i + 1)});
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 1; j <= k - 1; ++j)
            if (j != i - 1 && j != i + 1)
                out.push_back({idx2("(E2)(ii)", i, j), sg(2 * i + 1) * sg(2 * j + 1),
                               sg(2 * j + 1) * sg(2 * i + 1)});
    for (int i = 2; i <= k - 1; ++i)
        for (int j = 2; j <= k - 1; ++j)
            if (j != i - 1 && j != i + 1)
                out.push_back(
                    {idx2("(E2)(iii)", i, j), sg(2 * i) * sg(2 * j), sg(2 * j) * sg(2 * i)});
    for (int i = 1; i <= k - 2; ++i)
        out.push_back({idx("(E2)(iv)", i), cox(i) * cox(i + 1) * cox(i),
                       cox(i + 1) * cox(i) * cox(i + 1)});
    for (int i = 1; i <= k; ++i)
        out.push_back({idx("(E3)(i)", i), e(2 * i - 1) * e(2 * i - 1), z * e(2 * i - 1)});
    for (int i = 1; i <= k - 1; ++i)
        out.push_back({idx("(E3)(ii)", i), e(2 * i) * e(2 * i), e(2 * i)});
    for (int i = 1; i <= k - 1; ++i) {
        out.push_back({idx("(E3)(iii)a", i), sg(2 * i + 1) * e(2 * i), e(2 * i)});
        out.push_back({idx("(E3)(iii)b", i), e(2 * i) * sg(2 * i + 1), e(2 * i)});
    }
    for (int i = 2; i <= k - 1; ++i) {
        out.push_back({idx("(E3)(iv)a", i), sg(2 * i) * e(2 * i), e(2 * i)});
        out.push_back({idx("(E3)(iv)b", i), e(2 * i) * sg(2 * i), e(2 * i)});
    }
    for (int i = 2; i <= k - 1; ++i)
        out.push_back({idx("(E3)(v)", i), sg(2 * i) * e(2 * i - 1) * e(2 * i + 1),
                       sg(2 * i + 1) * e(2 * i - 1) * e(2 * i + 1)});
    for (int i = 2; i <= k - 1; ++i)
        out.push_back({idx("(E3)(vi)", i), e(2 * i + 1) * e(2 * i - 1) * sg(2 * i),
                       e(2 * i + 1) * e(2 * i - 1) * sg(2 * i + 1)});
    for (int i = 1; i <= 2 * k - 1; ++i)
        for (int j = 1; j <= 2 * k - 1; ++j)
            if (std::abs(i - j) >= 2)
                out.push_back({idx2("(E4)(i)", i, j), e(i) * e(j), e(j) * e(i)});
    for (int i = 2; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            if (j != i - 1 && j != i)
                out.push_back({idx2("(E4)(ii)", i, j), sg(2 * i - 1) * e(2 * j - 1),
                               e(2 * j - 1) * sg(2 * i - 1)});
    for (int i = 2; i <= k; ++i)
        for (int j = 1; j <= k - 1; ++j)
            if (j != i)
                out.push_back(
                    {idx2("(E4)(iii)", i, j), sg(2 * i - 1) * e(2 * j), e(2 * j) * sg(2 * i - 1)});
    for (int i = 2; i <= k - 1; ++i)
        for (int j = 1; j <= k; ++j)
            if (j != i && j != i + 1)
                out.push_back(
                    {idx2("(E4)(iv)", i, j), sg(2 * i) * e(2 * j - 1), e(2 * j - 1) * sg(2 * i)});
    for (int i = 2; i <= k - 1; ++i)
        for (int j = 1; j <= k - 1; ++j)
            if (j != i - 1)
                out.push_back(
                    {idx2("(E4)(v)", i, j), sg(2 * i) * e(2 * j), e(2 * j) * sg(2 * i)});
    for (int i = 1; i <= 2 * k - 2; ++i) {
        out.push_back({idx("(E5)(i)a", i), e(i) * e(i + 1) * e(i), e(i)});
        out.push_back({idx("(E5)(i)b", i), e(i + 1) * e(i) * e(i + 1), e(i + 1)});
    }
    for (int i = 2; i <= k - 1; ++i)
        out.push_back({idx("(E5)(ii)", i), sg(2 * i) * e(2 * i - 1) * sg(2 * i),
                       sg(2 * i + 1) * e(2 * i + 1) * sg(2 * i + 1)});
    for (int i = 2; i <= k - 1; ++i)
        out.push_back({idx("(E5)(iii)", i), sg(2 * i) * e(2 * i - 2) * sg(2 * i),
                       sg(2 * i - 1) * e(2 * i) * sg(2 * i - 1)});
}

void affprep_suite(int k, std::vector<PARelation>& out) {
    PAElement one = pa_one(k), z = pa_z(k);
    auto t = [k](int i) { return norm_t(i, k); };
    auto X = [k](int i) { return norm_X(i, k); };
    auto e = [k](int m) { return pa_e(m, k); };
    auto cox = [&](int j) { return j == 1 ? t(3) + e(2) : t(2 * j) * t(2 * j + 1) + e(2 * j); };
    // t_{2i+2}^2 = 1 - e_{2i+2}; the subscript follows the tau-square relation
    // of the affine presentation, which direct diagram computation confirms.
    for (int i = 1; i <= k - 2; ++i)
        out.push_back({idx("(1)(i)", i), t(2 * i + 2) * t(2 * i + 2), one - e(2 * i + 2)});
    for (int i = 1; i <= k - 1; ++i)
        out.push_back({idx("(1)(ii)", i), t(2 * i + 1) * t(2 * i + 1), one - e(2 * i)});
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 1; j <= k - 1; ++j)
            if (j != i + 1)
                out.push_back(
                    {idx2("(2)(i)", i, j), t(2 * i + 1) * t(2 * j), t(2 * j) * t(2 * i + 1)});
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 1; j <= k - 1; ++j)
            if (j != i - 1 && j != i + 1)
                out.push_back({idx2("(2)(ii)", i, j), t(2 * i + 1) * t(2 * j + 1),
                               t(2 * j + 1) * t(2 * i + 1)});
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 1; j <= k - 1; ++j)
            if (j != i - 1 && j != i + 1)
                out.push_back({idx2("(2)(iii)", i, j), t(2 * i) * t(2 * j), t(2 * j) * t(2 * i)});
    for (int i = 1; i <= k - 2; ++i)
        out.push_back({idx("(2)(iv)", i), cox(i) * cox(i + 1) * cox(i),
                       cox(i + 1) * cox(i) * cox(i + 1)});
    for (int i = 1; i <= k; ++i)
        out.push_back({idx("(3)(i)", i), e(2 * i - 1) * e(2 * i - 1), z * e(2 * i - 1)});
    for (int i = 1; i <= k - 1; ++i)
        out.push_back({idx("(3)(ii)", i), e(2 * i) * e(2 * i), e(2 * i)});
    for (int i = 1; i <= k - 1; ++i) {
        out.push_back({idx("(3)(iii)a", i), t(2 * i + 1) * e(2 * i), PAElement::zero(k)});
        out.push_back({idx("(3)(iii)b", i), e(2 * i) * t(2 * i + 1), PAElement::zero(k)});
    }
    for (int i = 2; i <= k - 1; ++i) {
        out.push_back({idx("(3)(iv)a", i), t(2 * i) * e(2 * i), PAElement::zero(k)});
        out.push_back({idx("(3)(iv)b", i), e(2 * i) * t(2 * i), PAElement::zero(k)});
    }
    for (int i = 2; i <= k - 1; ++i)
        out.push_back({idx("(3)(v)", i), t(2 * i) * e(2 * i - 1) * e(2 * i + 1),
                       t(2 * i + 1) * e(2 * i - 1) * e(2 * i + 1)});
    for (int i = 2; i <= k - 1; ++i)
        out.push_back({idx("(3)(vi)", i), e(2 * i + 1) * e(2 * i - 1) * t(2 * i),
                       e(2 * i + 1) * e(2 * i - 1) * t(2 * i + 1)});
    for (int i = 1; i <= 2 * k - 1; ++i)
        for (int j = 1; j <= 2 * k - 1; ++j)
            if (std::abs(i - j) >= 2)
                out.push_back({idx2("(4)(i)", i, j), e(i) * e(j), e(j) * e(i)});
    for (int i = 2; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            if (j != i - 1 && j != i)
                out.push_back({idx2("(4)(ii)", i, j), t(2 * i - 1) * e(2 * j - 1),
                               e(2 * j - 1) * t(2 * i - 1)});
    for (int i = 2; i <= k; ++i)
        for (int j = 1; j <= k - 1; ++j)
            if (j != i)
                out.push_back(
                    {idx2("(4)(iii)", i, j), t(2 * i - 1) * e(2 * j), e(2 * j) * t(2 * i - 1)});
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 1; j <= k; ++j)
            if (j != i && j != i + 1)
                out.push_back(
                    {idx2("(4)(iv)", i, j), t(2 * i) * e(2 * j - 1), e(2 * j - 1) * t(2 * i)});
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 1; j <= k - 1; ++j)
            if (j != i - 1)
                out.push_back({idx2("(4)(v)", i, j), t(2 * i) * e(2 * j), e(2 * j) * t(2 * i)});
    for (int i = 1; i <= 2 * k - 2; ++i) {
        out.push_back({idx("(5)(i)a", i), e(i) * e(i + 1) * e(i), e(i)});
        out.push_back({idx("(5)(i)b", i), e(i + 1) * e(i) * e(i + 1), e(i + 1)});
    }
    for (int i = 1; i <= k - 1; ++i)
        out.push_back({idx("(5)(ii)", i), t(2 * i) * e(2 * i - 1) * t(2 * i),
                       t(2 * i + 1) * e(2 * i + 1) * t(2 * i + 1)});
    for (int i = 2; i <= k - 1; ++i)
        out.push_back({idx("(5)(iii)", i), t(2 * i) * e(2 * i - 2) * t(2 * i),
                       t(2 * i - 1) * e(2 * i) * t(2 * i - 1)});
    for (int i = 1; i <= 2 * k; ++i)
        for (int j = 1; j <= 2 * k; ++j)
            out.push_back({idx2("(6)(i)", i, j), X(i) * X(j), X(j) * X(i)});
    for (int i = 2; i <= 2 * k - 1; ++i)
        for (int j = 1; j <= 2 * k; ++j)
            if (j < i - 1 || j > i + 1)
                out.push_back({idx2("(6)(ii)", i, j), t(i) * X(j), X(j) * t(i)});
    for (int i = 1; i <= 2 * k - 1; ++i)
        for (int j = 1; j <= 2 * k; ++j)
            if (j != i && j != i + 1)
                out.push_back({idx2("(6)(iii)", i, j), e(i) * X(j), X(j) * e(i)});
    for (int i = 2; i <= k - 1; ++i)
        out.push_back({idx("(7)(i)", i), t(2 * i - 2) * t(2 * i) * t(2 * i - 2),
                       t(2 * i) * t(2 * i - 2) * t(2 * i) * (one - e(2 * i - 2))});
    for (int i = 2; i <= k - 1; ++i)
        out.push_back({idx("(7)(ii)", i), t(2 * i + 1) * t(2 * i - 1) * t(2 * i + 1),
                       t(2 * i - 1) * t(2 * i + 1) * t(2 * i - 1) * (one - e(2 * i))});
    for (int i = 2; i <= k - 1; ++i)
        out.push_back({idx("(7)(iii)", i), t(2 * i - 1) * t(2 * i) * t(2 * i - 1),
                       t(2 * i) - e(2 * i - 2) * t(2 * i) - t(2 * i) * e(2 * i - 2)});
    for (int i = 2; i <= k - 1; ++i)
        out.push_back({idx("(7)(iv)", i), t(2 * i) * t(2 * i - 1) * t(2 * i),
                       t(2 * i - 1) - e(2 * i) * t(2 * i - 1) - t(2 * i - 1) * e(2 * i)});
    for (int i = 1; i <= k - 1; ++i)
        out.push_back({idx("(8)(i)", i), X(2 * i + 1),
                       t(2 * i) * X(2 * i - 1) * t(2 * i) + e(2 * i) * e(2 * i - 1) * t(2 * i) +
                           t(2 * i) * e(2 * i - 1) * e(2 * i) - t(2 * i)});
    for (int i = 1; i <= k - 1; ++i)
        out.push_back({idx("(8)(ii)", i), X(2 * i + 2),
                       t(2 * i + 1) * X(2 * i) * t(2 * i + 1) +
                           e(2 * i) * e(2 * i + 1) * t(2 * i + 1) * e(2 * i + 1) * e(2 * i) +
                           t(2 * i + 1)});
    for (int i = 1; i <= k - 1; ++i)
        out.push_back({idx("(8)(iii)", i), X(2 * i),
                       t(2 * i) * X(2 * i) * t(2 * i) + e(2 * i) * e(2 * i - 1) * t(2 * i) +
                           t(2 * i) * e(2 * i - 1) * e(2 * i)});
    for (int i = 1; i <= k - 1; ++i)
        out.push_back({idx("(8)(iv)", i), X(2 * i + 1),
                       t(2 * i + 1) * X(2 * i + 1) * t(2 * i + 1) +
                           e(2 * i) * e(2 * i + 1) * t(2 * i + 1) +
                           t(2 * i + 1) * e(2 * i + 1) * e(2 * i)});
    for (int i = 1; i <= 2 * k - 1; ++i) {
        out.push_back({idx("(9)(i)", i), e(i) * (X(i) - X(i + 1)), PAElement::zero(k)});
        out.push_back({idx("(9)(ii)", i), (X(i) - X(i + 1)) * e(i), PAElement::zero(k)});
    }
    for (int l = 0; l <= 3; ++l) {
        PAElement lhs = e(1);
        for (int j = 0; j < l; ++j) lhs = lhs * X(1);
        lhs = lhs * e(1);
        PolyZ zz = PolyZ::z();
        PolyZ coeff = zz * (zz - PolyZ(1)).pow(static_cast<unsigned>(l));
        out.push_back({"(10)(i) l=" + std::to_string(l), lhs, coeff * e(1)});
    }
}

void skein_suite(int k, std::vector<PARelation>& out) {
    auto sg = [k](int i) { return enyang_sigma(i, k); };
    auto L = [k](int i) { return jm_L(i, k); };
    auto e = [k](int m) { return pa_e(m, k); };
    for (int i = 1; i <= k - 1; ++i) {
        out.push_back({idx("(i)", i), L(2 * i + 1),
                       sg(2 * i) * L(2 * i - 1) * sg(2 * i) - e(2 * i) * e(2 * i - 1) * sg(2 * i) -
                           sg(2 * i) * e(2 * i - 1) * e(2 * i) +
                           e(2 * i) * e(2 * i + 1) * sg(2 * i) * e(2 * i + 1) * e(2 * i) +
                           sg(2 * i)});
        out.push_back({idx("(ii)", i), L(2 * i + 2),
                       sg(2 * i + 1) * L(2 * i) * sg(2 * i + 1) - e(2 * i) * e(2 * i + 1) -
                           e(2 * i + 1) * e(2 * i) +
                           e(2 * i) * e(2 * i + 1) * sg(2 * i + 1) * e(2 * i + 1) * e(2 * i) +
                           sg(2 * i + 1)});
        // correction terms of (iii) use e_{2i-1}, matching the derivation
        out.push_back({idx("(iii)", i), L(2 * i),
                       sg(2 * i) * L(2 * i) * sg(2 * i) + e(2 * i) * e(2 * i - 1) * sg(2 * i) +
                           sg(2 * i) * e(2 * i - 1) * e(2 * i) - e(2 * i) * e(2 * i - 1) -
                           e(2 * i - 1) * e(2 * i)});
        out.push_back({idx("(iv)", i), L(2 * i + 1),
                       sg(2 * i + 1) * L(2 * i + 1) * sg(2 * i + 1) -
                           e(2 * i) * e(2 * i + 1) * sg(2 * i + 1) -
                           sg(2 * i + 1) * e(2 * i + 1) * e(2 * i) + e(2 * i) * e(2 * i + 1) +
                           e(2 * i + 1) * e(2 * i)});
    }
}

void newenymix_suite(int k, std::vector<PARelation>& out) {
    auto t = [k](int i) { return norm_t(i, k); };
    auto X = [k](int i) { return norm_X(i, k); };
    auto e = [k](int m) { return pa_e(m, k); };
    for (int i = 1; i <= k - 1; ++i) {
        out.push_back({idx("(i)", i), e(2 * i + 1) * t(2 * i) * e(2 * i + 1),
                       X(2 * i - 1) * e(2 * i + 1)});
        out.push_back(
            {idx("(ii)a", i), t(2 * i) * e(2 * i - 1) * e(2 * i), X(2 * i) * e(2 * i)});
        out.push_back(
            {idx("(ii)b", i), e(2 * i) * e(2 * i - 1) * t(2 * i), e(2 * i) * X(2 * i)});
        out.push_back(
            {idx("(iii)a", i), t(2 * i + 1) * e(2 * i + 1) * e(2 * i), X(2 * i) * e(2 * i)});
        out.push_back(
            {idx("(iii)b", i), e(2 * i) * e(2 * i + 1) * t(2 * i + 1), e(2 * i) * X(2 * i)});
    }
}

void affcostcom_suite(int k, std::vector<PARelation>& out) {
    PAElement one = pa_one(k);
    auto t = [k](int i) { return norm_t(i, k); };
    auto X = [k](int i) { return norm_X(i, k); };
    auto e = [k](int m) { return pa_e(m, k); };
    for (int i = 1; i <= k - 1; ++i) {
        out.push_back({idx("(i)", i), t(2 * i) * X(2 * i + 1),
                       X(2 * i - 1) * t(2 * i) + e(2 * i - 1) * e(2 * i) - one});
        out.push_back({idx("(ii)", i), t(2 * i + 1) * X(2 * i + 2),
                       X(2 * i) * t(2 * i + 1) - e(2 * i) * e(2 * i + 1) + one});
        out.push_back({idx("(iii)", i), t(2 * i) * X(2 * i),
                       X(2 * i) * t(2 * i) + e(2 * i - 1) * e(2 * i) - e(2 * i) * e(2 * i - 1)});
        out.push_back({idx("(iv)", i), t(2 * i + 1) * X(2 * i + 1),
                       X(2 * i + 1) * t(2 * i + 1) - e(2 * i) * e(2 * i + 1) +
                           e(2 * i + 1) * e(2 * i)});
    }
}

}  // namespace

std::vector<PARelation> pa_suite(const std::string& name, int k) {
    if (k < 2) throw std::invalid_argument("pa_suite requires k >= 2");
    std::vector<PARelation> out;
    if (name == "HR")
        hr_suite(k, out);
    else if (name == "Enyang")
        enyang_suite(k, out);
    else if (name == "AffPrep")
        affprep_suite(k, out);
    else if (name == "SkeinRels")
        skein_suite(k, out);
    else if (name == "NewEnyMix")
        newenymix_suite(k, out);
    else if (name == "AffCostCom")
        affcostcom_suite(k, out);
    else
        throw std::invalid_argument("unknown suite: " + name);
    for (auto& r : out) r.label = name + " " + r.label;
    return out;
}

std::vector<std::string> pa_suite_names() {
    return {"HR", "Enyang", "AffPrep", "SkeinRels", "NewEnyMix", "AffCostCom"};
}

}  // namespace apa
