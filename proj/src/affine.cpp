#include "apa/affine.hpp"

#include <random>
#include <stdexcept>

namespace apa {

AffineElement AffineElement::word(int k, AffineWord w, Rat c) {
    AffineElement e(k);
    e.add_term(w, c);
    return e;
}

AffineElement AffineElement::gen(int k, char kind, int index) {
    AffineGen g{kind, index};
    if (!affine_gen_legal(g, k)) throw std::out_of_range("generator index for k");
    return word(k, {g});
}

void AffineElement::add_term(const AffineWord& w, const Rat& c) {
    if (c == 0) return;
    for (const auto& g : w)
        if (!affine_gen_legal(g, k_)) throw std::out_of_range("generator index for k");
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

AffineElement AffineElement::operator-() const {
    AffineElement r(k_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

AffineElement operator+(const AffineElement& a, const AffineElement& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("affine add: size mismatch");
    AffineElement r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
}

AffineElement operator-(const AffineElement& a, const AffineElement& b) { return a + (-b); }

AffineElement operator*(const AffineElement& a, const AffineElement& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("affine mul: size mismatch");
    AffineElement r(a.k_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            AffineWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

AffineElement operator*(const Rat& c, const AffineElement& a) {
    AffineElement r(a.k_);
    if (c == 0) return r;
    for (const auto& [w, v] : a.terms_) r.terms_.emplace(w, c * v);
    return r;
}

AffineElement AffineElement::star() const {
    AffineElement r(k_);
    for (const auto& [w, c] : terms_) {
        AffineWord rev(w.rbegin(), w.rend());
        r.add_term(rev, c);
    }
    return r;
}

std::string AffineElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += rat_to_string(c) + "*";
        if (w.empty()) s += "1";
        for (const auto& g : w) s += gen_token(g) + ".";
        if (!w.empty()) s.pop_back();
    }
    return s;
}

bool affine_gen_legal(const AffineGen& g, int k) {
    switch (g.kind) {
        case 't': return g.index >= 2 && g.index <= 2 * k - 1;
        case 'e': return g.index >= 1 && g.index <= 2 * k - 1;
        case 'x': return g.index >= 1 && g.index <= 2 * k;
        case 'z': return g.index >= 0;
        case 's': return g.index >= 1 && g.index <= k - 1;
        default: return false;
    }
}

std::string gen_token(const AffineGen& g) { return std::string(1, g.kind) + std::to_string(g.index); }

AffineGen parse_gen_token(const std::string& token) {
    if (token.size() < 2) throw std::invalid_argument("bad token: " + token);
    char kind = token[0];
    if (kind != 't' && kind != 'e' && kind != 'x' && kind != 'z' && kind != 's')
        throw std::invalid_argument("bad token: " + token);
    return {kind, std::stoi(token.substr(1))};
}

namespace {

struct Builder {
    int k;
    AffineElement one() const { return AffineElement::one(k); }
    AffineElement t(int i) const { return AffineElement::gen(k, 't', i); }
    AffineElement e(int m) const { return AffineElement::gen(k, 'e', m); }
    AffineElement x(int r) const { return AffineElement::gen(k, 'x', r); }
    AffineElement z(int l) const { return AffineElement::gen(k, 'z', l); }
    AffineElement s(int i) const { return t(2 * i) * t(2 * i + 1) + e(2 * i); }
};

std::string idx(const std::string& base, int i) { return base + " i=" + std::to_string(i); }
std::string idx2(const std::string& base, int i, int j) {
    return base + " i=" + std::to_string(i) + " j=" + std::to_string(j);
}

}  // namespace

std::vector<AffineRelation> affine_relations(int k, int max_l) {
    if (k < 2) throw std::invalid_argument("affine_relations requires k >= 2");
    Builder B{k};
    std::vector<AffineRelation> out;
    auto add = [&out](std::string label, AffineElement lhs, AffineElement rhs) {
        out.push_back({std::move(label), std::move(lhs), std::move(rhs)});
    };
    for (int i = 1; i <= k - 1; ++i) add(idx("(1)(i)", i), B.t(2 * i) * B.t(2 * i), B.one() - B.e(2 * i));
    for (int i = 1; i <= k - 1; ++i)
        add(idx("(1)(ii)", i), B.t(2 * i + 1) * B.t(2 * i + 1), B.one() - B.e(2 * i));
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 1; j <= k - 1; ++j)
            if (j != i + 1)
                add(idx2("(2)(i)", i, j), B.t(2 * i + 1) * B.t(2 * j), B.t(2 * j) * B.t(2 * i + 1));
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 1; j <= k - 1; ++j)
            if (j != i - 1 && j != i + 1)
                add(idx2("(2)(ii)", i, j), B.t(2 * i + 1) * B.t(2 * j + 1),
                    B.t(2 * j + 1) * B.t(2 * i + 1));
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 1; j <= k - 1; ++j)
            if (j != i - 1 && j != i + 1)
                add(idx2("(2)(iii)", i, j), B.t(2 * i) * B.t(2 * j), B.t(2 * j) * B.t(2 * i));
    for (int i = 1; i <= k - 2; ++i)
        add(idx("(2)(iv)", i), B.s(i) * B.s(i + 1) * B.s(i), B.s(i + 1) * B.s(i) * B.s(i + 1));
    for (int i = 1; i <= k; ++i)
        add(idx("(3)(i)", i), B.e(2 * i - 1) * B.e(2 * i - 1), B.z(0) * B.e(2 * i - 1));
    for (int i = 1; i <= k - 1; ++i)
        add(idx("(3)(ii)", i), B.e(2 * i) * B.e(2 * i), B.e(2 * i));
    for (int i = 1; i <= k - 1; ++i) {
        add(idx("(3)(iii)a", i), B.t(2 * i + 1) * B.e(2 * i), AffineElement(k));
        add(idx("(3)(iii)b", i), B.e(2 * i) * B.t(2 * i + 1), AffineElement(k));
        add(idx("(3)(iv)a", i), B.t(2 * i) * B.e(2 * i), AffineElement(k));
        add(idx("(3)(iv)b", i), B.e(2 * i) * B.t(2 * i), AffineElement(k));
        add(idx("(3)(v)", i), B.t(2 * i) * B.e(2 * i - 1) * B.e(2 * i + 1),
            B.t(2 * i + 1) * B.e(2 * i - 1) * B.e(2 * i + 1));
        add(idx("(3)(vi)", i), B.e(2 * i + 1) * B.e(2 * i - 1) * B.t(2 * i),
            B.e(2 * i + 1) * B.e(2 * i - 1) * B.t(2 * i + 1));
    }
    for (int i = 1; i <= 2 * k - 1; ++i)
        for (int j = 1; j <= 2 * k - 1; ++j)
            if (std::abs(i - j) >= 2) add(idx2("(4)(i)", i, j), B.e(i) * B.e(j), B.e(j) * B.e(i));
    for (int i = 2; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            if (j != i - 1 && j != i)
                add(idx2("(4)(ii)", i, j), B.t(2 * i - 1) * B.e(2 * j - 1),
                    B.e(2 * j - 1) * B.t(2 * i - 1));
    for (int i = 2; i <= k; ++i)
        for (int j = 1; j <= k - 1; ++j)
            if (j != i)
                add(idx2("(4)(iii)", i, j), B.t(2 * i - 1) * B.e(2 * j),
                    B.e(2 * j) * B.t(2 * i - 1));
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 1; j <= k; ++j)
            if (j != i && j != i + 1)
                add(idx2("(4)(iv)", i, j), B.t(2 * i) * B.e(2 * j - 1),
                    B.e(2 * j - 1) * B.t(2 * i));
    for (int i = 1; i <= k - 1; ++i)
        for (int j = 1; j <= k - 1; ++j)
            if (j != i - 1)
                add(idx2("(4)(v)", i, j), B.t(2 * i) * B.e(2 * j), B.e(2 * j) * B.t(2 * i));
    for (int i = 1; i <= 2 * k - 2; ++i) {
        add(idx("(5)(i)a", i), B.e(i) * B.e(i + 1) * B.e(i), B.e(i));
        add(idx("(5)(i)b", i), B.e(i + 1) * B.e(i) * B.e(i + 1), B.e(i + 1));
    }
    for (int i = 1; i <= k - 1; ++i)
        add(idx("(5)(ii)", i), B.t(2 * i) * B.e(2 * i - 1) * B.t(2 * i),
            B.t(2 * i + 1) * B.e(2 * i + 1) * B.t(2 * i + 1));
    for (int i = 2; i <= k - 1; ++i)
        add(idx("(5)(iii)", i), B.t(2 * i) * B.e(2 * i - 2) * B.t(2 * i),
            B.t(2 * i - 1) * B.e(2 * i) * B.t(2 * i - 1));
    for (int i = 1; i <= 2 * k; ++i)
        for (int j = 1; j <= 2 * k; ++j)
            add(idx2("(6)(i)", i, j), B.x(i) * B.x(j), B.x(j) * B.x(i));
    for (int i = 2; i <= 2 * k - 1; ++i)
        for (int j = 1; j <= 2 * k; ++j)
            if (j < i - 1 || j > i + 1)
                add(idx2("(6)(ii)", i, j), B.t(i) * B.x(j), B.x(j) * B.t(i));
    for (int i = 1; i <= 2 * k - 1; ++i)
        for (int j = 1; j <= 2 * k; ++j)
            if (j != i && j != i + 1)
                add(idx2("(6)(iii)", i, j), B.e(i) * B.x(j), B.x(j) * B.e(i));
    for (int i = 2; i <= k - 1; ++i) {
        add(idx("(7)(i)", i), B.t(2 * i - 2) * B.t(2 * i) * B.t(2 * i - 2),
            B.t(2 * i) * B.t(2 * i - 2) * B.t(2 * i) * (B.one() - B.e(2 * i - 2)));
        add(idx("(7)(ii)", i), B.t(2 * i + 1) * B.t(2 * i - 1) * B.t(2 * i + 1),
            B.t(2 * i - 1) * B.t(2 * i + 1) * B.t(2 * i - 1) * (B.one() - B.e(2 * i)));
        add(idx("(7)(iii)", i), B.t(2 * i - 1) * B.t(2 * i) * B.t(2 * i - 1),
            B.t(2 * i) - B.e(2 * i - 2) * B.t(2 * i) - B.t(2 * i) * B.e(2 * i - 2));
        add(idx("(7)(iv)", i), B.t(2 * i) * B.t(2 * i - 1) * B.t(2 * i),
            B.t(2 * i - 1) - B.e(2 * i) * B.t(2 * i - 1) - B.t(2 * i - 1) * B.e(2 * i));
    }
    for (int i = 1; i <= k - 1; ++i) {
        add(idx("(8)(i)", i), B.x(2 * i + 1),
            B.t(2 * i) * B.x(2 * i - 1) * B.t(2 * i) + B.e(2 * i) * B.e(2 * i - 1) * B.t(2 * i) +
                B.t(2 * i) * B.e(2 * i - 1) * B.e(2 * i) - B.t(2 * i));
        add(idx("(8)(ii)", i), B.x(2 * i + 2),
            B.t(2 * i + 1) * B.x(2 * i) * B.t(2 * i + 1) +
                B.e(2 * i) * B.e(2 * i + 1) * B.t(2 * i + 1) * B.e(2 * i + 1) * B.e(2 * i) +
                B.t(2 * i + 1));
        add(idx("(8)(iii)", i), B.x(2 * i),
            B.t(2 * i) * B.x(2 * i) * B.t(2 * i) + B.e(2 * i) * B.e(2 * i - 1) * B.t(2 * i) +
                B.t(2 * i) * B.e(2 * i - 1) * B.e(2 * i));
        add(idx("(8)(iv)", i), B.x(2 * i + 1),
            B.t(2 * i + 1) * B.x(2 * i + 1) * B.t(2 * i + 1) +
                B.e(2 * i) * B.e(2 * i + 1) * B.t(2 * i + 1) +
                B.t(2 * i + 1) * B.e(2 * i + 1) * B.e(2 * i));
    }
    for (int i = 1; i <= 2 * k - 1; ++i) {
        add(idx("(9)(i)", i), B.e(i) * (B.x(i) - B.x(i + 1)), AffineElement(k));
        add(idx("(9)(ii)", i), (B.x(i) - B.x(i + 1)) * B.e(i), AffineElement(k));
    }
    for (int l = 0; l <= max_l; ++l) {
        AffineElement lhs = B.e(1);
        for (int j = 0; j < l; ++j) lhs = lhs * B.x(1);
        lhs = lhs * B.e(1);
        add("(10)(i) l=" + std::to_string(l), lhs, B.z(l) * B.e(1));
    }
    for (int l = 0; l <= std::min(max_l, 2); ++l) {
        std::vector<AffineElement> gens;
        for (int i = 2; i <= 2 * k - 1; ++i) gens.push_back(B.t(i));
        for (int m = 1; m <= 2 * k - 1; ++m) gens.push_back(B.e(m));
        for (int r = 1; r <= 2 * k; ++r) gens.push_back(B.x(r));
        int gi = 0;
        for (const auto& g : gens)
            add("(10)(ii) l=" + std::to_string(l) + " g=" + std::to_string(gi++),
                B.z(l) * g, g * B.z(l));
    }
    return out;
}

std::vector<AffineRelation> affine_lemma_relations(int k, int max_n) {
    if (k < 2) throw std::invalid_argument("affine_lemma_relations requires k >= 2");
    Builder B{k};
    std::vector<AffineRelation> out;
    auto add = [&out](std::string label, AffineElement lhs, AffineElement rhs) {
        out.push_back({std::move(label), std::move(lhs), std::move(rhs)});
    };
    for (int i = 1; i <= k - 1; ++i) {
        add(idx("mix(i)a", i), B.e(2 * i) * B.x(2 * i), B.e(2 * i) * B.e(2 * i - 1) * B.t(2 * i));
        add(idx("mix(i)b", i), B.x(2 * i) * B.e(2 * i), B.t(2 * i) * B.e(2 * i - 1) * B.e(2 * i));
        add(idx("mix(ii)a", i), B.e(2 * i) * B.x(2 * i + 1),
            B.e(2 * i) * B.e(2 * i + 1) * B.t(2 * i + 1));
        add(idx("mix(ii)b", i), B.x(2 * i + 1) * B.e(2 * i),
            B.t(2 * i + 1) * B.e(2 * i + 1) * B.e(2 * i));
        add(idx("mix(iii)a", i), B.e(2 * i) * B.e(2 * i - 1) * B.t(2 * i),
            B.e(2 * i) * B.e(2 * i + 1) * B.t(2 * i + 1));
        add(idx("mix(iii)b", i), B.t(2 * i) * B.e(2 * i - 1) * B.e(2 * i),
            B.t(2 * i + 1) * B.e(2 * i + 1) * B.e(2 * i));
    }
    for (int i = 1; i <= k - 1; ++i) {
        add(idx("rec(i)", i), B.x(2 * i + 1),
            B.s(i) * B.x(2 * i - 1) * B.s(i) + B.x(2 * i) * B.e(2 * i) +
                B.e(2 * i) * B.x(2 * i) - B.x(2 * i - 1) * B.e(2 * i) - B.t(2 * i));
        add(idx("rec(ii)", i), B.x(2 * i + 2),
            B.s(i) * B.x(2 * i) * B.s(i) - B.s(i) * B.x(2 * i) * B.e(2 * i) -
                B.e(2 * i) * B.x(2 * i) * B.s(i) +
                B.e(2 * i) * B.x(2 * i) * B.e(2 * i + 1) * B.e(2 * i) + B.t(2 * i + 1));
    }
    for (int i = 1; i <= k - 1; ++i)
        add(idx("prep(i)", i), B.e(2 * i) * B.x(2 * i) * B.e(2 * i), AffineElement(k));
    for (int i = 2; i <= k - 1; ++i) {
        add(idx("prep(ii)", i), B.e(2 * i) * B.t(2 * i - 1) * B.e(2 * i), AffineElement(k));
        add(idx("prep(iii)", i), B.e(2 * i - 2) * B.t(2 * i) * B.e(2 * i - 2), AffineElement(k));
        add(idx("prep(iv)", i), B.e(2 * i - 2) * B.t(2 * i),
            B.e(2 * i - 2) * B.x(2 * i - 2) * B.s(i) * B.e(2 * i - 2) * B.s(i));
        add(idx("prep(v)", i), B.t(2 * i) * B.e(2 * i - 2),
            B.s(i) * B.e(2 * i - 2) * B.s(i) * B.x(2 * i - 2) * B.e(2 * i - 2));
        add(idx("prep(vi)", i), B.t(2 * i) * B.t(2 * i - 2) * B.t(2 * i) * B.e(2 * i - 2),
            B.e(2 * i - 2) * B.x(2 * i - 2) * B.s(i - 1) * B.e(2 * i) * B.e(2 * i - 1) *
                B.e(2 * i - 2));
        add(idx("prep(vii)", i), B.t(2 * i - 1) * B.e(2 * i) * B.s(i - 1),
            B.s(i) * B.e(2 * i - 2) * B.e(2 * i - 1) * B.e(2 * i) * B.s(i - 1) * B.x(2 * i - 2) *
                B.e(2 * i - 2) * B.s(i));
        add(idx("prep(viii)", i), B.t(2 * i) * B.t(2 * i - 2) * B.t(2 * i) * B.e(2 * i - 2),
            B.e(2 * i - 2) * B.t(2 * i) * B.t(2 * i - 2) * B.t(2 * i));
    }
    for (int i = 2; i <= k - 1; ++i) {
        add(idx("taurec(even)", i), B.t(2 * i),
            B.s(i - 1) * B.s(i) * B.t(2 * i - 2) * B.s(i) * B.s(i - 1) +
                B.e(2 * i - 2) * B.x(2 * i - 2) * B.s(i) * B.e(2 * i - 2) * B.s(i) +
                B.s(i) * B.e(2 * i - 2) * B.x(2 * i - 2) * B.s(i) * B.e(2 * i - 2) -
                B.e(2 * i - 2) * B.x(2 * i - 2) * B.s(i - 1) * B.e(2 * i) * B.e(2 * i - 1) *
                    B.e(2 * i - 2) -
                B.s(i) * B.e(2 * i - 2) * B.e(2 * i - 1) * B.e(2 * i) * B.s(i - 1) *
                    B.x(2 * i - 2) * B.e(2 * i - 2) * B.s(i));
        add(idx("taurec(odd)", i), B.t(2 * i + 1),
            B.s(i - 1) * B.s(i) * B.t(2 * i - 1) * B.s(i) * B.s(i - 1) +
                B.s(i) * B.e(2 * i - 2) * B.x(2 * i - 2) * B.s(i) * B.e(2 * i - 2) * B.s(i) +
                B.e(2 * i - 2) * B.x(2 * i - 2) * B.s(i) * B.e(2 * i - 2) -
                B.s(i) * B.e(2 * i - 2) * B.x(2 * i - 2) * B.s(i - 1) * B.e(2 * i) *
                    B.e(2 * i - 1) * B.e(2 * i - 2) -
                B.e(2 * i - 2) * B.e(2 * i - 1) * B.e(2 * i) * B.s(i - 1) * B.x(2 * i - 2) *
                    B.e(2 * i - 2) * B.s(i));
    }
    for (int i = 1; i <= k - 1; ++i) {
        add(idx("costcom(i)", i), B.t(2 * i) * B.x(2 * i + 1),
            B.x(2 * i - 1) * B.t(2 * i) + B.e(2 * i - 1) * B.e(2 * i) - B.one());
        add(idx("costcom(ii)", i), B.t(2 * i + 1) * B.x(2 * i + 2),
            B.x(2 * i) * B.t(2 * i + 1) - B.e(2 * i) * B.e(2 * i + 1) + B.one());
        add(idx("costcom(iii)", i), B.t(2 * i) * B.x(2 * i),
            B.x(2 * i) * B.t(2 * i) + B.e(2 * i - 1) * B.e(2 * i) - B.e(2 * i) * B.e(2 * i - 1));
        add(idx("costcom(iv)", i), B.t(2 * i + 1) * B.x(2 * i + 1),
            B.x(2 * i + 1) * B.t(2 * i + 1) - B.e(2 * i) * B.e(2 * i + 1) +
                B.e(2 * i + 1) * B.e(2 * i));
    }
    auto pow = [](const AffineElement& a, int n) {
        AffineElement p = AffineElement::one(a.k());
        for (int j = 0; j < n; ++j) p = p * a;
        return p;
    };
    for (int n = 1; n <= max_n; ++n) {
        for (int i = 1; i <= k - 1; ++i) {
            AffineElement sum1(k), sum2(k), sum3(k), sum4(k);
            for (int a = 0; a <= n - 1; ++a) {
                int b = n - 1 - a;
                sum1 += pow(B.x(2 * i - 1), a) * (B.e(2 * i - 1) * B.e(2 * i) - B.one()) *
                        pow(B.x(2 * i + 1), b);
                sum2 += pow(B.x(2 * i), a) *
                        (B.e(2 * i - 1) * B.e(2 * i) - B.e(2 * i) * B.e(2 * i - 1)) *
                        pow(B.x(2 * i), b);
                sum3 += pow(B.x(2 * i), a) * (B.one() - B.e(2 * i) * B.e(2 * i + 1)) *
                        pow(B.x(2 * i + 2), b);
                sum4 += pow(B.x(2 * i + 1), a) *
                        (B.e(2 * i + 1) * B.e(2 * i) - B.e(2 * i) * B.e(2 * i + 1)) *
                        pow(B.x(2 * i + 1), b);
            }
            std::string tag = " n=" + std::to_string(n);
            add(idx("power(i)", i) + tag, B.t(2 * i) * pow(B.x(2 * i + 1), n),
                pow(B.x(2 * i - 1), n) * B.t(2 * i) + sum1);
            add(idx("power(ii)", i) + tag, B.t(2 * i) * pow(B.x(2 * i), n),
                pow(B.x(2 * i), n) * B.t(2 * i) + sum2);
            add(idx("power(iii)", i) + tag, B.t(2 * i + 1) * pow(B.x(2 * i + 2), n),
                pow(B.x(2 * i), n) * B.t(2 * i + 1) + sum3);
            add(idx("power(iv)", i) + tag, B.t(2 * i + 1) * pow(B.x(2 * i + 1), n),
                pow(B.x(2 * i + 1), n) * B.t(2 * i + 1) + sum4);
        }
    }
    return out;
}

namespace {

struct PrModel {
    using Value = PAElement;
    int k;
    Value zero() const { return PAElement::zero(k); }
    Value one() const { return PAElement::one(k); }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value scale(const Rat& c, const Value& a) const { return PolyZ(c) * a; }
    Value gen(const AffineGen& g) const {
        switch (g.kind) {
            case 't': return norm_t(g.index, k);
            case 'e': return pa_e(g.index, k);
            case 'x': return norm_X(g.index, k);
            case 'z': {
                PolyZ zz = PolyZ::z();
                return (zz * (zz - PolyZ(1)).pow(static_cast<unsigned>(g.index))) * pa_one(k);
            }
            case 's': return pa_s(g.index, k);
            default: throw std::invalid_argument("bad generator");
        }
    }
};

struct FModel {
    using Value = HeckeTensorElement;
    int k;
    std::vector<Rat> lambda;
    Value zero() const { return HeckeTensorElement(k); }
    Value one() const { return HeckeTensorElement::one(k); }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value scale(const Rat& c, const Value& a) const { return c * a; }
    Value gen(const AffineGen& g) const {
        auto O = HeckeElement::one(k);
        switch (g.kind) {
            case 't':
                if (g.index % 2 == 1)
                    return HeckeTensorElement::of(HeckeElement::s((g.index - 1) / 2, k), O);
                return HeckeTensorElement::of(O, HeckeElement::s(g.index / 2, k));
            case 'e': return HeckeTensorElement(k);
            case 'x':
                if (g.index % 2 == 1)
                    return HeckeTensorElement::of(Rat(-1) * O,
                                                  HeckeElement::y((g.index + 1) / 2, k));
                return HeckeTensorElement::of(HeckeElement::y(g.index / 2, k), O);
            case 'z': {
                Rat v = g.index < static_cast<int>(lambda.size()) ? lambda[g.index]
                                                                  : Rat(g.index + 1);
                return v * HeckeTensorElement::one(k);
            }
            case 's': {
                auto si = HeckeElement::s(g.index, k);
                return HeckeTensorElement::of(si, si);
            }
            default: throw std::invalid_argument("bad generator");
        }
    }
};

struct PsiModel {
    using Value = TensorOperator;
    int n, k;
    std::shared_ptr<const SnModule> module;
    Value zero() const {
        return TensorOperator(n, k, module, [](const TensorIndex&) { return TensorVec{}; });
    }
    Value one() const { return TensorOperator::identity(n, k, module); }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value scale(const Rat& c, const Value& a) const { return c * a; }
    Value gen(const AffineGen& g) const {
        return psi_generator(gen_token(g), n, k, module);
    }
};

}  // namespace

PAElement eval_pr(const AffineElement& a) { return eval_affine(a, PrModel{a.k()}); }

HeckeTensorElement eval_f_lambda(const AffineElement& a, const std::vector<Rat>& lambda) {
    return eval_affine(a, FModel{a.k(), lambda});
}

TensorOperator eval_psi_M(const AffineElement& a, int n, std::shared_ptr<const SnModule> module) {
    return eval_affine(a, PsiModel{n, a.k(), std::move(module)});
}

AffineElement eval_iota(const HRWord& w, int k) {
    AffineElement acc = AffineElement::one(k);
    for (const auto& g : w) {
        AffineElement img(k);
        switch (g.kind) {
            case 's':
                img = AffineElement::gen(k, 't', 2 * g.index) *
                          AffineElement::gen(k, 't', 2 * g.index + 1) +
                      AffineElement::gen(k, 'e', 2 * g.index);
                break;
            case 'e': img = AffineElement::gen(k, 'e', g.index); break;
            case 'z': img = AffineElement::gen(k, 'z', 0); break;
            default: throw std::invalid_argument("bad HR generator");
        }
        acc = acc * img;
    }
    return acc;
}

PAElement hr_word_value(const HRWord& w, int k) {
    PAElement acc = pa_one(k);
    for (const auto& g : w) {
        switch (g.kind) {
            case 's': acc = acc * pa_s(g.index, k); break;
            case 'e': acc = acc * pa_e(g.index, k); break;
            case 'z': acc = PolyZ::z() * acc; break;
            default: throw std::invalid_argument("bad HR generator");
        }
    }
    return acc;
}

bool iota_roundtrip_check(int k, int samples, unsigned seed) {
    // all generators first
    std::vector<HRWord> words;
    for (int i = 1; i <= k - 1; ++i) words.push_back({{'s', i}});
    for (int m = 1; m <= 2 * k - 1; ++m) words.push_back({{'e', m}});
    words.push_back({{'z', 0}});
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len(0, 6), kind(0, 2), sidx(1, std::max(1, k - 1)),
        eidx(1, 2 * k - 1);
    for (int t = 0; t < samples; ++t) {
        HRWord w;
        int L = len(rng);
        for (int j = 0; j < L; ++j) {
            int c = kind(rng);
            if (c == 0 && k >= 2)
                w.push_back({'s', sidx(rng)});
            else if (c == 1)
                w.push_back({'e', eidx(rng)});
            else
                w.push_back({'z', 0});
        }
        words.push_back(std::move(w));
    }
    for (const auto& w : words)
        if (eval_pr(eval_iota(w, k)) != hr_word_value(w, k)) return false;
    return true;
}

AffineElement express_tau(int i, int k, const std::string& route) {
    if (i < 2 || i > 2 * k - 1) throw std::out_of_range("express_tau index");
    Builder B{k};
    // primitive Coxeter letter, so the output stays free of tau generators
    auto s = [k](int j) { return AffineElement::gen(k, 's', j); };
    auto direct_even = [&B, &s](int j) {  // tau_{2j} from the affine recursion for x
        return s(j) * B.x(2 * j - 1) * s(j) + B.x(2 * j) * B.e(2 * j) +
               B.e(2 * j) * B.x(2 * j) - B.x(2 * j - 1) * B.e(2 * j) - B.x(2 * j + 1);
    };
    if (route == "direct") {
        if (i % 2 == 0) return direct_even(i / 2);
        int j = (i - 1) / 2;
        return direct_even(j) * s(j);
    }
    if (route != "recursive") throw std::invalid_argument("unknown route");
    std::function<AffineElement(int)> rec = [&](int idx) -> AffineElement {
        if (idx == 2) return direct_even(1);
        if (idx == 3) return direct_even(1) * s(1);
        int j = idx / 2;  // idx = 2j or 2j+1
        if (idx % 2 == 0) {
            return s(j - 1) * s(j) * rec(2 * j - 2) * s(j) * s(j - 1) +
                   B.e(2 * j - 2) * B.x(2 * j - 2) * s(j) * B.e(2 * j - 2) * s(j) +
                   s(j) * B.e(2 * j - 2) * B.x(2 * j - 2) * s(j) * B.e(2 * j - 2) -
                   B.e(2 * j - 2) * B.x(2 * j - 2) * s(j - 1) * B.e(2 * j) * B.e(2 * j - 1) *
                       B.e(2 * j - 2) -
                   s(j) * B.e(2 * j - 2) * B.e(2 * j - 1) * B.e(2 * j) * s(j - 1) *
                       B.x(2 * j - 2) * B.e(2 * j - 2) * s(j);
        }
        return s(j - 1) * s(j) * rec(2 * j - 1) * s(j) * s(j - 1) +
               s(j) * B.e(2 * j - 2) * B.x(2 * j - 2) * s(j) * B.e(2 * j - 2) * s(j) +
               B.e(2 * j - 2) * B.x(2 * j - 2) * s(j) * B.e(2 * j - 2) -
               s(j) * B.e(2 * j - 2) * B.x(2 * j - 2) * s(j - 1) * B.e(2 * j) *
                   B.e(2 * j - 1) * B.e(2 * j - 2) -
               B.e(2 * j - 2) * B.e(2 * j - 1) * B.e(2 * j) * s(j - 1) * B.x(2 * j - 2) *
                   B.e(2 * j - 2) * s(j);
    };
    return rec(i);
}

}  // namespace apa
