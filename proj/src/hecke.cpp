#include "apa/hecke.hpp"

#include <numeric>
#include <stdexcept>

namespace apa {

namespace {

std::vector<int> id_perm(int k) {
    std::vector<int> w(k);
    std::iota(w.begin(), w.end(), 1);
    return w;
}

// left-to-right composition on images: (uv)(i) = u(v(i))
std::vector<int> perm_mul(const std::vector<int>& u, const std::vector<int>& v) {
    std::vector<int> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = u[v[i] - 1];
    return w;
}

// s_i * (y^exps w) in normal form; the correction of each straightening step
// drops the moved variable.
HeckeElement left_mul_gen(int i, const HeckeKey& key, const Rat& coeff, int k);

HeckeElement from_terms(int k, std::map<HeckeKey, Rat> terms) {
    HeckeElement e(k);
    for (auto& [key, c] : terms) e.add_term(key, c);
    return e;
}

HeckeElement left_mul_gen(int i, const HeckeKey& key, const Rat& coeff, int k) {
    HeckeElement out(k);
    if (key.exps[i - 1] == 0 && key.exps[i] == 0) {
        // s_i commutes with the rest of the monomial, absorb into the permutation
        std::vector<int> si = id_perm(k);
        std::swap(si[i - 1], si[i]);
        out.add_term({key.exps, perm_mul(si, key.images)}, coeff);
        return out;
    }
    if (key.exps[i - 1] > 0) {
        // s_i y_i = y_{i+1} s_i - 1
        HeckeKey rest = key;
        rest.exps[i - 1] -= 1;
        HeckeElement tail = left_mul_gen(i, rest, coeff, k);
        for (const auto& [tk, tc] : tail.terms()) {
            HeckeKey up = tk;
            up.exps[i] += 1;
            out.add_term(up, tc);
        }
        out.add_term(rest, -coeff);
        return out;
    }
    // s_i y_{i+1} = y_i s_i + 1
    HeckeKey rest = key;
    rest.exps[i] -= 1;
    HeckeElement tail = left_mul_gen(i, rest, coeff, k);
    for (const auto& [tk, tc] : tail.terms()) {
        HeckeKey up = tk;
        up.exps[i - 1] += 1;
        out.add_term(up, tc);
    }
    out.add_term(rest, coeff);
    return out;
}

std::vector<int> reduced_word(const std::vector<int>& images) {
    // bubble sort; indices of adjacent transpositions, applied left to right
    std::vector<int> w = images;
    std::vector<int> word;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] > w[i + 1]) {
                std::swap(w[i], w[i + 1]);
                word.push_back(static_cast<int>(i) + 1);
                changed = true;
            }
        }
    }
    // w * (product of word) = id, so images = product of word reversed
    std::reverse(word.begin(), word.end());
    return word;
}

}  // namespace

HeckeElement HeckeElement::one(int k) {
    HeckeElement e(k);
    e.add_term({std::vector<int>(k, 0), id_perm(k)}, Rat(1));
    return e;
}

HeckeElement HeckeElement::y(int i, int k) {
    if (i < 1 || i > k) throw std::out_of_range("y index");
    HeckeElement e(k);
    std::vector<int> exps(k, 0);
    exps[i - 1] = 1;
    e.add_term({exps, id_perm(k)}, Rat(1));
    return e;
}

HeckeElement HeckeElement::s(int i, int k) {
    if (i < 1 || i >= k) throw std::out_of_range("s index");
    HeckeElement e(k);
    std::vector<int> si = id_perm(k);
    std::swap(si[i - 1], si[i]);
    e.add_term({std::vector<int>(k, 0), si}, Rat(1));
    return e;
}

void HeckeElement::add_term(const HeckeKey& key, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

HeckeElement HeckeElement::operator-() const {
    HeckeElement r(k_);
    for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
    return r;
}

HeckeElement operator+(const HeckeElement& a, const HeckeElement& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("hecke add: size mismatch");
    HeckeElement r = a;
    for (const auto& [key, c] : b.terms_) r.add_term(key, c);
    return r;
}

HeckeElement operator-(const HeckeElement& a, const HeckeElement& b) { return a + (-b); }

HeckeElement operator*(const Rat& c, const HeckeElement& a) {
    HeckeElement r(a.k_);
    if (c == 0) return r;
    for (const auto& [key, v] : a.terms_) r.terms_.emplace(key, c * v);
    return r;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("hecke mul: size mismatch");
    const int k = a.k_;
    HeckeElement out(k);
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            // (y^a u)(y^b w) = y^a * (u y^b w); push u through one generator
            // at a time along a reduced word.
            HeckeElement cur(k);
            cur.add_term(kb, ca * cb);
            std::vector<int> word = reduced_word(ka.images);
            for (auto it = word.rbegin(); it != word.rend(); ++it) {
                HeckeElement next(k);
                for (const auto& [key, c] : cur.terms())
                    next += left_mul_gen(*it, key, c, k);
                cur = next;
            }
            for (const auto& [key, c] : cur.terms()) {
                HeckeKey shifted = key;
                for (int i = 0; i < k; ++i) shifted.exps[i] += ka.exps[i];
                out.add_term(shifted, c);
            }
        }
    }
    return out;
}

std::string HeckeElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [key, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += rat_to_string(c) + "*y[";
        for (std::size_t i = 0; i < key.exps.size(); ++i)
            s += (i ? "," : "") + std::to_string(key.exps[i]);
        s += "]w(";
        for (std::size_t i = 0; i < key.images.size(); ++i)
            s += (i ? "," : "") + std::to_string(key.images[i]);
        s += ")";
    }
    return s;
}

HeckeTensorElement HeckeTensorElement::one(int k) {
    return of(HeckeElement::one(k), HeckeElement::one(k));
}

HeckeTensorElement HeckeTensorElement::of(const HeckeElement& left, const HeckeElement& right) {
    if (left.k() != right.k()) throw std::invalid_argument("tensor: size mismatch");
    HeckeTensorElement r(left.k());
    for (const auto& [kl, cl] : left.terms())
        for (const auto& [kr, cr] : right.terms()) r.add_term(kl, kr, cl * cr);
    return r;
}

void HeckeTensorElement::add_term(const HeckeKey& l, const HeckeKey& r, const Rat& c) {
    if (c == 0) return;
    auto key = std::make_pair(l, r);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

HeckeTensorElement operator+(const HeckeTensorElement& a, const HeckeTensorElement& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("tensor add: size mismatch");
    HeckeTensorElement r = a;
    for (const auto& [key, c] : b.terms_) r.add_term(key.first, key.second, c);
    return r;
}

HeckeTensorElement operator-(const HeckeTensorElement& a, const HeckeTensorElement& b) {
    return a + Rat(-1) * b;
}

HeckeTensorElement operator*(const Rat& c, const HeckeTensorElement& a) {
    HeckeTensorElement r(a.k_);
    if (c == 0) return r;
    for (const auto& [key, v] : a.terms_) r.terms_.emplace(key, c * v);
    return r;
}

HeckeTensorElement operator*(const HeckeTensorElement& a, const HeckeTensorElement& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("tensor mul: size mismatch");
    const int k = a.k_;
    HeckeTensorElement out(k);
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            HeckeElement l(k), r(k);
            l.add_term(ka.first, Rat(1));
            r.add_term(ka.second, Rat(1));
            HeckeElement lb(k), rb(k);
            lb.add_term(kb.first, Rat(1));
            rb.add_term(kb.second, Rat(1));
            HeckeElement lp = l * lb, rp = r * rb;
            for (const auto& [kl, cl] : lp.terms())
                for (const auto& [kr, cr] : rp.terms())
                    out.add_term(kl, kr, ca * cb * cl * cr);
        }
    }
    return out;
}

std::string HeckeTensorElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [key, c] : terms_) {
        HeckeElement l(k_), r(k_);
        l.add_term(key.first, Rat(1));
        r.add_term(key.second, Rat(1));
        if (!s.empty()) s += " + ";
        s += rat_to_string(c) + "*(" + l.str() + ")(x)(" + r.str() + ")";
    }
    return s;
}

}  // namespace apa
