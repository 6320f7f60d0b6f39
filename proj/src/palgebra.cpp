#include "apa/palgebra.hpp"

#include <mutex>
#include <stdexcept>

namespace apa {

PAElement::PAElement(const SetPartitionDiagram& d, PolyZ c) : k_(d.k()) {
    if (!c.is_zero()) terms_.emplace(d, std::move(c));
}

std::size_t PAElement::z_degree() const {
    std::size_t d = 0;
    for (const auto& [diag, poly] : terms_) d = std::max(d, poly.degree());
    return d;
}

void PAElement::add_term(const SetPartitionDiagram& d, const PolyZ& c) {
    if (d.k() != k_) throw std::invalid_argument("add_term: size mismatch");
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(d, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

PAElement PAElement::operator-() const {
    PAElement r(k_);
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
    return r;
}

PAElement operator+(const PAElement& a, const PAElement& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("add: size mismatch");
    PAElement r = a;
    for (const auto& [d, c] : b.terms_) r.add_term(d, c);
    return r;
}

PAElement operator-(const PAElement& a, const PAElement& b) { return a + (-b); }

PAElement operator*(const PAElement& a, const PAElement& b) {
    if (a.k_ != b.k_) throw std::invalid_argument("mul: size mismatch");
    PAElement r(a.k_);
    for (const auto& [da, ca] : a.terms_) {
        for (const auto& [db, cb] : b.terms_) {
            ComposeResult cr = compose(da, db);
            r.add_term(cr.diagram, (ca * cb).shifted(cr.middle_components));
        }
    }
    return r;
}

PAElement operator*(const PolyZ& c, const PAElement& a) {
    PAElement r(a.k_);
    for (const auto& [d, p] : a.terms_) {
        PolyZ q = c * p;
        if (!q.is_zero()) r.terms_.emplace(d, std::move(q));
    }
    return r;
}

PAElement PAElement::star() const {
    PAElement r(k_);
    for (const auto& [d, c] : terms_) r.add_term(d.flipped(), c);
    return r;
}

std::string PAElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [d, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")" + d.str();
    }
    return s;
}

std::map<SetPartitionDiagram, Rat> specialize(const PAElement& a, const Rat& delta) {
    std::map<SetPartitionDiagram, Rat> r;
    for (const auto& [d, c] : a.terms()) {
        Rat v = c.eval(delta);
        if (v != 0) r.emplace(d, std::move(v));
    }
    return r;
}

PAElement pa_one(int k) { return PAElement::one(k); }
PAElement pa_z(int k) { return PAElement(SetPartitionDiagram::identity(k), PolyZ::z()); }
PAElement pa_s(int i, int k) { return PAElement(SetPartitionDiagram::s(i, k)); }
PAElement pa_e(int m, int k) { return PAElement(SetPartitionDiagram::e(m, k)); }

namespace {

struct JmTable {
    std::vector<PAElement> L;      // L[i], 1 <= i <= 2k
    std::vector<PAElement> sigma;  // sigma[i], 2 <= i <= 2k-1
};

// L_1 = 0, L_2 = e_1, sigma_2 = 1, sigma_3 = s_1, then the mutual recursion
// of the JM elements and the crossing elements.
JmTable build_jm(int k) {
    JmTable t;
    t.L.assign(2 * k + 1, PAElement(k));
    t.sigma.assign(std::max(2 * k, 4), PAElement(k));
    if (k < 1) return t;
    t.L[1] = PAElement::zero(k);
    t.L[2] = pa_e(1, k);
    t.sigma[2] = PAElement::one(k);
    if (k >= 2) t.sigma[3] = pa_s(1, k);
    PAElement z = pa_z(k);
    for (int i = 1; 2 * i + 1 <= 2 * k || 2 * i + 2 <= 2 * k; ++i) {
        if (i >= 2 && 2 * i <= 2 * k - 1) {
            PAElement s_im1 = pa_s(i - 1, k), s_i = pa_s(i, k);
            PAElement e2im2 = pa_e(2 * i - 2, k), e2im1 = pa_e(2 * i - 1, k), e2i = pa_e(2 * i, k);
            const PAElement& L2im2 = t.L[2 * i - 2];
            t.sigma[2 * i] = s_im1 * s_i * t.sigma[2 * i - 2] * s_i * s_im1 +
                             e2im2 * L2im2 * s_i * e2im2 * s_i +
                             s_i * e2im2 * L2im2 * s_i * e2im2 -
                             e2im2 * L2im2 * s_im1 * e2i * e2im1 * e2im2 -
                             s_i * e2im2 * e2im1 * e2i * s_im1 * L2im2 * e2im2 * s_i;
        }
        if (i >= 2 && 2 * i + 1 <= 2 * k - 1) {
            PAElement s_im1 = pa_s(i - 1, k), s_i = pa_s(i, k);
            PAElement e2im2 = pa_e(2 * i - 2, k), e2im1 = pa_e(2 * i - 1, k), e2i = pa_e(2 * i, k);
            const PAElement& L2im2 = t.L[2 * i - 2];
            t.sigma[2 * i + 1] = s_im1 * s_i * t.sigma[2 * i - 1] * s_i * s_im1 +
                                 s_i * e2im2 * L2im2 * s_i * e2im2 * s_i +
                                 e2im2 * L2im2 * s_i * e2im2 -
                                 s_i * e2im2 * L2im2 * s_im1 * e2i * e2im1 * e2im2 -
                                 e2im2 * e2im1 * e2i * s_im1 * L2im2 * e2im2 * s_i;
        }
        if (2 * i + 1 <= 2 * k) {
            PAElement s_i = pa_s(i, k), e2i = pa_e(2 * i, k);
            t.L[2 * i + 1] = s_i * t.L[2 * i - 1] * s_i - t.L[2 * i] * e2i - e2i * t.L[2 * i] +
                             (z - t.L[2 * i - 1]) * e2i + t.sigma[2 * i];
        }
        if (2 * i + 2 <= 2 * k) {
            PAElement s_i = pa_s(i, k), e2i = pa_e(2 * i, k), e2ip1 = pa_e(2 * i + 1, k);
            t.L[2 * i + 2] = s_i * t.L[2 * i] * s_i - s_i * t.L[2 * i] * e2i -
                             e2i * t.L[2 * i] * s_i + e2i * t.L[2 * i] * e2ip1 * e2i +
                             t.sigma[2 * i + 1];
        }
    }
    return t;
}

const JmTable& jm_table(int k) {
    static std::map<int, JmTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, build_jm(k)).first;
    return it->second;
}

}  // namespace

const PAElement& jm_L(int i, int k) {
    if (i < 1 || i > 2 * k) throw std::out_of_range("jm_L index");
    return jm_table(k).L[i];
}

const PAElement& enyang_sigma(int i, int k) {
    if (i < 2 || i > 2 * k - 1) throw std::out_of_range("enyang_sigma index");
    return jm_table(k).sigma[i];
}

PAElement norm_X(int i, int k) {
    if (i < 1 || i > 2 * k) throw std::out_of_range("norm_X index");
    if (i % 2 == 1) return pa_z(k) - PAElement::one(k) - jm_L(i, k);
    return jm_L(i, k) - PAElement::one(k);
}

PAElement norm_t(int i, int k) {
    if (i < 2 || i > 2 * k - 1) throw std::out_of_range("norm_t index");
    int even_part = (i % 2 == 0) ? i : i - 1;
    return enyang_sigma(i, k) - pa_e(even_part, k);
}

PAElement power_sum(int n, int k) {
    if (n < 1) throw std::invalid_argument("power_sum exponent");
    PAElement acc(k);
    for (int i = 1; i <= 2 * k; ++i) {
        PAElement p = PAElement::one(k);
        PAElement x = norm_X(i, k);
        for (int j = 0; j < n; ++j) p *= x;
        if (i % 2 == 1)
            acc += p;
        else
            acc -= p;
    }
    return acc;
}

bool central_check(const PAElement& c) {
    const int k = c.k();
    for (int i = 1; i <= k - 1; ++i) {
        PAElement s = pa_s(i, k);
        if (s * c != c * s) return false;
    }
    for (int m = 1; m <= 2 * k - 1; ++m) {
        PAElement e = pa_e(m, k);
        if (e * c != c * e) return false;
    }
    return true;
}

}  // namespace apa
