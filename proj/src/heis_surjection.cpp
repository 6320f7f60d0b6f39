#include "apa/heis/surjection.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "apa/heis/map.hpp"

namespace apa::heis {

namespace {

SliceDiagram braid_slices(int k, std::initializer_list<int> crossings) {
    SliceDiagram d;
    d.top = updown_power(k);
    d.bottom = d.top;
    for (int p : crossings) d.layers.push_back({SliceLayer::Cross, p, Arrow::Up});
    return d;
}

}  // namespace

SliceDiagram phi_gen_slices(const AffineGen& g, int k) {
    SliceDiagram d;
    d.top = updown_power(k);
    d.bottom = d.top;
    switch (g.kind) {
        case 'e': {
            int m = g.index;
            Arrow left = (m % 2 == 1) ? Arrow::Up : Arrow::Down;
            d.layers.push_back({SliceLayer::Cup, m, left});
            d.layers.push_back({SliceLayer::Cap, m, left});
            return d;
        }
        case 'x': {
            d.layers.push_back({SliceLayer::Dot, g.index, Arrow::Up});
            return d;
        }
        case 't': {
            int i = g.index;
            int p = (i % 2 == 0) ? i - 1 : i - 1;  // window starts one left of the index
            return braid_slices(k, {p, p + 1, p});
        }
        default:
            throw std::invalid_argument("no slice presentation for this generator");
    }
}

namespace {

struct PhiModel {
    using Value = HeisMorphism;
    int k;
    mutable std::map<AffineGen, HeisMorphism> cache;

    Value zero() const { return HeisMorphism(updown_power(k), updown_power(k)); }
    Value one() const { return HeisMorphism::identity(updown_power(k)); }
    Value mul(const Value& a, const Value& b) const { return heis::compose(a, b); }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value scale(const Rat& c, const Value& a) const { return c * a; }
    Value gen(const AffineGen& g) const {
        auto it = cache.find(g);
        if (it != cache.end()) return it->second;
        HeisMorphism v = build(g);
        cache.emplace(g, v);
        return v;
    }
    HeisMorphism build(const AffineGen& g) const {
        switch (g.kind) {
            case 'e':
            case 't':
            case 'x': {
                HeisMorphism v = heis::reduce(phi_gen_slices(g, k));
                if (v.terms().size() != 1 || v.terms().begin()->second != 1)
                    throw std::logic_error("generator image is a single diagram");
                return v;
            }
            case 'z': {
                HeisMorphism v = zero();
                auto id = one();
                BubbleMonomial mono{{g.index, 1}};
                for (const auto& [key, c] : id.terms()) v.add_term(mono, key.second, c);
                return v;
            }
            case 's': {
                AffineGen t_even{'t', 2 * g.index}, t_odd{'t', 2 * g.index + 1};
                return heis::compose(gen(t_even), gen(t_odd)) + gen(AffineGen{'e', 2 * g.index});
            }
            default:
                throw std::invalid_argument("bad generator");
        }
    }
};

}  // namespace

HeisMorphism eval_phi(const AffineElement& a) {
    PhiModel model{a.k(), {}};
    return eval_affine(a, model);
}

std::vector<BasisDiagram> simple_diagrams(const ObjectWord& top, const ObjectWord& bottom) {
    std::vector<int> codes;
    for (int j = 1; j <= static_cast<int>(top.size()); ++j) codes.push_back(j);
    for (int i = 1; i <= static_cast<int>(bottom.size()); ++i) codes.push_back(-i);
    auto arrow_of = [&](int code) {
        return code > 0 ? top[code - 1] : bottom[-code - 1];
    };
    std::vector<BasisDiagram> out;
    std::vector<std::pair<int, int>> pairs;
    std::vector<char> used(codes.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        while (i < codes.size() && used[i]) ++i;
        if (i == codes.size()) {
            out.push_back({Matching::of(pairs), {}});
            return;
        }
        used[i] = 1;
        for (std::size_t j = i + 1; j < codes.size(); ++j) {
            if (used[j]) continue;
            int a = codes[i], b = codes[j];
            bool same_row = (a > 0) == (b > 0);
            bool ok = same_row ? arrow_of(a) != arrow_of(b) : arrow_of(a) == arrow_of(b);
            if (!ok) continue;
            used[j] = 1;
            pairs.push_back({a, b});
            rec(i + 1);
            pairs.pop_back();
            used[j] = 0;
        }
        used[i] = 0;
    };
    rec(0);
    return out;
}

std::pair<int, int> degree(const Matching& m, const ObjectWord& top, const ObjectWord& bottom) {
    int arcs = 0, cw = 0;
    for (const auto& [a, b] : m.pairs) {
        if ((a > 0) != (b > 0)) continue;
        ++arcs;
        int left = std::min(std::abs(a), std::abs(b));
        Arrow la = a > 0 ? top[left - 1] : bottom[left - 1];
        if (la == Arrow::Up) ++cw;
    }
    return {arcs, cw};
}

BasisDiagram pi_up(const Perm& p) {
    const int k = static_cast<int>(p.size());
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= k; ++i) {
        pairs.push_back({-(2 * i - 1), 2 * p[i - 1] - 1});
        pairs.push_back({-(2 * i), 2 * i});
    }
    return {Matching::of(std::move(pairs)), {}};
}

BasisDiagram pi_down(const Perm& p) {
    const int k = static_cast<int>(p.size());
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= k; ++i) {
        pairs.push_back({-(2 * i - 1), 2 * i - 1});
        pairs.push_back({-(2 * p[i - 1]), 2 * i});
    }
    return {Matching::of(std::move(pairs)), {}};
}

namespace {

// reduced word in runs s_m s_{m+1} ... s_n with strictly decreasing n
std::vector<int> stembridge_word(const Perm& p) {
    Perm w = p;
    std::vector<int> word;
    const int k = static_cast<int>(p.size());
    for (int v = k; v >= 2; --v) {
        int pos = 0;
        while (w[pos] != v) ++pos;
        ++pos;  // 1-based
        for (int j = pos; j <= v - 1; ++j) {
            std::swap(w[j - 1], w[j]);
            word.push_back(j);
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

AffineElement tau_word(const std::vector<int>& letters, bool even, int k) {
    AffineWord w;
    for (int i : letters) w.push_back({'t', even ? 2 * i : 2 * i + 1});
    return AffineElement::word(k, std::move(w));
}

bool reduces_to(const AffineElement& word, const BasisDiagram& target) {
    HeisMorphism v = eval_phi(word);
    if (v.terms().size() != 1) return false;
    const auto& [key, c] = *v.terms().begin();
    return c == 1 && key.first.empty() && key.second == target;
}

}  // namespace

AffineElement word_pi_down(const Perm& p, int k) {
    if (static_cast<int>(p.size()) != k) throw std::invalid_argument("permutation size");
    for (const Perm& cand : {p, perm_inverse(p)}) {
        AffineElement w = tau_word(stembridge_word(cand), false, k);
        if (reduces_to(w, pi_down(p))) return w;
    }
    throw std::logic_error("no correction-free word for the down permutation diagram");
}

AffineElement word_pi_up(const Perm& p, int k) {
    if (static_cast<int>(p.size()) != k) throw std::invalid_argument("permutation size");
    for (const Perm& cand : {p, perm_inverse(p)}) {
        for (bool rev : {false, true}) {
            auto letters = stembridge_word(cand);
            if (rev) std::reverse(letters.begin(), letters.end());
            AffineElement w = tau_word(letters, true, k);
            if (reduces_to(w, pi_up(p))) return w;
        }
    }
    throw std::logic_error("no correction-free word for the up permutation diagram");
}

namespace {

// matchings compose like diagrams; counts closed middle loops
struct MatchCompose {
    Matching result;
    int loops = 0;
};

MatchCompose compose_matchings(const Matching& f, const Matching& g, int mid) {
    // f above g; f's bottom row is identified with g's top row
    // nodes: f-top j -> +j ; f-bottom/g-top i -> mid node ; g-bottom i -> -i
    std::map<int, std::vector<int>> adj;  // mid node 1..mid -> neighbor codes
    auto mid_node = [](int i) { return 1000 + i; };
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : f.pairs)
        edges.push_back({a < 0 ? mid_node(-a) : 2000 + a, b < 0 ? mid_node(-b) : 2000 + b});
    for (const auto& [a, b] : g.pairs)
        edges.push_back({a < 0 ? 3000 - a : mid_node(a), b < 0 ? 3000 - b : mid_node(b)});
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::set<int> seen;
    std::vector<std::pair<int, int>> pairs;
    int loops = 0;
    for (const auto& [start, nbrs] : adj) {
        (void)nbrs;
        if (seen.count(start)) continue;
        // trace the path/cycle through this node
        std::vector<int> comp;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (!seen.insert(u).second) continue;
            comp.push_back(u);
            for (int v : adj[u]) queue.push_back(v);
        }
        std::vector<int> ends;
        for (int u : comp)
            if (u >= 2000) ends.push_back(u);
        if (ends.empty()) {
            ++loops;
            continue;
        }
        if (ends.size() != 2) throw std::logic_error("matching composition: broken strand");
        auto decode = [](int u) { return u >= 3000 ? -(u - 3000) : u - 2000; };
        pairs.push_back({decode(ends[0]), decode(ends[1])});
    }
    (void)mid;
    return {Matching::of(std::move(pairs)), loops};
}

Matching e_matching(int m, int k) {
    std::vector<std::pair<int, int>> pairs;
    for (int pos = 1; pos <= 2 * k; ++pos) {
        if (pos == m) {
            pairs.push_back({m, m + 1});
            pairs.push_back({-m, -(m + 1)});
        } else if (pos != m + 1) {
            pairs.push_back({-pos, pos});
        }
    }
    return Matching::of(std::move(pairs));
}

Matching identity_matching(int width) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= width; ++i) pairs.push_back({-i, i});
    return Matching::of(std::move(pairs));
}

const std::map<Matching, std::vector<int>>& planar_words(int k) {
    static std::map<int, std::map<Matching, std::vector<int>>> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    std::map<Matching, std::vector<int>> words;
    std::deque<Matching> queue;
    Matching id = identity_matching(2 * k);
    words[id] = {};
    queue.push_back(id);
    while (!queue.empty()) {
        Matching cur = queue.front();
        queue.pop_front();
        for (int m = 1; m <= 2 * k - 1; ++m) {
            auto comp = compose_matchings(cur, e_matching(m, k), 2 * k);
            if (comp.loops > 0) continue;
            if (words.count(comp.result)) continue;
            auto w = words[cur];
            w.push_back(m);
            words[comp.result] = std::move(w);
            queue.push_back(comp.result);
        }
    }
    return cache.emplace(k, std::move(words)).first->second;
}

}  // namespace

std::vector<int> jones_planar_factorize(const BasisDiagram& b, int k) {
    if (!b.dots.empty()) throw std::invalid_argument("factorization wants a dotless diagram");
    const auto& words = planar_words(k);
    auto it = words.find(b.matching);
    if (it == words.end()) throw std::invalid_argument("diagram is not planar");
    return it->second;
}

namespace {

int matching_crossings(const Matching& m, const ObjectWord& top, const ObjectWord& bottom) {
    const int n = static_cast<int>(top.size()), mm = static_cast<int>(bottom.size());
    auto cyc = [&](int code) { return code < 0 ? -code - 1 : mm + (n - code); };
    int count = 0;
    for (std::size_t a = 0; a < m.pairs.size(); ++a)
        for (std::size_t b = a + 1; b < m.pairs.size(); ++b) {
            int a1 = cyc(m.pairs[a].first), a2 = cyc(m.pairs[a].second);
            int b1 = cyc(m.pairs[b].first), b2 = cyc(m.pairs[b].second);
            auto between = [&](int x) {
                if (a1 < a2) return a1 < x && x < a2;
                return x > a1 || x < a2;
            };
            if (between(b1) != between(b2)) ++count;
        }
    return count;
}

// one uncrossing step: exchange two same-row endpoints of crossing strands,
// same-colour exchanges only; returns the transposition used
struct SwapStep {
    bool top_row;
    int i, j;  // strand-pair indices (i.e. positions /2 rounded)
};

std::optional<SwapStep> uncross_step(Matching& m, const ObjectWord& top,
                                     const ObjectWord& bottom) {
    int before = matching_crossings(m, top, bottom);
    if (before == 0) return std::nullopt;
    const int n = static_cast<int>(top.size()), mm = static_cast<int>(bottom.size());
    auto cyc = [&](int code) { return code < 0 ? -code - 1 : mm + (n - code); };
    auto cross = [&](std::pair<int, int> A, std::pair<int, int> B) {
        int a1 = cyc(A.first), a2 = cyc(A.second), b1 = cyc(B.first), b2 = cyc(B.second);
        auto between = [&](int x) {
            if (a1 < a2) return a1 < x && x < a2;
            return x > a1 || x < a2;
        };
        return between(b1) != between(b2);
    };
    // candidates in canonical order: bottom even pairs first, then top odd
    std::vector<SwapStep> cands;
    for (int i = 1; 2 * i <= mm; ++i)
        for (int j = i + 1; 2 * j <= mm; ++j) cands.push_back({false, i, j});
    for (int i = 1; 2 * i - 1 <= n; ++i)
        for (int j = i + 1; 2 * j - 1 <= n; ++j) cands.push_back({true, i, j});
    for (const auto& step : cands) {
        int u = step.top_row ? (2 * step.i - 1) : -(2 * step.i);
        int v = step.top_row ? (2 * step.j - 1) : -(2 * step.j);
        // endpoints must lie on distinct crossing strands
        std::pair<int, int> A{u, m.partner(u)}, B{v, m.partner(v)};
        if (A.second == v) continue;
        if (!cross(A, B)) continue;
        Matching swapped = m;
        for (auto& pr : swapped.pairs) {
            auto sub = [&](int& x) {
                if (x == u)
                    x = v;
                else if (x == v)
                    x = u;
            };
            sub(pr.first);
            sub(pr.second);
        }
        swapped = Matching::of(swapped.pairs);
        if (matching_crossings(swapped, top, bottom) < before) {
            m = std::move(swapped);
            return step;
        }
    }
    throw std::logic_error("no crossing-decreasing endpoint exchange found");
}

}  // namespace

AffineElement decompose_endo(const BasisDiagram& alpha, int k) {
    static std::map<std::pair<int, Matching>, AffineElement> memo;
    if (!alpha.dots.empty()) throw std::invalid_argument("decompose_endo wants a dotless diagram");
    auto mit = memo.find({k, alpha.matching});
    if (mit != memo.end()) return mit->second;

    ObjectWord obj = updown_power(k);
    auto build_e_word = [&](const std::vector<int>& es) {
        AffineWord w;
        for (int m : es) w.push_back({'e', m});
        return AffineElement::word(k, std::move(w));
    };

    AffineElement result(k);
    if (matching_crossings(alpha.matching, obj, obj) == 0) {
        result = build_e_word(jones_planar_factorize(alpha, k));
    } else {
        Matching cur = alpha.matching;
        Perm sigma_hat = perm_identity(k), pi_hat = perm_identity(k);
        while (true) {
            auto step = uncross_step(cur, obj, obj);
            if (!step) break;
            Perm t = perm_transposition(step->i, step->j, k);
            if (step->top_row)
                pi_hat = perm_mul(t, pi_hat);
            else
                sigma_hat = perm_mul(t, sigma_hat);
        }
        BasisDiagram beta{cur, {}};
        Perm pi = perm_inverse(pi_hat), sigma = perm_inverse(sigma_hat);
        // alpha is the matching of the semisimple product pi_up beta sigma_down
        auto check1 = compose_matchings(pi_up(pi).matching, beta.matching, 2 * k);
        auto check2 = compose_matchings(check1.result, pi_down(sigma).matching, 2 * k);
        if (check1.loops || check2.loops || !(check2.result == alpha.matching))
            throw std::logic_error("semisimple factorization mismatch");

        AffineElement product = word_pi_up(pi, k) *
                                build_e_word(jones_planar_factorize(beta, k)) *
                                word_pi_down(sigma, k);
        HeisMorphism reduced = eval_phi(product);
        auto deg_alpha = degree(alpha.matching, obj, obj);
        result = product;
        for (const auto& [key, c] : reduced.terms()) {
            if (!key.first.empty() || !key.second.dots.empty())
                throw std::logic_error("semisimple product reduced outside the dotless span");
            if (key.second == alpha) {
                if (c != 1) throw std::logic_error("leading coefficient is not one");
                continue;
            }
            if (!(degree(key.second.matching, obj, obj) > deg_alpha))
                throw std::logic_error("correction term does not raise the degree");
            result -= c * decompose_endo(key.second, k);
        }
    }
    memo.emplace(std::make_pair(k, alpha.matching), result);
    return result;
}

AffineElement heis_preimage(const HeisMorphism& m, int k) {
    AffineElement out(k);
    for (const auto& [key, c] : m.terms()) {
        const auto& [bubbles, diagram] = key;
        AffineWord pre, post;
        for (const auto& [w, mult] : bubbles)
            for (int t = 0; t < mult; ++t) pre.push_back({'z', w});
        for (const auto& [code, cnt] : diagram.dots) {
            // dots at top targets multiply on the left, bottom targets right
            for (int t = 0; t < cnt; ++t) {
                if (code > 0)
                    pre.push_back({'x', code});
                else
                    post.push_back({'x', -code});
            }
        }
        AffineElement mid = decompose_endo(BasisDiagram{diagram.matching, {}}, k);
        out += c * (AffineElement::word(k, pre) * mid * AffineElement::word(k, post));
    }
    return out;
}

}  // namespace apa::heis
