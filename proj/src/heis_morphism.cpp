#include <algorithm>
#include <sstream>

#include "apa/heis/map.hpp"

namespace apa::heis {

HeisMorphism HeisMorphism::identity(const ObjectWord& w) {
    HeisMorphism m(w, w);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= static_cast<int>(w.size()); ++i) pairs.push_back({-i, i});
    m.add_term({}, BasisDiagram{Matching::of(std::move(pairs)), {}}, Rat(1));
    return m;
}

void HeisMorphism::add_term(const BubbleMonomial& b, const BasisDiagram& d, const Rat& c) {
    if (c == 0) return;
    auto key = std::make_pair(b, d);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

HeisMorphism HeisMorphism::operator-() const {
    HeisMorphism r(top_, bottom_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

HeisMorphism operator+(const HeisMorphism& a, const HeisMorphism& b) {
    if (a.top_ != b.top_ || a.bottom_ != b.bottom_) {
        if (a.terms_.empty()) return b;
        if (b.terms_.empty()) return a;
        throw std::invalid_argument("morphism add: boundary mismatch");
    }
    HeisMorphism r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
    return r;
}

HeisMorphism operator-(const HeisMorphism& a, const HeisMorphism& b) { return a + (-b); }

HeisMorphism operator*(const Rat& c, const HeisMorphism& a) {
    HeisMorphism r(a.top_, a.bottom_);
    if (c == 0) return r;
    for (const auto& [k, v] : a.terms_) r.terms_.emplace(k, c * v);
    return r;
}

std::string HeisMorphism::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << rat_to_string(c) << "*";
        for (const auto& [w, mult] : key.first) os << "c" << w << "^" << mult << ".";
        os << "[";
        for (const auto& [x, y] : key.second.matching.pairs) os << "(" << x << "," << y << ")";
        for (const auto& [ep, d] : key.second.dots) os << " r" << ep << "^" << d;
        os << "]";
    }
    return os.str();
}

namespace {

int cyclic_pos(int code, int m, int n) {
    if (code < 0) return -code - 1;       // bottoms, left to right
    return m + (n - code);                // tops, right to left
}

bool chords_cross(std::pair<int, int> a, std::pair<int, int> b, int m, int n) {
    int a1 = cyclic_pos(a.first, m, n), a2 = cyclic_pos(a.second, m, n);
    int b1 = cyclic_pos(b.first, m, n), b2 = cyclic_pos(b.second, m, n);
    auto between = [&](int x) {
        if (a1 < a2) return a1 < x && x < a2;
        return x > a1 || x < a2;
    };
    return between(b1) != between(b2);
}

struct Strand {
    int start;   // endpoint code where this token was seeded
    int target;  // matched partner
    Arrow arrow;
};

// Eliminates the same-row arcs of one row by caps (bottom row) or cups (top
// row), emitting crossings that move interveners out of the way; layers are
// produced in building order away from that row.
struct RowPlan {
    std::vector<SliceLayer> layers;  // ordered from the row outward
    std::vector<Strand> through;     // survivors, in final interface order
};

RowPlan eliminate_row_arcs(std::vector<Strand> cur, bool bottom_row, int m, int n) {
    (void)m;
    (void)n;
    RowPlan plan;
    auto emit_cross = [&](int pos0) {  // swap positions pos0, pos0+1 (0-based pos0)
        plan.layers.push_back({SliceLayer::Cross, pos0 + 1, Arrow::Up});
        std::swap(cur[pos0], cur[pos0 + 1]);
    };
    while (true) {
        // smallest-gap same-row pair
        int best_a = -1, best_b = -1;
        for (std::size_t a = 0; a < cur.size(); ++a) {
            if ((cur[a].target < 0) != bottom_row) continue;
            for (std::size_t b = a + 1; b < cur.size(); ++b) {
                if (cur[b].start == cur[a].target) {
                    if (best_a < 0 || static_cast<int>(b - a) < best_b - best_a) {
                        best_a = static_cast<int>(a);
                        best_b = static_cast<int>(b);
                    }
                }
            }
        }
        if (best_a < 0) break;
        // row positions are the code magnitudes, ascending left to right
        int p = std::abs(cur[best_a].start), q = std::abs(cur[best_b].start);
        int lo = std::min(p, q), hi = std::max(p, q);
        while (best_b - best_a > 1) {
            // leftmost intervener headed left, otherwise rightmost headed right
            int go_left = -1, go_right = -1;
            for (int g = best_a + 1; g < best_b; ++g) {
                bool left = false;  // cross-row targets may exit either way
                if ((cur[g].target < 0) == bottom_row) {
                    int t = std::abs(cur[g].target);
                    if (t > lo && t < hi)
                        throw std::logic_error("intervener nested in the processed arc");
                    left = t < lo;
                }
                if (left && go_left < 0) go_left = g;
                if (!left) go_right = g;
            }
            if (go_left >= 0) {
                for (int s = go_left - 1; s >= best_a; --s) emit_cross(s);
                ++best_a;
            } else {
                for (int s = go_right; s < best_b; ++s) emit_cross(s);
                --best_b;
            }
        }
        // close the adjacent pair
        Arrow left_arrow = cur[best_a].arrow;
        plan.layers.push_back(
            {bottom_row ? SliceLayer::Cap : SliceLayer::Cup, best_a + 1, left_arrow});
        cur.erase(cur.begin() + best_a, cur.begin() + best_b + 1);
    }
    plan.through = std::move(cur);
    return plan;
}

}  // namespace

SliceDiagram basis_to_slices(const BasisDiagram& b, const ObjectWord& top,
                             const ObjectWord& bottom) {
    const int n = static_cast<int>(top.size());
    const int m = static_cast<int>(bottom.size());
    if (!matching_valid(b.matching, top, bottom))
        throw std::invalid_argument("basis_to_slices: invalid matching");

    std::vector<SliceLayer> up;  // collected bottom-up
    // bottom target dots sit at the very bottom
    for (const auto& [code, cnt] : b.dots)
        if (code < 0)
            for (int t = 0; t < cnt; ++t) up.push_back({SliceLayer::Dot, -code, Arrow::Up});

    std::vector<Strand> bot;
    for (int i = 1; i <= m; ++i)
        bot.push_back({-i, b.matching.partner(-i), bottom[i - 1]});
    RowPlan bplan = eliminate_row_arcs(std::move(bot), true, m, n);
    for (const auto& l : bplan.layers) up.push_back(l);

    std::vector<Strand> topr;
    for (int j = 1; j <= n; ++j)
        topr.push_back({j, b.matching.partner(j), top[j - 1]});
    RowPlan tplan = eliminate_row_arcs(std::move(topr), false, m, n);

    // sort the through strands into the top-side order by adjacent swaps
    std::vector<Strand> cur = bplan.through;
    auto desired = tplan.through;  // targets of these are bottom codes
    if (cur.size() != desired.size()) throw std::logic_error("through strand count mismatch");
    auto slot_of = [&](const Strand& s) {
        for (std::size_t i = 0; i < desired.size(); ++i)
            if (desired[i].start == s.target) return static_cast<int>(i);
        throw std::logic_error("through strand has no top slot");
    };
    std::vector<SliceLayer> perm;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            if (slot_of(cur[i]) > slot_of(cur[i + 1])) {
                perm.push_back({SliceLayer::Cross, static_cast<int>(i) + 1, Arrow::Up});
                std::swap(cur[i], cur[i + 1]);
                moved = true;
            }
        }
    }
    for (const auto& l : perm) up.push_back(l);
    // top-side layers were produced top-down; append them reversed
    for (auto it = tplan.layers.rbegin(); it != tplan.layers.rend(); ++it) up.push_back(*it);
    for (const auto& [code, cnt] : b.dots)
        if (code > 0)
            for (int t = 0; t < cnt; ++t) up.push_back({SliceLayer::Dot, code, Arrow::Up});

    SliceDiagram d;
    d.top = top;
    d.bottom = bottom;
    d.layers.assign(up.rbegin(), up.rend());
    d.interfaces();  // validate

    // confirm the drawing realizes the matching with chord-minimal crossings
    BuiltMap built = build_from_slices(d);
    const Map& map = built.map;
    if (!built.loops.empty()) throw std::logic_error("basis_to_slices produced loops");
    std::map<int, int> edge_curve;
    std::vector<std::pair<int, int>> pairs;
    int curve_id = 0;
    std::vector<std::pair<int, int>> curve_codes;
    for (int code : [&] {
             std::vector<int> v;
             for (int j = 1; j <= n; ++j)
                 if (top[j - 1] == Arrow::Down) v.push_back(j);
             for (int i = 1; i <= m; ++i)
                 if (bottom[i - 1] == Arrow::Up) v.push_back(-i);
             return v;
         }()) {
        Port port{-1, code};
        int e = map.edge_at(port);
        while (true) {
            edge_curve[e] = curve_id;
            if (map.edges[e].to.boundary()) break;
            e = map.continue_through(map.edges[e].to);
        }
        pairs.push_back({code, map.edges[e].to.slot});
        curve_codes.push_back(pairs.back());
        ++curve_id;
    }
    if (!(Matching::of(pairs) == b.matching))
        throw std::logic_error("basis_to_slices: wrong matching");
    std::map<std::pair<int, int>, int> pair_crossings;
    for (std::size_t c = 0; c < map.crossings.size(); ++c) {
        if (!map.crossings[c].alive) continue;
        int ca = edge_curve.at(map.edge_at(Port{static_cast<int>(c), 0}));
        int cb = edge_curve.at(map.edge_at(Port{static_cast<int>(c), 1}));
        pair_crossings[{std::min(ca, cb), std::max(ca, cb)}] += 1;
    }
    for (int a = 0; a < curve_id; ++a)
        for (int bqq = a + 1; bqq < curve_id; ++bqq) {
            int want = chords_cross(curve_codes[a], curve_codes[bqq], m, n) ? 1 : 0;
            auto it = pair_crossings.find({a, bqq});
            int got = it == pair_crossings.end() ? 0 : it->second;
            if (want != got) throw std::logic_error("basis_to_slices: non-minimal drawing");
        }
    for (const auto& [key, cnt] : pair_crossings)
        if (key.first == key.second) throw std::logic_error("basis_to_slices: self crossing");
    return d;
}

HeisMorphism compose(const HeisMorphism& f, const HeisMorphism& g) {
    if (f.bottom() != g.top()) throw std::invalid_argument("compose: boundary mismatch");
    HeisMorphism out(f.top(), g.bottom());
    for (const auto& [fk, fc] : f.terms()) {
        SliceDiagram fd = basis_to_slices(fk.second, f.top(), f.bottom());
        for (const auto& [gk, gc] : g.terms()) {
            SliceDiagram gd = basis_to_slices(gk.second, g.top(), g.bottom());
            HeisMorphism r = reduce(fd.stacked_on(gd));
            BubbleMonomial outer = fk.first;
            for (const auto& [w, mult] : gk.first) outer[w] += mult;
            for (const auto& [rk, rc] : r.terms()) {
                BubbleMonomial mono = outer;
                for (const auto& [w, mult] : rk.first) mono[w] += mult;
                out.add_term(mono, rk.second, fc * gc * rc);
            }
        }
    }
    return out;
}

HeisMorphism tensor(const HeisMorphism& f, const HeisMorphism& g) {
    ObjectWord t = f.top(), b = f.bottom();
    t.insert(t.end(), g.top().begin(), g.top().end());
    b.insert(b.end(), g.bottom().begin(), g.bottom().end());
    HeisMorphism out(t, b);
    for (const auto& [fk, fc] : f.terms()) {
        SliceDiagram fd = basis_to_slices(fk.second, f.top(), f.bottom());
        for (const auto& [gk, gc] : g.terms()) {
            SliceDiagram gd = basis_to_slices(gk.second, g.top(), g.bottom());
            HeisMorphism r = reduce(fd.beside(gd));
            BubbleMonomial outer = fk.first;
            for (const auto& [w, mult] : gk.first) outer[w] += mult;
            for (const auto& [rk, rc] : r.terms()) {
                BubbleMonomial mono = outer;
                for (const auto& [w, mult] : rk.first) mono[w] += mult;
                out.add_term(mono, rk.second, fc * gc * rc);
            }
        }
    }
    return out;
}

}  // namespace apa::heis
