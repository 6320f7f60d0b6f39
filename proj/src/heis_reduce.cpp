#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <optional>
#include <random>

#include "apa/heis/map.hpp"
#include "apa/palgebra.hpp"

namespace apa::heis {

long reduce_step_budget() {
    if (const char* env = std::getenv("RELATION_STEP_BUDGET")) {
        long v = std::atol(env);
        if (v > 0) return v;
    }
    return 1000000;
}

namespace {

struct WorkItem {
    Rat coeff;
    BubbleMonomial bubbles;
    Map map;
};

void charge(long& budget, long amount = 1) {
    budget -= amount;
    if (budget < 0) throw ReduceStuck("rewrite step budget exhausted");
}

// scalar (x) bubble expansion of a batch of closed loops
std::vector<std::pair<Rat, BubbleMonomial>> loop_factor(const std::vector<LoopValue>& loops) {
    std::vector<std::pair<Rat, BubbleMonomial>> acc{{Rat(1), {}}};
    for (const auto& l : loops) {
        if (l.turn != 8 && l.turn != -8) throw std::logic_error("loop turn not a full turn");
        if (l.turn == -8) {
            for (auto& [c, b] : acc) b[l.dots] += 1;
            continue;
        }
        if (l.dots == 0) continue;  // free anticlockwise circle
        auto conv = ccw_bubble_convert(l.dots);
        std::vector<std::pair<Rat, BubbleMonomial>> next;
        for (const auto& [c, b] : acc)
            for (const auto& [mono, v] : conv) {
                BubbleMonomial nb = b;
                for (const auto& [w, mult] : mono) nb[w] += mult;
                next.push_back({c * v, nb});
            }
        acc = std::move(next);
    }
    return acc;
}

void push_with_loops(std::vector<WorkItem>& stack, WorkItem item,
                     const std::vector<LoopValue>& loops) {
    for (auto& [c, b] : loop_factor(loops)) {
        WorkItem w = item;
        w.coeff *= c;
        for (const auto& [dots, mult] : b) w.bubbles[dots] += mult;
        if (w.coeff != 0) stack.push_back(std::move(w));
    }
}

struct FacePatterns {
    std::vector<Dart> monogons;                  // the teardrop side
    std::vector<std::pair<Dart, Dart>> bigons;   // the two sides
    std::vector<Face> triangles;
};

FacePatterns scan_faces(const Map& m) {
    FacePatterns out;
    for (const auto& f : enumerate_faces(m)) {
        if (f.touches_boundary) continue;
        if (f.cycle.size() == 1) {
            out.monogons.push_back(f.cycle[0]);
        } else if (f.cycle.size() == 2) {
            int e = f.cycle[0].edge, g = f.cycle[1].edge;
            if (e == g) continue;
            const auto& E = m.edges[e];
            if (E.from.node == E.to.node) continue;
            out.bigons.push_back({f.cycle[0], f.cycle[1]});
        } else if (f.cycle.size() == 3) {
            std::set<int> edges{f.cycle[0].edge, f.cycle[1].edge, f.cycle[2].edge};
            if (edges.size() != 3) continue;
            bool dotted = false;
            std::set<int> corners;
            for (int e : edges) {
                dotted = dotted || m.edges[e].dots > 0;
                corners.insert(m.edges[e].from.node);
                corners.insert(m.edges[e].to.node);
            }
            if (dotted || corners.size() != 3) continue;
            out.triangles.push_back(f);
        }
    }
    return out;
}

// curve decomposition; returns per-edge curve id and whether a multi-crossing
// pair or self-crossing exists
struct CurveInfo {
    std::map<int, int> edge_curve;
    bool needs_uncrossing = false;
};

CurveInfo curves_of(const Map& m) {
    CurveInfo info;
    int next_id = 0;
    auto walk = [&m, &info](int start_edge, int id) {
        int e = start_edge;
        while (!info.edge_curve.count(e)) {
            info.edge_curve[e] = id;
            const Port& to = m.edges[e].to;
            if (to.boundary()) break;
            e = m.continue_through(to);
        }
    };
    for (int e : m.alive_edge_ids()) {
        if (info.edge_curve.count(e)) continue;
        if (m.edges[e].from.boundary()) walk(e, next_id++);
    }
    for (int e : m.alive_edge_ids())
        if (!info.edge_curve.count(e)) walk(e, next_id++);  // closed curves
    std::map<std::pair<int, int>, int> pair_count;
    for (std::size_t c = 0; c < m.crossings.size(); ++c) {
        if (!m.crossings[c].alive) continue;
        Port p0{static_cast<int>(c), 0}, p1{static_cast<int>(c), 1};
        int ca = info.edge_curve.at(m.edge_at(p0));
        int cb = info.edge_curve.at(m.edge_at(p1));
        if (ca == cb) info.needs_uncrossing = true;
        int lo = std::min(ca, cb), hi = std::max(ca, cb);
        if (++pair_count[{lo, hi}] >= 2) info.needs_uncrossing = true;
    }
    return info;
}

bool has_resolvable_face(const Map& m) {
    auto pat = scan_faces(m);
    return !pat.monogons.empty() || !pat.bigons.empty();
}

std::optional<Map> h1_search(const Map& start, long& budget, std::mt19937_64* rng) {
    std::map<std::string, bool> seen;
    std::deque<Map> queue;
    queue.push_back(start);
    seen[start.serialize()] = true;
    while (!queue.empty()) {
        charge(budget);
        Map m = std::move(queue.front());
        queue.pop_front();
        if (has_resolvable_face(m)) return m;
        auto pat = scan_faces(m);
        auto tris = pat.triangles;
        if (rng) std::shuffle(tris.begin(), tris.end(), *rng);
        for (const auto& tri : tris) {
            Map next = m;
            flip_triangle(next, tri);
            next.check();
            std::string key = next.serialize();
            if (seen.emplace(key, true).second) queue.push_back(std::move(next));
        }
        if (seen.size() > 30000) break;
    }
    return std::nullopt;
}

// one dot slide with its smoothing correction
void slide_dot(std::vector<WorkItem>& stack, WorkItem& item, int edge) {
    int sign = dot_slide_sign(item.map, edge);
    WorkItem corr = item;
    corr.coeff *= Rat(sign);
    corr.map.edges[edge].dots -= 1;
    int c = corr.map.edges[edge].to.node;
    auto loops = smooth_crossing(corr.map, c);
    corr.map.check();
    std::vector<WorkItem> tmp;
    push_with_loops(tmp, std::move(corr), loops);
    for (auto& t : tmp) stack.push_back(std::move(t));
    slide_dot_forward(item.map, edge);
}

void readout(const WorkItem& item,
             std::map<std::pair<BubbleMonomial, BasisDiagram>, Rat>& acc,
             const ObjectWord& top, const ObjectWord& bottom) {
    const Map& m = item.map;
    std::vector<std::pair<int, int>> pairs;
    std::map<int, int> dots;
    std::set<int> visited;
    auto source_codes = [&]() {
        std::vector<int> codes;
        for (std::size_t i = 0; i < top.size(); ++i)
            if (top[i] == Arrow::Down) codes.push_back(static_cast<int>(i) + 1);
        for (std::size_t i = 0; i < bottom.size(); ++i)
            if (bottom[i] == Arrow::Up) codes.push_back(-(static_cast<int>(i) + 1));
        return codes;
    };
    for (int code : source_codes()) {
        Port port{-1, code};
        int e = m.edge_at(port);
        if (e < 0 || !(m.edges[e].from == port)) throw std::logic_error("readout: bad source");
        int total_dots = 0;
        while (true) {
            visited.insert(e);
            total_dots += m.edges[e].dots;
            if (m.edges[e].to.boundary()) break;
            if (m.edges[e].dots) throw std::logic_error("readout: dot not at its target");
            e = m.continue_through(m.edges[e].to);
        }
        int target = m.edges[e].to.slot;
        if (m.edges[e].dots != total_dots) throw std::logic_error("readout: stray dots");
        pairs.push_back({code, target});
        if (total_dots) dots[target] = total_dots;
    }
    if (visited.size() != m.alive_edge_ids().size())
        throw std::logic_error("readout: unvisited edges remain");
    BasisDiagram b{Matching::of(std::move(pairs)), std::move(dots)};
    if (!matching_valid(b.matching, top, bottom)) throw std::logic_error("readout: bad matching");
    auto key = std::make_pair(item.bubbles, std::move(b));
    auto it = acc.find(key);
    if (it == acc.end())
        acc.emplace(std::move(key), item.coeff);
    else {
        it->second += item.coeff;
        if (it->second == 0) acc.erase(it);
    }
}

HeisMorphism reduce_impl(std::vector<WorkItem> stack, const ObjectWord& top,
                         const ObjectWord& bottom, std::mt19937_64* rng) {
    const bool trace = std::getenv("APA_TRACE") != nullptr;
    long budget = reduce_step_budget();
    std::map<std::pair<BubbleMonomial, BasisDiagram>, Rat> acc;
    while (!stack.empty()) {
        WorkItem item = std::move(stack.back());
        stack.pop_back();
        if (item.coeff == 0) continue;
        bool dead = false;
        while (true) {
            charge(budget);
            item.map.check();
            if (!faces_turn_valid(item.map))
                throw std::logic_error("face invariant broken during rewriting");
            auto pat = scan_faces(item.map);
            if (rng) {
                std::shuffle(pat.monogons.begin(), pat.monogons.end(), *rng);
                std::shuffle(pat.bigons.begin(), pat.bigons.end(), *rng);
            }
            if (!pat.monogons.empty()) {
                // internal faces are walked counterclockwise, so walking along
                // the flow means the teardrop circulates ccw: a left curl
                Dart d = pat.monogons.front();
                if (trace)
                    fprintf(stderr, "MONO e=%d fwd=%d dots=%d\n", d.edge, (int)d.fwd,
                            item.map.edges[d.edge].dots);
                int loop_edge = d.edge;
                if (item.map.edges[loop_edge].dots > 0) {
                    slide_dot(stack, item, loop_edge);
                    continue;
                }
                if (d.fwd) {
                    dead = true;  // left curl annihilates the summand
                    break;
                }
                auto loops = remove_curl(item.map, loop_edge, true);
                if (!loops.empty()) {
                    push_with_loops(stack, std::move(item), loops);
                    dead = true;
                    break;
                }
                continue;
            }
            if (!pat.bigons.empty()) {
                auto [de, df] = pat.bigons.front();
                int e = de.edge, f = df.edge;
                if (trace)
                    fprintf(stderr, "BIGON e=%d(%d) f=%d(%d) dots=%d,%d map=%s\n", e,
                            (int)de.fwd, f, (int)df.fwd, item.map.edges[e].dots,
                            item.map.edges[f].dots, item.map.serialize().c_str());
                if (item.map.edges[e].dots > 0) {
                    slide_dot(stack, item, e);
                    continue;
                }
                if (item.map.edges[f].dots > 0) {
                    slide_dot(stack, item, f);
                    continue;
                }
                // coherent flow traced against the walk circulates clockwise:
                // the pulling-apart there costs the turnback correction
                if (!de.fwd && !df.fwd) {
                    WorkItem corr = item;
                    corr.coeff = -corr.coeff;
                    auto closs = turnback_bigon(corr.map, e, f);
                    corr.map.check();
                    push_with_loops(stack, std::move(corr), closs);
                }
                auto loops = uncross_bigon(item.map, e, f);
                if (!loops.empty()) {
                    push_with_loops(stack, std::move(item), loops);
                    dead = true;
                    break;
                }
                continue;
            }
            auto curves = curves_of(item.map);
            if (curves.needs_uncrossing) {
                if (trace) fprintf(stderr, "H1SEARCH crossings=%d\n", item.map.alive_crossings());
                auto found = h1_search(item.map, budget, rng);
                if (!found)
                    throw ReduceStuck("no crossing-reducing move reachable by slides");
                item.map = std::move(*found);
                continue;
            }
            // home the remaining dots
            bool slid = false;
            for (int e : item.map.alive_edge_ids()) {
                if (item.map.edges[e].dots > 0 && !item.map.edges[e].to.boundary()) {
                    slide_dot(stack, item, e);
                    slid = true;
                    break;
                }
            }
            if (slid) continue;
            break;
        }
        if (!dead) {
            if (trace) fprintf(stderr, "READOUT coeff=%s\n", rat_to_string(item.coeff).c_str());
            readout(item, acc, top, bottom);
        } else if (trace) {
            fprintf(stderr, "DEAD\n");
        }
    }
    HeisMorphism out(top, bottom);
    for (auto& [key, c] : acc) out.add_term(key.first, key.second, c);
    return out;
}

}  // namespace

HeisMorphism reduce(const SliceDiagram& d) {
    return reduce(std::vector<std::pair<Rat, SliceDiagram>>{{Rat(1), d}});
}

HeisMorphism reduce(const std::vector<std::pair<Rat, SliceDiagram>>& sum) {
    if (sum.empty()) return HeisMorphism();
    std::vector<WorkItem> stack;
    for (const auto& [c, d] : sum) {
        if (d.top != sum.front().second.top || d.bottom != sum.front().second.bottom)
            throw std::invalid_argument("reduce: mixed boundaries");
        BuiltMap built = build_from_slices(d);
        WorkItem item{c, {}, std::move(built.map)};
        std::vector<WorkItem> tmp;
        push_with_loops(tmp, std::move(item), built.loops);
        for (auto& t : tmp) stack.push_back(std::move(t));
    }
    return reduce_impl(std::move(stack), sum.front().second.top, sum.front().second.bottom,
                       nullptr);
}

HeisMorphism reduce_shuffled(const SliceDiagram& d, unsigned seed) {
    std::mt19937_64 rng(seed);
    BuiltMap built = build_from_slices(d);
    std::vector<WorkItem> stack;
    WorkItem item{Rat(1), {}, std::move(built.map)};
    std::vector<WorkItem> tmp;
    push_with_loops(tmp, std::move(item), built.loops);
    for (auto& t : tmp) stack.push_back(std::move(t));
    return reduce_impl(std::move(stack), d.top, d.bottom, &rng);
}

// ---- anticlockwise bubble conversion ----

std::map<BubbleMonomial, Rat> ccw_bubble_convert(int w) {
    static std::map<int, std::map<BubbleMonomial, Rat>> memo;
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    std::map<BubbleMonomial, Rat> out;
    if (w == 0) {
        out[BubbleMonomial{}] = 1;
    } else {
        // The value is pinned by the diagram algebra: closing w dots inside
        // the anticlockwise loop realizes e_2 x_2^w e_2, whose projection is
        // a polynomial multiple of e_2, and z(z-1)^l corresponds to the
        // clockwise bubble with l dots.
        PAElement acc = pa_e(2, 2);
        PAElement x = norm_X(2, 2);
        for (int j = 0; j < w; ++j) acc = acc * x;
        acc = acc * pa_e(2, 2);
        PolyZ p;
        for (const auto& [diagram, poly] : acc.terms()) {
            if (!(diagram == SetPartitionDiagram(2, {{1, 2, -1, -2}})))
                throw std::logic_error("loop value is not a bubble multiple");
            p = poly;
        }
        // expand in the basis 1, z, z(z-1), z(z-1)^2, ...
        PolyZ zpoly = PolyZ::z();
        for (int l = static_cast<int>(p.degree()) - 1; l >= 0 && !p.is_zero(); --l) {
            if (p.degree() < static_cast<std::size_t>(l + 1)) continue;
            Rat lead = p.coeffs().back();
            PolyZ basis = zpoly * (zpoly - PolyZ(1)).pow(static_cast<unsigned>(l));
            p = p - PolyZ(lead) * basis;
            if (lead != 0) out[BubbleMonomial{{l, 1}}] += lead;
        }
        if (!p.is_zero()) {
            if (p.degree() != 0) throw std::logic_error("loop expansion left a tail");
            out[BubbleMonomial{}] += p.coeffs()[0];
        }
        for (auto it = out.begin(); it != out.end();)
            it = (it->second == 0) ? out.erase(it) : std::next(it);
    }
    memo[w] = out;
    return out;
}

}  // namespace apa::heis

namespace apa::heis {

// test scaffolding: reduce a built map after applying the i-th available
// triangle flip (depth-first by indices)
HeisMorphism debug_reduce_with_flips(const SliceDiagram& d, const std::vector<int>& flips,
                                     unsigned seed) {
    BuiltMap built = build_from_slices(d);
    Map m = std::move(built.map);
    for (int idx : flips) {
        auto pat = scan_faces(m);
        if (idx < 0 || idx >= static_cast<int>(pat.triangles.size()))
            throw std::invalid_argument("flip index out of range");
        flip_triangle(m, pat.triangles[idx]);
        m.check();
    }
    std::vector<WorkItem> stack;
    WorkItem item{Rat(1), {}, std::move(m)};
    std::vector<WorkItem> tmp;
    push_with_loops(tmp, std::move(item), built.loops);
    for (auto& t : tmp) stack.push_back(std::move(t));
    if (seed == 0) return reduce_impl(std::move(stack), d.top, d.bottom, nullptr);
    std::mt19937_64 rng(seed);
    return reduce_impl(std::move(stack), d.top, d.bottom, &rng);
}

int debug_triangle_count(const SliceDiagram& d, const std::vector<int>& flips) {
    BuiltMap built = build_from_slices(d);
    Map m = std::move(built.map);
    for (int idx : flips) {
        auto pat = scan_faces(m);
        flip_triangle(m, pat.triangles[idx]);
    }
    return static_cast<int>(scan_faces(m).triangles.size());
}

}  // namespace apa::heis
