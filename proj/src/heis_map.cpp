#include "apa/heis/map.hpp"

#include <algorithm>
#include <functional>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace apa::heis {

int short_rot(int from, int to) {
    return ((to - from + 3) % 8 + 8) % 8 - 3;  // in [-3, 4]
}

int Map::slot_dir(const Port& p) const {
    if (p.boundary()) return p.slot > 0 ? kS : kN;
    return (crossings[p.node].dir0 + 2 * p.slot) % 8;
}

int Map::edge_at(const Port& p) const {
    auto it = port_edge_.find(p);
    return it == port_edge_.end() ? -1 : it->second;
}

void Map::attach(int edge_id, bool at_from) {
    const Port& p = at_from ? edges[edge_id].from : edges[edge_id].to;
    if (port_edge_.count(p)) throw std::logic_error("port already occupied");
    port_edge_[p] = edge_id;
}

void Map::detach(const Port& p) { port_edge_.erase(p); }

int Map::new_crossing(int dir0) {
    crossings.push_back({true, dir0});
    return static_cast<int>(crossings.size()) - 1;
}

int Map::new_edge(Port from, Port to, int dots, int turn) {
    edges.push_back({true, from, to, dots, turn});
    int id = static_cast<int>(edges.size()) - 1;
    attach(id, true);
    attach(id, false);
    return id;
}

void Map::kill_edge(int e) {
    if (!edges[e].alive) return;
    detach(edges[e].from);
    detach(edges[e].to);
    edges[e].alive = false;
}

void Map::kill_crossing(int c) { crossings[c].alive = false; }

int Map::alive_crossings() const {
    int n = 0;
    for (const auto& c : crossings) n += c.alive;
    return n;
}

std::vector<int> Map::alive_edge_ids() const {
    std::vector<int> ids;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].alive) ids.push_back(static_cast<int>(i));
    return ids;
}

int Map::continue_through(const Port& p) const {
    if (p.boundary()) throw std::logic_error("cannot continue through a boundary port");
    Port out{p.node, partner_slot(p.slot)};
    int e = edge_at(out);
    if (e < 0 || !(edges[e].from == out)) throw std::logic_error("broken strand at crossing");
    return e;
}

void Map::check() const {
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (!e.alive) continue;
        if (edge_at(e.from) != static_cast<int>(i) || edge_at(e.to) != static_cast<int>(i))
            throw std::logic_error("edge not attached at its ports");
        int need = ((slot_dir(e.to) + 4 - slot_dir(e.from)) % 8 + 8) % 8;
        if (((e.turn % 8) + 8) % 8 != need) throw std::logic_error("edge turn inconsistent");
        if (e.dots < 0) throw std::logic_error("negative dots");
    }
    for (std::size_t c = 0; c < crossings.size(); ++c) {
        if (!crossings[c].alive) continue;
        for (int pass = 0; pass < 2; ++pass) {
            int ins = 0, outs = 0;
            for (int s = pass; s < 4; s += 2) {
                Port p{static_cast<int>(c), s};
                int e = edge_at(p);
                if (e < 0 || !edges[e].alive) throw std::logic_error("crossing slot unattached");
                if (edges[e].to == p) ++ins;
                if (edges[e].from == p) ++outs;
            }
            if (ins != 1 || outs != 1) throw std::logic_error("flow broken at crossing");
        }
    }
}

std::string Map::serialize() const {
    std::ostringstream os;
    for (std::size_t c = 0; c < crossings.size(); ++c)
        if (crossings[c].alive) os << "c" << c << ":" << crossings[c].dir0 << ";";
    for (const auto& e : edges) {
        if (!e.alive) continue;
        os << "(" << e.from.node << "," << e.from.slot << ")->(" << e.to.node << ","
           << e.to.slot << ")d" << e.dots << "t" << e.turn << ";";
    }
    return os.str();
}

// ---- faces ----

std::vector<Face> enumerate_faces(const Map& m) {
    std::set<Dart> seen;
    std::vector<Face> faces;
    auto arrival = [&m](const Dart& d) { return d.fwd ? m.edges[d.edge].to : m.edges[d.edge].from; };
    auto next_dart = [&m, &arrival](const Dart& d, bool& boundary) -> Dart {
        Port p = arrival(d);
        if (p.boundary()) {
            boundary = true;
            return {d.edge, !d.fwd};  // bounce back along the same edge
        }
        Port q{p.node, (p.slot + 3) % 4};
        int e = m.edge_at(q);
        return {e, m.edges[e].from == q};
    };
    for (int e : m.alive_edge_ids()) {
        for (bool fwd : {true, false}) {
            Dart start{e, fwd};
            if (seen.count(start)) continue;
            Face f;
            Dart d = start;
            do {
                seen.insert(d);
                f.cycle.push_back(d);
                d = next_dart(d, f.touches_boundary);
            } while (!(d == start));
            faces.push_back(std::move(f));
        }
    }
    return faces;
}

int face_walk_turn(const Map& m, const Face& f) {
    int total = 0;
    const std::size_t n = f.cycle.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Dart& d = f.cycle[i];
        const Map::Edge& e = m.edges[d.edge];
        total += d.fwd ? e.turn : -e.turn;
        // corner junction between this dart's arrival and the next one's start
        const Dart& nd = f.cycle[(i + 1) % n];
        const Map::Edge& ne = m.edges[nd.edge];
        int arrive = d.fwd ? compass_opposite(m.slot_dir(e.to)) : compass_opposite(m.slot_dir(e.from));
        int depart = nd.fwd ? m.slot_dir(ne.from) : m.slot_dir(ne.to);
        total += short_rot(arrive, depart);
    }
    return total;
}

bool faces_turn_valid(const Map& m) {
    // edges connected through crossings form drawing components
    std::map<int, int> comp;
    {
        std::map<int, int> parent;
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int e : m.alive_edge_ids()) parent[e] = e;
        for (std::size_t c = 0; c < m.crossings.size(); ++c) {
            if (!m.crossings[c].alive) continue;
            int first = -1;
            for (int s = 0; s < 4; ++s) {
                int e = m.edge_at(Port{static_cast<int>(c), s});
                if (first < 0)
                    first = e;
                else
                    parent[find(e)] = find(first);
            }
        }
        for (int e : m.alive_edge_ids()) comp[e] = find(e);
    }
    // a component with a boundary endpoint has its outer face flagged as
    // boundary-touching; a closed component owns exactly one outer face,
    // which turns the other way
    std::map<int, int> closed_outer;
    std::set<int> boundary_comps;
    std::vector<std::pair<int, int>> pending;  // (component, turn)
    for (const auto& f : enumerate_faces(m)) {
        if (f.cycle.empty()) continue;
        int c = comp.at(f.cycle[0].edge);
        if (f.touches_boundary) {
            boundary_comps.insert(c);
            continue;
        }
        int t = face_walk_turn(m, f);
        if (t == 8) continue;
        if (t != -8) return false;
        pending.push_back({c, t});
    }
    for (const auto& [c, t] : pending) {
        (void)t;
        if (boundary_comps.count(c)) return false;
        if (++closed_outer[c] > 1) return false;
    }
    // every closed component needs its outer face
    std::set<int> comps;
    for (const auto& [e, c] : comp) comps.insert(c);
    for (int c : comps)
        if (!boundary_comps.count(c) && !closed_outer.count(c)) return false;
    return true;
}

// ---- contraction utility ----

namespace {

struct Link {
    int from_edge;
    int to_edge;
    int dturn;
};

// Rewire flow so each link's from-edge continues into its to-edge. Consumed
// crossings must be killed by the caller; links must cover every edge-end
// attached to them.
std::vector<LoopValue> contract(Map& m, const std::vector<Link>& links) {
    std::map<int, std::pair<int, int>> next;  // edge -> (next edge, junction turn)
    std::set<int> has_incoming;
    for (const auto& l : links) {
        if (next.count(l.from_edge)) throw std::logic_error("contract: duplicate link source");
        next[l.from_edge] = {l.to_edge, l.dturn};
        has_incoming.insert(l.to_edge);
    }
    std::vector<LoopValue> loops;
    std::set<int> done;
    // open chains first
    for (const auto& [start, ignored] : next) {
        (void)ignored;
        if (has_incoming.count(start) || done.count(start)) continue;
        int turn = m.edges[start].turn;
        int dots = m.edges[start].dots;
        Port from = m.edges[start].from;
        int cur = start;
        done.insert(cur);
        while (next.count(cur)) {
            auto [nxt, dt] = next[cur];
            turn += dt + m.edges[nxt].turn;
            dots += m.edges[nxt].dots;
            cur = nxt;
            done.insert(cur);
        }
        Port to = m.edges[cur].to;
        // release ports along the chain, then create the merged edge
        int walk = start;
        m.kill_edge(walk);
        while (next.count(walk)) {
            int nxt = next[walk].first;
            m.kill_edge(nxt);
            walk = nxt;
        }
        m.new_edge(from, to, dots, turn);
    }
    // remaining links form cycles
    for (const auto& [start, ignored] : next) {
        (void)ignored;
        if (done.count(start)) continue;
        int turn = 0, dots = 0;
        int cur = start;
        while (true) {
            done.insert(cur);
            turn += m.edges[cur].turn;
            dots += m.edges[cur].dots;
            auto [nxt, dt] = next[cur];
            turn += dt;
            m.kill_edge(cur);
            cur = nxt;
            if (cur == start) break;
        }
        loops.push_back({turn, dots});
    }
    return loops;
}

struct StrandEnds {
    int in_edge;   // arrives at the crossing
    int out_edge;  // leaves it
    int in_slot, out_slot;
};

StrandEnds strand_at(const Map& m, int c, int pass) {
    StrandEnds se{-1, -1, -1, -1};
    for (int s = pass; s < 4; s += 2) {
        Port p{c, s};
        int e = m.edge_at(p);
        if (m.edges[e].to == p) {
            se.in_edge = e;
            se.in_slot = s;
        } else {
            se.out_edge = e;
            se.out_slot = s;
        }
    }
    if (se.in_edge < 0 || se.out_edge < 0) throw std::logic_error("strand_at: broken flow");
    return se;
}

int junction_turn(const Map& m, const Port& arrive, const Port& depart) {
    return short_rot(compass_opposite(m.slot_dir(arrive)), m.slot_dir(depart));
}

}  // namespace

std::vector<LoopValue> merge_through(Map& m, int e_in, int e_out) {
    const Port arrive = m.edges[e_in].to;
    const Port depart = m.edges[e_out].from;
    int dt = junction_turn(m, arrive, depart);
    return contract(m, {{e_in, e_out, dt}});
}

std::vector<LoopValue> smooth_crossing(Map& m, int c) {
    StrandEnds a = strand_at(m, c, 0), b = strand_at(m, c, 1);
    std::vector<Link> links;
    links.push_back({a.in_edge, b.out_edge,
                     junction_turn(m, Port{c, a.in_slot}, Port{c, b.out_slot})});
    links.push_back({b.in_edge, a.out_edge,
                     junction_turn(m, Port{c, b.in_slot}, Port{c, a.out_slot})});
    auto loops = contract(m, links);
    m.kill_crossing(c);
    return loops;
}

int monogon_cycle_turn(const Map& m, int loop_edge) {
    const Map::Edge& e = m.edges[loop_edge];
    if (e.from.node != e.to.node) throw std::logic_error("not a curl edge");
    int t = e.turn + junction_turn(m, e.to, e.from);
    if (t != 8 && t != -8) throw std::logic_error("curl turn is not a half..full turn");
    return t;
}

std::vector<LoopValue> remove_curl(Map& m, int loop_edge, bool add_dot) {
    const Map::Edge e = m.edges[loop_edge];
    int c = e.from.node;
    if (e.dots != 0) throw std::logic_error("remove_curl: dotted loop edge");
    // stem flow: arrives at partner(loop.from), leaves at partner(loop.to)
    Port stem_in_port{c, Map::partner_slot(e.from.slot)};
    Port stem_out_port{c, Map::partner_slot(e.to.slot)};
    int stem_in = m.edge_at(stem_in_port);
    int stem_out = m.edge_at(stem_out_port);
    if (!(m.edges[stem_in].to == stem_in_port) || !(m.edges[stem_out].from == stem_out_port))
        throw std::logic_error("remove_curl: stem flow mismatch");
    m.kill_edge(loop_edge);
    int dt = junction_turn(m, stem_in_port, stem_out_port);
    auto loops = contract(m, {{stem_in, stem_out, dt}});
    m.kill_crossing(c);
    if (add_dot) {
        if (!loops.empty())
            loops.back().dots += 1;
        else
            m.edges.back().dots += 1;  // contract's merged edge is the last one
    }
    return loops;
}

std::optional<int> bigon_cycle_turn(const Map& m, int e, int f) {
    const auto& E = m.edges[e];
    const auto& F = m.edges[f];
    int u = E.from.node, v = E.to.node;
    if (!(F.from.node == v && F.to.node == u)) return std::nullopt;  // parallel flows
    int t = E.turn + junction_turn(m, E.to, F.from) + F.turn + junction_turn(m, F.to, E.from);
    if (t != 8 && t != -8) throw std::logic_error("bigon cycle turn is not a full turn");
    return t;
}

std::vector<LoopValue> uncross_bigon(Map& m, int e, int f) {
    const Map::Edge E = m.edges[e];
    const Map::Edge F = m.edges[f];
    int u = E.from.node, v = E.to.node;
    if (u == v) throw std::logic_error("degenerate bigon");
    // strand S through e, strand T through f
    Port s_in_port{u, Map::partner_slot(E.from.slot)};
    Port s_out_port{v, Map::partner_slot(E.to.slot)};
    Port t_in_port{F.from.node, Map::partner_slot(F.from.slot)};
    Port t_out_port{F.to.node, Map::partner_slot(F.to.slot)};
    int s_in = m.edge_at(s_in_port), s_out = m.edge_at(s_out_port);
    int t_in = m.edge_at(t_in_port), t_out = m.edge_at(t_out_port);
    std::vector<Link> links;
    links.push_back({s_in, e, junction_turn(m, s_in_port, E.from)});
    links.push_back({e, s_out, junction_turn(m, E.to, s_out_port)});
    links.push_back({t_in, f, junction_turn(m, t_in_port, F.from)});
    links.push_back({f, t_out, junction_turn(m, F.to, t_out_port)});
    auto loops = contract(m, links);
    m.kill_crossing(u);
    m.kill_crossing(v);
    return loops;
}

std::vector<LoopValue> turnback_bigon(Map& m, int e, int f) {
    const Map::Edge E = m.edges[e];
    const Map::Edge F = m.edges[f];
    int u = E.from.node, v = E.to.node;
    if (!(F.from.node == v && F.to.node == u))
        throw std::logic_error("turnback needs coherent flows");
    Port s_in_port{u, Map::partner_slot(E.from.slot)};
    Port s_out_port{v, Map::partner_slot(E.to.slot)};
    Port t_in_port{v, Map::partner_slot(F.from.slot)};
    Port t_out_port{u, Map::partner_slot(F.to.slot)};
    int s_in = m.edge_at(s_in_port), s_out = m.edge_at(s_out_port);
    int t_in = m.edge_at(t_in_port), t_out = m.edge_at(t_out_port);
    m.kill_edge(e);
    m.kill_edge(f);
    std::vector<Link> links;
    links.push_back({s_in, t_out, junction_turn(m, s_in_port, t_out_port)});
    links.push_back({t_in, s_out, junction_turn(m, t_in_port, s_out_port)});
    auto loops = contract(m, links);
    m.kill_crossing(u);
    m.kill_crossing(v);
    return loops;
}

int slide_dot_forward(Map& m, int e) {
    if (m.edges[e].dots <= 0) throw std::logic_error("no dot to slide");
    if (m.edges[e].to.boundary()) throw std::logic_error("dot already at a boundary");
    int e2 = m.continue_through(m.edges[e].to);
    m.edges[e].dots -= 1;
    m.edges[e2].dots += 1;
    return e2;
}

int dot_slide_sign(const Map& m, int e) {
    Port arrive = m.edges[e].to;
    int c = arrive.node;
    int out_slot = Map::partner_slot(arrive.slot);
    // the other strand's inflow slot, on the clockwise side of our departure
    int right = (out_slot + 3) % 4;
    Port p{c, right};
    int other = m.edge_at(p);
    return (m.edges[other].to == p) ? 1 : -1;
}

void flip_triangle(Map& m, const Face& face) {
    if (face.cycle.size() != 3 || face.touches_boundary)
        throw std::logic_error("flip: not a triangle face");
    struct SideInfo {
        int edge;
        int P, Q;           // from-node, to-node
        int s;              // arrival slot of X_in at P (partner of edge.from.slot)
        int r;              // edge.to.slot at Q
        int x_in, x_out;
    };
    std::vector<SideInfo> sides;
    std::set<int> side_edges;
    for (const Dart& d : face.cycle) side_edges.insert(d.edge);
    if (side_edges.size() != 3) throw std::logic_error("flip: repeated side edge");
    std::set<int> corners;
    for (int eid : side_edges) {
        const auto& E = m.edges[eid];
        SideInfo si;
        si.edge = eid;
        si.P = E.from.node;
        si.Q = E.to.node;
        corners.insert(si.P);
        corners.insert(si.Q);
        si.s = Map::partner_slot(E.from.slot);
        si.r = E.to.slot;
        si.x_in = m.edge_at(Port{si.P, si.s});
        si.x_out = m.edge_at(Port{si.Q, Map::partner_slot(si.r)});
        if (!(m.edges[si.x_in].to == Port{si.P, si.s}))
            throw std::logic_error("flip: x_in flow mismatch");
        if (!(m.edges[si.x_out].from == Port{si.Q, Map::partner_slot(si.r)}))
            throw std::logic_error("flip: x_out flow mismatch");
        if (m.edges[eid].dots || m.edges[si.x_in].dots + m.edges[si.x_out].dots < 0)
            throw std::logic_error("flip: dotted side");
        sides.push_back(si);
    }
    if (corners.size() != 3) throw std::logic_error("flip: degenerate corners");
    // planned end moves: (edge, at_from, new port, turn delta)
    struct EndMove {
        int edge;
        bool at_from;
        Port port;
        int dturn;
    };
    std::vector<EndMove> moves;
    for (const auto& si : sides) {
        // both outer ends rotate by the slot-direction difference modulo
        // full turns; the side edge absorbs the opposite amount so curve
        // totals are preserved. The full-turn parts are fixed afterwards
        // against the face-turn invariant.
        int d = short_rot(m.slot_dir(Port{si.P, si.s}), m.slot_dir(Port{si.Q, si.r}));
        moves.push_back({si.x_in, false, Port{si.Q, si.r}, d});
        moves.push_back({si.x_out, true, Port{si.P, m.edges[si.edge].from.slot}, d});
        moves.push_back({si.edge, true, Port{si.Q, Map::partner_slot(si.r)}, 0});
        moves.push_back({si.edge, false, Port{si.P, si.s}, -2 * d});
    }
    for (const auto& mv : moves)
        m.detach(mv.at_from ? m.edges[mv.edge].from : m.edges[mv.edge].to);
    for (const auto& mv : moves) {
        if (mv.at_from)
            m.edges[mv.edge].from = mv.port;
        else
            m.edges[mv.edge].to = mv.port;
        m.edges[mv.edge].turn += mv.dturn;
        m.attach(mv.edge, mv.at_from);
    }
    if (faces_turn_valid(m)) return;
    // hunt the +-8 gauge of the six outer adjustments; each side edge
    // compensates its strand so closed-curve totals never move
    for (int mask = 0; mask < 729; ++mask) {
        int c = mask;
        int delta_in[3], delta_out[3];
        for (int s = 0; s < 3; ++s) {
            delta_in[s] = (c % 3 - 1) * 8;
            c /= 3;
            delta_out[s] = (c % 3 - 1) * 8;
            c /= 3;
        }
        for (int s = 0; s < 3; ++s) {
            m.edges[sides[s].x_in].turn += delta_in[s];
            m.edges[sides[s].x_out].turn += delta_out[s];
            m.edges[sides[s].edge].turn -= delta_in[s] + delta_out[s];
        }
        if (faces_turn_valid(m)) return;
        for (int s = 0; s < 3; ++s) {
            m.edges[sides[s].x_in].turn -= delta_in[s];
            m.edges[sides[s].x_out].turn -= delta_out[s];
            m.edges[sides[s].edge].turn += delta_in[s] + delta_out[s];
        }
    }
    throw std::logic_error("triangle slide admits no consistent turn assignment");
}

// ---- construction from slices ----

std::vector<ObjectWord> SliceDiagram::interfaces() const {
    std::vector<ObjectWord> words{top};
    ObjectWord cur = top;
    for (const auto& layer : layers) {
        switch (layer.kind) {
            case SliceLayer::Cross: {
                if (layer.pos < 1 || layer.pos + 1 > static_cast<int>(cur.size()))
                    throw std::invalid_argument("cross position");
                std::swap(cur[layer.pos - 1], cur[layer.pos]);
                break;
            }
            case SliceLayer::Cup: {
                if (layer.pos < 1 || layer.pos + 1 > static_cast<int>(cur.size()))
                    throw std::invalid_argument("cup position");
                if (cur[layer.pos - 1] != layer.left ||
                    cur[layer.pos] != flip(layer.left))
                    throw std::invalid_argument("cup arrows mismatch");
                cur.erase(cur.begin() + (layer.pos - 1), cur.begin() + (layer.pos + 1));
                break;
            }
            case SliceLayer::Cap: {
                if (layer.pos < 1 || layer.pos > static_cast<int>(cur.size()) + 1)
                    throw std::invalid_argument("cap position");
                cur.insert(cur.begin() + (layer.pos - 1), {layer.left, flip(layer.left)});
                break;
            }
            case SliceLayer::Dot: {
                if (layer.pos < 1 || layer.pos > static_cast<int>(cur.size()))
                    throw std::invalid_argument("dot position");
                break;
            }
        }
        words.push_back(cur);
    }
    if (cur != bottom) throw std::invalid_argument("slice boundary mismatch");
    return words;
}

SliceDiagram SliceDiagram::stacked_on(const SliceDiagram& below) const {
    if (bottom != below.top) throw std::invalid_argument("stack: boundary mismatch");
    SliceDiagram r;
    r.top = top;
    r.bottom = below.bottom;
    r.layers = layers;
    r.layers.insert(r.layers.end(), below.layers.begin(), below.layers.end());
    return r;
}

SliceDiagram SliceDiagram::beside(const SliceDiagram& other) const {
    SliceDiagram r;
    r.top = top;
    r.top.insert(r.top.end(), other.top.begin(), other.top.end());
    r.bottom = bottom;
    r.bottom.insert(r.bottom.end(), other.bottom.begin(), other.bottom.end());
    // our layers first, then other's below them shifted past our bottom word;
    // sliding all of other's events downward is an isotopy
    r.layers = layers;
    int shift_base = static_cast<int>(bottom.size());
    for (const auto& l : other.layers) {
        SliceLayer s = l;
        s.pos += shift_base;
        r.layers.push_back(s);
    }
    return r;
}

SliceDiagram identity_slices(const ObjectWord& w) {
    SliceDiagram d;
    d.top = w;
    d.bottom = w;
    return d;
}

namespace {

struct Proto {
    Port tail{-2, 0}, head{-2, 0};
    bool tail_open = true, head_open = true;
    int tail_tangent = 0, head_tangent = 0;  // flow tangents at the open ends
    int turn = 0, dots = 0;
    bool dead = false;
};

struct PendingRef {
    int proto;
    bool head_end;  // true: the open end here is the flow head (arrow Up)
};

}  // namespace

BuiltMap build_from_slices(const SliceDiagram& d) {
    auto words = d.interfaces();
    BuiltMap out;
    out.map.top = d.top;
    out.map.bottom = d.bottom;
    Map& m = out.map;

    std::vector<Proto> protos;
    auto emit = [&](Proto& p) {
        if (p.tail_open || p.head_open || p.dead) return;
        m.new_edge(p.tail, p.head, p.dots, p.turn);
        p.dead = true;
    };
    auto attach_to_port = [&](PendingRef ref, Port port) {
        Proto& p = protos[ref.proto];
        int dir = m.slot_dir(port);
        if (ref.head_end) {
            p.turn += short_rot(p.head_tangent, compass_opposite(dir));
            p.head = port;
            p.head_open = false;
        } else {
            p.turn += short_rot(dir, p.tail_tangent);
            p.tail = port;
            p.tail_open = false;
        }
        emit(p);
    };
    auto pending_from_port = [&](Port port, Arrow a) -> PendingRef {
        Proto p;
        int dir = m.slot_dir(port);
        if (a == Arrow::Up) {
            p.tail = port;
            p.tail_open = false;
            p.head_tangent = dir;
        } else {
            p.head = port;
            p.head_open = false;
            p.tail_tangent = compass_opposite(dir);
        }
        protos.push_back(p);
        return {static_cast<int>(protos.size()) - 1, a == Arrow::Up};
    };

    // seed from the bottom boundary
    std::vector<PendingRef> cur;
    for (std::size_t i = 0; i < d.bottom.size(); ++i) {
        Proto p;
        Port port{-1, -(static_cast<int>(i) + 1)};
        if (d.bottom[i] == Arrow::Up) {
            p.tail = port;
            p.tail_open = false;
            p.head_tangent = kN;
        } else {
            p.head = port;
            p.head_open = false;
            p.tail_tangent = kS;
        }
        protos.push_back(p);
        cur.push_back({static_cast<int>(protos.size()) - 1, d.bottom[i] == Arrow::Up});
    }

    // process layers bottom-up
    for (std::size_t li = d.layers.size(); li-- > 0;) {
        const SliceLayer& layer = d.layers[li];
        const ObjectWord& above = words[li];
        int p = layer.pos;
        switch (layer.kind) {
            case SliceLayer::Dot: {
                protos[cur[p - 1].proto].dots += 1;
                break;
            }
            case SliceLayer::Cross: {
                int c = m.new_crossing(kNE);
                attach_to_port(cur[p - 1], Port{c, 2});  // SW
                attach_to_port(cur[p], Port{c, 3});      // SE
                cur[p - 1] = pending_from_port(Port{c, 1}, above[p - 1]);  // NW
                cur[p] = pending_from_port(Port{c, 0}, above[p]);          // NE
                break;
            }
            case SliceLayer::Cap: {
                // going up, the pair at positions p, p+1 (in the word below)
                // closes; left arrow = layer.left
                PendingRef left = cur[p - 1], right = cur[p];
                PendingRef up = layer.left == Arrow::Up ? left : right;
                PendingRef down = layer.left == Arrow::Up ? right : left;
                if (!up.head_end || down.head_end)
                    throw std::invalid_argument("cap arrow mismatch");
                int nominal = layer.left == Arrow::Up ? -4 : +4;
                Proto& pu = protos[up.proto];
                Proto& pd = protos[down.proto];
                int junction = short_rot(pu.head_tangent, kN) + nominal +
                               short_rot(kS, pd.tail_tangent);
                if (up.proto == down.proto) {
                    out.loops.push_back({pu.turn + junction, pu.dots});
                    pu.dead = true;
                } else {
                    Proto merged;
                    merged.tail = pu.tail;
                    merged.tail_open = pu.tail_open;
                    merged.tail_tangent = pu.tail_tangent;
                    merged.head = pd.head;
                    merged.head_open = pd.head_open;
                    merged.head_tangent = pd.head_tangent;
                    merged.turn = pu.turn + junction + pd.turn;
                    merged.dots = pu.dots + pd.dots;
                    pu.dead = pd.dead = true;
                    protos.push_back(merged);
                    int id = static_cast<int>(protos.size()) - 1;
                    emit(protos[id]);
                    // rewire any pendings that pointed at the merged pieces
                    for (std::size_t j = 0; j < cur.size(); ++j) {
                        if (static_cast<int>(j) == p - 1 || static_cast<int>(j) == p) continue;
                        if (cur[j].proto == up.proto) cur[j].proto = id;
                        if (cur[j].proto == down.proto) cur[j].proto = id;
                    }
                }
                cur.erase(cur.begin() + (p - 1), cur.begin() + (p + 1));
                break;
            }
            case SliceLayer::Cup: {
                // going up, a new pair appears at positions p, p+1 of the
                // word above; flow enters at the Down end
                Proto piece;
                piece.turn = layer.left == Arrow::Up ? -4 : +4;
                piece.tail_tangent = kS;
                piece.head_tangent = kN;
                protos.push_back(piece);
                int id = static_cast<int>(protos.size()) - 1;
                PendingRef up_ref{id, true}, down_ref{id, false};
                PendingRef left_ref = layer.left == Arrow::Up ? up_ref : down_ref;
                PendingRef right_ref = layer.left == Arrow::Up ? down_ref : up_ref;
                cur.insert(cur.begin() + (p - 1), {left_ref, right_ref});
                break;
            }
        }
    }

    // attach to the top boundary
    if (cur.size() != d.top.size()) throw std::logic_error("interface width mismatch");
    for (std::size_t i = 0; i < d.top.size(); ++i) {
        Port port{-1, static_cast<int>(i) + 1};
        attach_to_port(cur[i], port);
    }
    m.check();
    if (!faces_turn_valid(m)) throw std::logic_error("construction broke the face invariant");
    return out;
}

// ---- words and matchings ----

ObjectWord updown_power(int k) {
    ObjectWord w;
    for (int i = 0; i < k; ++i) {
        w.push_back(Arrow::Up);
        w.push_back(Arrow::Down);
    }
    return w;
}

ObjectWord word_star(const ObjectWord& w) {
    ObjectWord r = w;
    for (auto& a : r) a = flip(a);
    return r;
}

std::string word_str(const ObjectWord& w) {
    std::string s;
    for (auto a : w) s += (a == Arrow::Up ? 'u' : 'd');
    return s;
}

ObjectWord parse_word(const std::string& s) {
    ObjectWord w;
    for (char c : s) {
        if (c == 'u' || c == 'U')
            w.push_back(Arrow::Up);
        else if (c == 'd' || c == 'D')
            w.push_back(Arrow::Down);
        else
            throw std::invalid_argument("object word letters are u/d");
    }
    return w;
}

Matching Matching::of(std::vector<std::pair<int, int>> raw) {
    for (auto& [a, b] : raw)
        if (a > b) std::swap(a, b);
    std::sort(raw.begin(), raw.end());
    return Matching{std::move(raw)};
}

int Matching::partner(int code) const {
    for (const auto& [a, b] : pairs) {
        if (a == code) return b;
        if (b == code) return a;
    }
    throw std::out_of_range("endpoint not matched");
}

bool endpoint_is_source(int code, const ObjectWord& top, const ObjectWord& bottom) {
    if (code > 0) return top[code - 1] == Arrow::Down;
    return bottom[-code - 1] == Arrow::Up;
}

bool matching_valid(const Matching& m, const ObjectWord& top, const ObjectWord& bottom) {
    std::set<int> seen;
    for (const auto& [a, b] : m.pairs) {
        if (!seen.insert(a).second || !seen.insert(b).second) return false;
        bool atop = a > 0, btop = b > 0;
        Arrow aa = atop ? top[a - 1] : bottom[-a - 1];
        Arrow ab = btop ? top[b - 1] : bottom[-b - 1];
        if (atop == btop) {
            if (aa == ab) return false;  // same row needs opposite arrows
        } else {
            if (aa != ab) return false;  // cross rows carry the same arrow
        }
    }
    return seen.size() == top.size() + bottom.size();
}

}  // namespace apa::heis
