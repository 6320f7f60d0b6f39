#pragma once

// Combinatorial planar data for one diagram summand. Strands meet only at
// transversal crossings; each crossing has four slots in counterclockwise
// order with fixed compass directions, pointing away from the node. A strand
// passes straight through a crossing between opposite slots (s, s+2).
//
// Edges are directed by flow. The turn of an edge counts eighth-turns of the
// flow tangent from its departure compass to its arrival compass, with the
// integer part tracked exactly, so closed curves total +-8.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "apa/heis/diagram.hpp"

namespace apa::heis {

// compass in eighth turns, counterclockwise: E=0, NE=1, N=2, NW=3, W=4,
// SW=5, S=6, SE=7
constexpr int kNE = 1, kNW = 3, kSW = 5, kSE = 7, kN = 2, kS = 6;

inline int compass_opposite(int d) { return (d + 4) % 8; }
// signed rotation from a to b, in (-4, 4]; callers never pass opposites
int short_rot(int from, int to);

struct Port {
    int node;  // crossing id, or -1 for boundary
    int slot;  // crossing slot 0..3; for boundary: +j top j, -i bottom i
    friend auto operator<=>(const Port&, const Port&) = default;
    bool boundary() const { return node < 0; }
};

class Map {
public:
    ObjectWord top, bottom;

    struct Crossing {
        bool alive = false;
        int dir0 = kNE;  // compass of slot 0; slot s has dir0 + 2s (mod 8)
    };
    struct Edge {
        bool alive = false;
        Port from, to;  // flow runs from -> to
        int dots = 0;
        int turn = 0;
    };

    std::vector<Crossing> crossings;
    std::vector<Edge> edges;

    int slot_dir(const Port& p) const;
    int edge_at(const Port& p) const;  // -1 if none
    void attach(int edge_id, bool at_from);
    void detach(const Port& p);

    int new_crossing(int dir0 = kNE);
    int new_edge(Port from, Port to, int dots, int turn);
    void kill_edge(int e);
    void kill_crossing(int c);

    int alive_crossings() const;
    std::vector<int> alive_edge_ids() const;

    // the other slot of the same strand at a crossing
    static int partner_slot(int s) { return (s + 2) % 4; }

    // Continue along the strand through the crossing at port p (p = arrival
    // slot); returns the outgoing edge id.
    int continue_through(const Port& p) const;

    void check() const;  // structural and turn-consistency asserts

    std::string serialize() const;

private:
    std::map<Port, int> port_edge_;
};

// ---- faces ----

struct Dart {  // directed edge side: traverse edge e along flow (fwd) or not
    int edge;
    bool fwd;
    friend auto operator<=>(const Dart&, const Dart&) = default;
};

struct Face {
    std::vector<Dart> cycle;
    bool touches_boundary = false;
};

std::vector<Face> enumerate_faces(const Map& m);

// Every internal face of a plane embedding turns through one full
// counterclockwise rotation along the face walk. This both validates the
// rotation system and pins the turn data exactly.
int face_walk_turn(const Map& m, const Face& f);
bool faces_turn_valid(const Map& m);

// ---- loop bookkeeping ----

struct LoopValue {  // crossing-free closed curve awaiting evaluation
    int turn;       // +8 ccw, -8 cw
    int dots;
};

// ---- surgeries ----
// All return the loops formed (closed curves with no remaining crossings).

// join the chain  e_in -> (through v) -> e_out  into one edge, deleting v's
// attachment; the caller deletes v once all its strands are rewired
std::vector<LoopValue> merge_through(Map& m, int e_in, int e_out);

// orientation-preserving smoothing of one crossing
std::vector<LoopValue> smooth_crossing(Map& m, int c);

// remove a curl: the loop edge (dotless) plus its crossing; add_dot selects
// the right-curl rule (cw teardrop)
std::vector<LoopValue> remove_curl(Map& m, int loop_edge, bool add_dot);

// uncross a bigon face with side edges e and f (both dotless)
std::vector<LoopValue> uncross_bigon(Map& m, int e, int f);

// reconnects the four outer legs with turnbacks (the paying resolution's
// correction term); edges e, f and both crossings vanish
std::vector<LoopValue> turnback_bigon(Map& m, int e, int f);

// slide one dot on edge e across its head crossing; returns the id of the
// receiving edge. The correction summand is produced by the caller via
// smooth_crossing on a copy.
int slide_dot_forward(Map& m, int e);
// sign of the dot-slide correction: +1 when the other strand enters from the
// right of the flow
int dot_slide_sign(const Map& m, int e);

// flip a triangle face (free move); edges must be dotless
void flip_triangle(Map& m, const Face& face);

// chirality of a closed face cycle made of coherently-flowing sides:
// +8 = counterclockwise, -8 = clockwise; nullopt when flows are not coherent
std::optional<int> bigon_cycle_turn(const Map& m, int e, int f);
int monogon_cycle_turn(const Map& m, int loop_edge);

// ---- construction ----

struct BuiltMap {
    Map map;
    std::vector<LoopValue> loops;  // crossing-free loops present in the input
};

BuiltMap build_from_slices(const SliceDiagram& d);

}  // namespace apa::heis
