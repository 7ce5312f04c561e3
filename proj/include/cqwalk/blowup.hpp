#pragma once

// Blow-up digraph: every internal vertex u becomes a directed cycle (island)
// over its deg(u) labeled incoming arcs; the original symmetric arcs are
// rewired between islands and each tail attaches at the island vertex
// carrying the tail arc's label. The result is 2-regular: every island
// vertex has one cycle in/out pair and one retained (or tail) in/out pair.

#include <vector>

#include "cqwalk/graph.hpp"

namespace cqw {

struct IslandVertex {
    VertexId vertex;  // original vertex u
    int label;        // j in (u;j)
};

enum class BlowupArcKind { cycle, retained, tail_in, tail_out };

struct BlowupArc {
    int id = 0;
    BlowupArcKind kind = BlowupArcKind::cycle;
    int origin = 0;    // island vertex id, or kTailEnd
    int terminus = 0;  // island vertex id, or kTailEnd
    int orig_arc = -1; // original arc id for retained/tail arcs, -1 for cycle arcs
};

class BlowupGraph {
public:
    BlowupGraph(const SymmetricDigraph& g, const Labeling& xi);

    const SymmetricDigraph& graph() const { return *g_; }
    const Labeling& labeling() const { return *xi_; }

    int num_island_vertices() const { return total_; }  // sum of deg(u)
    int island_vertex_id(VertexId u, int label) const;
    IslandVertex island_vertex(int id) const;

    // Arc ids: [0, S) cycle arcs (arc i points into island vertex i),
    // [S, S + g.num_arcs()) the rewired copies of the original arcs.
    int num_arcs() const { return static_cast<int>(arcs_.size()); }
    const BlowupArc& arc(int id) const { return arcs_[static_cast<size_t>(id)]; }
    const std::vector<BlowupArc>& arcs() const { return arcs_; }

    int cycle_arc_into(int island_vertex_id) const { return island_vertex_id; }
    int retained_arc_of(int orig_arc_id) const { return total_ + orig_arc_id; }

    // Island vertex where the tail of u attaches: (u; xi_u(tail)).
    int tail_vertex_of(VertexId u) const;

    bool has_arc(int from_island_vertex, int to_island_vertex) const;

private:
    const SymmetricDigraph* g_;
    const Labeling* xi_;
    int total_ = 0;
    std::vector<int> offset_;  // island vertex id base per original vertex
    std::vector<BlowupArc> arcs_;
};

// Validates the labeling, then constructs the blow-up graph.
BlowupGraph blow_up(const SymmetricDigraph& g, const Labeling& xi);

// Redundancy check: every island vertex must have in-degree and out-degree
// exactly 2, counting tail attachments. Throws not_two_regular.
void verify_two_regular(const BlowupGraph& b);
void verify_two_regular(int num_island_vertices, const std::vector<BlowupArc>& arcs);

}  // namespace cqw
