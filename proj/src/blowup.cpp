#include "cqwalk/blowup.hpp"

#include <string>

namespace cqw {

BlowupGraph::BlowupGraph(const SymmetricDigraph& g, const Labeling& xi) : g_(&g), xi_(&xi) {
    offset_.resize(static_cast<size_t>(g.num_vertices()));
    for (int u = 0; u < g.num_vertices(); ++u) {
        offset_[static_cast<size_t>(u)] = total_;
        total_ += g.degree(u);
    }

    arcs_.reserve(static_cast<size_t>(total_ + g.num_arcs()));
    // island cycles: arc id i runs (u;j-1) -> (u;j) where i = island vertex (u;j)
    for (int u = 0; u < g.num_vertices(); ++u) {
        int deg = g.degree(u);
        for (int j = 0; j < deg; ++j) {
            int to = island_vertex_id(u, j);
            int from = island_vertex_id(u, (j + deg - 1) % deg);
            arcs_.push_back(BlowupArc{to, BlowupArcKind::cycle, from, to, -1});
        }
    }
    // rewired copies of the original arcs (internal and tails)
    for (int a = 0; a < g.num_arcs(); ++a) {
        const Arc& arc = g.arc(a);
        int id = total_ + a;
        if (arc.origin == kTailEnd) {
            // inflow arc of vertex u enters at (u; xi_u(tail))
            int to = island_vertex_id(arc.terminus, xi.label_of(arc.terminus, a));
            arcs_.push_back(BlowupArc{id, BlowupArcKind::tail_in, kTailEnd, to, a});
        } else if (arc.terminus == kTailEnd) {
            int from = island_vertex_id(arc.origin, xi.label_of(arc.origin, arc.inverse));
            arcs_.push_back(BlowupArc{id, BlowupArcKind::tail_out, from, kTailEnd, a});
        } else {
            // arc p->q becomes (p; xi_p(inverse)) -> (q; xi_q(arc))
            int from = island_vertex_id(arc.origin, xi.label_of(arc.origin, arc.inverse));
            int to = island_vertex_id(arc.terminus, xi.label_of(arc.terminus, a));
            arcs_.push_back(BlowupArc{id, BlowupArcKind::retained, from, to, a});
        }
    }
}

int BlowupGraph::island_vertex_id(VertexId u, int label) const {
    g_->require_vertex(u);
    return offset_[static_cast<size_t>(u)] + label;
}

IslandVertex BlowupGraph::island_vertex(int id) const {
    int u = g_->num_vertices() - 1;
    while (offset_[static_cast<size_t>(u)] > id) --u;
    return IslandVertex{u, id - offset_[static_cast<size_t>(u)]};
}

int BlowupGraph::tail_vertex_of(VertexId u) const {
    return island_vertex_id(u, xi_->label_of(u, g_->tail_in(u)));
}

bool BlowupGraph::has_arc(int from_island_vertex, int to_island_vertex) const {
    for (const BlowupArc& a : arcs_)
        if (a.origin == from_island_vertex && a.terminus == to_island_vertex) return true;
    return false;
}

BlowupGraph blow_up(const SymmetricDigraph& g, const Labeling& xi) {
    validate_labeling(g, xi);
    return BlowupGraph(g, xi);
}

void verify_two_regular(int num_island_vertices, const std::vector<BlowupArc>& arcs) {
    std::vector<int> in(static_cast<size_t>(num_island_vertices), 0);
    std::vector<int> out(static_cast<size_t>(num_island_vertices), 0);
    for (const BlowupArc& a : arcs) {
        if (a.terminus != kTailEnd) ++in[static_cast<size_t>(a.terminus)];
        if (a.origin != kTailEnd) ++out[static_cast<size_t>(a.origin)];
    }
    for (int v = 0; v < num_island_vertices; ++v)
        if (in[static_cast<size_t>(v)] != 2 || out[static_cast<size_t>(v)] != 2)
            throw Error(errc::not_two_regular,
                        "island vertex " + std::to_string(v) + " has in/out degree " +
                            std::to_string(in[static_cast<size_t>(v)]) + "/" +
                            std::to_string(out[static_cast<size_t>(v)]));
}

void verify_two_regular(const BlowupGraph& b) {
    verify_two_regular(b.num_island_vertices(), b.arcs());
}

}  // namespace cqw
