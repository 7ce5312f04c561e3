#pragma once

// Internal graph with one semi-infinite tail per vertex, represented by its
// finite part: the symmetric internal arcs plus two boundary arcs per vertex
// (the inflow arc terminating at the vertex and the outflow arc leaving it).
// Tail interiors are never materialized; their dynamics is free transmission,
// so only the boundary values matter.

#include <utility>
#include <vector>

#include "cqwalk/error.hpp"

namespace cqw {

using VertexId = int;

// Endpoint marker for the tail side of a boundary arc.
inline constexpr int kTailEnd = -1;

struct Arc {
    int id = 0;
    int origin = 0;    // vertex id, or kTailEnd
    int terminus = 0;  // vertex id, or kTailEnd
    int inverse = 0;   // id of the inverse arc

    bool is_boundary() const { return origin == kTailEnd || terminus == kTailEnd; }
};

class SymmetricDigraph {
public:
    // Builds the symmetric digraph from an undirected edge list over vertices
    // 0..num_vertices-1 and attaches a tail to every vertex.
    // Throws: self_loop, duplicate_edge, bad_vertex, disconnected_graph.
    static SymmetricDigraph build(int num_vertices,
                                  const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const { return num_vertices_; }
    int num_edges() const { return num_edges_; }
    // Internal arcs A0 only (two per edge); ids 0..num_internal_arcs()-1.
    int num_internal_arcs() const { return 2 * num_edges_; }
    // All arcs including the 2|V| boundary arcs.
    int num_arcs() const { return static_cast<int>(arcs_.size()); }

    const Arc& arc(int id) const { return arcs_[static_cast<size_t>(id)]; }

    int tail_in(VertexId u) const;   // arc of dA+ terminating at u
    int tail_out(VertexId u) const;  // arc of dA- leaving u

    // Degree of u in the graph with the tail attached (= internal degree + 1).
    int degree(VertexId u) const;

    // Internal arcs with terminus u, ordered by ascending origin.
    const std::vector<int>& internal_in_arcs(VertexId u) const;

    void require_vertex(VertexId u) const;

private:
    int num_vertices_ = 0;
    int num_edges_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> in_arcs_;  // per vertex, internal only
};

// Per-vertex bijections from incoming arcs (tail included) onto 0..deg(u)-1.
class Labeling {
public:
    Labeling() = default;
    // arc_by_label[u][l] = arc id of the incoming arc at u carrying label l.
    explicit Labeling(std::vector<std::vector<int>> arc_by_label);

    int arc_at(VertexId u, int label) const;  // xi_u^{-1}(label)
    int label_of(VertexId u, int arc_id) const;
    int tail_label(const SymmetricDigraph& g, VertexId u) const;

    int num_vertices() const { return static_cast<int>(arc_by_label_.size()); }
    const std::vector<int>& labels_of(VertexId u) const {
        return arc_by_label_[static_cast<size_t>(u)];
    }

private:
    std::vector<std::vector<int>> arc_by_label_;
};

// Deterministic labeling: incoming arcs sorted by ascending origin with the
// tail inserted at position min(u, deg(u)-1). On the complete graph K_N this
// reproduces the convention xi_i((i,j)) = j with the tail labeled i.
Labeling default_labeling(const SymmetricDigraph& g);

// Explicit labeling input: lists[u] = labels in slot order
// [tail, neighbors by ascending origin].
Labeling labeling_from_lists(const SymmetricDigraph& g,
                             const std::vector<std::vector<int>>& lists);

// Throws not_bijective if some xi_u does not map onto {0..deg(u)-1}.
void validate_labeling(const SymmetricDigraph& g, const Labeling& xi);

}  // namespace cqw
