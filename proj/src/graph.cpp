#include "cqwalk/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace cqw {

const char* errc_name(errc code) {
    switch (code) {
        case errc::self_loop: return "SelfLoop";
        case errc::duplicate_edge: return "DuplicateEdge";
        case errc::disconnected_graph: return "DisconnectedGraph";
        case errc::bad_vertex: return "BadVertex";
        case errc::not_bijective: return "NotBijective";
        case errc::not_unitary: return "NotUnitary";
        case errc::zero_entry: return "ZeroEntry";
        case errc::not_two_regular: return "NotTwoRegular";
        case errc::dimension_mismatch: return "DimensionMismatch";
        case errc::unknown_vertex: return "UnknownVertex";
        case errc::unsupported_format: return "UnsupportedFormat";
        case errc::inconsistent_system: return "InconsistentSystem";
        case errc::parse_error: return "ParseError";
        case errc::io_error: return "IoError";
    }
    return "Error";
}

SymmetricDigraph SymmetricDigraph::build(int num_vertices,
                                         const std::vector<std::pair<int, int>>& edges) {
    if (num_vertices <= 0)
        throw Error(errc::bad_vertex, "graph needs at least one vertex");

    std::vector<std::pair<int, int>> normalized;
    normalized.reserve(edges.size());
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges) {
        if (a < 0 || a >= num_vertices || b < 0 || b >= num_vertices)
            throw Error(errc::bad_vertex,
                        "edge endpoint out of range: (" + std::to_string(a) + "," +
                            std::to_string(b) + ")");
        if (a == b)
            throw Error(errc::self_loop, "self-loop at vertex " + std::to_string(a));
        auto e = std::minmax(a, b);
        if (!seen.insert(e).second)
            throw Error(errc::duplicate_edge, "duplicate edge (" + std::to_string(e.first) +
                                                  "," + std::to_string(e.second) + ")");
        normalized.push_back(e);
    }
    std::sort(normalized.begin(), normalized.end());

    SymmetricDigraph g;
    g.num_vertices_ = num_vertices;
    g.num_edges_ = static_cast<int>(normalized.size());
    g.arcs_.reserve(2 * normalized.size() + 2 * static_cast<size_t>(num_vertices));
    g.in_arcs_.resize(static_cast<size_t>(num_vertices));

    for (int k = 0; k < g.num_edges_; ++k) {
        auto [u, v] = normalized[static_cast<size_t>(k)];
        int fwd = 2 * k;
        int bwd = 2 * k + 1;
        g.arcs_.push_back(Arc{fwd, u, v, bwd});
        g.arcs_.push_back(Arc{bwd, v, u, fwd});
        g.in_arcs_[static_cast<size_t>(v)].push_back(fwd);
        g.in_arcs_[static_cast<size_t>(u)].push_back(bwd);
    }
    for (int u = 0; u < num_vertices; ++u) {
        int tin = g.num_internal_arcs() + 2 * u;
        int tout = tin + 1;
        g.arcs_.push_back(Arc{tin, kTailEnd, u, tout});
        g.arcs_.push_back(Arc{tout, u, kTailEnd, tin});
    }
    for (auto& arcs : g.in_arcs_)
        std::sort(arcs.begin(), arcs.end(), [&](int a, int b) {
            return g.arcs_[static_cast<size_t>(a)].origin < g.arcs_[static_cast<size_t>(b)].origin;
        });

    // connectivity over the internal arcs
    std::vector<char> reached(static_cast<size_t>(num_vertices), 0);
    std::vector<int> stack{0};
    reached[0] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int aid : g.in_arcs_[static_cast<size_t>(u)]) {
            int w = g.arcs_[static_cast<size_t>(aid)].origin;
            if (!reached[static_cast<size_t>(w)]) {
                reached[static_cast<size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    if (std::find(reached.begin(), reached.end(), 0) != reached.end())
        throw Error(errc::disconnected_graph, "input graph is not connected");

    return g;
}

int SymmetricDigraph::tail_in(VertexId u) const {
    require_vertex(u);
    return num_internal_arcs() + 2 * u;
}

int SymmetricDigraph::tail_out(VertexId u) const {
    require_vertex(u);
    return num_internal_arcs() + 2 * u + 1;
}

int SymmetricDigraph::degree(VertexId u) const {
    require_vertex(u);
    return static_cast<int>(in_arcs_[static_cast<size_t>(u)].size()) + 1;
}

const std::vector<int>& SymmetricDigraph::internal_in_arcs(VertexId u) const {
    require_vertex(u);
    return in_arcs_[static_cast<size_t>(u)];
}

void SymmetricDigraph::require_vertex(VertexId u) const {
    if (u < 0 || u >= num_vertices_)
        throw Error(errc::unknown_vertex, "vertex " + std::to_string(u));
}

Labeling::Labeling(std::vector<std::vector<int>> arc_by_label)
    : arc_by_label_(std::move(arc_by_label)) {}

int Labeling::arc_at(VertexId u, int label) const {
    const auto& slots = arc_by_label_[static_cast<size_t>(u)];
    if (label < 0 || label >= static_cast<int>(slots.size()))
        throw Error(errc::not_bijective,
                    "label " + std::to_string(label) + " out of range at vertex " +
                        std::to_string(u));
    return slots[static_cast<size_t>(label)];
}

int Labeling::label_of(VertexId u, int arc_id) const {
    const auto& slots = arc_by_label_[static_cast<size_t>(u)];
    for (int l = 0; l < static_cast<int>(slots.size()); ++l)
        if (slots[static_cast<size_t>(l)] == arc_id) return l;
    throw Error(errc::unknown_vertex,
                "arc " + std::to_string(arc_id) + " not incoming at vertex " + std::to_string(u));
}

int Labeling::tail_label(const SymmetricDigraph& g, VertexId u) const {
    return label_of(u, g.tail_in(u));
}

Labeling default_labeling(const SymmetricDigraph& g) {
    std::vector<std::vector<int>> arc_by_label(static_cast<size_t>(g.num_vertices()));
    for (int u = 0; u < g.num_vertices(); ++u) {
        std::vector<int> slots = g.internal_in_arcs(u);  // ascending origin
        int pos = std::min(u, static_cast<int>(slots.size()));
        slots.insert(slots.begin() + pos, g.tail_in(u));
        arc_by_label[static_cast<size_t>(u)] = std::move(slots);
    }
    return Labeling(std::move(arc_by_label));
}

Labeling labeling_from_lists(const SymmetricDigraph& g,
                             const std::vector<std::vector<int>>& lists) {
    if (static_cast<int>(lists.size()) != g.num_vertices())
        throw Error(errc::parse_error, "labeling must cover every vertex");
    std::vector<std::vector<int>> arc_by_label(static_cast<size_t>(g.num_vertices()));
    for (int u = 0; u < g.num_vertices(); ++u) {
        const auto& labels = lists[static_cast<size_t>(u)];
        int deg = g.degree(u);
        if (static_cast<int>(labels.size()) != deg)
            throw Error(errc::not_bijective, "vertex " + std::to_string(u) + " expects " +
                                                 std::to_string(deg) + " labels");
        // slot order: tail first, then internal arcs by ascending origin
        std::vector<int> arcs_in_slot_order{g.tail_in(u)};
        const auto& internal = g.internal_in_arcs(u);
        arcs_in_slot_order.insert(arcs_in_slot_order.end(), internal.begin(), internal.end());
        std::vector<int>& slots = arc_by_label[static_cast<size_t>(u)];
        slots.assign(static_cast<size_t>(deg), -1);
        for (int s = 0; s < deg; ++s) {
            int l = labels[static_cast<size_t>(s)];
            if (l < 0 || l >= deg || slots[static_cast<size_t>(l)] != -1)
                throw Error(errc::not_bijective,
                            "labels of vertex " + std::to_string(u) + " are not a bijection");
            slots[static_cast<size_t>(l)] = arcs_in_slot_order[static_cast<size_t>(s)];
        }
    }
    return Labeling(std::move(arc_by_label));
}

void validate_labeling(const SymmetricDigraph& g, const Labeling& xi) {
    if (xi.num_vertices() != g.num_vertices())
        throw Error(errc::not_bijective, "labeling does not cover every vertex");
    for (int u = 0; u < g.num_vertices(); ++u) {
        int deg = g.degree(u);
        const auto& slots = xi.labels_of(u);
        if (static_cast<int>(slots.size()) != deg)
            throw Error(errc::not_bijective, "vertex " + std::to_string(u));
        std::set<int> arcs(slots.begin(), slots.end());
        if (static_cast<int>(arcs.size()) != deg)
            throw Error(errc::not_bijective, "vertex " + std::to_string(u));
        // the labeled arcs must be exactly the incoming arcs at u (tail included)
        for (int aid : slots) {
            if (aid < 0 || aid >= g.num_arcs() || g.arc(aid).terminus != u)
                throw Error(errc::not_bijective, "vertex " + std::to_string(u));
        }
    }
}

}  // namespace cqw
