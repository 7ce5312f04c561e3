#include "cqwalk/circuit.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace cqw {

using ordered_json = nlohmann::ordered_json;

OpticalCircuit compile_circuit(const BlowupGraph& b) {
    const SymmetricDigraph& g = b.graph();
    const Labeling& xi = b.labeling();
    int total = b.num_island_vertices();

    OpticalCircuit c;
    c.hwp_count = total;
    c.pbs_count = total;
    c.nodes.reserve(static_cast<size_t>(2 * total + g.num_vertices()));
    for (int i = 0; i < total; ++i) {
        IslandVertex iv = b.island_vertex(i);
        c.nodes.push_back(CircuitNode{i, CircuitNodeKind::hwp, iv.vertex, iv.label});
    }
    for (int i = 0; i < total; ++i) {
        IslandVertex iv = b.island_vertex(i);
        c.nodes.push_back(CircuitNode{c.pbs_id(i), CircuitNodeKind::pbs, iv.vertex, iv.label});
    }
    for (int u = 0; u < g.num_vertices(); ++u)
        c.nodes.push_back(CircuitNode{c.tail_id(u), CircuitNodeKind::tail, u, 0});

    // polygon sides, subdivided by the HWP nodes: pbs(u,j-1) -> hwp(u;j) -> pbs(u,j)
    for (int u = 0; u < g.num_vertices(); ++u) {
        int deg = g.degree(u);
        for (int j = 0; j < deg; ++j) {
            int hwp = c.hwp_id(b.island_vertex_id(u, j));
            int prev = c.pbs_id(b.island_vertex_id(u, (j + deg - 1) % deg));
            int next = c.pbs_id(b.island_vertex_id(u, j));
            c.arcs.push_back(CircuitArc{CircuitArcKind::cycle, prev, hwp, -1});
            c.arcs.push_back(CircuitArc{CircuitArcKind::cycle, hwp, next, -1});
        }
    }
    // inter-island rewiring: arc p->q runs from the corner after (p; xi_p(q))
    // to the corner before (q; xi_q(p))
    for (int a = 0; a < g.num_internal_arcs(); ++a) {
        const Arc& arc = g.arc(a);
        int p = arc.origin, q = arc.terminus;
        int jp = xi.label_of(p, arc.inverse);
        int jq = xi.label_of(q, a);
        int from = c.pbs_id(b.island_vertex_id(p, jp));
        int to = c.pbs_id(b.island_vertex_id(q, (jq + g.degree(q) - 1) % g.degree(q)));
        c.arcs.push_back(CircuitArc{CircuitArcKind::inter_island, from, to, a});
    }
    // tails attach by the same corner rule
    for (int u = 0; u < g.num_vertices(); ++u) {
        int jt = xi.label_of(u, g.tail_in(u));
        int deg = g.degree(u);
        int in_corner = c.pbs_id(b.island_vertex_id(u, (jt + deg - 1) % deg));
        int out_corner = c.pbs_id(b.island_vertex_id(u, jt));
        c.arcs.push_back(CircuitArc{CircuitArcKind::tail, c.tail_id(u), in_corner, g.tail_in(u)});
        c.arcs.push_back(CircuitArc{CircuitArcKind::tail, out_corner, c.tail_id(u), g.tail_out(u)});
    }
    return c;
}

namespace {

const char* node_kind_name(CircuitNodeKind k) {
    switch (k) {
        case CircuitNodeKind::hwp: return "hwp";
        case CircuitNodeKind::pbs: return "pbs";
        case CircuitNodeKind::tail: return "tail";
    }
    return "?";
}

const char* arc_kind_name(CircuitArcKind k) {
    switch (k) {
        case CircuitArcKind::cycle: return "cycle";
        case CircuitArcKind::inter_island: return "inter_island";
        case CircuitArcKind::tail: return "tail";
    }
    return "?";
}

std::string dot_node_name(const CircuitNode& n) {
    std::ostringstream os;
    switch (n.kind) {
        case CircuitNodeKind::hwp: os << "hwp_" << n.vertex << "_" << n.index; break;
        case CircuitNodeKind::pbs: os << "pbs_" << n.vertex << "_" << n.index; break;
        case CircuitNodeKind::tail: os << "tail_" << n.vertex; break;
    }
    return os.str();
}

std::string emit_dot(const OpticalCircuit& c) {
    std::ostringstream os;
    os << "digraph optical_circuit {\n";
    os << "  rankdir=LR;\n";
    for (const CircuitNode& n : c.nodes) {
        os << "  " << dot_node_name(n);
        switch (n.kind) {
            case CircuitNodeKind::hwp:
                os << " [shape=box, style=filled, fillcolor=black, fontcolor=white, label=\"HWP("
                   << n.vertex << ";" << n.index << ")\"];\n";
                break;
            case CircuitNodeKind::pbs:
                os << " [shape=diamond, label=\"PBS(" << n.vertex << ";" << n.index << ")\"];\n";
                break;
            case CircuitNodeKind::tail:
                os << " [shape=circle, style=dashed, label=\"tail " << n.vertex << "\"];\n";
                break;
        }
    }
    for (const CircuitArc& a : c.arcs) {
        os << "  " << dot_node_name(c.nodes[static_cast<size_t>(a.from)]) << " -> "
           << dot_node_name(c.nodes[static_cast<size_t>(a.to)]);
        switch (a.kind) {
            case CircuitArcKind::cycle: os << " [color=blue];\n"; break;
            case CircuitArcKind::inter_island: os << " [color=black];\n"; break;
            case CircuitArcKind::tail: os << " [color=gray, style=dashed];\n"; break;
        }
    }
    os << "}\n";
    return os.str();
}

std::string emit_json(const OpticalCircuit& c) {
    ordered_json j;
    j["hwp_count"] = c.hwp_count;
    j["pbs_count"] = c.pbs_count;
    j["nodes"] = ordered_json::array();
    for (const CircuitNode& n : c.nodes) {
        ordered_json node;
        node["id"] = n.id;
        node["kind"] = node_kind_name(n.kind);
        node["vertex"] = n.vertex;
        node["index"] = n.index;
        j["nodes"].push_back(node);
    }
    j["arcs"] = ordered_json::array();
    for (const CircuitArc& a : c.arcs) {
        ordered_json arc;
        arc["kind"] = arc_kind_name(a.kind);
        arc["from"] = a.from;
        arc["to"] = a.to;
        arc["orig_arc"] = a.orig_arc;
        j["arcs"].push_back(arc);
    }
    return j.dump(2) + "\n";
}

}  // namespace

NetlistFormat netlist_format_from_string(const std::string& name) {
    if (name == "dot") return NetlistFormat::dot;
    if (name == "json") return NetlistFormat::json;
    throw Error(errc::unsupported_format, "netlist format '" + name + "'");
}

std::string emit_netlist(const OpticalCircuit& c, NetlistFormat format) {
    switch (format) {
        case NetlistFormat::dot: return emit_dot(c);
        case NetlistFormat::json: return emit_json(c);
    }
    throw Error(errc::unsupported_format, "unknown netlist format");
}

OpticalCircuit parse_netlist_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw Error(errc::parse_error, e.what());
    }
    OpticalCircuit c;
    c.hwp_count = j.at("hwp_count").get<int>();
    c.pbs_count = j.at("pbs_count").get<int>();
    for (const auto& node : j.at("nodes")) {
        CircuitNode n;
        n.id = node.at("id").get<int>();
        std::string kind = node.at("kind").get<std::string>();
        if (kind == "hwp") n.kind = CircuitNodeKind::hwp;
        else if (kind == "pbs") n.kind = CircuitNodeKind::pbs;
        else if (kind == "tail") n.kind = CircuitNodeKind::tail;
        else throw Error(errc::parse_error, "unknown node kind '" + kind + "'");
        n.vertex = node.at("vertex").get<int>();
        n.index = node.at("index").get<int>();
        c.nodes.push_back(n);
    }
    for (const auto& arc : j.at("arcs")) {
        CircuitArc a;
        std::string kind = arc.at("kind").get<std::string>();
        if (kind == "cycle") a.kind = CircuitArcKind::cycle;
        else if (kind == "inter_island") a.kind = CircuitArcKind::inter_island;
        else if (kind == "tail") a.kind = CircuitArcKind::tail;
        else throw Error(errc::parse_error, "unknown arc kind '" + kind + "'");
        a.from = arc.at("from").get<int>();
        a.to = arc.at("to").get<int>();
        a.orig_arc = arc.at("orig_arc").get<int>();
        c.arcs.push_back(a);
    }
    return c;
}

}  // namespace cqw
