#pragma once

// Optical circuit graph G' = (HWP u PBS, A') for the blow-up walk.
// Each island is drawn as a circumscribed polygon: one HWP node per island
// vertex on the sides, one PBS node per corner between consecutive island
// vertices. Inter-island arcs are rewired corner-to-corner so that every
// outflow from an island is switched to an inflow of the neighboring island.
// Purely combinatorial; no geometric embedding.

#include <string>
#include <vector>

#include "cqwalk/blowup.hpp"

namespace cqw {

enum class CircuitNodeKind { hwp, pbs, tail };
enum class CircuitArcKind { cycle, inter_island, tail };

struct CircuitNode {
    int id = 0;
    CircuitNodeKind kind = CircuitNodeKind::hwp;
    VertexId vertex = 0;  // original vertex of the island (or tail owner)
    int index = 0;        // hwp: island label j; pbs: corner between j and j+1
};

struct CircuitArc {
    CircuitArcKind kind = CircuitArcKind::cycle;
    int from = 0;
    int to = 0;
    int orig_arc = -1;  // original arc id for inter_island/tail arcs
};

class OpticalCircuit {
public:
    std::vector<CircuitNode> nodes;
    std::vector<CircuitArc> arcs;
    int hwp_count = 0;
    int pbs_count = 0;

    int hwp_id(int island_vertex_flat) const { return island_vertex_flat; }
    int pbs_id(int corner_flat) const { return hwp_count + corner_flat; }
    int tail_id(VertexId u) const { return hwp_count + pbs_count + u; }
};

OpticalCircuit compile_circuit(const BlowupGraph& b);

enum class NetlistFormat { dot, json };
NetlistFormat netlist_format_from_string(const std::string& name);

// Deterministic serialization; same circuit -> byte-identical text.
std::string emit_netlist(const OpticalCircuit& c, NetlistFormat format);

// Loader for the JSON netlist (round-trips through emit_netlist).
OpticalCircuit parse_netlist_json(const std::string& text);

}  // namespace cqw
