#pragma once

#include "knotgauss/planar.hpp"

namespace kg {

enum class TwistVariant { Alternating, AlmostPositiveUnknot };

/// Twist-knot shaped diagram with n crossings total (an (n-2)-crossing twist
/// region plus a 2-crossing clasp). Alternating gives the standard twist-knot
/// diagram; AlmostPositiveUnknot gives the unknotted variant with exactly one
/// negative crossing. n = 1 degenerates to a single kink.
KnotDiagram twist_knot_diagram(int n, TwistVariant variant);

/// Standard pretzel diagram with three stacked twist tangles; tangle signs
/// follow the parameter signs. Throws when the parameters produce a link.
KnotDiagram pretzel_diagram(int p, int q, int r);

/// Closure of the positive braid (s_1 s_2 ... s_{p-1})^q on p strands.
KnotDiagram torus_braid_diagram(int p, int q);

/// Untwisted Whitehead double with the given clasp sign: blackboard 2-parallel
/// of the companion with |writhe| compensating full twists and a 2-crossing
/// clasp at the base edge. Output has 4c + 2|w| + 2 crossings.
KnotDiagram whitehead_double(const KnotDiagram& companion, int clasp_sign);

/// Planar assembly of crossings wired port-to-port; ports of every crossing
/// are listed counterclockwise, strands pass straight through (slot s to
/// s+2). Used by the diagram generators.
class PlanarBuilder {
public:
    /// Crossing whose sign is prescribed (over/under derived).
    int add_signed(int sign);
    /// Crossing whose over-strand is prescribed as the one through slots
    /// {lane, lane+2} (sign derived).
    int add_over_lane(int lane);
    void connect(int node_a, int slot_a, int node_b, int slot_b);
    /// Walk the curve starting by leaving `start_node` through `start_slot`;
    /// derives passage order, chirality bits and signs, and validates the
    /// Euler face count.
    KnotDiagram finish(int start_node, int start_slot) const;

private:
    struct Node {
        int sign = 0;      // 0 when over-lane specified
        int over_lane = -1;
        std::array<int, 4> peer_node{{-1, -1, -1, -1}};
        std::array<int, 4> peer_slot{{-1, -1, -1, -1}};
    };
    std::vector<Node> nodes_;
};

}  // namespace kg
