#include "knotgauss/constructions.hpp"

#include "knotgauss/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace kg {

// --- planar assembly ---------------------------------------------------------

int PlanarBuilder::add_signed(int sign) {
    Node n;
    n.sign = sign;
    nodes_.push_back(n);
    return (int)nodes_.size() - 1;
}

int PlanarBuilder::add_over_lane(int lane) {
    Node n;
    n.over_lane = lane & 1;
    nodes_.push_back(n);
    return (int)nodes_.size() - 1;
}

void PlanarBuilder::connect(int a, int sa, int b, int sb) {
    if (nodes_[a].peer_node[sa] >= 0 || nodes_[b].peer_node[sb] >= 0)
        throw std::logic_error("builder: port connected twice");
    nodes_[a].peer_node[sa] = b;
    nodes_[a].peer_slot[sa] = sb;
    nodes_[b].peer_node[sb] = a;
    nodes_[b].peer_slot[sb] = sa;
}

KnotDiagram PlanarBuilder::finish(int start_node, int start_slot) const {
    const int c = (int)nodes_.size();
    if (c == 0) return KnotDiagram{};
    struct Visit {
        int slot = -1;
        int position = -1;
    };
    std::vector<std::array<Visit, 2>> visits(c);
    std::vector<int> visit_count(c, 0);

    int node = start_node, slot = start_slot;
    for (int pos = 0; pos < 2 * c; ++pos) {
        int nn = nodes_[node].peer_node[slot];
        int ns = nodes_[node].peer_slot[slot];
        if (nn < 0) throw std::logic_error("builder: dangling port");
        if (visit_count[nn] >= 2) throw std::logic_error("builder: node visited thrice");
        visits[nn][visit_count[nn]++] = {ns, pos};
        node = nn;
        slot = (ns + 2) & 3;
    }
    if (node != start_node || slot != start_slot)
        throw std::logic_error("builder: traversal is not a single closed curve");
    for (int x = 0; x < c; ++x)
        if (visit_count[x] != 2)
            throw std::logic_error("builder: wiring does not produce a knot");

    // chord id by first-visit order
    std::vector<int> order(c);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return visits[a][0].position < visits[b][0].position;
    });

    SignedGaussCode code;
    code.entries.resize(2 * c);
    Embedding emb;
    emb.chirality.resize(c);
    for (int rank = 0; rank < c; ++rank) {
        int x = order[rank];
        int s1 = visits[x][0].slot, s2 = visits[x][1].slot;
        if (((s2 - s1) & 3) != 1 && ((s2 - s1) & 3) != 3)
            throw std::logic_error("builder: non-transversal visits");
        std::uint8_t eps = ((s2 - s1) & 3) == 1 ? 0 : 1;
        emb.chirality[rank] = eps;
        int sign;
        bool over_at_first;
        if (nodes_[x].over_lane >= 0) {
            over_at_first = (s1 & 1) == nodes_[x].over_lane;
            sign = (over_at_first == (eps == 0)) ? 1 : -1;
        } else {
            sign = nodes_[x].sign;
            over_at_first = (eps == 0) == (sign > 0);
        }
        code.entries[visits[x][0].position] = {
            over_at_first ? Passage::Over : Passage::Under, rank + 1, sign};
        code.entries[visits[x][1].position] = {
            over_at_first ? Passage::Under : Passage::Over, rank + 1, sign};
    }
    KnotDiagram d{std::move(code), std::move(emb)};
    if (face_count(d.matching(), d.emb) != c + 2)
        throw std::logic_error("builder: wiring is not planar");
    return d;
}

// --- twist knots --------------------------------------------------------------

namespace {

// Twist-knot shadow with k twist crossings and a clasp (q1, q2):
// q1 q2 t1..tk q2 q1 tk..t1 for even k, q1 q2 t1..tk q1 q2 tk..t1 for odd k
// (the realizable pattern in each parity).
ChordMatching twist_shadow(int k) {
    const int n = 2 * (k + 2);
    std::vector<int> at_first(k + 2), at_second(k + 2);
    int pos = 0;
    at_first[0] = pos++;  // q1
    at_first[1] = pos++;  // q2
    for (int i = 0; i < k; ++i) at_first[2 + i] = pos++;
    if (k % 2 == 0) {
        at_second[1] = pos++;
        at_second[0] = pos++;
    } else {
        at_second[0] = pos++;
        at_second[1] = pos++;
    }
    for (int i = k - 1; i >= 0; --i) at_second[2 + i] = pos++;
    ChordMatching m;
    m.partner.assign(n, -1);
    for (int x = 0; x < k + 2; ++x) {
        m.partner[at_first[x]] = at_second[x];
        m.partner[at_second[x]] = at_first[x];
    }
    return m;
}

KnotDiagram decorate_alternating(const ChordMatching& m, const Embedding& e) {
    const int n = m.points();
    auto ids = m.chord_ids();
    SignedGaussCode code;
    code.entries.resize(n);
    std::vector<int> first_pos(m.chords(), -1);
    for (int i = 0; i < n; ++i)
        if (first_pos[ids[i]] < 0) first_pos[ids[i]] = i;
    for (int i = 0; i < n; ++i) {
        int k = ids[i];
        bool over_here = i % 2 == 0;
        bool over_at_first = first_pos[k] % 2 == 0;
        int sign = (over_at_first == (e.effective(k) == 0)) ? 1 : -1;
        code.entries[i] = {over_here ? Passage::Over : Passage::Under, k + 1, sign};
    }
    return KnotDiagram{code, e};
}

}  // namespace

KnotDiagram twist_knot_diagram(int n, TwistVariant variant) {
    if (n < 1) throw std::invalid_argument("twist_knot_diagram: n must be >= 1");
    if (n == 1)
        return build_diagram(parse_gauss_code(
            variant == TwistVariant::AlmostPositiveUnknot ? "O1-U1-" : "O1+U1+"));
    const int k = n - 2;
    auto m = twist_shadow(k);
    auto emb = realize(m);
    if (!emb) throw std::logic_error("twist shadow must be realizable");
    if (variant == TwistVariant::Alternating) return decorate_alternating(m, *emb);
    std::vector<int> signs(n, 1);
    signs[0] = -1;  // q1 carries the single negative crossing
    return decorate(m, *emb, signs);
}

// --- pretzels and torus braids -------------------------------------------------

namespace {

// Vertical twist tangle on two lanes flowing downward. Braid-style ports:
// 0 = NE, 1 = NW, 2 = SW, 3 = SE (counterclockwise).
struct Tangle {
    int top_left_node = -1, top_left_slot = -1;
    int top_right_node = -1, top_right_slot = -1;
    int bot_left_node = -1, bot_left_slot = -1;
    int bot_right_node = -1, bot_right_slot = -1;
};

Tangle vertical_twists(PlanarBuilder& b, int count, int sign) {
    Tangle t;
    int prev = -1;
    for (int i = 0; i < count; ++i) {
        int x = b.add_signed(sign);
        if (prev < 0) {
            t.top_left_node = x;
            t.top_left_slot = 1;  // NW
            t.top_right_node = x;
            t.top_right_slot = 0;  // NE
        } else {
            b.connect(prev, 2, x, 1);  // SW -> NW
            b.connect(prev, 3, x, 0);  // SE -> NE
        }
        prev = x;
    }
    t.bot_left_node = prev;
    t.bot_left_slot = 2;  // SW
    t.bot_right_node = prev;
    t.bot_right_slot = 3;  // SE
    return t;
}

}  // namespace

KnotDiagram pretzel_diagram(int p, int q, int r) {
    const int params[3] = {p, q, r};
    for (int m : params)
        if (m == 0) throw std::invalid_argument("pretzel tangles must be nonzero");
    PlanarBuilder b;
    Tangle t[3];
    for (int i = 0; i < 3; ++i)
        t[i] = vertical_twists(b, std::abs(params[i]), params[i] > 0 ? 1 : -1);
    // neighbouring tangles share top and bottom arcs; the outer arcs close up
    for (int i = 0; i + 1 < 3; ++i) {
        b.connect(t[i].top_right_node, t[i].top_right_slot, t[i + 1].top_left_node,
                  t[i + 1].top_left_slot);
        b.connect(t[i].bot_right_node, t[i].bot_right_slot, t[i + 1].bot_left_node,
                  t[i + 1].bot_left_slot);
    }
    b.connect(t[2].top_right_node, t[2].top_right_slot, t[0].top_left_node,
              t[0].top_left_slot);
    b.connect(t[2].bot_right_node, t[2].bot_right_slot, t[0].bot_left_node,
              t[0].bot_left_slot);
    try {
        return b.finish(t[0].top_left_node, (t[0].top_left_slot + 2) & 3);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("pretzel parameters yield a link, not a knot");
    }
}

KnotDiagram torus_braid_diagram(int p, int q) {
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
        throw std::invalid_argument("torus braid needs coprime p, q >= 2");
    PlanarBuilder b;
    // loose[i]: (node, slot) of the open bottom port of lane i
    std::vector<std::pair<int, int>> top(p, {-1, -1}), loose(p, {-1, -1});
    for (int rep = 0; rep < q; ++rep) {
        for (int i = 0; i + 1 < p; ++i) {
            int x = b.add_signed(1);
            if (loose[i].first >= 0)
                b.connect(loose[i].first, loose[i].second, x, 1);
            else
                top[i] = {x, 1};
            if (loose[i + 1].first >= 0)
                b.connect(loose[i + 1].first, loose[i + 1].second, x, 0);
            else
                top[i + 1] = {x, 0};
            loose[i] = {x, 2};
            loose[i + 1] = {x, 3};
        }
    }
    for (int i = 0; i < p; ++i)
        b.connect(loose[i].first, loose[i].second, top[i].first, top[i].second);
    return b.finish(top[0].first, (top[0].second + 2) & 3);
}

// --- untwisted Whitehead doubles ------------------------------------------------

namespace {

// Cable ports of one companion strand-end: the two parallel copies, L running
// on the left of the companion orientation.
struct CablePorts {
    int node_l = -1, slot_l = -1;
    int node_r = -1, slot_r = -1;
};

}  // namespace

KnotDiagram whitehead_double(const KnotDiagram& companion, int clasp_sign) {
    if (clasp_sign != 1 && clasp_sign != -1)
        throw std::invalid_argument("clasp sign must be +1 or -1");
    if (companion.crossings() > 12)
        throw BudgetError("whitehead_double: companion budget (12) exceeded");

    const int n = 2 * companion.crossings();
    const int w = companion.writhe();
    PlanarBuilder b;

    std::vector<CablePorts> port(std::max(2 * n, 1));

    auto m = companion.matching();
    auto ids = m.chord_ids();
    for (int i = 0; i < n; ++i) {
        int j = m.partner[i];
        if (j < i) continue;
        std::uint8_t bit = companion.emb.effective(ids[i]);
        bool strand1_over = companion.code.entries[i].passage == Passage::Over;
        int lane = strand1_over ? 0 : 1;  // sub-crossing slots: 0=E,1=N,2=W,3=S
        int ll = b.add_over_lane(lane);
        int lr = b.add_over_lane(lane);
        int rl = b.add_over_lane(lane);
        int rr = b.add_over_lane(lane);
        // local frame: strand 1 (= the passage at position i) runs W->E
        constexpr int E = 0, N = 1, W = 2, S = 3;
        if (bit == 0) {
            // strand 2 runs S->N; its left copy is the western column
            b.connect(ll, E, lr, W);
            b.connect(rl, E, rr, W);
            b.connect(rl, N, ll, S);
            b.connect(rr, N, lr, S);
            port[end_in(i)] = {ll, W, rl, W};
            port[end_out(i)] = {lr, E, rr, E};
            port[end_in(j)] = {rl, S, rr, S};
            port[end_out(j)] = {ll, N, lr, N};
        } else {
            // strand 2 runs N->S; its left copy is the eastern column
            b.connect(lr, E, ll, W);
            b.connect(rr, E, rl, W);
            b.connect(ll, S, rl, N);
            b.connect(lr, S, rr, N);
            port[end_in(i)] = {lr, W, rr, W};
            port[end_out(i)] = {ll, E, rl, E};
            port[end_in(j)] = {ll, N, lr, N};
            port[end_out(j)] = {rl, S, rr, S};
        }
    }

    // Whitehead closure at the base arc. Both cable lanes are cut; the two
    // loose western ends join in a short U-turn lobe, and the eastern return
    // lobe hooks around the western tracks, crossing the L track at k_top and
    // the R track at k_bot (the clasp). |w| compensating full twists sit on
    // the straight antiparallel lane pair east of the hook.
    //
    // clasp nodes use ports 0=E, 1=N, 2=W, 3=S; twist nodes 0=TR, 1=TL,
    // 2=BL, 3=BR (all counterclockwise)
    constexpr int E = 0, N = 1, W = 2, S = 3;
    constexpr int TR = 0, TL = 1, BL = 2, BR = 3;
    // a full twist of the antiparallel pair contributes the negative of its
    // crossing signs to the framing; the positive-clasp double therefore
    // carries clasp crossings of sign -clasp_sign (Jones-oracle calibrated)
    const int k_top = b.add_signed(-clasp_sign);
    const int k_bot = b.add_signed(-clasp_sign);
    b.connect(k_top, E, k_bot, E);  // western U-turn lobe
    b.connect(k_bot, N, k_top, S);  // ascending part of the hook

    const int twists = 2 * std::abs(w);
    std::vector<int> fold(twists);
    for (int i = 0; i < twists; ++i) fold[i] = b.add_signed(w > 0 ? 1 : -1);
    for (int i = 0; i + 1 < twists; ++i) {
        b.connect(fold[i], TR, fold[i + 1], TL);
        b.connect(fold[i], BR, fold[i + 1], BL);
    }
    // open lane ends east of the hook: top lane runs east to the cable's
    // in-L port, bottom lane runs west from the in-R port
    int top_e_node = k_top, top_e_slot = N;
    int bot_e_node = k_bot, bot_e_slot = S;
    if (twists > 0) {
        b.connect(k_top, N, fold[0], TL);
        b.connect(fold[0], BL, k_bot, S);
        top_e_node = fold[twists - 1];
        top_e_slot = TR;
        bot_e_node = fold[twists - 1];
        bot_e_slot = BR;
    }

    if (n == 0) {
        // trivial companion: the lanes close around directly
        b.connect(top_e_node, top_e_slot, k_top, W);
        b.connect(k_bot, W, bot_e_node, bot_e_slot);
        return b.finish(k_top, W);
    }

    const int base_arc = n - 1;  // arc from position n-1 to position 0
    auto out_end = port[end_out(base_arc)];
    auto in_end = port[end_in(0)];
    b.connect(out_end.node_l, out_end.slot_l, k_top, W);
    b.connect(k_bot, W, out_end.node_r, out_end.slot_r);
    b.connect(top_e_node, top_e_slot, in_end.node_l, in_end.slot_l);
    b.connect(in_end.node_r, in_end.slot_r, bot_e_node, bot_e_slot);

    // remaining companion arcs carry both cable lanes straight through
    for (int a = 0; a + 1 < n; ++a) {
        auto from = port[end_out(a)];
        auto to = port[end_in(a + 1)];
        b.connect(from.node_l, from.slot_l, to.node_l, to.slot_l);
        b.connect(from.node_r, from.slot_r, to.node_r, to.slot_r);
    }
    return b.finish(in_end.node_l, (in_end.slot_l + 2) & 3);
}

}  // namespace kg
