#include "knotgauss/gauss.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace kg {

int GaussDiagram::writhe() const {
    int w = 0;
    for (auto& a : arrows) w += a.sign;
    return w;
}

bool GaussDiagram::interleaved(int a, int b) const {
    int a1 = std::min(arrows[a].tail, arrows[a].head);
    int b1 = std::max(arrows[a].tail, arrows[a].head);
    int x = arrows[b].tail, y = arrows[b].head;
    bool inx = a1 < x && x < b1;
    bool iny = a1 < y && y < b1;
    return inx != iny;
}

int GaussDiagram::valence(int a) const {
    int v = 0;
    for (int b = 0; b < chords(); ++b)
        if (b != a && interleaved(a, b)) ++v;
    return v;
}

GaussDiagram GaussDiagram::mirror() const {
    GaussDiagram g = *this;
    for (auto& a : g.arrows) a.sign = -a.sign;
    return g;
}

GaussDiagram to_gauss_diagram(const KnotDiagram& d) {
    const int c = d.crossings();
    GaussDiagram g;
    g.arrows.resize(c);
    for (int label = 1; label <= c; ++label)
        g.arrows[label - 1] = {d.under_position(label), d.over_position(label),
                               d.sign_of(label)};
    return g;
}

PairRelation pair_relation(const GaussDiagram& g, int a, int b) {
    if (a == b || a < 0 || b < 0 || a >= g.chords() || b >= g.chords())
        throw std::out_of_range("pair_relation: bad arrow id");
    struct End {
        int pos;
        int arrow;
        bool is_head;
    };
    std::array<End, 4> ends{{{g.arrows[a].tail, a, false},
                             {g.arrows[a].head, a, true},
                             {g.arrows[b].tail, b, false},
                             {g.arrows[b].head, b, true}}};
    std::sort(ends.begin(), ends.end(),
              [](const End& x, const End& y) { return x.pos < y.pos; });
    if (g.interleaved(a, b)) {
        // heads are cyclically adjacent; the head followed by the other's tail
        // marks the distinguished crossing
        for (int k = 0; k < 4; ++k) {
            const End& h = ends[k];
            const End& nxt = ends[(k + 1) & 3];
            if (h.is_head && !nxt.is_head && nxt.arrow != h.arrow)
                return {PairKind::Linked, h.arrow};
        }
        throw std::logic_error("linked pair without a distinguished arrow");
    }
    // non-interleaved: parallel iff both tails sit in cyclically adjacent slots
    for (int k = 0; k < 4; ++k) {
        const End& t1 = ends[k];
        const End& t2 = ends[(k + 1) & 3];
        if (!t1.is_head && !t2.is_head) return {PairKind::Parallel, -1};
    }
    return {PairKind::NonParallel, -1};
}

LemmaReport lemma_checks(const GaussDiagram& g, bool positive_only) {
    LemmaReport rep;
    const int c = g.chords();
    std::vector<std::uint64_t> nb(c, 0);
    for (int a = 0; a < c; ++a)
        for (int b = a + 1; b < c; ++b)
            if (g.interleaved(a, b)) {
                nb[a] |= 1ull << b;
                nb[b] |= 1ull << a;
            }
    for (int a = 0; a < c && rep.ev_ok; ++a)
        if (std::popcount(nb[a]) & 1) {
            rep.ev_ok = false;
            rep.detail = "ev fails at chord " + std::to_string(a);
        }
    for (int x = 0; x < c && rep.two_c_ok; ++x)
        for (int a = 0; a < c && rep.two_c_ok; ++a) {
            if (a == x || !(nb[x] >> a & 1)) continue;
            for (int b = a + 1; b < c; ++b) {
                if (b == x || !(nb[x] >> b & 1)) continue;
                if (nb[a] >> b & 1) continue;           // a and b linked
                if (nb[a] & nb[b]) continue;            // common neighbour d
                rep.two_c_ok = false;
                rep.detail = "2C fails at (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(x) + ")";
                break;
            }
        }
    bool all_positive = true;
    for (auto& a : g.arrows) all_positive &= a.sign > 0;
    if (positive_only && all_positive) {
        rep.eev_checked = true;
        for (int k = 0; k < c && rep.eev_ok; ++k) {
            int dist = 0, total = 0;
            for (int d = 0; d < c; ++d) {
                if (d == k || !(nb[k] >> d & 1)) continue;
                ++total;
                if (pair_relation(g, k, d).distinguished == d) ++dist;
            }
            if (2 * dist != total) {
                rep.eev_ok = false;
                rep.detail = "eev fails at chord " + std::to_string(k);
            }
        }
    }
    return rep;
}

namespace {

// Composite iff the circle splits at two cut points into arcs that both
// contain at least one whole chord, with no chord spanning the cut.
std::optional<std::pair<int, int>> find_cut(const ChordMatching& m) {
    const int n = m.points();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            bool arc1 = false, arc2 = false, spans = false;
            for (int i = 0; i < n && !spans; ++i) {
                if (i > m.partner[i]) continue;
                bool i_in = u <= i && i < v;
                bool j_in = u <= m.partner[i] && m.partner[i] < v;
                if (i_in != j_in)
                    spans = true;
                else
                    (i_in ? arc1 : arc2) = true;
            }
            if (!spans && arc1 && arc2) return std::make_pair(u, v);
        }
    }
    return std::nullopt;
}

}  // namespace

bool is_prime(const GaussDiagram& g) {
    ChordMatching m;
    m.partner.assign(g.points(), -1);
    for (auto& a : g.arrows) {
        m.partner[a.tail] = a.head;
        m.partner[a.head] = a.tail;
    }
    return !find_cut(m).has_value();
}

std::optional<SplitDecomposition> split_composite(const KnotDiagram& d) {
    auto cut = find_cut(d.matching());
    if (!cut) return std::nullopt;
    SplitDecomposition s;
    s.cut_a = cut->first;
    s.cut_b = cut->second;
    const int n = (int)d.code.entries.size();
    for (int i = 0; i < n; ++i) {
        bool in1 = s.cut_a <= i && i < s.cut_b;
        (in1 ? s.part_a : s.part_b).entries.push_back(d.code.entries[i]);
    }
    s.part_a = s.part_a.normalized();
    s.part_b = s.part_b.normalized();
    return s;
}

KnotDiagram mirror(const KnotDiagram& d) {
    SignedGaussCode code = d.code;
    for (auto& e : code.entries) {
        e.passage = e.passage == Passage::Over ? Passage::Under : Passage::Over;
        e.sign = -e.sign;
    }
    return build_diagram(code);
}

KnotDiagram reverse(const KnotDiagram& d) {
    SignedGaussCode code;
    code.entries.assign(d.code.entries.rbegin(), d.code.entries.rend());
    return build_diagram(code);
}

}  // namespace kg
