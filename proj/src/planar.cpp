#include "knotgauss/planar.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace kg {

std::vector<Face> faces(const KnotDiagram& d) {
    auto raw = trace_faces(d.matching(), d.emb);
    std::vector<Face> out;
    out.reserve(raw.size());
    for (auto& f : raw) out.push_back({std::move(f)});
    return out;
}

namespace {

// Crossing label at the vertex where dart d arrives.
int dart_head_label(const KnotDiagram& kd, int d) {
    const int n = (int)kd.code.entries.size();
    int pos = dart_backward(d) ? dart_arc(d) : (dart_arc(d) + 1) % n;
    return kd.code.entries[pos].label;
}

}  // namespace

std::vector<ClaspRecord> find_clasps(const KnotDiagram& d) {
    std::vector<ClaspRecord> out;
    for (auto& f : faces(d)) {
        if (f.size() != 2) continue;
        int x = dart_head_label(d, f.darts[0]);
        int y = dart_head_label(d, f.darts[1]);
        if (x == y) continue;  // curl bounded by a single crossing
        if (x > y) std::swap(x, y);
        ClaspKind kind;
        if (d.sign_of(x) != d.sign_of(y)) {
            kind = ClaspKind::Resolved;
        } else {
            auto m = d.matching();
            kind = m.interleaved(d.over_position(x), d.over_position(y))
                       ? ClaspKind::Parallel
                       : ClaspKind::Reverse;
        }
        out.push_back({x, y, kind});
    }
    return out;
}

int seifert_circles(const SignedGaussCode& code) {
    const int n = (int)code.entries.size();
    if (n == 0) return 1;
    std::vector<int> partner(n, -1);
    std::map<int, int> first;
    for (int i = 0; i < n; ++i) {
        auto [it, fresh] = first.try_emplace(code.entries[i].label, i);
        if (!fresh) {
            partner[i] = it->second;
            partner[it->second] = i;
        }
    }
    std::vector<char> seen(n, 0);
    int circles = 0;
    for (int a0 = 0; a0 < n; ++a0) {
        if (seen[a0]) continue;
        ++circles;
        int a = a0;
        do {
            seen[a] = 1;
            a = partner[(a + 1) % n];
        } while (a != a0);
    }
    return circles;
}

GenusReport genus(const KnotDiagram& d) {
    GenusReport r;
    r.c = d.crossings();
    r.s = seifert_circles(d.code);
    r.g = (r.c - r.s + 1) / 2;
    return r;
}

std::string PositivityStatus::str() const {
    switch (kind) {
        case Positivity::Positive: return "Positive";
        case Positivity::AlmostPositive: return "AlmostPositive";
        default: return "KNegative(" + std::to_string(negatives) + ")";
    }
}

PositivityStatus positivity_status(const KnotDiagram& d) {
    int neg = 0;
    for (auto& e : d.code.entries)
        if (e.passage == Passage::Over && e.sign < 0) ++neg;
    if (neg == 0) return {Positivity::Positive, 0};
    if (neg == 1) return {Positivity::AlmostPositive, 1};
    return {Positivity::KNegative, neg};
}

namespace {

// Interlacement bitmask per chord label (labels 1..c -> bits 0..c-1).
std::vector<std::uint64_t> interlacement_masks(const KnotDiagram& d) {
    auto g = to_gauss_diagram(d);
    const int c = g.chords();
    std::vector<std::uint64_t> nb(c, 0);
    for (int a = 0; a < c; ++a)
        for (int b = a + 1; b < c; ++b)
            if (g.interleaved(a, b)) {
                nb[a] |= 1ull << b;
                nb[b] |= 1ull << a;
            }
    return nb;
}

SignedGaussCode drop_labels(const SignedGaussCode& code, const std::vector<int>& labels) {
    SignedGaussCode out;
    for (auto& e : code.entries)
        if (std::find(labels.begin(), labels.end(), e.label) == labels.end())
            out.entries.push_back(e);
    return out;
}

}  // namespace

KnotDiagram reduce(const KnotDiagram& d) {
    KnotDiagram cur = d;
    for (;;) {
        auto nb = interlacement_masks(cur);
        int nug = -1;
        for (int k = 0; k < (int)nb.size(); ++k)
            if (nb[k] == 0) {
                nug = k + 1;
                break;
            }
        if (nug < 0) return cur;
        cur = build_diagram(drop_labels(cur.code, {nug}));
    }
}

bool is_bireduced(const KnotDiagram& d) {
    auto nb = interlacement_masks(d);
    const int c = (int)nb.size();
    for (int k = 0; k < c; ++k)
        if (nb[k] == 0) return c == 0;  // not even reduced
    std::vector<std::pair<int, int>> digons;
    for (auto& cl : find_clasps(d)) digons.emplace_back(cl.a, cl.b);
    auto g = to_gauss_diagram(d);
    for (int p = 0; p < c; ++p)
        for (int q = p + 1; q < c; ++q) {
            if (nb[p] != nb[q]) continue;  // parallel chords never interlace
            if (std::find(digons.begin(), digons.end(), std::make_pair(p + 1, q + 1)) !=
                digons.end())
                continue;
            if (pair_relation(g, p, q).kind == PairKind::Parallel) return false;
        }
    return true;
}

KnotDiagram apply_t2bar(const KnotDiagram& d, int at_label) {
    const int c = d.crossings();
    if (at_label < 1 || at_label > c) throw MoveError("no such crossing");
    const int i = std::min(d.over_position(at_label), d.under_position(at_label));
    const int j = std::max(d.over_position(at_label), d.under_position(at_label));
    const int s = d.sign_of(at_label);
    const int n1 = c + 1, n2 = c + 2;

    for (int combo = 0; combo < 4; ++combo) {
        bool n1_over_first = combo & 1;
        bool n2_over_first = combo & 2;
        SignedGaussCode code;
        auto push = [&](GaussEntry e) { code.entries.push_back(e); };
        for (int p = 0; p <= i; ++p) push(d.code.entries[p]);
        push({n1_over_first ? Passage::Over : Passage::Under, n1, s});
        push({n2_over_first ? Passage::Over : Passage::Under, n2, s});
        for (int p = i + 1; p < j; ++p) push(d.code.entries[p]);
        push({n2_over_first ? Passage::Under : Passage::Over, n2, s});
        push({n1_over_first ? Passage::Under : Passage::Over, n1, s});
        for (int p = j; p < 2 * c; ++p) push(d.code.entries[p]);
        try {
            return build_diagram(code);
        } catch (const NotRealizableError&) {
        }
    }
    throw MoveError("twist extension failed at crossing " + std::to_string(at_label));
}

KnotDiagram resolve_clasp(const KnotDiagram& d, const ClaspRecord& clasp) {
    if (clasp.kind != ClaspKind::Resolved)
        throw MoveError("clasp is not resolved: crossings have equal signs");
    return build_diagram(drop_labels(d.code, {clasp.a, clasp.b}));
}

KnotDiagram loop_move(const KnotDiagram& d, int k_label, LoopSide side) {
    const int c = d.crossings();
    if (k_label < 1 || k_label > c) throw MoveError("no such crossing");
    const int n = 2 * c;
    const int h = d.over_position(k_label);
    const int t = d.under_position(k_label);
    const int from = side == LoopSide::Left ? h : t;
    const int to = side == LoopSide::Left ? t : h;

    std::vector<char> in_arc(n, 0);
    for (int p = (from + 1) % n; p != to; p = (p + 1) % n) in_arc[p] = 1;

    std::vector<char> touched(c + 1, 0);
    touched[k_label] = 1;
    for (int label = 1; label <= c; ++label) {
        if (label == k_label) continue;
        bool a = in_arc[d.over_position(label)];
        bool b = in_arc[d.under_position(label)];
        if (a && b)
            throw MoveError("segment has a self-crossing: loop move not applicable");
        if (a || b) touched[label] = 1;
    }
    std::vector<int> drop;
    for (int label = 1; label <= c; ++label)
        if (touched[label]) drop.push_back(label);
    return reduce(build_diagram(drop_labels(d.code, drop)));
}

KnotDiagram connected_sum(const KnotDiagram& a, const KnotDiagram& b) {
    SignedGaussCode code = a.code;
    int shift = a.crossings();
    for (auto e : b.code.entries) {
        e.label += shift;
        code.entries.push_back(e);
    }
    return build_diagram(code);
}

InvariantReport invariant_report(const KnotDiagram& d) {
    InvariantReport r;
    auto g = to_gauss_diagram(d);
    r.v2 = v2(g);
    r.v3 = v3(g);
    r.lk = lk(g);
    r.writhe = d.writhe();
    auto gr = genus(d);
    r.c = gr.c;
    r.s = gr.s;
    r.g = gr.g;
    r.status = positivity_status(d);
    return r;
}

}  // namespace kg
