#include "knotgauss/invariants.hpp"

#include <stdexcept>

namespace kg {

std::vector<LinkedPair> linked_pairs(const GaussDiagram& g) {
    std::vector<LinkedPair> out;
    const int c = g.chords();
    for (int a = 0; a < c; ++a)
        for (int b = a + 1; b < c; ++b)
            if (g.interleaved(a, b))
                out.push_back({a, b, pair_relation(g, a, b).distinguished});
    return out;
}

std::int64_t lk(const GaussDiagram& g) {
    std::int64_t n = 0;
    const int c = g.chords();
    for (int a = 0; a < c; ++a)
        for (int b = a + 1; b < c; ++b)
            if (g.interleaved(a, b)) ++n;
    return n;
}

namespace {

// Relative circle position measured from the basepoint sitting just before
// position `base`.
inline int rel(int p, int base, int n) { return (p - base + n) % n; }

}  // namespace

std::int64_t v2(const GaussDiagram& g, std::optional<int> basepoint) {
    const int n = g.points();
    const int base = basepoint.value_or(0);
    if (n > 0 && (base < 0 || base >= n)) throw std::out_of_range("basepoint");
    std::int64_t sum = 0;
    const int c = g.chords();
    // pattern read from the basepoint: head(b) tail(a) tail(b) head(a)
    for (int a = 0; a < c; ++a)
        for (int b = 0; b < c; ++b) {
            if (a == b) continue;
            int hb = rel(g.arrows[b].head, base, n);
            int ta = rel(g.arrows[a].tail, base, n);
            int tb = rel(g.arrows[b].tail, base, n);
            int ha = rel(g.arrows[a].head, base, n);
            if (hb < ta && ta < tb && tb < ha) sum += g.arrows[a].sign * g.arrows[b].sign;
        }
    return sum;
}

std::int64_t v2_companion_pattern(const GaussDiagram& g, int basepoint) {
    const int n = g.points();
    std::int64_t sum = 0;
    const int c = g.chords();
    // all arrows reversed: tail(b) head(a) head(b) tail(a)
    for (int a = 0; a < c; ++a)
        for (int b = 0; b < c; ++b) {
            if (a == b) continue;
            int tb = rel(g.arrows[b].tail, basepoint, n);
            int ha = rel(g.arrows[a].head, basepoint, n);
            int hb = rel(g.arrows[b].head, basepoint, n);
            int ta = rel(g.arrows[a].tail, basepoint, n);
            if (tb < ha && ha < hb && hb < ta) sum += g.arrows[a].sign * g.arrows[b].sign;
        }
    return sum;
}

ConfigCensus config_census(const GaussDiagram& g) {
    ConfigCensus out;
    const int c = g.chords();
    out.linked = linked_pairs(g);

    // (3,3): pairwise interleaved triples
    for (int a = 0; a < c; ++a)
        for (int b = a + 1; b < c; ++b) {
            if (!g.interleaved(a, b)) continue;
            for (int d = b + 1; d < c; ++d)
                if (g.interleaved(a, d) && g.interleaved(b, d))
                    out.n33 += (std::int64_t)g.arrows[a].sign * g.arrows[b].sign *
                               g.arrows[d].sign;
        }

    // (4,2)0: base chord r crossed by two mutually non-interleaved arrows whose
    // heads lie on the same side of r
    for (int r = 0; r < c; ++r) {
        int lo = std::min(g.arrows[r].tail, g.arrows[r].head);
        int hi = std::max(g.arrows[r].tail, g.arrows[r].head);
        auto side = [&](int pos) { return lo < pos && pos < hi; };
        for (int p = 0; p < c; ++p) {
            if (p == r || !g.interleaved(p, r)) continue;
            for (int q = p + 1; q < c; ++q) {
                if (q == r || !g.interleaved(q, r)) continue;
                if (g.interleaved(p, q)) continue;
                if (side(g.arrows[p].head) != side(g.arrows[q].head)) continue;
                out.n420 += (std::int64_t)g.arrows[p].sign * g.arrows[q].sign *
                            g.arrows[r].sign;
            }
        }
    }
    return out;
}

std::int64_t v3(const GaussDiagram& g) {
    ConfigCensus cen = config_census(g);
    std::int64_t linked_term = 0;
    for (auto& pr : cen.linked)
        linked_term += g.arrows[pr.a].sign + g.arrows[pr.b].sign;
    // each pair contributes (w_p + w_q)/2 which is integral per pair
    return cen.n33 + cen.n420 + linked_term / 2;
}

}  // namespace kg
