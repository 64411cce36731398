#include "knotgauss/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kg {

// --- Kauffman bracket / Jones ----------------------------------------------

namespace {

struct BracketCrossing {
    // arc indices of the four strand ends in ccw order, and the slot (0..3)
    // of the over-in end within that order
    std::array<int, 4> arc;
    int over_in_slot;
};

std::vector<BracketCrossing> bracket_data(const KnotDiagram& d) {
    const int n = (int)d.code.entries.size();
    auto m = d.matching();
    auto ids = m.chord_ids();
    std::vector<BracketCrossing> xs(d.crossings());
    for (int i = 0; i < n; ++i) {
        int j = m.partner[i];
        if (j < i) continue;
        auto rot = rotation_ends(i, j, d.emb.effective(ids[i]));
        BracketCrossing bc{};
        int over_pos = d.code.entries[i].passage == Passage::Over ? i : j;
        for (int k = 0; k < 4; ++k) {
            int e = rot[k];
            int p = end_position(e);
            bc.arc[k] = end_is_out(e) ? p : (p + n - 1) % n;
            if (e == end_in(over_pos)) bc.over_in_slot = k;
        }
        xs[ids[i]] = bc;
    }
    return xs;
}

struct Dsu {
    std::vector<int> up;
    void init(int n) {
        up.resize(n);
        std::iota(up.begin(), up.end(), 0);
    }
    int find(int x) {
        while (up[x] != x) x = up[x] = up[up[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        up[a] = b;
        return true;
    }
};

}  // namespace

LaurentPoly jones(const KnotDiagram& d) {
    const int c = d.crossings();
    if (c > 24) throw BudgetError("jones: crossing budget (24) exceeded");
    if (c == 0) return LaurentPoly(1);
    const int n = 2 * c;

    auto xs = bracket_data(d);
    const std::uint32_t states = 1u << c;

    auto accumulate_range = [&](std::uint32_t lo, std::uint32_t hi, LaurentPoly& acc) {
        Dsu dsu;
        for (std::uint32_t s = lo; s < hi; ++s) {
            dsu.init(n);
            int merges = 0;
            for (int x = 0; x < c; ++x) {
                // A joins each over end to its ccw predecessor, B to the successor
                int o = xs[x].over_in_slot;
                int step = (s >> x & 1) ? 1 : 3;
                merges += dsu.unite(xs[x].arc[o], xs[x].arc[(o + step) & 3]);
                merges += dsu.unite(xs[x].arc[(o + 2) & 3], xs[x].arc[(o + 2 + step) & 3]);
            }
            int loops = n - merges;
            int a_minus_b = c - 2 * (int)std::popcount(s);
            LaurentPoly term = LaurentPoly::monomial(1, a_minus_b);
            for (int l = 1; l < loops; ++l) {
                LaurentPoly delta;
                delta += LaurentPoly::monomial(-1, 2);
                delta += LaurentPoly::monomial(-1, -2);
                term = term * delta;
            }
            acc += term;
        }
    };

    LaurentPoly bracket;  // polynomial in A
#ifdef _OPENMP
    if (c >= 14) {
        int nt = omp_get_max_threads();
        std::vector<LaurentPoly> parts(nt);
#pragma omp parallel num_threads(nt)
        {
            int t = omp_get_thread_num();
            std::uint64_t chunk = (states + nt - 1) / nt;
            std::uint64_t lo = (std::uint64_t)t * chunk;
            std::uint64_t hi = std::min<std::uint64_t>(states, lo + chunk);
            if (lo < hi) accumulate_range((std::uint32_t)lo, (std::uint32_t)hi, parts[t]);
        }
        for (auto& p : parts) bracket += p;
    } else {
        accumulate_range(0, states, bracket);
    }
#else
    accumulate_range(0, states, bracket);
#endif

    // V = (-A)^{-3w} <D>, then t = A^{-4}
    int w = d.writhe();
    bracket.shift_mul((w % 2 == 0) ? 1 : -1, -3 * w);
    LaurentPoly v;
    for (auto& [e, coef] : bracket.terms()) {
        if (e % 4 != 0) throw std::logic_error("jones: non-integral t exponent");
        v += LaurentPoly::monomial(coef, e / -4);
    }
    return v;
}

std::pair<std::int64_t, std::int64_t> vassiliev_from_jones(const LaurentPoly& V) {
    std::int64_t d2 = V.derivative_at_one(2);
    std::int64_t d3 = V.derivative_at_one(3);
    if (d2 % 6 != 0) throw std::logic_error("V''(1) not divisible by 6");
    if ((3 * d2 + d3) % 9 != 0) throw std::logic_error("v3 normalization not integral");
    return {-d2 / 6, -d2 / 3 - d3 / 9};
}

// --- Conway polynomial ------------------------------------------------------

namespace {

struct SkeinLink {
    // per component: cyclic sequence of (crossing id, passes over?)
    std::vector<std::vector<std::pair<int, bool>>> comps;
    std::vector<int> sign;  // per crossing id

    int live_crossings() const {
        int n = 0;
        for (auto& comp : comps) n += (int)comp.size();
        return n / 2;
    }
};

// First crossing reached under-first in the component-order walk.
struct Defect {
    int crossing;
};

std::optional<Defect> first_defect(const SkeinLink& L) {
    std::vector<char> seen(L.sign.size(), 0);
    for (auto& comp : L.comps)
        for (auto& [x, over] : comp) {
            if (seen[x]) continue;
            seen[x] = 1;
            if (!over) return Defect{x};
        }
    return std::nullopt;
}

SkeinLink switched(const SkeinLink& L, int x) {
    SkeinLink out = L;
    for (auto& comp : out.comps)
        for (auto& p : comp)
            if (p.first == x) p.second = !p.second;
    out.sign[x] = -out.sign[x];
    return out;
}

SkeinLink smoothed(const SkeinLink& L, int x) {
    SkeinLink out;
    out.sign = L.sign;
    int c1 = -1, i1 = -1, c2 = -1, i2 = -1;
    for (int ci = 0; ci < (int)L.comps.size(); ++ci)
        for (int i = 0; i < (int)L.comps[ci].size(); ++i)
            if (L.comps[ci][i].first == x) {
                if (c1 < 0) {
                    c1 = ci;
                    i1 = i;
                } else {
                    c2 = ci;
                    i2 = i;
                }
            }
    for (int ci = 0; ci < (int)L.comps.size(); ++ci)
        if (ci != c1 && ci != c2) out.comps.push_back(L.comps[ci]);

    const auto& A = L.comps[c1];
    const int an = (int)A.size();
    if (c1 == c2) {
        std::vector<std::pair<int, bool>> u, v;
        for (int i = (i1 + 1) % an; i != i2; i = (i + 1) % an) u.push_back(A[i]);
        for (int i = (i2 + 1) % an; i != i1; i = (i + 1) % an) v.push_back(A[i]);
        out.comps.push_back(std::move(u));
        out.comps.push_back(std::move(v));
    } else {
        const auto& B = L.comps[c2];
        const int bn = (int)B.size();
        std::vector<std::pair<int, bool>> u;
        for (int i = (i1 + 1) % an; i != i1; i = (i + 1) % an) u.push_back(A[i]);
        for (int i = (i2 + 1) % bn; i != i2; i = (i + 1) % bn) u.push_back(B[i]);
        out.comps.push_back(std::move(u));
    }
    return out;
}

LaurentPoly conway_rec(const SkeinLink& L) {
    auto defect = first_defect(L);
    if (!defect) return L.comps.size() == 1 ? LaurentPoly(1) : LaurentPoly();
    int x = defect->crossing;
    LaurentPoly a = conway_rec(switched(L, x));
    LaurentPoly b = conway_rec(smoothed(L, x));
    // nabla(L+) - nabla(L-) = z nabla(L0), applied at the pre-switch sign
    b.shift_mul(L.sign[x], 1);
    return a + b;
}

}  // namespace

ConwayPoly conway(const KnotDiagram& d) {
    if (d.crossings() > 20) throw BudgetError("conway: crossing budget (20) exceeded");
    SkeinLink L;
    L.sign.resize(d.crossings());
    L.comps.resize(1);
    for (auto& e : d.code.entries) {
        L.comps[0].push_back({e.label - 1, e.passage == Passage::Over});
        L.sign[e.label - 1] = e.sign;
    }
    LaurentPoly nabla = conway_rec(L);
    ConwayPoly out;
    for (auto& [e, coef] : nabla.terms()) {
        if (e % 2 != 0 || e < 0) throw std::logic_error("conway: odd or negative z power");
        if (e / 2 >= (int)out.coeffs.size()) out.coeffs.resize(e / 2 + 1, 0);
        out.coeffs[e / 2] = coef;
    }
    if (out.coeffs.empty() || out.coeffs[0] != 1)
        throw std::logic_error("conway: constant term of a knot must be 1");
    return out;
}

// --- Goeritz / Gordon-Litherland signature ----------------------------------

namespace {

struct Rat {
    long long num = 0;
    long long den = 1;
    Rat() = default;
    explicit Rat(long long n) : num(n) {}
    bool zero() const { return num == 0; }
    int sgn() const { return num > 0 ? 1 : num < 0 ? -1 : 0; }
};

Rat rat_make(__int128 n, __int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    if (a > 1) {
        n /= a;
        d /= a;
    }
    Rat r;
    r.num = (long long)n;
    r.den = (long long)d;
    if ((__int128)r.num != n || (__int128)r.den != d)
        throw std::overflow_error("signature arithmetic overflow");
    return r;
}

Rat operator*(const Rat& a, const Rat& b) {
    return rat_make((__int128)a.num * b.num, (__int128)a.den * b.den);
}
Rat operator/(const Rat& a, const Rat& b) {
    return rat_make((__int128)a.num * b.den, (__int128)a.den * b.num);
}
Rat operator-(const Rat& a, const Rat& b) {
    return rat_make((__int128)a.num * b.den - (__int128)b.num * a.den,
                    (__int128)a.den * b.den);
}
Rat operator+(const Rat& a, const Rat& b) {
    return rat_make((__int128)a.num * b.den + (__int128)b.num * a.den,
                    (__int128)a.den * b.den);
}

// Signature of a symmetric rational matrix by congruent elimination.
int symmetric_signature(std::vector<std::vector<Rat>> M) {
    std::vector<int> live(M.size());
    std::iota(live.begin(), live.end(), 0);
    int sig = 0;
    while (!live.empty()) {
        int piv = -1;
        for (std::size_t k = 0; k < live.size() && piv < 0; ++k)
            if (!M[live[k]][live[k]].zero()) piv = (int)k;
        if (piv >= 0) {
            int p = live[piv];
            sig += M[p][p].sgn();
            Rat dd = M[p][p];
            live.erase(live.begin() + piv);
            for (int r : live)
                for (int s : live) M[r][s] = M[r][s] - M[r][p] * M[p][s] / dd;
            continue;
        }
        int pi = -1, pj = -1;
        for (std::size_t a = 0; a < live.size() && pi < 0; ++a)
            for (std::size_t b = a + 1; b < live.size() && pi < 0; ++b)
                if (!M[live[a]][live[b]].zero()) {
                    pi = live[a];
                    pj = live[b];
                }
        if (pi < 0) break;  // zero matrix: no further contribution
        Rat bb = M[pi][pj];
        live.erase(std::remove(live.begin(), live.end(), pi), live.end());
        live.erase(std::remove(live.begin(), live.end(), pj), live.end());
        for (int r : live)
            for (int s : live)
                M[r][s] = M[r][s] - (M[r][pi] * M[pj][s] + M[r][pj] * M[pi][s]) / bb;
    }
    return sig;
}

std::int64_t int_determinant(std::vector<std::vector<__int128>> M) {
    const int n = (int)M.size();
    if (n == 0) return 1;
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M[k][k] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (M[r][k] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(M[k], M[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
        prev = M[k][k];
    }
    return sign * (std::int64_t)M[n - 1][n - 1];
}

struct GoeritzData {
    int sigma_std;
    std::int64_t det_abs;
};

// Gordon-Litherland: sigma = sig(G_F) - mu(F) for the checkerboard surface F
// spanned by one colour class.
GoeritzData goeritz_signature(const KnotDiagram& d, int white_colour) {
    const int n = (int)d.code.entries.size();
    auto m = d.matching();
    auto ids = m.chord_ids();
    auto fs = trace_faces(m, d.emb);

    std::vector<int> face_of(2 * n, -1);
    for (int f = 0; f < (int)fs.size(); ++f)
        for (int dart : fs[f]) face_of[dart] = f;

    std::vector<int> colour(fs.size(), -1);
    std::vector<int> stack{0};
    colour[0] = 0;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int dart : fs[f]) {
            int other = face_of[dart ^ 1];
            if (colour[other] < 0) {
                colour[other] = colour[f] ^ 1;
                stack.push_back(other);
            } else if (colour[other] == colour[f]) {
                throw std::logic_error("checkerboard colouring failed");
            }
        }
    }

    std::vector<int> white_index(fs.size(), -1);
    int whites = 0;
    for (int f = 0; f < (int)fs.size(); ++f)
        if (colour[f] == white_colour) white_index[f] = whites++;

    auto arrival_dart = [&](int e) {
        int p = end_position(e);
        return end_is_out(e) ? 2 * p + 1 : 2 * ((p + n - 1) % n);
    };

    std::vector<std::vector<__int128>> G(whites, std::vector<__int128>(whites, 0));
    int mu = 0;
    for (int i = 0; i < n; ++i) {
        int j = m.partner[i];
        if (j < i) continue;
        auto rot = rotation_ends(i, j, d.emb.effective(ids[i]));
        int over_pos = d.code.entries[i].passage == Passage::Over ? i : j;
        int under_pos = over_pos == i ? j : i;
        int o = -1, u = -1;
        std::array<int, 4> corner_face{};
        for (int k = 0; k < 4; ++k) {
            if (rot[k] == end_in(over_pos)) o = k;
            if (rot[k] == end_in(under_pos)) u = k;
            // corner k lies between ends rot[k] and rot[k+1]; it belongs to
            // the face whose boundary arrives at rot[k+1]
            corner_face[k] = face_of[arrival_dart(rot[(k + 1) & 3])];
        }
        // eta = -1 when the white corners are swept by rotating the over
        // strand counterclockwise onto the under strand
        bool corner_o_white = colour[corner_face[o]] == white_colour;
        int eta = corner_o_white ? -1 : 1;
        int in_in_corner = (u == (o + 1) % 4) ? o : u;
        if (colour[corner_face[in_in_corner]] != white_colour) mu += eta;

        int k0 = corner_o_white ? o : (o + 1) & 3;
        int f1 = white_index[corner_face[k0]];
        int f2 = white_index[corner_face[(k0 + 2) & 3]];
        if (f1 != f2) {
            G[f1][f2] -= eta;
            G[f2][f1] -= eta;
            G[f1][f1] += eta;
            G[f2][f2] += eta;
        }
    }

    // principal minor: drop the last white region
    const int k = whites - 1;
    std::vector<std::vector<Rat>> Gp(k, std::vector<Rat>(k));
    std::vector<std::vector<__int128>> Gi(k, std::vector<__int128>(k));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            Gp[a][b] = Rat((long long)G[a][b]);
            Gi[a][b] = G[a][b];
        }
    GoeritzData out{};
    out.sigma_std = symmetric_signature(Gp) - mu;
    std::int64_t det = int_determinant(Gi);
    out.det_abs = det < 0 ? -det : det;
    return out;
}

}  // namespace

int sigma_paper_only(const KnotDiagram& d) {
    if (d.crossings() == 0) return 0;
    return -goeritz_signature(d, 0).sigma_std;
}

SigDetReport signature_and_det(const KnotDiagram& d) {
    SigDetReport rep;
    if (d.crossings() == 0) return rep;
    auto g0 = goeritz_signature(d, 0);
    auto g1 = goeritz_signature(d, 1);
    if (g0.sigma_std != g1.sigma_std)
        throw std::logic_error("checkerboard signatures disagree");
    rep.sigma_standard = g0.sigma_std;
    rep.sigma_paper = -g0.sigma_std;
    rep.det_abs = g0.det_abs;
    rep.det_signed = conway(d).det_signed();
    if (rep.det_abs != (rep.det_signed < 0 ? -rep.det_signed : rep.det_signed))
        throw std::logic_error("Goeritz and Conway determinants disagree");
    return rep;
}

}  // namespace kg
