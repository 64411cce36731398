#include "knotgauss/codes.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <fstream>
#include <sstream>

namespace kg {

std::array<int, 4> rotation_ends(int i, int j, std::uint8_t bit) {
    if (bit == 0) return {end_in(i), end_in(j), end_out(i), end_out(j)};
    return {end_in(i), end_out(j), end_out(i), end_in(j)};
}

namespace {

inline std::array<int, 4> rotation_of(int i, int j, std::uint8_t bit) {
    return rotation_ends(i, j, bit);
}

}  // namespace

int SignedGaussCode::writhe() const {
    int w = 0;
    for (auto& e : entries)
        if (e.passage == Passage::Over) w += e.sign;
    return w;
}

SignedGaussCode SignedGaussCode::normalized() const {
    SignedGaussCode out;
    out.entries.reserve(entries.size());
    std::map<int, int> relabel;
    for (auto& e : entries) {
        auto [it, fresh] = relabel.try_emplace(e.label, (int)relabel.size() + 1);
        out.entries.push_back({e.passage, it->second, e.sign});
        (void)fresh;
    }
    return out;
}

bool ChordMatching::interleaved(int p, int q) const {
    int a1 = std::min(p, partner[p]), b1 = std::max(p, partner[p]);
    int a2 = std::min(q, partner[q]), b2 = std::max(q, partner[q]);
    bool in1 = a1 < a2 && a2 < b1;
    bool in2 = a1 < b2 && b2 < b1;
    return in1 != in2;
}

std::vector<int> ChordMatching::chord_ids() const {
    std::vector<int> id(partner.size(), -1);
    int next = 0;
    for (int i = 0; i < (int)partner.size(); ++i) {
        if (id[i] >= 0) continue;
        id[i] = id[partner[i]] = next++;
    }
    return id;
}

std::vector<std::pair<int, int>> ChordMatching::chord_spans() const {
    std::vector<std::pair<int, int>> spans;
    spans.reserve(partner.size() / 2);
    for (int i = 0; i < (int)partner.size(); ++i)
        if (i < partner[i]) spans.emplace_back(i, partner[i]);
    return spans;
}

std::vector<int> ChordMatching::canonical_key() const {
    const int n = points();
    std::vector<int> best, cur(n);
    for (int flip = 0; flip < 2; ++flip) {
        for (int rot = 0; rot < n; ++rot) {
            auto psi = [&](int i) {
                return flip ? (rot + 2 * n - 1 - i) % n : (i + rot) % n;
            };
            std::vector<int> np(n);
            for (int i = 0; i < n; ++i) np[psi(i)] = psi(partner[i]);
            for (int i = 0; i < n; ++i) cur[i] = (np[i] - i + n) % n;
            if (best.empty() || cur < best) best = cur;
        }
        if (n == 0) break;
    }
    return best;
}

bool ChordMatching::is_canonical() const {
    const int n = points();
    std::vector<int> raw(n);
    for (int i = 0; i < n; ++i) raw[i] = (partner[i] - i + n) % n;
    return raw == canonical_key();
}

ChordMatching KnotDiagram::matching() const {
    const int n = (int)code.entries.size();
    ChordMatching m;
    m.partner.assign(n, -1);
    std::map<int, int> first;
    for (int i = 0; i < n; ++i) {
        auto [it, fresh] = first.try_emplace(code.entries[i].label, i);
        if (!fresh) {
            m.partner[i] = it->second;
            m.partner[it->second] = i;
        }
    }
    return m;
}

int KnotDiagram::sign_of(int label) const {
    for (auto& e : code.entries)
        if (e.label == label) return e.sign;
    throw std::out_of_range("no such crossing label");
}

int KnotDiagram::over_position(int label) const {
    for (int i = 0; i < (int)code.entries.size(); ++i)
        if (code.entries[i].label == label && code.entries[i].passage == Passage::Over)
            return i;
    throw std::out_of_range("no such crossing label");
}

int KnotDiagram::under_position(int label) const {
    for (int i = 0; i < (int)code.entries.size(); ++i)
        if (code.entries[i].label == label && code.entries[i].passage == Passage::Under)
            return i;
    throw std::out_of_range("no such crossing label");
}

std::vector<std::vector<int>> trace_faces(const ChordMatching& m, const Embedding& e) {
    const int n = m.points();
    std::vector<std::vector<int>> out;
    if (n == 0) return {{}, {}};  // a simple closed curve bounds two faces
    std::vector<int> exit_dart(2 * n, -1), arrive(2 * n);
    auto ids = m.chord_ids();
    for (int i = 0; i < n; ++i) {
        int j = m.partner[i];
        if (j < i) continue;
        auto rot = rotation_of(i, j, e.effective(ids[i]));
        for (int k = 0; k < 4; ++k) {
            int from = rot[k], to = rot[(k + 3) & 3];
            exit_dart[from] =
                end_is_out(to) ? 2 * end_position(to)
                               : 2 * ((end_position(to) + n - 1) % n) + 1;
        }
    }
    for (int a = 0; a < n; ++a) {
        arrive[2 * a] = end_in((a + 1) % n);
        arrive[2 * a + 1] = end_out(a);
    }
    std::vector<char> seen(2 * n, 0);
    for (int d0 = 0; d0 < 2 * n; ++d0) {
        if (seen[d0]) continue;
        std::vector<int> face;
        int d = d0;
        do {
            seen[d] = 1;
            face.push_back(d);
            d = exit_dart[arrive[d]];
        } while (d != d0);
        out.push_back(std::move(face));
    }
    return out;
}

int face_count(const ChordMatching& m, const Embedding& e) {
    const int n = m.points();
    if (n == 0) return 2;
    std::uint32_t mask = 0;
    auto ids = m.chord_ids();
    for (int i = 0; i < n; ++i)
        if (i < m.partner[i] && e.effective(ids[i])) mask |= 1u << ids[i];
    return face_count_masked(m.partner, mask);
}

int face_count_masked(const std::vector<int>& partner, std::uint32_t eps_mask) {
    const int n = (int)partner.size();
    if (n == 0) return 2;
    // exit_dart[end]: dart leaving the vertex through the end that is
    // clockwise-next from `end`. Darts: 2*arc + (0 fwd, 1 bwd).
    static thread_local std::vector<int> exit_dart, arrive_end, seen;
    exit_dart.assign(2 * n, -1);
    arrive_end.resize(2 * n);
    seen.assign(2 * n, 0);

    int chord = 0;
    for (int i = 0; i < n; ++i) {
        int j = partner[i];
        if (j < i) continue;
        auto rot = rotation_of(i, j, (eps_mask >> chord) & 1u);
        ++chord;
        for (int k = 0; k < 4; ++k) {
            int from = rot[k], to = rot[(k + 3) & 3];
            // leaving through IN(p) walks arc p-1 backward; through OUT(p),
            // arc p forward.
            int dart = (to & 1) ? 2 * (to >> 1) : 2 * (((to >> 1) + n - 1) % n) + 1;
            exit_dart[from] = dart;
        }
    }
    for (int a = 0; a < n; ++a) {
        arrive_end[2 * a] = end_in((a + 1) % n);  // forward walk
        arrive_end[2 * a + 1] = end_out(a);       // backward walk
    }
    int faces = 0;
    for (int d0 = 0; d0 < 2 * n; ++d0) {
        if (seen[d0]) continue;
        ++faces;
        int d = d0;
        do {
            seen[d] = 1;
            d = exit_dart[arrive_end[d]];
        } while (d != d0);
    }
    return faces;
}

bool even_valence(const ChordMatching& m) {
    const int n = m.points();
    for (int i = 0; i < n; ++i) {
        if (i > m.partner[i]) continue;
        int cnt = 0;
        for (int k = i + 1; k < m.partner[i]; ++k)
            if (m.partner[k] < i || m.partner[k] > m.partner[i]) ++cnt;
        if (cnt & 1) return false;
    }
    return true;
}

std::optional<Embedding> realize(const ChordMatching& m) {
    const int c = m.chords();
    if (c == 0) return Embedding{};
    if (!even_valence(m)) return std::nullopt;
    // Mirror symmetry: if any witness exists, one exists with bit 0 clear.
    for (std::uint32_t mask = 0; mask < (1u << (c - 1)); ++mask) {
        std::uint32_t eps = mask << 1;
        if (face_count_masked(m.partner, eps) == c + 2) {
            Embedding e;
            e.chirality.resize(c);
            for (int k = 0; k < c; ++k) e.chirality[k] = (eps >> k) & 1u;
            return e;
        }
    }
    return std::nullopt;
}

// --- Gauss code text ------------------------------------------------------

SignedGaussCode parse_gauss_code(const std::string& text) {
    SignedGaussCode code;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        char pc = text[i];
        if (pc != 'O' && pc != 'U' && pc != 'o' && pc != 'u')
            throw ParseError("expected O or U at offset " + std::to_string(i));
        ++i;
        std::size_t d0 = i;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
        if (i == d0) throw ParseError("missing crossing label after passage letter");
        int label = std::stoi(text.substr(d0, i - d0));
        if (label <= 0) throw ParseError("crossing labels must be positive");
        if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
            throw ParseError("missing sign for crossing " + std::to_string(label));
        int sign = text[i] == '+' ? 1 : -1;
        ++i;
        code.entries.push_back(
            {(pc == 'O' || pc == 'o') ? Passage::Over : Passage::Under, label, sign});
        skip_ws();
    }
    // validate
    std::map<int, std::pair<int, int>> seen;  // label -> (over count, under count)
    std::map<int, int> sign_of;
    for (auto& e : code.entries) {
        auto& [ov, un] = seen[e.label];
        (e.passage == Passage::Over ? ov : un)++;
        auto [it, fresh] = sign_of.try_emplace(e.label, e.sign);
        if (!fresh && it->second != e.sign)
            throw ParseError("inconsistent signs for crossing " + std::to_string(e.label));
    }
    for (auto& [label, cnt] : seen) {
        if (cnt.first != 1 || cnt.second != 1)
            throw ParseError("crossing " + std::to_string(label) +
                             " must occur exactly once over and once under");
    }
    return code;
}

namespace {

std::string render_gauss(const SignedGaussCode& code) {
    std::ostringstream os;
    for (auto& e : code.entries)
        os << (e.passage == Passage::Over ? 'O' : 'U') << e.label
           << (e.sign > 0 ? '+' : '-');
    return os.str();
}

}  // namespace

std::string serialize_gauss_code(const SignedGaussCode& code) {
    const int n = (int)code.entries.size();
    if (n == 0) return "";
    std::string best;
    for (int rot = 0; rot < n; ++rot) {
        SignedGaussCode r;
        r.entries.reserve(n);
        for (int i = 0; i < n; ++i) r.entries.push_back(code.entries[(i + rot) % n]);
        std::string s = render_gauss(r.normalized());
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

std::string canonical_signed_key(const SignedGaussCode& code) {
    const int n = (int)code.entries.size();
    if (n == 0) return "";
    std::string best;
    for (int dir = 0; dir < 2; ++dir) {
        for (int rot = 0; rot < n; ++rot) {
            SignedGaussCode r;
            r.entries.reserve(n);
            for (int i = 0; i < n; ++i) {
                int idx = dir ? (rot + 2 * n - i) % n : (i + rot) % n;
                r.entries.push_back(code.entries[idx]);
            }
            std::string s = render_gauss(r.normalized());
            if (best.empty() || s < best) best = std::move(s);
        }
    }
    return best;
}

// --- diagram building -----------------------------------------------------

namespace {

void validate_code(const SignedGaussCode& code) {
    std::map<int, std::pair<int, int>> seen;
    std::map<int, int> sign_of;
    for (auto& e : code.entries) {
        if (e.sign != 1 && e.sign != -1) throw ParseError("crossing sign must be +1 or -1");
        auto& [ov, un] = seen[e.label];
        (e.passage == Passage::Over ? ov : un)++;
        auto [it, fresh] = sign_of.try_emplace(e.label, e.sign);
        if (!fresh && it->second != e.sign)
            throw ParseError("inconsistent signs for crossing " + std::to_string(e.label));
    }
    for (auto& [label, cnt] : seen)
        if (cnt.first != 1 || cnt.second != 1)
            throw ParseError("crossing " + std::to_string(label) +
                             " must occur exactly once over and once under");
}

}  // namespace

KnotDiagram build_diagram(const SignedGaussCode& raw) {
    validate_code(raw);
    SignedGaussCode code = raw.normalized();
    const int c = code.crossings();
    KnotDiagram d;
    d.code = code;
    d.emb.chirality.assign(c, 0);
    if (c == 0) return d;

    ChordMatching m = d.matching();
    auto ids = m.chord_ids();
    // Chord ids follow first-occurrence order, so chord id == label - 1.
    for (int i = 0; i < (int)code.entries.size(); ++i) {
        if (i > m.partner[i]) continue;
        const auto& first = code.entries[i];
        bool over_at_first = first.passage == Passage::Over;
        std::uint8_t bit = (over_at_first == (first.sign > 0)) ? 0 : 1;
        d.emb.chirality[ids[i]] = bit;
    }
    if (face_count(m, d.emb) != c + 2) {
        if (!realize(m))
            throw NotRealizableError("chord matching admits no planar embedding");
        throw NotRealizableError(
            "declared sign pattern is not planar-realizable for this code");
    }
    return d;
}

KnotDiagram decorate(const ChordMatching& m, const Embedding& e,
                     const std::vector<int>& signs) {
    const int n = m.points();
    auto ids = m.chord_ids();
    KnotDiagram d;
    d.code.entries.resize(n);
    d.emb.chirality.resize(m.chords());
    std::vector<char> visited(m.chords(), 0);
    for (int i = 0; i < n; ++i) {
        int k = ids[i];
        std::uint8_t bit = e.effective(k);
        d.emb.chirality[k] = bit;
        bool first = !visited[k];
        visited[k] = 1;
        bool over_at_first = (bit == 0) == (signs[k] > 0);
        bool over_here = first == over_at_first;
        d.code.entries[i] = {over_here ? Passage::Over : Passage::Under, k + 1, signs[k]};
    }
    return d;
}

// --- PD codes --------------------------------------------------------------

KnotDiagram parse_pd_code(const std::string& text) {
    std::vector<std::array<int, 4>> terms;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != 'X' && text[i] != 'x') throw ParseError("expected X(...) term");
        ++i;
        skip_ws();
        if (i >= text.size() || text[i] != '(') throw ParseError("expected '(' after X");
        ++i;
        std::array<int, 4> t{};
        for (int k = 0; k < 4; ++k) {
            skip_ws();
            if (i < text.size() && text[i] == ')')
                throw ParseError("X term needs exactly 4 edge labels");
            std::size_t d0 = i;
            while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
            if (i == d0) throw ParseError("X term needs 4 positive edge labels");
            t[k] = std::stoi(text.substr(d0, i - d0));
            if (t[k] <= 0) throw ParseError("edge labels must be positive");
            skip_ws();
            if (k < 3) {
                if (i >= text.size() || text[i] != ',')
                    throw ParseError("X term needs exactly 4 edge labels");
                ++i;
            }
        }
        if (i >= text.size() || text[i] != ')') throw ParseError("unterminated X term");
        ++i;
        skip_ws();
        terms.push_back(t);
    }

    const int c = (int)terms.size();
    const int n = 2 * c;
    if (c == 0) return KnotDiagram{};

    std::vector<int> edge_uses(n + 1, 0);
    for (auto& t : terms)
        for (int e : t) {
            if (e > n)
                throw ParseError("edge label " + std::to_string(e) +
                                 " out of range 1.." + std::to_string(n));
            edge_uses[e]++;
        }
    for (int e = 1; e <= n; ++e)
        if (edge_uses[e] != 2)
            throw ParseError("edge " + std::to_string(e) +
                             " must be used exactly twice (one component expected)");

    auto next_edge = [&](int e) { return e % n + 1; };

    // position p = passage at the head of edge p+1
    struct PassageInfo {
        int crossing = -1;
        Passage passage = Passage::Over;
    };
    std::vector<PassageInfo> at(n);
    std::vector<std::array<int, 4>> rot_ends(c);  // ccw strand-end order
    std::vector<int> over_pos(c), under_pos(c);

    for (int x = 0; x < c; ++x) {
        auto [a, b, cc, dd] = terms[x];
        if (next_edge(a) != cc)
            throw ParseError("under-strand of X(" + std::to_string(a) +
                             ",...) must leave on edge " + std::to_string(next_edge(a)));
        int over_in;
        if (next_edge(dd) == b)
            over_in = dd;
        else if (next_edge(b) == dd)
            over_in = b;
        else
            throw ParseError("over-strand edges of a crossing must be consecutive");
        int pu = a - 1, po = over_in - 1;
        if (at[pu].crossing >= 0 || at[po].crossing >= 0 || pu == po)
            throw ParseError("conflicting passages; diagram is not a single knot");
        at[pu] = {x, Passage::Under};
        at[po] = {x, Passage::Over};
        over_pos[x] = po;
        under_pos[x] = pu;
        // ccw slots: a = IN(pu), c = OUT(pu); over-in slot = IN(po), other OUT(po)
        std::array<int, 4> r{};
        r[0] = end_in(pu);
        r[2] = end_out(pu);
        if (over_in == dd) {
            r[3] = end_in(po);
            r[1] = end_out(po);
        } else {
            r[1] = end_in(po);
            r[3] = end_out(po);
        }
        rot_ends[x] = r;
    }
    for (int p = 0; p < n; ++p)
        if (at[p].crossing < 0)
            throw ParseError("edge labels do not trace a single closed component");

    // Derive chirality bit and sign per crossing from the actual rotation.
    KnotDiagram d;
    d.code.entries.resize(n);
    d.emb.chirality.assign(c, 0);
    std::vector<int> label_of(c, 0);
    int next_label = 1;
    for (int p = 0; p < n; ++p) {
        int x = at[p].crossing;
        if (label_of[x] == 0) label_of[x] = next_label++;
    }
    for (int x = 0; x < c; ++x) {
        int i0 = std::min(over_pos[x], under_pos[x]);
        int j0 = std::max(over_pos[x], under_pos[x]);
        std::uint8_t bit = 2;
        for (std::uint8_t b = 0; b < 2 && bit == 2; ++b) {
            auto pat = rotation_of(i0, j0, b);
            for (int s = 0; s < 4; ++s) {
                bool ok = true;
                for (int k = 0; k < 4 && ok; ++k)
                    ok = rot_ends[x][k] == pat[(k + s) & 3];
                if (ok) {
                    bit = b;
                    break;
                }
            }
        }
        if (bit == 2) throw ParseError("crossing strand-ends are not transversal");
        // sign: +1 iff under-in immediately follows over-in counterclockwise
        int io = -1, iu = -1;
        for (int k = 0; k < 4; ++k) {
            if (rot_ends[x][k] == end_in(over_pos[x])) io = k;
            if (rot_ends[x][k] == end_in(under_pos[x])) iu = k;
        }
        int sign = (iu == (io + 1) % 4) ? 1 : -1;
        int chord_id = label_of[x] - 1;
        d.emb.chirality[chord_id] = bit;
        d.code.entries[over_pos[x]] = {Passage::Over, label_of[x], sign};
        d.code.entries[under_pos[x]] = {Passage::Under, label_of[x], sign};
    }

    if (face_count(d.matching(), d.emb) != c + 2)
        throw ParseError("non-planar incidence: face traversal fails the Euler check");
    return d;
}

std::vector<std::pair<std::string, KnotDiagram>> load_knot_table(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open knot table: " + path);
    std::vector<std::pair<std::string, KnotDiagram>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw ParseError("fixture line without a tab separator: " + line);
        out.emplace_back(line.substr(0, tab),
                         build_diagram(parse_gauss_code(line.substr(tab + 1))));
    }
    return out;
}

}  // namespace kg
