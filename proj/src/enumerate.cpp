#include "knotgauss/enumerate.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <map>
#include <mutex>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kg {

namespace {

// Backtracking over matchings of {0,..,2c-1} whose chord at position 0 ends
// at `first_partner`; the lowest unpaired position is always paired next.
template <typename Fn>
void scan_matchings(int c, int first_partner, Fn&& leaf) {
    const int n = 2 * c;
    std::vector<int> partner(n, -1);
    partner[0] = first_partner;
    partner[first_partner] = 0;

    auto lowest_free = [&](int from) {
        int i = from;
        while (i < n && partner[i] >= 0) ++i;
        return i;
    };

    struct Frame {
        int i;
        int j;
    };
    std::vector<Frame> frames;
    frames.reserve(c);
    int i = lowest_free(1);
    int j = i + 1;
    for (;;) {
        if (i >= n) {
            leaf(partner);
            if (frames.empty()) return;
            auto f = frames.back();
            frames.pop_back();
            partner[f.i] = partner[f.j] = -1;
            i = f.i;
            j = f.j + 1;
            continue;
        }
        while (j < n && partner[j] >= 0) ++j;
        if (j >= n) {
            if (frames.empty()) return;
            auto f = frames.back();
            frames.pop_back();
            partner[f.i] = partner[f.j] = -1;
            i = f.i;
            j = f.j + 1;
            continue;
        }
        partner[i] = j;
        partner[j] = i;
        frames.push_back({i, j});
        i = lowest_free(i + 1);
        j = i + 1;
    }
}

bool even_valence_raw(const std::vector<int>& partner) {
    const int n = (int)partner.size();
    for (int i = 0; i < n; ++i) {
        if (partner[i] < i) continue;
        int cnt = 0;
        for (int k = i + 1; k < partner[i]; ++k)
            if (partner[k] < i || partner[k] > partner[i]) ++cnt;
        if (cnt & 1) return false;
    }
    return true;
}

// lexicographic minimality of the partner-offset word under the dihedral
// action, with early exit
bool is_canonical_raw(const std::vector<int>& partner) {
    const int n = (int)partner.size();
    thread_local std::vector<int> raw;
    raw.resize(n);
    for (int i = 0; i < n; ++i) raw[i] = (partner[i] - i + n) % n;
    for (int flip = 0; flip < 2; ++flip) {
        for (int rot = 0; rot < n; ++rot) {
            if (flip == 0 && rot == 0) continue;
            bool smaller = false, bigger = false;
            for (int i = 0; i < n && !smaller && !bigger; ++i) {
                // old position mapping for the transformed word at index i
                int old_i = flip ? (rot + 2 * n - 1 - i) % n : (i - rot + n) % n;
                int old_p = partner[old_i];
                int new_p = flip ? (rot + 2 * n - 1 - old_p) % n : (old_p + rot) % n;
                int v = (new_p - i + n) % n;
                if (v < raw[i]) smaller = true;
                if (v > raw[i]) bigger = true;
            }
            if (smaller) return false;
        }
    }
    return true;
}

std::optional<std::uint32_t> realize_mask(const std::vector<int>& partner, int c) {
    if (!even_valence_raw(partner)) return std::nullopt;
    if (c == 0) return 0u;
    for (std::uint32_t mask = 0; mask < (1u << (c - 1)); ++mask) {
        std::uint32_t eps = mask << 1;
        if (face_count_masked(partner, eps) == c + 2) return eps;
    }
    return std::nullopt;
}

Shadow make_shadow(const std::vector<int>& partner, std::uint32_t eps, int c) {
    Shadow s;
    s.matching.partner = partner;
    s.emb.chirality.resize(c);
    for (int k = 0; k < c; ++k) s.emb.chirality[k] = (eps >> k) & 1u;

    auto spans = s.matching.chord_spans();
    s.reduced = true;
    for (int a = 0; a < c; ++a) {
        int deg = 0;
        for (int b = 0; b < c; ++b) {
            if (a == b) continue;
            bool in1 = spans[a].first < spans[b].first && spans[b].first < spans[a].second;
            bool in2 = spans[a].first < spans[b].second && spans[b].second < spans[a].second;
            if (in1 != in2) ++deg;
        }
        if (deg == 0) s.reduced = false;
        s.lk += deg;
    }
    s.lk /= 2;

    GaussDiagram g;
    g.arrows.resize(c);
    auto ids = s.matching.chord_ids();
    for (int i = 0; i < 2 * c; ++i)
        if (i < partner[i]) g.arrows[ids[i]] = {i, partner[i], 1};
    s.prime = is_prime(g);
    return s;
}

std::vector<Shadow> enumerate_shadows_partitioned(int c, bool parallel) {
    if (c < 0 || c > 9) throw BudgetError("shadow enumeration budget is c <= 9");
    if (c == 0) {
        Shadow s;
        s.prime = true;
        s.reduced = true;
        return {s};
    }
    const int n = 2 * c;
    std::vector<std::vector<Shadow>> parts(n);

    auto run_partition = [&](int fp) {
        auto& out = parts[fp];
        scan_matchings(c, fp, [&](const std::vector<int>& partner) {
            if (!even_valence_raw(partner)) return;
            if (!is_canonical_raw(partner)) return;
            auto eps = realize_mask(partner, c);
            if (!eps) return;
            out.push_back(make_shadow(partner, *eps, c));
        });
    };

#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int fp = 1; fp < n; ++fp) run_partition(fp);
    } else {
        for (int fp = 1; fp < n; ++fp) run_partition(fp);
    }
#else
    (void)parallel;
    for (int fp = 1; fp < n; ++fp) run_partition(fp);
#endif

    std::vector<Shadow> all;
    for (auto& p : parts)
        for (auto& s : p) all.push_back(std::move(s));
    return all;
}

}  // namespace

std::vector<Shadow> enumerate_shadows_serial(int c) {
    return enumerate_shadows_partitioned(c, false);
}

std::vector<Shadow> enumerate_shadows_parallel(int c) {
    return enumerate_shadows_partitioned(c, true);
}

const std::vector<Shadow>& shadows(int c) {
    static std::mutex mu;
    static std::map<int, std::vector<Shadow>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(c);
    if (it == cache.end())
        it = cache.emplace(c, enumerate_shadows_partitioned(c, true)).first;
    return it->second;
}

namespace {

bool no_bad_clasp(const KnotDiagram& d) {
    for (auto& cl : find_clasps(d))
        if (cl.kind != ClaspKind::Resolved) return false;
    return true;
}

template <typename Fn>
void decorations_of(const Shadow& s, const DiagramFilter& f, Fn&& fn) {
    const int c = s.matching.chords();
    std::vector<int> signs(c, 1);
    switch (f.pos) {
        case DiagramFilter::Pos::Positive:
            fn(decorate(s.matching, s.emb, signs));
            break;
        case DiagramFilter::Pos::AlmostPositive: {
            std::set<std::string> seen;
            for (int k = 0; k < c; ++k) {
                signs.assign(c, 1);
                signs[k] = -1;
                auto d = decorate(s.matching, s.emb, signs);
                if (seen.insert(canonical_signed_key(d.code)).second) fn(d);
            }
            break;
        }
        case DiagramFilter::Pos::KNegative: {
            if (f.k_negative > c) break;
            std::set<std::string> seen;
            std::vector<int> idx(f.k_negative);
            for (int i = 0; i < f.k_negative; ++i) idx[i] = i;
            for (;;) {
                signs.assign(c, 1);
                for (int i : idx) signs[i] = -1;
                auto d = decorate(s.matching, s.emb, signs);
                if (seen.insert(canonical_signed_key(d.code)).second) fn(d);
                int i = f.k_negative - 1;
                while (i >= 0 && idx[i] == c - f.k_negative + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < f.k_negative; ++j) idx[j] = idx[j - 1] + 1;
            }
            break;
        }
        case DiagramFilter::Pos::Any: {
            for (std::uint32_t mask = 0; mask < (1u << c); ++mask) {
                for (int k = 0; k < c; ++k) signs[k] = (mask >> k & 1) ? -1 : 1;
                fn(decorate(s.matching, s.emb, signs));
            }
            break;
        }
    }
}

}  // namespace

void for_each_diagram(const DiagramFilter& filter,
                      const std::function<void(const KnotDiagram&)>& fn) {
    for (int c = filter.min_c; c <= filter.max_c; ++c) {
        for (const Shadow& s : shadows(c)) {
            if (filter.connected && !s.prime) continue;
            if ((filter.reduced || filter.bireduced) && !s.reduced) continue;
            decorations_of(s, filter, [&](const KnotDiagram& d) {
                if (filter.bireduced && !is_bireduced(d)) return;
                if (filter.no_clasp && !no_bad_clasp(d)) return;
                fn(d);
            });
        }
    }
}

TheoremId theorem_from_string(const std::string& name) {
    std::string s;
    for (char ch : name) s += (char)std::tolower((unsigned char)ch);
    if (s == "th1") return TheoremId::TH1;
    if (s == "th2") return TheoremId::TH2;
    if (s == "th3") return TheoremId::TH3;
    if (s == "lm2") return TheoremId::LM2;
    if (s == "lk43") return TheoremId::LK43;
    if (s == "t2bar") return TheoremId::T2BAR;
    if (s == "sigma") return TheoremId::SIGMA;
    throw std::invalid_argument("unknown theorem id: " + name);
}

std::string theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::TH1: return "th1";
        case TheoremId::TH2: return "th2";
        case TheoremId::TH3: return "th3";
        case TheoremId::LM2: return "lm2";
        case TheoremId::LK43: return "lk43";
        case TheoremId::T2BAR: return "t2bar";
        case TheoremId::SIGMA: return "sigma";
    }
    return "?";
}

namespace {

// canonical keys of the expected v2 = v3 = 0 class for th2/th3: the almost
// positive unknotted twist diagrams (n = 1 is the one-crossing diagram)
std::set<std::string> expected_twist_keys(int max_c) {
    std::set<std::string> keys;
    for (int n = 1; n <= max_c; ++n) {
        auto d = twist_knot_diagram(n, TwistVariant::AlmostPositiveUnknot);
        if (is_prime(to_gauss_diagram(d)))  // n = 2 is a composite curl pair
            keys.insert(canonical_signed_key(d.code));
    }
    return keys;
}

}  // namespace

TheoremReport verify_theorem(TheoremId id, int max_crossings) {
    auto t0 = std::chrono::steady_clock::now();
    TheoremReport rep;
    rep.theorem = theorem_name(id);
    rep.max_crossings = max_crossings;

    DiagramFilter f;
    f.max_c = max_crossings;

    switch (id) {
        case TheoremId::TH1: {
            rep.filter = "almost-positive";
            f.pos = DiagramFilter::Pos::AlmostPositive;
            f.min_c = 1;
            for_each_diagram(f, [&](const KnotDiagram& d) {
                ++rep.diagrams_scanned;
                if (v3(to_gauss_diagram(d)) < 0)
                    rep.counterexamples.push_back(serialize_gauss_code(d.code));
            });
            break;
        }
        case TheoremId::TH2:
        case TheoremId::TH3: {
            rep.filter = "almost-positive,connected";
            f.pos = DiagramFilter::Pos::AlmostPositive;
            f.connected = true;
            f.min_c = 1;
            auto expected = expected_twist_keys(max_crossings);
            std::set<std::string> found;
            for_each_diagram(f, [&](const KnotDiagram& d) {
                ++rep.diagrams_scanned;
                auto g = to_gauss_diagram(d);
                std::int64_t val = id == TheoremId::TH2 ? v3(g) : v2(g);
                if (val != 0) return;
                auto key = canonical_signed_key(d.code);
                found.insert(key);
                if (!expected.count(key))
                    rep.counterexamples.push_back(serialize_gauss_code(d.code));
            });
            for (auto& key : expected)
                if (!found.count(key))
                    rep.counterexamples.push_back("missing twist diagram " + key);
            break;
        }
        case TheoremId::LM2: {
            rep.filter = "positive,bireduced,connected";
            f.pos = DiagramFilter::Pos::Positive;
            f.bireduced = true;
            f.connected = true;
            f.min_c = 1;
            for_each_diagram(f, [&](const KnotDiagram& d) {
                ++rep.diagrams_scanned;
                int c = d.crossings();
                if (lk(to_gauss_diagram(d)) < 3 * ((c - 1) / 2))
                    rep.counterexamples.push_back(serialize_gauss_code(d.code));
            });
            break;
        }
        case TheoremId::LK43: {
            rep.filter = "positive,bireduced,connected";
            f.pos = DiagramFilter::Pos::Positive;
            f.bireduced = true;
            f.connected = true;
            f.min_c = 1;
            std::set<int> violating_c;
            for_each_diagram(f, [&](const KnotDiagram& d) {
                ++rep.diagrams_scanned;
                int c = d.crossings();
                if (3 * lk(to_gauss_diagram(d)) < 4 * c) violating_c.insert(c);
            });
            std::set<int> expected;
            for (int c : {3, 4})
                if (c <= max_crossings) expected.insert(c);
            for (int c = 1; c <= max_crossings; ++c) {
                bool got = violating_c.count(c) > 0;
                bool want = expected.count(c) > 0;
                if (got != want)
                    rep.counterexamples.push_back(
                        (want ? "missing violation at c=" : "unexpected violation at c=") +
                        std::to_string(c));
            }
            break;
        }
        case TheoremId::T2BAR: {
            rep.filter = "positive";
            f.pos = DiagramFilter::Pos::Positive;
            f.min_c = 1;
            for_each_diagram(f, [&](const KnotDiagram& d) {
                auto g0 = to_gauss_diagram(d);
                std::int64_t lk0 = lk(g0), v20 = v2(g0);
                for (int at = 1; at <= d.crossings(); ++at) {
                    ++rep.diagrams_scanned;
                    auto d2 = apply_t2bar(d, at);
                    auto g2 = to_gauss_diagram(d2);
                    if (lk(g2) - lk0 != 4 * (v2(g2) - v20))
                        rep.counterexamples.push_back(serialize_gauss_code(d.code) +
                                                      " at crossing " + std::to_string(at));
                }
            });
            break;
        }
        case TheoremId::SIGMA: {
            rep.filter = "positive,reduced";
            f.pos = DiagramFilter::Pos::Positive;
            f.reduced = true;
            f.min_c = 1;
            for_each_diagram(f, [&](const KnotDiagram& d) {
                ++rep.diagrams_scanned;
                int sp = sigma_paper_only(d);
                bool genus_one = genus(d).g == 1;
                if (sp < 2 || (sp == 2) != genus_one)
                    rep.counterexamples.push_back(serialize_gauss_code(d.code));
            });
            break;
        }
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

ExtremalResult extremal_search(Objective objective, DiagramFilter filter) {
    ExtremalResult best;
    for_each_diagram(filter, [&](const KnotDiagram& d) {
        ++best.scanned;
        auto g = to_gauss_diagram(d);
        switch (objective) {
            case Objective::MaxLkOverV2: {
                std::int64_t l = lk(g), v = v2(g);
                if (v <= 0) {
                    ++best.skipped_v2_zero;
                    return;
                }
                if (!best.found || l * best.den > best.num * v) {
                    best.num = l;
                    best.den = v;
                    best.witness = serialize_gauss_code(d.code);
                    best.found = true;
                }
                break;
            }
            case Objective::MinV3: {
                std::int64_t val = v3(g);
                if (!best.found || val < best.num) {
                    best.num = val;
                    best.den = 1;
                    best.witness = serialize_gauss_code(d.code);
                    best.found = true;
                }
                break;
            }
            case Objective::MinV2: {
                std::int64_t val = v2(g);
                if (!best.found || val < best.num) {
                    best.num = val;
                    best.den = 1;
                    best.witness = serialize_gauss_code(d.code);
                    best.found = true;
                }
                break;
            }
        }
    });
    return best;
}

}  // namespace kg
