#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotgauss/codes.hpp"

namespace kg {

/// One arrow per crossing: tail at the under-passage, head at the over-passage.
struct Arrow {
    int tail;
    int head;
    int sign;
    bool operator==(const Arrow&) const = default;
};

/// Gauss diagram of a knot diagram: arrows on circle positions {0,..,2c-1}.
struct GaussDiagram {
    std::vector<Arrow> arrows;

    int chords() const { return (int)arrows.size(); }
    int points() const { return 2 * (int)arrows.size(); }
    int writhe() const;
    bool interleaved(int a, int b) const;
    /// Number of chords interleaving chord a.
    int valence(int a) const;
    GaussDiagram mirror() const;  // negate signs (arrow combinatorics only)
};

GaussDiagram to_gauss_diagram(const KnotDiagram& d);

enum class PairKind { Linked, Parallel, NonParallel };

struct PairRelation {
    PairKind kind;
    /// For Linked pairs: the arrow whose head is immediately followed, in the
    /// circle orientation, by the other arrow's tail.
    int distinguished = -1;
};

PairRelation pair_relation(const GaussDiagram& g, int a, int b);

struct LemmaReport {
    bool ev_ok = true;       // every chord has even valence
    bool two_c_ok = true;    // double connectivity for every a,c / b,c triple
    bool eev_checked = false;
    bool eev_ok = true;      // half-and-half distinguished split per chord
    std::string detail;      // first violation, if any
    bool all_ok() const { return ev_ok && two_c_ok && (!eev_checked || eev_ok); }
};

LemmaReport lemma_checks(const GaussDiagram& g, bool positive_only);

struct SplitDecomposition {
    // Positions [cut_a, cut_b) and [cut_b, cut_a) each hold whole chords.
    int cut_a = 0;
    int cut_b = 0;
    SignedGaussCode part_a;
    SignedGaussCode part_b;
};

bool is_prime(const GaussDiagram& g);
std::optional<SplitDecomposition> split_composite(const KnotDiagram& d);

KnotDiagram mirror(const KnotDiagram& d);
KnotDiagram reverse(const KnotDiagram& d);

}  // namespace kg
