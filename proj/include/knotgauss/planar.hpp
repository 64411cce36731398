#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knotgauss/invariants.hpp"

namespace kg {

/// A face of the 4-valent map, as the cyclic sequence of darts bounding it.
/// Dart encoding: 2*arc + dir with dir 0 = with the knot orientation.
struct Face {
    std::vector<int> darts;
    int size() const { return (int)darts.size(); }
};

std::vector<Face> faces(const KnotDiagram& d);

enum class ClaspKind { Reverse, Parallel, Resolved };

struct ClaspRecord {
    int a;  // crossing labels, a < b
    int b;
    ClaspKind kind;
};

/// Digon faces bounded by two distinct crossings, classified: Resolved when
/// the signs differ, otherwise Reverse / Parallel by chord non-interleaving /
/// interleaving.
std::vector<ClaspRecord> find_clasps(const KnotDiagram& d);

struct GenusReport {
    int c = 0;
    int s = 1;
    int g = 0;
};

int seifert_circles(const SignedGaussCode& code);
GenusReport genus(const KnotDiagram& d);

enum class Positivity { Positive, AlmostPositive, KNegative };

struct PositivityStatus {
    Positivity kind;
    int negatives;
    std::string str() const;
};

PositivityStatus positivity_status(const KnotDiagram& d);

/// Remove nugatory crossings (empty interlacement) until none remain.
KnotDiagram reduce(const KnotDiagram& d);

/// Reduced and admitting no twist-collapse: no non-digon parallel pair of
/// crossings with identical interlacement sets.
bool is_bireduced(const KnotDiagram& d);

/// Extend the twist region of crossing `at` by a reverse clasp of two
/// crossings with the same sign as `at` (c and s both grow by 2).
KnotDiagram apply_t2bar(const KnotDiagram& d, int at_label);

KnotDiagram resolve_clasp(const KnotDiagram& d, const ClaspRecord& clasp);

enum class LoopSide { Left, Right };

/// Retract the self-crossing-free side arc of chord `k`: deletes k and every
/// chord with an endpoint on that arc, then reduces. Left = the arc entered
/// when leaving the over-passage along the orientation.
KnotDiagram loop_move(const KnotDiagram& d, int k_label, LoopSide side);

KnotDiagram connected_sum(const KnotDiagram& a, const KnotDiagram& b);

/// Full per-diagram report used by the CLI and the enumeration CSV.
struct InvariantReport {
    std::int64_t v2 = 0;
    std::int64_t v3 = 0;
    std::int64_t lk = 0;
    int writhe = 0;
    int c = 0;
    int s = 1;
    int g = 0;
    PositivityStatus status{Positivity::Positive, 0};
};

InvariantReport invariant_report(const KnotDiagram& d);

}  // namespace kg
