#pragma once

#include <functional>
#include <string>

#include "knotgauss/constructions.hpp"
#include "knotgauss/oracles.hpp"

namespace kg {

/// A realizable knot shadow: canonical chord matching plus witness embedding
/// and the decoration-independent structural flags.
struct Shadow {
    ChordMatching matching;
    Embedding emb;
    bool prime = false;
    bool reduced = false;
    std::int64_t lk = 0;
};

/// All realizable shadows with c crossings, one per dihedral class, in a
/// deterministic order (c <= 9).
const std::vector<Shadow>& shadows(int c);

/// Serial reference enumeration (no caching, no worker partitioning).
std::vector<Shadow> enumerate_shadows_serial(int c);

/// Partitioned enumeration kernel (OpenMP workers when available); the
/// result is identical to the serial reference.
std::vector<Shadow> enumerate_shadows_parallel(int c);

struct DiagramFilter {
    int min_c = 0;
    int max_c = 0;
    bool connected = false;  // prime diagram
    bool reduced = false;
    bool bireduced = false;
    bool no_clasp = false;  // no reverse or parallel clasp
    enum class Pos { Any, Positive, AlmostPositive, KNegative } pos = Pos::Any;
    int k_negative = 0;  // used when pos == KNegative
};

/// Stream every decorated diagram matching the filter, one per isomorphism
/// class, in a deterministic order.
void for_each_diagram(const DiagramFilter& filter,
                      const std::function<void(const KnotDiagram&)>& fn);

enum class TheoremId { TH1, TH2, TH3, LM2, LK43, T2BAR, SIGMA };

TheoremId theorem_from_string(const std::string& name);
std::string theorem_name(TheoremId id);

struct TheoremReport {
    std::string theorem;
    int max_crossings = 0;
    std::string filter;
    long long diagrams_scanned = 0;
    std::vector<std::string> counterexamples;  // serialized Gauss codes
    double elapsed_seconds = 0;
    bool pass() const { return counterexamples.empty(); }
};

TheoremReport verify_theorem(TheoremId id, int max_crossings);

enum class Objective { MaxLkOverV2, MinV3, MinV2 };

struct ExtremalResult {
    // value = num/den for the ratio objective, num (den = 1) otherwise
    std::int64_t num = 0;
    std::int64_t den = 1;
    std::string witness;  // serialized Gauss code
    long long scanned = 0;
    long long skipped_v2_zero = 0;
    bool found = false;
};

ExtremalResult extremal_search(Objective objective, DiagramFilter filter);

}  // namespace kg
