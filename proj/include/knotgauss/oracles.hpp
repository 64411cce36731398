#pragma once

#include <cstdint>

#include "knotgauss/planar.hpp"
#include "knotgauss/poly.hpp"

namespace kg {

struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Jones polynomial in t via the Kauffman bracket state sum (exact, c <= 24).
LaurentPoly jones(const KnotDiagram& d);

/// Degree-2 and degree-3 invariants from Jones derivatives at 1:
/// v2 = -V''(1)/6,  v3 = -V''(1)/3 - V'''(1)/9 (divisibility asserted).
std::pair<std::int64_t, std::int64_t> vassiliev_from_jones(const LaurentPoly& V);

/// Conway polynomial by the skein relation with a switch-toward-descending
/// strategy (c <= 20).
ConwayPoly conway(const KnotDiagram& d);

struct SigDetReport {
    int sigma_paper = 0;       // positive-knots-positive convention
    int sigma_standard = 0;    // = -sigma_paper
    std::int64_t det_signed = 1;  // Delta(-1) via the Conway normalization
    std::int64_t det_abs = 1;     // |det| from the Goeritz form
};

/// Signature from the checkerboard Goeritz form with the Gordon-Litherland
/// correction; signed determinant from the Conway oracle.
SigDetReport signature_and_det(const KnotDiagram& d);

/// Signature only (skips the Conway evaluation; used on larger diagrams).
int sigma_paper_only(const KnotDiagram& d);

}  // namespace kg
