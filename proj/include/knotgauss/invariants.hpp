#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "knotgauss/gauss.hpp"

namespace kg {

struct LinkedPair {
    int a;
    int b;
    int distinguished;
};

/// Configuration census backing the degree-3 Gauss sum.
struct ConfigCensus {
    std::int64_t n33 = 0;   // signed sum over pairwise-interleaved triples
    std::int64_t n420 = 0;  // signed sum over the nested same-direction triples
    std::vector<LinkedPair> linked;

    std::int64_t lk() const { return (std::int64_t)linked.size(); }
};

std::vector<LinkedPair> linked_pairs(const GaussDiagram& g);

/// Number of linked (interleaved) pairs.
std::int64_t lk(const GaussDiagram& g);

/// Degree-2 Gauss sum. The basepoint is the circle point just before the
/// given position (default 0); the value is basepoint independent.
std::int64_t v2(const GaussDiagram& g, std::optional<int> basepoint = std::nullopt);

/// Count of the reversed-arrow companion pattern; averaging it with the
/// primary pattern reproduces v2 exactly.
std::int64_t v2_companion_pattern(const GaussDiagram& g, int basepoint);

/// Degree-3 Gauss sum (the Jones-derivative normalization).
std::int64_t v3(const GaussDiagram& g);

ConfigCensus config_census(const GaussDiagram& g);

}  // namespace kg
