#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kg {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotRealizableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MoveError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Passage : std::uint8_t { Over, Under };

struct GaussEntry {
    Passage passage;
    int label;  // crossing label, 1-based
    int sign;   // +1 or -1
    bool operator==(const GaussEntry&) const = default;
};

/// Signed Gauss code: the traversal sequence of a knot diagram.
/// entries[p] is the passage at circle position p, p in [0, 2c).
struct SignedGaussCode {
    std::vector<GaussEntry> entries;

    int crossings() const { return (int)entries.size() / 2; }
    int writhe() const;

    /// Relabel crossings in first-visit order (labels 1..c), keeping order.
    SignedGaussCode normalized() const;
    bool operator==(const SignedGaussCode&) const = default;
};

/// Perfect matching on the 2c circle positions.
struct ChordMatching {
    std::vector<int> partner;  // involution without fixed points

    int points() const { return (int)partner.size(); }
    int chords() const { return (int)partner.size() / 2; }
    bool interleaved(int p, int q) const;  // do the chords at p and q cross?

    /// Chord ids in first-occurrence order: id(position) in [0, c).
    std::vector<int> chord_ids() const;
    /// For chord id k: (first, second) positions with first < second.
    std::vector<std::pair<int, int>> chord_spans() const;

    /// Canonical key under rotation and reflection of the circle.
    std::vector<int> canonical_key() const;
    bool is_canonical() const;

    bool operator==(const ChordMatching&) const = default;
};

/// Witness planar embedding for a chord matching: one transversal-chirality
/// bit per chord plus a global orientation flag.
///
/// With chord positions i < j, the counterclockwise end order at the crossing
/// is  [in(i), in(j), out(i), out(j)]  when the effective bit is 0 and
/// [in(i), out(j), out(i), in(j)]  when it is 1, where in(p)/out(p) are the
/// arriving/departing strand ends of the passage at position p.
struct Embedding {
    std::vector<std::uint8_t> chirality;  // per chord id
    bool reflected = false;               // flips every chirality bit

    std::uint8_t effective(int chord) const {
        return (std::uint8_t)(chirality[chord] ^ (reflected ? 1 : 0));
    }
    Embedding reflect() const {
        Embedding e = *this;
        e.reflected = !e.reflected;
        return e;
    }
};

/// A knot diagram: signed Gauss code (first-visit labels) plus a consistent
/// planar embedding. Invariant: face count is c + 2 and the embedding-derived
/// crossing signs equal the declared signs.
struct KnotDiagram {
    SignedGaussCode code;
    Embedding emb;

    int crossings() const { return code.crossings(); }
    int writhe() const { return code.writhe(); }
    ChordMatching matching() const;
    int sign_of(int label) const;  // label in 1..c
    /// Position of the Over (resp. Under) passage of a crossing label.
    int over_position(int label) const;
    int under_position(int label) const;
};

// Strand-end and dart encodings shared by the planar-map routines.
// Position p has an arriving end IN(p) = 2p and a departing end OUT(p) = 2p+1.
// Arc a runs from position a to a+1; dart 2a walks it forward, 2a+1 backward.
inline int end_in(int p) { return 2 * p; }
inline int end_out(int p) { return 2 * p + 1; }
inline int end_position(int e) { return e >> 1; }
inline bool end_is_out(int e) { return e & 1; }
inline int dart_arc(int d) { return d >> 1; }
inline bool dart_backward(int d) { return d & 1; }

/// Counterclockwise strand-end order at the crossing with positions i < j.
std::array<int, 4> rotation_ends(int i, int j, std::uint8_t effective_bit);

/// Faces of the 4-valent map as dart cycles (each dart in exactly one face).
std::vector<std::vector<int>> trace_faces(const ChordMatching& m, const Embedding& e);

/// Number of faces of the 4-valent map induced by (matching, embedding).
/// A connected diagram is planar iff this returns c + 2.
int face_count(const ChordMatching& m, const Embedding& e);

/// Fast kernel used by the enumerator: chirality bits packed in a mask.
int face_count_masked(const std::vector<int>& partner, std::uint32_t eps_mask);

/// Even-valence necessary condition (every chord crosses evenly many others).
bool even_valence(const ChordMatching& m);

/// Decide planar realizability; returns a witness embedding or nullopt.
std::optional<Embedding> realize(const ChordMatching& m);

// --- text formats ---------------------------------------------------------

/// Parse "O1+U2+O3+U1+O2+U3+" style codes (whitespace ignored).
SignedGaussCode parse_gauss_code(const std::string& text);

/// Canonical serialization: crossings relabelled in first-visit order,
/// starting the traversal at the rotation giving the lexicographically
/// least entry sequence.
std::string serialize_gauss_code(const SignedGaussCode& code);

/// Parse whitespace-separated X(a,b,c,d) terms; entries are listed
/// counterclockwise starting at the incoming under-strand edge.
KnotDiagram parse_pd_code(const std::string& text);

/// Build a diagram from a signed Gauss code. The embedding's chirality bits
/// are forced by the declared signs; throws NotRealizableError when no planar
/// embedding produces them.
KnotDiagram build_diagram(const SignedGaussCode& code);

/// Build a diagram from a matching, an explicit embedding and per-chord signs
/// (over/under assignment is derived). Used by the enumerator and generators.
KnotDiagram decorate(const ChordMatching& m, const Embedding& e,
                     const std::vector<int>& signs);

/// Canonical key of a signed diagram under rotation and traversal reversal
/// (mirror images are distinct). Used for deduplication and isomorphy tests.
std::string canonical_signed_key(const SignedGaussCode& code);

/// Load a name<TAB>code fixture table (one knot per line, '#' comments).
std::vector<std::pair<std::string, KnotDiagram>> load_knot_table(
    const std::string& path);

}  // namespace kg
