// Discrete vector fields on cell complexes and the matching that pairs
// K(v', S) with K(v', S + {j}) for a fixed coordinate j outside S.
//
// Nodes of a Hasse diagram are plain indices. For diagrams built from a
// CellComplex, node 0 is the empty (-1)-cell and the remaining cells follow
// dimension by dimension in the complex's own (key) order, so the smallest
// node index is also the smallest (dim, key) pair.

#ifndef HALFCUBE_MORSE_HPP
#define HALFCUBE_MORSE_HPP

#include "halfcube/complex.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace halfcube {

struct HasseDiagram {
    std::vector<int> dims;
    /// Codimension-one faces of each node.
    std::vector<std::vector<std::size_t>> facets;

    std::size_t size() const { return dims.size(); }
    std::size_t add(int dim, std::vector<std::size_t> node_facets);
};

/// Hasse diagram of a complex, including the empty cell as node 0.
HasseDiagram hasse_diagram(const CellComplex& c);
std::size_t node_of(const CellComplex& c, CellRef ref);
/// Inverse of node_of; nullopt for the empty cell.
std::optional<CellRef> cell_of(const CellComplex& c, std::size_t node);

struct MatchedPair {
    std::size_t lower;
    std::size_t upper;
    friend bool operator==(const MatchedPair&, const MatchedPair&) = default;
};

struct MorseMatching {
    HasseDiagram hasse;
    std::vector<MatchedPair> pairs;
    /// Distinguished coordinate (0-based); -1 for matchings not built from V_k.
    int coordinate = -1;
};

/// V_k on C_{n,k}. `coordinate` defaults to the last one (n - 1).
/// Throws std::invalid_argument for the full complex or a bad coordinate.
MorseMatching build_matching_Vk(const CellComplex& c, std::optional<int> coordinate = std::nullopt);

struct FieldCheck {
    bool valid = true;
    std::string problem;
};

/// Each lower node is a facet of its upper node, no node is used twice, and
/// the empty cell (any node of dimension -1) stays unpaired.
FieldCheck validate_vector_field(const MorseMatching& m);

struct AcyclicityCertificate {
    bool acyclic = true;
    /// Topological order of H(V) when acyclic.
    std::vector<std::size_t> order;
    /// Closed directed path (first node not repeated at the end) otherwise.
    std::vector<std::size_t> cycle;
};

/// H(V): every Hasse edge points from a facet up to its cell, except matched
/// edges which point down. Kahn's algorithm, smallest ready node first.
AcyclicityCertificate check_acyclic(const MorseMatching& m);

struct MorseCensus {
    /// Unpaired cells per dimension 0..top.
    std::vector<std::size_t> unpaired;
    bool empty_cell_unpaired = true;

    long long alternating_sum() const;
};

MorseCensus unpaired_census(const MorseMatching& m);

/// Canonical text form of a vertex key, e.g. "[3,5,6,9]".
std::string key_string(const VertexKey& key);

/// One line per pair: "lower_key upper_key".
void write_pairs(std::ostream& os, const MorseMatching& m, const CellComplex& c);

} // namespace halfcube

#endif
