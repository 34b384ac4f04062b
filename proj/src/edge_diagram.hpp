#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "perm.hpp"

namespace ordwalk {

enum class Dir { Up, Down };

// Directed vertical interval between values low < high; covers levels low..high-1.
struct Edge {
    int low = 0;
    int high = 0;
    Dir dir = Dir::Up;

    auto operator<=>(const Edge&) const = default;
};

struct EdgeDiagram {
    int n = 0;                 // number of values in the underlying grid
    std::vector<Edge> edges;   // sorted, duplicates collapsed
    int p = 0, q = 0;          // endpoint values {first, last}, p < q (p = q = 0 when unknown)
};

// The n-1 edges connecting consecutive entries of p; requires n >= 2.
EdgeDiagram edge_diagram(const Perm& p);

enum class ActionKind { NotWellDefined, WellDefinedNotProper, Proper };

struct ActionResult {
    ActionKind kind = ActionKind::NotWellDefined;
    std::optional<std::vector<Edge>> image; // present unless NotWellDefined
    std::optional<Perm> perm;               // present iff Proper
};

// Permutes the levels of E by sigma (length n-1). An edge image that is not a
// contiguous level set makes the action not well defined; a well-defined image
// is Proper when its edges form a single direction-consistent path over all values.
ActionResult apply_level_action(const EdgeDiagram& e, const Perm& sigma);

// Directed cycle: Up edges run low->high, Down edges high->low.
bool has_cycle(const std::vector<Edge>& edges);

// Number of edges covering each level 1..n-1 (index 0 unused).
std::vector<int> level_cover_counts(const EdgeDiagram& e);

// One edge per line, "low-high dir", sorted.
std::string edge_diagram_text(const EdgeDiagram& e);

struct Interval {
    int lo = 0;
    int hi = 0;

    auto operator<=>(const Interval&) const = default;
};

// Value intervals [i,j] whose flip is guaranteed proper: width >= 2 intervals
// compatible with every edge (nested or level-disjoint) and with the endpoint
// interval [p,q], plus [1,n] always. Sorted.
std::vector<Interval> valid_intervals(const Perm& p);

// The level permutation reversing levels i..j-1 (identity elsewhere), in S_{n-1}.
Perm flip_level_perm(int i, int j, int n);

// Applies the flip of iv via the level action; throws InvalidFlip when iv is not
// a valid interval of p.
Perm flip_interval(const Perm& p, Interval iv);

// Cylindrical block: values vlo..vhi at cyclically consecutive positions
// start, start+1, ... (mod n), with the extreme values at the two outer positions.
struct CylBlock {
    int vlo = 0;
    int vhi = 0;
    int start = 0; // first position of the cyclic run
    int len = 0;
    bool wraps = false;

    auto operator<=>(const CylBlock&) const = default;
};

// All bordered cylindrical blocks with at least 3 values plus the full grid. Sorted
// by value range; value ranges coincide with valid_intervals(p).
std::vector<CylBlock> bordered_cylindrical_blocks(const Perm& p);

// Grid-side flip: 180-degree rotation of the block contents (with the two sides of a
// wrap-around block exchanged); agrees with flip_interval on the block's value range.
Perm flip_block(const Perm& p, const CylBlock& b);

} // namespace ordwalk
