#pragma once

#include <optional>
#include <vector>

#include "edge_diagram.hpp"
#include "perm.hpp"

namespace ordwalk {

struct EquivalenceClass {
    Perm representative;        // lexicographically least member
    std::vector<Perm> members;  // sorted
};

// BFS closure of p under flips of valid intervals.
EquivalenceClass class_of(const Perm& p);

// Exhaustive search for the lexicographically first sigma in S_{n-1} whose level
// action maps the edge diagram of pi onto the edge diagram of tau. Requires
// 2 <= n <= max_n.
std::optional<Perm> equivalence_oracle(const Perm& pi, const Perm& tau, int max_n = 8);

// Partition of S_n into classes, sorted by representative. Requires n <= max_n.
std::vector<EquivalenceClass> enumerate_classes(int n, int max_n = 8);

struct FlipStep {
    Perm perm;         // permutation before the flip
    Interval interval; // valid interval flipped
};

// Minimum-length flip sequence from pi to tau (empty sequence when pi == tau),
// or nullopt when they are not equivalent.
std::optional<std::vector<FlipStep>> flip_witness(const Perm& pi, const Perm& tau);

} // namespace ordwalk
