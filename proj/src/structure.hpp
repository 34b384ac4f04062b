#pragma once

#include <vector>

#include "edge_diagram.hpp"
#include "perm.hpp"

namespace ordwalk {

// Borders x_0=1 < x_1 < ... < x_k=n of the partition of [1,n] into irreducible
// intervals (intervals whose levels stay adjacent, in order or reversed, under
// every proper level action). Fast path: {1,n} plus all valid-interval endpoints.
std::vector<int> irreducible_borders(const Perm& p);

// Definition-based oracle: enumerates every proper level action and keeps the
// maximal intervals satisfying the adjacency conditions under all of them.
std::vector<int> irreducible_borders_bruteforce(const Perm& p, int max_n = 8);

// Lowers a signed block permutation over the given partition to the level
// permutation that moves each block to its destination slot, reversing the
// levels inside barred blocks.
Perm block_action_level_perm(const std::vector<int>& borders, const SignedPerm& mu);

// Applies mu over an explicit partition / over the irreducible partition of p.
ActionResult apply_block_action_on(const Perm& p, const std::vector<int>& borders,
                                   const SignedPerm& mu);
ActionResult apply_block_action(const Perm& p, const SignedPerm& mu);

// All mu in B_k (k = number of irreducible blocks) whose action on p is proper.
std::vector<SignedPerm> valid_block_actions(const Perm& p, int max_k = 8);

// [a,b] is cohesive when (1) a and b are irreducible borders, (2) every edge is
// nested with or level-disjoint from [a,b], and (3) the blocks inside [a,b] land
// on contiguous slots under every valid block action.
bool is_cohesive(const Perm& p, int a, int b, int max_k = 8);

// All cohesive [a,b] over pairs of irreducible borders, sorted.
std::vector<Interval> cohesive_intervals(const Perm& p, int max_k = 8);

struct Decomposition {
    SignedPerm alpha;
    SignedPerm beta;
};

// Splits mu (valid over the partition `borders` of p) at the cohesive interval
// [borders[i], borders[j]] (0-based border indices, j - i >= 2, not the whole
// partition): beta is the pattern of the collapsed entries (reverse-complemented
// when only that choice acts properly on p) and alpha is mu with those entries
// collapsed into one. Re-inflating alpha with beta reproduces mu.
Decomposition decompose_block_action(const Perm& p, const std::vector<int>& borders,
                                     const SignedPerm& mu, int i, int j);

} // namespace ordwalk
