#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "equivalence.hpp"
#include "perm.hpp"
#include "rng.hpp"

namespace ordwalk {

enum class DistKind { Uniform, Gaussian, Exponential, Cauchy, Lognormal, ShiftedUniform };

// Continuous step distribution, parsed from "kind:param,param" (e.g. "gaussian:0,1").
struct DistSpec {
    DistKind kind = DistKind::Gaussian;
    double p1 = 0.0;
    double p2 = 1.0;

    static DistSpec parse(const std::string& text);
    std::string text() const;
};

double sample_step(const DistSpec& dist, PhiloxStream& rng);

// One walk of length n; ties are rejected and redrawn from the same stream
// (counted into *tie_rejections when given).
Perm sample_pattern(const DistSpec& dist, int n, PhiloxStream& rng,
                    std::uint64_t* tie_rejections = nullptr);

struct FrequencyTable {
    int n = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    DistSpec dist;
    std::map<Perm, std::uint64_t> counts;
    std::uint64_t tie_rejections = 0;
};

// Deterministic for a fixed (dist, n, trials, seed) regardless of workers: trial t
// always uses the Philox stream keyed (seed, t); workers take contiguous trial
// ranges and their private counts merge by summation.
FrequencyTable estimate_frequencies(const DistSpec& dist, int n, std::uint64_t trials,
                                    std::uint64_t seed, int workers = 1);

struct ClassRow {
    Perm representative;
    std::vector<Perm> members;
    std::vector<std::uint64_t> counts;
    double pooled_mean = 0.0;
    double statistic = 0.0; // Pearson chi-square of counts against the pooled mean
    int df = 0;
    double threshold = 0.0; // 99.9th percentile of chi-square with df degrees of freedom
    bool flagged = false;
};

struct ClassReport {
    std::vector<ClassRow> rows;
    std::vector<Perm> missing; // never-observed patterns
    bool any_flagged = false;
};

ClassReport class_report(const FrequencyTable& freqs,
                         const std::vector<EquivalenceClass>& classes);

double chi_square_quantile(int df, double prob);

struct DiscriminationRow {
    Perm a;
    Perm b;
    bool same_class = false; // same-class rows should never separate (proven direction)
    std::string best_dist;   // distribution with the largest separation
    double freq_a = 0.0;
    double freq_b = 0.0;
    double z = 0.0; // two-proportion z statistic under that distribution
    bool separated = false;
};

struct DiscriminationReport {
    int n = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double z_threshold = 0.0;
    std::vector<DiscriminationRow> rows; // one per unordered pattern pair
};

// Evidence (never an assertion) on whether patterns in different classes have
// visibly different frequencies under at least one listed distribution.
// Distribution d uses base seed (seed + d). Requires n <= 6.
DiscriminationReport cross_distribution_discrimination(int n,
                                                       const std::vector<DistSpec>& dists,
                                                       std::uint64_t trials,
                                                       std::uint64_t seed);

} // namespace ordwalk
