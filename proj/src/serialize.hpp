#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equivalence.hpp"
#include "perm.hpp"
#include "walk_lab.hpp"

namespace ordwalk {

// --- classes command ---------------------------------------------------------
// One line per class: "representative<TAB>size<TAB>member member ...".
std::string render_classes_text(const std::vector<EquivalenceClass>& classes);
std::string render_classes_json(int n, const std::vector<EquivalenceClass>& classes);

// --- check command -----------------------------------------------------------
struct CheckResult {
    Perm pi;
    Perm tau;
    bool equivalent = false;
    std::optional<std::vector<FlipStep>> witness; // only when requested and equivalent
};
CheckResult run_check(const Perm& pi, const Perm& tau, bool want_witness);
std::string render_check_text(const CheckResult& r);
std::string render_check_json(const CheckResult& r);

// --- structure command -------------------------------------------------------
struct StructureResult {
    Perm perm;
    std::vector<Edge> edges;
    int endpoint_low = 0, endpoint_high = 0;
    std::vector<Interval> valid;
    std::vector<CylBlock> blocks;
    std::vector<int> borders;
    std::optional<std::vector<Interval>> cohesive; // absent when the block budget is exceeded
};
StructureResult run_structure(const Perm& p, int max_block_size = 8);
std::string render_structure_text(const StructureResult& r);
std::string render_structure_json(const StructureResult& r);

// --- simulate command --------------------------------------------------------
// Versioned CSV: header comments (n, dist, trials, seed, tie_rejections) then
// "pattern,count,frequency,class_representative" rows. With classes given every
// pattern of S_n appears in lexicographic order; otherwise only observed
// patterns, with "-" in the class column.
std::string frequency_table_csv(const FrequencyTable& t,
                                const std::vector<EquivalenceClass>* classes);
// Plot-ready triples: "pattern,frequency,class_representative".
std::string frequency_table_plot_csv(const FrequencyTable& t,
                                     const std::vector<EquivalenceClass>* classes);
std::string frequency_table_json(const FrequencyTable& t, const ClassReport* report);
// Homogeneity report, one line per class plus summary lines.
std::string class_report_text(const ClassReport& report);

// Evidence table, one line per cross-class pattern pair.
std::string discrimination_report_text(const DiscriminationReport& r);

std::string format_interval_list(const std::vector<Interval>& intervals);
std::string format_border_list(const std::vector<int>& borders);

} // namespace ordwalk
