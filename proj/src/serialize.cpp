#include "serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "structure.hpp"

namespace ordwalk {

namespace {

using nlohmann::json;

std::string fixed9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return buf;
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// representative of the class containing p, or "-" when classes are unknown
std::string class_label(const Perm& p, const std::vector<EquivalenceClass>* classes) {
    if (classes)
        for (const EquivalenceClass& cls : *classes)
            if (std::binary_search(cls.members.begin(), cls.members.end(), p))
                return format_perm(cls.representative);
    return "-";
}

json interval_json(const Interval& iv) { return json::array({iv.lo, iv.hi}); }

json edges_json(const std::vector<Edge>& edges) {
    json a = json::array();
    for (const Edge& e : edges)
        a.push_back({{"low", e.low}, {"high", e.high}, {"dir", e.dir == Dir::Up ? "+" : "-"}});
    return a;
}

std::string csv_metadata_line(const FrequencyTable& t) {
    std::ostringstream out;
    out << "# n=" << t.n << " dist=" << t.dist.text() << " trials=" << t.trials
        << " seed=" << t.seed << " tie_rejections=" << t.tie_rejections << "\n";
    return out.str();
}

// rows in output order: every pattern of S_n when classes are known, else observed only
std::vector<Perm> csv_patterns(const FrequencyTable& t,
                               const std::vector<EquivalenceClass>* classes) {
    std::vector<Perm> rows;
    if (classes) {
        for (const EquivalenceClass& cls : *classes)
            rows.insert(rows.end(), cls.members.begin(), cls.members.end());
        std::sort(rows.begin(), rows.end());
    } else {
        for (const auto& [p, c] : t.counts) rows.push_back(p);
    }
    return rows;
}

} // namespace

std::string format_interval_list(const std::vector<Interval>& intervals) {
    std::string out;
    for (const Interval& iv : intervals) {
        if (!out.empty()) out += ' ';
        out += '[' + std::to_string(iv.lo) + ',' + std::to_string(iv.hi) + ']';
    }
    return out.empty() ? "none" : out;
}

std::string format_border_list(const std::vector<int>& borders) {
    std::string out;
    for (int b : borders) {
        if (!out.empty()) out += ',';
        out += std::to_string(b);
    }
    return out;
}

std::string render_classes_text(const std::vector<EquivalenceClass>& classes) {
    std::ostringstream out;
    for (const EquivalenceClass& cls : classes) {
        out << format_perm(cls.representative) << '\t' << cls.members.size() << '\t';
        for (size_t i = 0; i < cls.members.size(); ++i) {
            if (i) out << ' ';
            out << format_perm(cls.members[i]);
        }
        out << '\n';
    }
    return out.str();
}

std::string render_classes_json(int n, const std::vector<EquivalenceClass>& classes) {
    json doc;
    doc["n"] = n;
    doc["class_count"] = classes.size();
    json arr = json::array();
    for (const EquivalenceClass& cls : classes) {
        json members = json::array();
        for (const Perm& m : cls.members) members.push_back(format_perm(m));
        arr.push_back({{"representative", format_perm(cls.representative)},
                       {"size", cls.members.size()},
                       {"members", members}});
    }
    doc["classes"] = arr;
    return doc.dump(2) + "\n";
}

CheckResult run_check(const Perm& pi, const Perm& tau, bool want_witness) {
    CheckResult r{pi, tau, false, std::nullopt};
    const auto witness = flip_witness(pi, tau);
    r.equivalent = witness.has_value();
    if (want_witness && witness) r.witness = witness;
    return r;
}

std::string render_check_text(const CheckResult& r) {
    std::ostringstream out;
    out << (r.equivalent ? "EQUIVALENT" : "NOT EQUIVALENT") << '\n';
    if (r.witness) {
        for (const FlipStep& step : *r.witness) {
            const Perm next = flip_interval(step.perm, step.interval);
            out << format_perm(step.perm) << " [" << step.interval.lo << ','
                << step.interval.hi << "] -> " << format_perm(next) << '\n';
        }
    }
    return out.str();
}

std::string render_check_json(const CheckResult& r) {
    json doc;
    doc["pi"] = format_perm(r.pi);
    doc["tau"] = format_perm(r.tau);
    doc["equivalent"] = r.equivalent;
    if (r.witness) {
        json steps = json::array();
        for (const FlipStep& step : *r.witness) {
            const Perm next = flip_interval(step.perm, step.interval);
            steps.push_back({{"from", format_perm(step.perm)},
                             {"interval", interval_json(step.interval)},
                             {"to", format_perm(next)}});
        }
        doc["witness"] = steps;
    }
    return doc.dump(2) + "\n";
}

StructureResult run_structure(const Perm& p, int max_block_size) {
    StructureResult r;
    r.perm = p;
    if (p.size() >= 2) {
        const EdgeDiagram e = edge_diagram(p);
        r.edges = e.edges;
        r.endpoint_low = e.p;
        r.endpoint_high = e.q;
    } else {
        r.endpoint_low = r.endpoint_high = 1;
    }
    r.valid = valid_intervals(p);
    r.blocks = bordered_cylindrical_blocks(p);
    r.borders = irreducible_borders(p);
    const int k = static_cast<int>(r.borders.size()) - 1;
    if (k <= max_block_size) r.cohesive = cohesive_intervals(p, max_block_size);
    return r;
}

std::string render_structure_text(const StructureResult& r) {
    std::ostringstream out;
    out << "perm: " << format_perm(r.perm) << '\n';
    out << "endpoints: " << r.endpoint_low << ' ' << r.endpoint_high << '\n';
    out << "edges:\n";
    for (const Edge& e : r.edges)
        out << "  " << e.low << '-' << e.high << ' ' << (e.dir == Dir::Up ? '+' : '-') << '\n';
    out << "valid_intervals: " << format_interval_list(r.valid) << '\n';
    out << "blocks:\n";
    for (const CylBlock& b : r.blocks) {
        out << "  [" << b.vlo << ',' << b.vhi << "] start=" << b.start << " len=" << b.len;
        if (b.wraps) out << " wraps";
        out << '\n';
    }
    out << "irreducible_borders: " << format_border_list(r.borders) << '\n';
    if (r.cohesive)
        out << "cohesive_intervals: " << format_interval_list(*r.cohesive) << '\n';
    else
        out << "cohesive_intervals: skipped (more than 8 irreducible blocks)\n";
    return out.str();
}

std::string render_structure_json(const StructureResult& r) {
    json doc;
    doc["perm"] = format_perm(r.perm);
    doc["endpoints"] = json::array({r.endpoint_low, r.endpoint_high});
    doc["edges"] = edges_json(r.edges);
    json valid = json::array();
    for (const Interval& iv : r.valid) valid.push_back(interval_json(iv));
    doc["valid_intervals"] = valid;
    json blocks = json::array();
    for (const CylBlock& b : r.blocks)
        blocks.push_back({{"values", json::array({b.vlo, b.vhi})},
                          {"start", b.start},
                          {"len", b.len},
                          {"wraps", b.wraps}});
    doc["blocks"] = blocks;
    doc["irreducible_borders"] = r.borders;
    if (r.cohesive) {
        json cohesive = json::array();
        for (const Interval& iv : *r.cohesive) cohesive.push_back(interval_json(iv));
        doc["cohesive_intervals"] = cohesive;
    } else {
        doc["cohesive_intervals"] = nullptr;
    }
    return doc.dump(2) + "\n";
}

std::string frequency_table_csv(const FrequencyTable& t,
                                const std::vector<EquivalenceClass>* classes) {
    std::ostringstream out;
    out << "# ordwalk-frequency-table v1\n" << csv_metadata_line(t);
    out << "pattern,count,frequency,class_representative\n";
    for (const Perm& p : csv_patterns(t, classes)) {
        const auto it = t.counts.find(p);
        const std::uint64_t c = it == t.counts.end() ? 0 : it->second;
        out << format_perm(p) << ',' << c << ','
            << fixed9(static_cast<double>(c) / static_cast<double>(t.trials)) << ','
            << class_label(p, classes) << '\n';
    }
    return out.str();
}

std::string frequency_table_plot_csv(const FrequencyTable& t,
                                     const std::vector<EquivalenceClass>* classes) {
    std::ostringstream out;
    out << "# ordwalk-plot-data v1\n";
    out << "pattern,frequency,class_representative\n";
    for (const Perm& p : csv_patterns(t, classes)) {
        const auto it = t.counts.find(p);
        const std::uint64_t c = it == t.counts.end() ? 0 : it->second;
        out << format_perm(p) << ','
            << fixed9(static_cast<double>(c) / static_cast<double>(t.trials)) << ','
            << class_label(p, classes) << '\n';
    }
    return out.str();
}

std::string frequency_table_json(const FrequencyTable& t, const ClassReport* report) {
    json doc;
    doc["format"] = "ordwalk-frequency-table";
    doc["version"] = 1;
    doc["n"] = t.n;
    doc["dist"] = t.dist.text();
    doc["trials"] = t.trials;
    doc["seed"] = t.seed;
    doc["tie_rejections"] = t.tie_rejections;
    json rows = json::array();
    for (const auto& [p, c] : t.counts)
        rows.push_back({{"pattern", format_perm(p)},
                        {"count", c},
                        {"frequency", static_cast<double>(c) / static_cast<double>(t.trials)}});
    doc["frequencies"] = rows;
    if (report) {
        json classes = json::array();
        for (const ClassRow& row : report->rows) {
            json members = json::array(), counts = json::array();
            for (const Perm& m : row.members) members.push_back(format_perm(m));
            for (std::uint64_t c : row.counts) counts.push_back(c);
            classes.push_back({{"representative", format_perm(row.representative)},
                               {"members", members},
                               {"counts", counts},
                               {"statistic", row.statistic},
                               {"df", row.df},
                               {"threshold", row.threshold},
                               {"flagged", row.flagged}});
        }
        json missing = json::array();
        for (const Perm& m : report->missing) missing.push_back(format_perm(m));
        doc["class_report"] = {{"classes", classes},
                               {"missing_patterns", missing},
                               {"any_flagged", report->any_flagged}};
    }
    return doc.dump(2) + "\n";
}

std::string discrimination_report_text(const DiscriminationReport& r) {
    std::ostringstream out;
    out << "# ordwalk-discrimination-report v1\n";
    out << "# n=" << r.n << " trials=" << r.trials << " seed=" << r.seed
        << " z_threshold=" << r.z_threshold << "\n";
    out << "a,b,same_class,best_dist,freq_a,freq_b,z,separated\n";
    size_t separated = 0, cross = 0;
    for (const DiscriminationRow& row : r.rows) {
        out << format_perm(row.a) << ',' << format_perm(row.b) << ','
            << (row.same_class ? "yes" : "no") << ',' << row.best_dist << ','
            << fixed6(row.freq_a) << ',' << fixed6(row.freq_b) << ',' << fixed6(row.z) << ','
            << (row.separated ? "yes" : "no") << '\n';
        if (!row.same_class) {
            ++cross;
            if (row.separated) ++separated;
        }
    }
    out << "separated_cross_class_pairs: " << separated << '/' << cross << '\n';
    return out.str();
}

std::string class_report_text(const ClassReport& report) {
    std::ostringstream out;
    out << "# ordwalk-class-report v1\n";
    out << "representative,size,counts,statistic,df,threshold,flagged\n";
    for (const ClassRow& row : report.rows) {
        out << format_perm(row.representative) << ',' << row.members.size() << ',';
        for (size_t i = 0; i < row.counts.size(); ++i) {
            if (i) out << '|';
            out << row.counts[i];
        }
        out << ',' << fixed6(row.statistic) << ',' << row.df << ',';
        if (row.df >= 1)
            out << fixed6(row.threshold);
        else
            out << '-';
        out << ',' << (row.flagged ? "yes" : "no") << '\n';
    }
    out << "missing_patterns:";
    if (report.missing.empty()) {
        out << " none";
    } else {
        for (const Perm& m : report.missing) out << ' ' << format_perm(m);
    }
    out << '\n';
    out << "flagged_classes:";
    bool any = false;
    for (const ClassRow& row : report.rows)
        if (row.flagged) {
            out << ' ' << format_perm(row.representative);
            any = true;
        }
    if (!any) out << " none";
    out << '\n';
    return out.str();
}

} // namespace ordwalk
