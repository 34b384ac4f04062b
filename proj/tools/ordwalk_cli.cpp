// ordwalk CLI: enumeration, equivalence checking, structural analysis and
// seeded Monte Carlo for ordinal patterns of random walks. Thin orchestrator
// over the ordwalk shared library; all computation lives behind the C API.
//
// Exit codes: 0 success; 1 semantic negative (patterns not equivalent, or a
// class failed the homogeneity check); 2 usage, parse, or budget error.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ordwalk/ordwalk.h"

namespace {

constexpr int kExitSemanticNegative = 1;
constexpr int kExitUsage = 2;

// Owns a string allocated by the library.
struct OwString {
    char* s = nullptr;
    ~OwString() { ow_string_free(s); }
};

int report_failure(ow_status st) {
    std::cerr << "error (" << ow_status_name(st) << "): " << ow_last_error() << "\n";
    return kExitUsage;
}

// Writes text to path, or to stdout when path is empty.
int emit(const std::string& path, const char* text) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file '" << path << "'\n";
        return kExitUsage;
    }
    out << text;
    if (!out.flush()) {
        std::cerr << "error: cannot write output file '" << path << "'\n";
        return kExitUsage;
    }
    return 0;
}

int run_classes(int n, bool as_json, const std::string& out_path) {
    OwString text;
    if (const ow_status st = ow_classes_render(n, as_json ? 1 : 0, &text.s); st != OW_OK)
        return report_failure(st);
    return emit(out_path, text.s);
}

int run_check(const std::string& pi, const std::string& tau, bool witness, bool as_json) {
    OwString text;
    int equivalent = 0;
    const ow_status st =
        ow_check_render(pi.c_str(), tau.c_str(), witness ? 1 : 0, as_json ? 1 : 0,
                        &text.s, &equivalent);
    if (st != OW_OK) return report_failure(st);
    std::cout << text.s;
    return equivalent ? 0 : kExitSemanticNegative;
}

int run_structure(const std::string& pi, bool as_json) {
    OwString text;
    if (const ow_status st = ow_structure_render(pi.c_str(), as_json ? 1 : 0, &text.s);
        st != OW_OK)
        return report_failure(st);
    std::cout << text.s;
    return 0;
}

int run_simulate(int n, const std::string& dist, std::uint64_t trials, std::uint64_t seed,
                 int workers, bool as_json, const std::string& out_path,
                 const std::string& plot_path) {
    ow_freq_table* table = nullptr;
    if (const ow_status st = ow_simulate(n, dist.c_str(), trials, seed, workers, &table);
        st != OW_OK)
        return report_failure(st);

    int rc = 0;
    if (as_json) {
        OwString doc;
        if (const ow_status st = ow_freq_table_json(table, &doc.s); st != OW_OK)
            rc = report_failure(st);
        else
            rc = emit(out_path, doc.s);
    } else {
        OwString csv;
        if (const ow_status st = ow_freq_table_csv(table, &csv.s); st != OW_OK)
            rc = report_failure(st);
        else
            rc = emit(out_path, csv.s);
        if (rc == 0) {
            OwString report;
            const ow_status st = ow_freq_table_report_text(table, &report.s);
            if (st == OW_OK)
                std::cout << report.s;
            else if (st == OW_SIZE_TOO_LARGE)
                std::cout << "# class report skipped: pattern length above enumeration budget\n";
            else
                rc = report_failure(st);
        }
    }
    if (rc == 0 && !plot_path.empty()) {
        OwString plot;
        if (const ow_status st = ow_freq_table_plot_csv(table, &plot.s); st != OW_OK)
            rc = report_failure(st);
        else
            rc = emit(plot_path, plot.s);
    }
    if (rc == 0 && ow_freq_table_any_flagged(table) == 1) {
        std::cerr << "homogeneity check failed for at least one class\n";
        rc = kExitSemanticNegative;
    }
    ow_freq_table_free(table);
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "ordinal patterns of random walks: class enumeration, flip equivalence,\n"
        "structural analysis, and seeded Monte Carlo frequency estimation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "ordwalk 1.0.0");

    // classes
    int classes_n = 0;
    bool classes_json = false;
    std::string classes_out;
    CLI::App* classes = app.add_subcommand("classes", "Enumerate equivalence classes of S_n");
    classes->add_option("--n", classes_n, "pattern length (1..8)")->required();
    classes->add_flag("--json", classes_json, "emit JSON instead of the tab-separated table");
    classes->add_option("--out", classes_out, "write to this file instead of stdout");

    // check
    std::string check_pi, check_tau;
    bool check_witness = false, check_json = false;
    CLI::App* check = app.add_subcommand("check", "Decide whether two patterns are equivalent");
    check->add_option("pi", check_pi, "first pattern")->required();
    check->add_option("tau", check_tau, "second pattern")->required();
    check->add_flag("--witness", check_witness, "print a flip sequence from pi to tau");
    check->add_flag("--json", check_json, "emit JSON");

    // structure
    std::string structure_pi;
    bool structure_json = false;
    CLI::App* structure = app.add_subcommand(
        "structure", "Edges, valid intervals, blocks, irreducible and cohesive structure");
    structure->add_option("pi", structure_pi, "pattern")->required();
    structure->add_flag("--json", structure_json, "emit JSON");

    // simulate
    int sim_n = 0, sim_workers = 1;
    std::uint64_t sim_trials = 0, sim_seed = 0;
    std::string sim_dist, sim_out, sim_plot;
    bool sim_json = false;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "Estimate pattern frequencies of a random walk by seeded Monte Carlo");
    simulate->add_option("--n", sim_n, "pattern length")->required();
    simulate
        ->add_option("--dist", sim_dist,
                     "step distribution: uniform:lo,hi | gaussian:mean,sd | "
                     "exponential:rate | cauchy:loc,scale | lognormal:mu,sigma | "
                     "shifted-uniform:lo,hi (0 < lo < hi)")
        ->required();
    simulate->add_option("--trials", sim_trials, "number of walks to sample")->required();
    simulate->add_option("--seed", sim_seed, "RNG seed (default 0)");
    simulate->add_option("--workers", sim_workers,
                         "worker threads; never affects the results (default 1)");
    simulate->add_option("--out", sim_out, "write the frequency CSV to this file");
    simulate->add_option("--plot-data", sim_plot,
                         "also write pattern,frequency,class triples to this file");
    simulate->add_flag("--json", sim_json, "emit one JSON document instead of CSV + report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // help text, exit 0
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the message
        return kExitUsage;
    }

    if (classes->parsed()) return run_classes(classes_n, classes_json, classes_out);
    if (check->parsed()) return run_check(check_pi, check_tau, check_witness, check_json);
    if (structure->parsed()) return run_structure(structure_pi, structure_json);
    if (simulate->parsed())
        return run_simulate(sim_n, sim_dist, sim_trials, sim_seed, sim_workers, sim_json,
                            sim_out, sim_plot);
    return kExitUsage; // unreachable: require_subcommand(1)
}
