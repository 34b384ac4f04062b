#include "ordwalk/ordwalk.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "equivalence.hpp"
#include "error.hpp"
#include "perm.hpp"
#include "serialize.hpp"
#include "step_matrix.hpp"
#include "structure.hpp"
#include "walk_lab.hpp"

using namespace ordwalk;

struct ow_perm {
    Perm value;
};

// Frequency table plus the class data computed alongside it when the length
// is within the enumeration budget.
struct ow_freq_table {
    FrequencyTable table;
    std::optional<std::vector<EquivalenceClass>> classes;
    std::optional<ClassReport> report;
};

namespace {

thread_local std::string g_last_error;

ow_status status_of(const OwError& e) { return static_cast<ow_status>(e.code()); }

template <typename Fn>
ow_status guarded(Fn&& fn) {
    try {
        fn();
        return OW_OK;
    } catch (const OwError& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return OW_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return OW_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

char** dup_string_list(const std::vector<std::string>& items) {
    char** out = static_cast<char**>(std::calloc(items.size() ? items.size() : 1, sizeof(char*)));
    if (!out) throw std::bad_alloc();
    size_t done = 0;
    try {
        for (; done < items.size(); ++done) out[done] = dup_string(items[done]);
    } catch (...) {
        for (size_t i = 0; i < done; ++i) std::free(out[i]);
        std::free(out);
        throw;
    }
    return out;
}

int* dup_ints(const std::vector<int>& items) {
    int* out = static_cast<int*>(std::malloc(sizeof(int) * (items.size() ? items.size() : 1)));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, items.data(), sizeof(int) * items.size());
    return out;
}

const Perm& perm_of(const ow_perm* p) {
    if (!p) fail(ErrorCode::InvalidArgument, "null permutation handle");
    return p->value;
}

std::string require_text(const char* s, const char* what) {
    if (!s) fail(ErrorCode::InvalidArgument, std::string("null ") + what);
    return s;
}

void set_pairs(const std::vector<Interval>& intervals, int** pairs, size_t* count) {
    std::vector<int> flat;
    flat.reserve(intervals.size() * 2);
    for (const Interval& iv : intervals) {
        flat.push_back(iv.lo);
        flat.push_back(iv.hi);
    }
    *pairs = dup_ints(flat);
    *count = intervals.size();
}

} // namespace

extern "C" {

const char* ow_last_error(void) { return g_last_error.c_str(); }

const char* ow_status_name(ow_status s) {
    switch (s) {
        case OW_OK: return "OK";
        case OW_REPEATED_VALUE: return "RepeatedValue";
        case OW_LENGTH_MISMATCH: return "LengthMismatch";
        case OW_SIZE_TOO_LARGE: return "SizeTooLarge";
        case OW_PARSE_ERROR: return "ParseError";
        case OW_INVALID_ARGUMENT: return "InvalidArgument";
        case OW_INVALID_FLIP: return "InvalidFlip";
        case OW_NOT_A_BLOCK: return "NotABlock";
        case OW_NO_VALID_DECOMPOSITION: return "NoValidDecomposition";
        case OW_SINGULAR_MATRIX: return "SingularMatrix";
        case OW_INTERNAL: return "Internal";
    }
    return "Unknown";
}

void ow_string_free(char* s) { std::free(s); }
void ow_ints_free(int* a) { std::free(a); }

void ow_string_list_free(char** list, size_t count) {
    if (!list) return;
    for (size_t i = 0; i < count; ++i) std::free(list[i]);
    std::free(list);
}

void ow_perm_free(ow_perm* p) { delete p; }
void ow_freq_table_free(ow_freq_table* t) { delete t; }

ow_status ow_perm_parse(const char* text, ow_perm** out) {
    return guarded([&] { *out = new ow_perm{parse_perm(require_text(text, "pattern text"))}; });
}

ow_status ow_perm_from_values(const int* values, size_t n, ow_perm** out) {
    return guarded([&] {
        if (!values) fail(ErrorCode::InvalidArgument, "null value array");
        *out = new ow_perm{Perm(std::vector<int>(values, values + n))};
    });
}

ow_status ow_perm_identity(size_t n, ow_perm** out) {
    return guarded([&] { *out = new ow_perm{Perm::identity(n)}; });
}

size_t ow_perm_size(const ow_perm* p) { return p ? p->value.size() : 0; }

int ow_perm_value(const ow_perm* p, size_t i) {
    if (!p || i < 1 || i > p->value.size()) return 0;
    return p->value(i);
}

ow_status ow_perm_format(const ow_perm* p, char** out) {
    return guarded([&] { *out = dup_string(format_perm(perm_of(p))); });
}

int ow_perm_equal(const ow_perm* a, const ow_perm* b) {
    if (!a || !b) return a == b;
    return a->value == b->value ? 1 : 0;
}

ow_status ow_pattern_of_walk(const double* values, size_t n, ow_perm** out) {
    return guarded([&] {
        if (!values) fail(ErrorCode::InvalidArgument, "null value array");
        *out = new ow_perm{pattern_of_walk(std::vector<double>(values, values + n))};
    });
}

ow_status ow_pattern_of_steps(const double* steps, size_t count, ow_perm** out) {
    return guarded([&] {
        if (!steps) fail(ErrorCode::InvalidArgument, "null step array");
        *out = new ow_perm{pattern_of_steps(std::vector<double>(steps, steps + count))};
    });
}

ow_status ow_reverse_complement(const ow_perm* p, ow_perm** out) {
    return guarded([&] { *out = new ow_perm{reverse_complement(perm_of(p))}; });
}

ow_status ow_compose(const ow_perm* pi, const ow_perm* tau, ow_perm** out) {
    return guarded([&] { *out = new ow_perm{compose(perm_of(pi), perm_of(tau))}; });
}

ow_status ow_inverse(const ow_perm* p, ow_perm** out) {
    return guarded([&] { *out = new ow_perm{inverse(perm_of(p))}; });
}

ow_status ow_step_matrix_text(const ow_perm* p, char** out) {
    return guarded([&] { *out = dup_string(matrix_text(step_matrix(perm_of(p)))); });
}

ow_status ow_determinant_sign(const ow_perm* p, int* out) {
    return guarded([&] { *out = determinant_sign(step_matrix(perm_of(p))); });
}

ow_status ow_matrix_equivalence_witness(const ow_perm* pi, const ow_perm* tau,
                                        char** sigma, char** rho) {
    return guarded([&] {
        const auto w = matrix_equivalence_witness(perm_of(pi), perm_of(tau));
        if (w) {
            *sigma = dup_string(format_perm(w->sigma));
            *rho = dup_string(format_perm(w->rho));
        } else {
            *sigma = nullptr;
            *rho = nullptr;
        }
    });
}

ow_status ow_edge_diagram_text(const ow_perm* p, char** out) {
    return guarded([&] { *out = dup_string(edge_diagram_text(edge_diagram(perm_of(p)))); });
}

ow_status ow_valid_intervals(const ow_perm* p, int** pairs, size_t* count) {
    return guarded([&] { set_pairs(valid_intervals(perm_of(p)), pairs, count); });
}

ow_status ow_flip_interval(const ow_perm* p, int lo, int hi, ow_perm** out) {
    return guarded([&] { *out = new ow_perm{flip_interval(perm_of(p), Interval{lo, hi})}; });
}

ow_status ow_irreducible_borders(const ow_perm* p, int** borders, size_t* count) {
    return guarded([&] {
        const auto b = irreducible_borders(perm_of(p));
        *borders = dup_ints(b);
        *count = b.size();
    });
}

ow_status ow_is_cohesive(const ow_perm* p, int a, int b, int* out) {
    return guarded([&] { *out = is_cohesive(perm_of(p), a, b) ? 1 : 0; });
}

ow_status ow_cohesive_intervals(const ow_perm* p, int** pairs, size_t* count) {
    return guarded([&] { set_pairs(cohesive_intervals(perm_of(p)), pairs, count); });
}

ow_status ow_apply_block_action(const ow_perm* p, const char* mu, ow_perm** out) {
    return guarded([&] {
        const SignedPerm m = parse_signed(require_text(mu, "block permutation"));
        const ActionResult r = apply_block_action(perm_of(p), m);
        if (r.kind != ActionKind::Proper)
            fail(ErrorCode::InvalidArgument, "block action is not proper on this permutation");
        *out = new ow_perm{*r.perm};
    });
}

ow_status ow_valid_block_actions(const ow_perm* p, char*** mus, size_t* count) {
    return guarded([&] {
        const auto valid = valid_block_actions(perm_of(p));
        std::vector<std::string> texts;
        texts.reserve(valid.size());
        for (const SignedPerm& m : valid) texts.push_back(format_signed(m));
        *mus = dup_string_list(texts);
        *count = texts.size();
    });
}

ow_status ow_decompose_block_action(const ow_perm* p, const char* mu, int i, int j,
                                    char** alpha, char** beta) {
    return guarded([&] {
        const SignedPerm m = parse_signed(require_text(mu, "block permutation"));
        const Decomposition d =
            decompose_block_action(perm_of(p), irreducible_borders(perm_of(p)), m, i, j);
        *alpha = dup_string(format_signed(d.alpha));
        *beta = dup_string(format_signed(d.beta));
    });
}

ow_status ow_signed_reverse_complement(const char* mu, char** out) {
    return guarded([&] {
        const SignedPerm m = parse_signed(require_text(mu, "block permutation"));
        *out = dup_string(format_signed(signed_reverse_complement(m)));
    });
}

ow_status ow_inflate(const char* mu, const char* const* blocks, size_t count, char** out) {
    return guarded([&] {
        const SignedPerm m = parse_signed(require_text(mu, "block permutation"));
        if (!blocks) fail(ErrorCode::InvalidArgument, "null block array");
        std::vector<SignedPerm> parts;
        parts.reserve(count);
        for (size_t t = 0; t < count; ++t)
            parts.push_back(parse_signed(require_text(blocks[t], "block")));
        *out = dup_string(format_signed(inflate(m, parts)));
    });
}

ow_status ow_equivalent(const ow_perm* pi, const ow_perm* tau, int* out) {
    return guarded([&] {
        *out = flip_witness(perm_of(pi), perm_of(tau)).has_value() ? 1 : 0;
    });
}

ow_status ow_class_of(const ow_perm* p, char*** members, size_t* count) {
    return guarded([&] {
        const EquivalenceClass cls = class_of(perm_of(p));
        std::vector<std::string> texts;
        texts.reserve(cls.members.size());
        for (const Perm& m : cls.members) texts.push_back(format_perm(m));
        *members = dup_string_list(texts);
        *count = texts.size();
    });
}

ow_status ow_classes_render(int n, int as_json, char** out) {
    return guarded([&] {
        const auto classes = enumerate_classes(n);
        *out = dup_string(as_json ? render_classes_json(n, classes)
                                  : render_classes_text(classes));
    });
}

ow_status ow_check_render(const char* pi, const char* tau, int want_witness,
                          int as_json, char** out, int* equivalent) {
    return guarded([&] {
        const Perm a = parse_perm(require_text(pi, "pattern text"));
        const Perm b = parse_perm(require_text(tau, "pattern text"));
        const CheckResult r = run_check(a, b, want_witness != 0);
        *out = dup_string(as_json ? render_check_json(r) : render_check_text(r));
        if (equivalent) *equivalent = r.equivalent ? 1 : 0;
    });
}

ow_status ow_structure_render(const char* pi, int as_json, char** out) {
    return guarded([&] {
        const Perm p = parse_perm(require_text(pi, "pattern text"));
        const StructureResult r = run_structure(p);
        *out = dup_string(as_json ? render_structure_json(r) : render_structure_text(r));
    });
}

ow_status ow_simulate(int n, const char* dist, uint64_t trials, uint64_t seed,
                      int workers, ow_freq_table** out) {
    return guarded([&] {
        const DistSpec spec = DistSpec::parse(require_text(dist, "distribution spec"));
        auto table = std::make_unique<ow_freq_table>();
        table->table = estimate_frequencies(spec, n, trials, seed, workers);
        if (n <= 8) {
            table->classes = enumerate_classes(n);
            table->report = class_report(table->table, *table->classes);
        }
        *out = table.release();
    });
}

uint64_t ow_freq_table_tie_rejections(const ow_freq_table* t) {
    return t ? t->table.tie_rejections : 0;
}

uint64_t ow_freq_table_count(const ow_freq_table* t, const char* pattern) {
    if (!t || !pattern) return 0;
    try {
        const auto it = t->table.counts.find(parse_perm(pattern));
        return it == t->table.counts.end() ? 0 : it->second;
    } catch (const std::exception&) {
        return 0;
    }
}

int ow_freq_table_any_flagged(const ow_freq_table* t) {
    if (!t || !t->report) return -1;
    return t->report->any_flagged ? 1 : 0;
}

ow_status ow_freq_table_csv(const ow_freq_table* t, char** out) {
    return guarded([&] {
        if (!t) fail(ErrorCode::InvalidArgument, "null table handle");
        *out = dup_string(frequency_table_csv(t->table, t->classes ? &*t->classes : nullptr));
    });
}

ow_status ow_freq_table_plot_csv(const ow_freq_table* t, char** out) {
    return guarded([&] {
        if (!t) fail(ErrorCode::InvalidArgument, "null table handle");
        *out = dup_string(
            frequency_table_plot_csv(t->table, t->classes ? &*t->classes : nullptr));
    });
}

ow_status ow_freq_table_json(const ow_freq_table* t, char** out) {
    return guarded([&] {
        if (!t) fail(ErrorCode::InvalidArgument, "null table handle");
        *out = dup_string(frequency_table_json(t->table, t->report ? &*t->report : nullptr));
    });
}

ow_status ow_freq_table_report_text(const ow_freq_table* t, char** out) {
    return guarded([&] {
        if (!t) fail(ErrorCode::InvalidArgument, "null table handle");
        if (!t->report)
            fail(ErrorCode::SizeTooLarge, "class report unavailable: pattern length above 8");
        *out = dup_string(class_report_text(*t->report));
    });
}

ow_status ow_discrimination_text(int n, const char* const* dists, size_t count,
                                 uint64_t trials, uint64_t seed, char** out) {
    return guarded([&] {
        if (!dists) fail(ErrorCode::InvalidArgument, "null distribution array");
        std::vector<DistSpec> specs;
        specs.reserve(count);
        for (size_t d = 0; d < count; ++d)
            specs.push_back(DistSpec::parse(require_text(dists[d], "distribution spec")));
        *out = dup_string(
            discrimination_report_text(cross_distribution_discrimination(n, specs, trials, seed)));
    });
}

} // extern "C"
