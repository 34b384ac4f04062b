// Exercises the shared library strictly through its public C header.
#include "ordwalk/ordwalk.h"

#include <gtest/gtest.h>

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

namespace {

struct PermHandle {
    ow_perm* p = nullptr;
    explicit PermHandle(const char* text) { EXPECT_EQ(ow_perm_parse(text, &p), OW_OK); }
    PermHandle() = default;
    ~PermHandle() { ow_perm_free(p); }
    PermHandle(const PermHandle&) = delete;
    PermHandle& operator=(const PermHandle&) = delete;
};

std::string take_string(char* s) {
    std::string out = s ? s : "";
    ow_string_free(s);
    return out;
}

TEST(CApi, PermLifecycleAndFormat) {
    ow_perm* p = nullptr;
    ASSERT_EQ(ow_perm_parse("2413", &p), OW_OK);
    EXPECT_EQ(ow_perm_size(p), 4u);
    EXPECT_EQ(ow_perm_value(p, 1), 2);
    EXPECT_EQ(ow_perm_value(p, 4), 3);
    EXPECT_EQ(ow_perm_value(p, 5), 0);
    char* text = nullptr;
    ASSERT_EQ(ow_perm_format(p, &text), OW_OK);
    EXPECT_EQ(take_string(text), "2413");
    ow_perm_free(p);
}

TEST(CApi, StatusCodesAndLastError) {
    ow_perm* p = nullptr;
    EXPECT_EQ(ow_perm_parse("73218463", &p), OW_PARSE_ERROR);
    EXPECT_GT(std::strlen(ow_last_error()), 0u);
    EXPECT_EQ(ow_perm_parse(nullptr, &p), OW_INVALID_ARGUMENT);
    EXPECT_STREQ(ow_status_name(OW_PARSE_ERROR), "ParseError");
    EXPECT_STREQ(ow_status_name(OW_OK), "OK");

    const double tied[3] = {0.0, 1.0, 1.0};
    EXPECT_EQ(ow_pattern_of_walk(tied, 3, &p), OW_REPEATED_VALUE);
}

TEST(CApi, FromValuesAndIdentity) {
    const int vals[4] = {2, 4, 1, 3};
    ow_perm* p = nullptr;
    ASSERT_EQ(ow_perm_from_values(vals, 4, &p), OW_OK);
    ow_perm* id = nullptr;
    ASSERT_EQ(ow_perm_identity(4, &id), OW_OK);
    EXPECT_EQ(ow_perm_equal(p, id), 0);
    EXPECT_EQ(ow_perm_equal(p, p), 1);

    ow_perm* inv = nullptr;
    ASSERT_EQ(ow_inverse(p, &inv), OW_OK);
    ow_perm* comp = nullptr;
    ASSERT_EQ(ow_compose(p, inv, &comp), OW_OK);
    EXPECT_EQ(ow_perm_equal(comp, id), 1);
    ow_perm_free(p), ow_perm_free(id), ow_perm_free(inv), ow_perm_free(comp);
}

TEST(CApi, PatternOfWalkAndSteps) {
    const double walk[4] = {0.0, 1.5, -2.0, 0.5};
    ow_perm* p = nullptr;
    ASSERT_EQ(ow_pattern_of_walk(walk, 4, &p), OW_OK);
    char* text = nullptr;
    ASSERT_EQ(ow_perm_format(p, &text), OW_OK);
    EXPECT_EQ(take_string(text), "2413");
    ow_perm_free(p);

    const double steps[3] = {1.5, -3.5, 2.5};
    ASSERT_EQ(ow_pattern_of_steps(steps, 3, &p), OW_OK);
    ASSERT_EQ(ow_perm_format(p, &text), OW_OK);
    EXPECT_EQ(take_string(text), "2413");
    ow_perm_free(p);
}

TEST(CApi, StepMatrixAndDeterminant) {
    PermHandle p("32541");
    char* text = nullptr;
    ASSERT_EQ(ow_step_matrix_text(p.p, &text), OW_OK);
    EXPECT_EQ(take_string(text), "0 -1 0 0\n0 1 1 1\n0 0 0 -1\n-1 -1 -1 0\n");
    int sign = 0;
    ASSERT_EQ(ow_determinant_sign(p.p, &sign), OW_OK);
    EXPECT_EQ(sign, 1);
}

TEST(CApi, MatrixWitnessPresencePerEquivalence) {
    PermHandle a("132"), b("213"), c("231");
    char *sigma = nullptr, *rho = nullptr;
    ASSERT_EQ(ow_matrix_equivalence_witness(a.p, b.p, &sigma, &rho), OW_OK);
    EXPECT_EQ(take_string(sigma), "21");
    EXPECT_EQ(take_string(rho), "21");
    sigma = rho = nullptr;
    ASSERT_EQ(ow_matrix_equivalence_witness(a.p, c.p, &sigma, &rho), OW_OK);
    EXPECT_EQ(sigma, nullptr);
    EXPECT_EQ(rho, nullptr);
}

TEST(CApi, EdgeDiagramAndValidIntervals) {
    PermHandle p("132");
    char* text = nullptr;
    ASSERT_EQ(ow_edge_diagram_text(p.p, &text), OW_OK);
    EXPECT_EQ(take_string(text), "1-3 +\n2-3 -\n");

    PermHandle q("54621873");
    int* pairs = nullptr;
    size_t count = 0;
    ASSERT_EQ(ow_valid_intervals(q.p, &pairs, &count), OW_OK);
    ASSERT_EQ(count, 5u);
    const int want[10] = {1, 7, 1, 8, 2, 7, 2, 8, 3, 6};
    for (int i = 0; i < 10; ++i) EXPECT_EQ(pairs[i], want[i]);
    ow_ints_free(pairs);
}

TEST(CApi, FlipInterval) {
    PermHandle p("235461");
    ow_perm* flipped = nullptr;
    ASSERT_EQ(ow_flip_interval(p.p, 2, 6, &flipped), OW_OK);
    char* text = nullptr;
    ASSERT_EQ(ow_perm_format(flipped, &text), OW_OK);
    EXPECT_EQ(take_string(text), "243561");
    ow_perm_free(flipped);
    EXPECT_EQ(ow_flip_interval(p.p, 2, 4, &flipped), OW_INVALID_FLIP);
}

TEST(CApi, StructureQueries) {
    PermHandle p("197862435");
    int* borders = nullptr;
    size_t count = 0;
    ASSERT_EQ(ow_irreducible_borders(p.p, &borders, &count), OW_OK);
    ASSERT_EQ(count, 5u);
    const int want[5] = {1, 2, 5, 6, 9};
    for (int i = 0; i < 5; ++i) EXPECT_EQ(borders[i], want[i]);
    ow_ints_free(borders);

    int cohesive = 0;
    ASSERT_EQ(ow_is_cohesive(p.p, 2, 6, &cohesive), OW_OK);
    EXPECT_EQ(cohesive, 1);
    ASSERT_EQ(ow_is_cohesive(p.p, 1, 5, &cohesive), OW_OK);
    EXPECT_EQ(cohesive, 0);
    EXPECT_EQ(ow_is_cohesive(p.p, 6, 2, &cohesive), OW_INVALID_ARGUMENT);

    int* pairs = nullptr;
    ASSERT_EQ(ow_cohesive_intervals(p.p, &pairs, &count), OW_OK);
    EXPECT_EQ(count, 7u);
    EXPECT_EQ(pairs[0], 1);
    EXPECT_EQ(pairs[1], 2);
    ow_ints_free(pairs);
}

TEST(CApi, BlockActions) {
    PermHandle p("2,1,3,5,4,6,9,7,8,10");
    ow_perm* image = nullptr;
    ASSERT_EQ(ow_apply_block_action(p.p, "3'12'", &image), OW_OK);
    char* text = nullptr;
    ASSERT_EQ(ow_perm_format(image, &text), OW_OK);
    EXPECT_EQ(take_string(text), "1,3,2,4,6,7,5,8,10,9");
    ow_perm_free(image);

    PermHandle q("435216");
    char** mus = nullptr;
    size_t count = 0;
    ASSERT_EQ(ow_valid_block_actions(q.p, &mus, &count), OW_OK);
    EXPECT_EQ(count, 8u);
    ow_string_list_free(mus, count);
}

TEST(CApi, DecomposeBlockAction) {
    PermHandle p("197862435");
    char *alpha = nullptr, *beta = nullptr;
    ASSERT_EQ(ow_decompose_block_action(p.p, "1,2,3,4", 1, 3, &alpha, &beta), OW_OK);
    EXPECT_EQ(take_string(alpha), "1,2,3");
    EXPECT_EQ(take_string(beta), "1,2");
    EXPECT_EQ(ow_decompose_block_action(p.p, "1,2,3,4", 0, 2, &alpha, &beta),
              OW_NO_VALID_DECOMPOSITION);
}

TEST(CApi, SignedHelpers) {
    char* text = nullptr;
    ASSERT_EQ(ow_signed_reverse_complement("3',1,2'", &text), OW_OK);
    EXPECT_EQ(take_string(text), "2,1',3");

    const char* blocks[3] = {"2'1", "3'12'", "1"};
    ASSERT_EQ(ow_inflate("3,1',2", blocks, 3, &text), OW_OK);
    EXPECT_EQ(take_string(text), "6',5,2,1',3,4");
}

TEST(CApi, EquivalenceAndClasses) {
    PermHandle a("1342"), b("3124"), c("2413");
    int eq = 0;
    ASSERT_EQ(ow_equivalent(a.p, b.p, &eq), OW_OK);
    EXPECT_EQ(eq, 1);
    ASSERT_EQ(ow_equivalent(a.p, c.p, &eq), OW_OK);
    EXPECT_EQ(eq, 0);

    char** members = nullptr;
    size_t count = 0;
    ASSERT_EQ(ow_class_of(a.p, &members, &count), OW_OK);
    ASSERT_EQ(count, 2u);
    EXPECT_STREQ(members[0], "1342");
    EXPECT_STREQ(members[1], "3124");
    ow_string_list_free(members, count);
}

TEST(CApi, RenderEntryPoints) {
    char* text = nullptr;
    ASSERT_EQ(ow_classes_render(3, 0, &text), OW_OK);
    EXPECT_EQ(take_string(text), "123\t1\t123\n132\t2\t132 213\n231\t2\t231 312\n321\t1\t321\n");
    EXPECT_EQ(ow_classes_render(12, 0, &text), OW_SIZE_TOO_LARGE);

    int equivalent = -1;
    ASSERT_EQ(ow_check_render("132", "213", 0, 0, &text, &equivalent), OW_OK);
    EXPECT_EQ(take_string(text), "EQUIVALENT\n");
    EXPECT_EQ(equivalent, 1);
    ASSERT_EQ(ow_check_render("132", "231", 0, 0, &text, &equivalent), OW_OK);
    EXPECT_EQ(take_string(text), "NOT EQUIVALENT\n");
    EXPECT_EQ(equivalent, 0);

    ASSERT_EQ(ow_structure_render("1327564", 0, &text), OW_OK);
    EXPECT_NE(take_string(text).find("irreducible_borders: 1,4,7"), std::string::npos);
}

TEST(CApi, SimulateAndSerializers) {
    ow_freq_table* table = nullptr;
    ASSERT_EQ(ow_simulate(3, "gaussian:0,1", 2000, 7, 2, &table), OW_OK);
    EXPECT_EQ(ow_freq_table_tie_rejections(table), 0u);
    EXPECT_EQ(ow_freq_table_any_flagged(table), 0);
    std::uint64_t total = 0;
    for (const char* pat : {"123", "132", "213", "231", "312", "321"})
        total += ow_freq_table_count(table, pat);
    EXPECT_EQ(total, 2000u);

    char* text = nullptr;
    ASSERT_EQ(ow_freq_table_csv(table, &text), OW_OK);
    EXPECT_EQ(take_string(text).substr(0, 28), "# ordwalk-frequency-table v1");
    ASSERT_EQ(ow_freq_table_plot_csv(table, &text), OW_OK);
    EXPECT_EQ(take_string(text).substr(0, 21), "# ordwalk-plot-data v");
    ASSERT_EQ(ow_freq_table_json(table, &text), OW_OK);
    EXPECT_EQ(take_string(text).front(), '{');
    ASSERT_EQ(ow_freq_table_report_text(table, &text), OW_OK);
    EXPECT_EQ(take_string(text).substr(0, 25), "# ordwalk-class-report v1");
    ow_freq_table_free(table);

    EXPECT_EQ(ow_simulate(3, "gaussian:0,1", 0, 7, 1, &table), OW_INVALID_ARGUMENT);
    EXPECT_EQ(ow_simulate(3, "bogus:1", 10, 7, 1, &table), OW_PARSE_ERROR);
}

TEST(CApi, DiscriminationText) {
    const char* dists[1] = {"exponential:1"};
    char* text = nullptr;
    ASSERT_EQ(ow_discrimination_text(2, dists, 1, 2000, 1, &text), OW_OK);
    const std::string out = take_string(text);
    EXPECT_NE(out.find("# ordwalk-discrimination-report v1"), std::string::npos);
    EXPECT_NE(out.find("12,21,no,exponential:1"), std::string::npos);
}

} // namespace
