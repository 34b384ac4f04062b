#include "step_matrix.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "perm.hpp"

using namespace ordwalk;

namespace {

Perm P(std::initializer_list<int> v) { return Perm(std::vector<int>(v)); }

std::vector<Perm> all_perms(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    do out.push_back(Perm(v));
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

TEST(StepMatrix, WorkedExample32541) {
    const IntMatrix m = step_matrix(P({3, 2, 5, 4, 1}));
    const std::vector<long long> expected = {
        0, -1, 0, 0, //
        0, 1, 1, 1,  //
        0, 0, 0, -1, //
        -1, -1, -1, 0};
    ASSERT_EQ(m.rows, 4);
    ASSERT_EQ(m.cols, 4);
    EXPECT_EQ(m.a, expected);
    EXPECT_EQ(matrix_text(m), "0 -1 0 0\n0 1 1 1\n0 0 0 -1\n-1 -1 -1 0\n");
}

TEST(StepMatrix, RowsEncodeSignedLevelRuns) {
    // row i covers levels min..max-1 of the step p(i) -> p(i+1) with its sign
    for (const Perm& p : all_perms(4)) {
        const IntMatrix m = step_matrix(p);
        for (int i = 1; i <= 3; ++i) {
            const int a = p(i), b = p(i + 1);
            const int lo = std::min(a, b), hi = std::max(a, b), sgn = b > a ? 1 : -1;
            for (int j = 1; j <= 3; ++j) {
                const long long want = (j >= lo && j < hi) ? sgn : 0;
                EXPECT_EQ(m.at(i - 1, j - 1), want);
            }
        }
    }
}

TEST(StepMatrix, RequiresAtLeastTwoValues) {
    EXPECT_THROW(step_matrix(P({1})), OwError);
}

TEST(StepMatrix, MultiplicationMatchesComposition) {
    // L(pi) L(tau) = L(compose(pi, tau)) over all of S_3 x S_3
    for (const Perm& pi : all_perms(3))
        for (const Perm& tau : all_perms(3))
            EXPECT_EQ(matrix_multiply(step_matrix(pi), step_matrix(tau)),
                      step_matrix(compose(pi, tau)));
    EXPECT_THROW(matrix_multiply(IntMatrix(2, 3), IntMatrix(2, 3)), OwError);
}

TEST(StepMatrix, DeterminantExactValues) {
    EXPECT_EQ(determinant(identity_matrix(5)), 1);
    EXPECT_EQ(determinant(step_matrix(P({3, 2, 5, 4, 1}))), 1);

    IntMatrix m(2, 2);
    m.at(0, 0) = 3, m.at(0, 1) = 7, m.at(1, 0) = 1, m.at(1, 1) = 2;
    EXPECT_EQ(determinant(m), -1);

    IntMatrix z(2, 2);
    z.at(0, 0) = 1, z.at(0, 1) = 2, z.at(1, 0) = 2, z.at(1, 1) = 4;
    EXPECT_EQ(determinant(z), 0);
    EXPECT_THROW(determinant_sign(z), OwError);
}

TEST(StepMatrix, StepMatrixDeterminantsAreUnits) {
    for (const Perm& p : all_perms(4)) {
        const int sign = determinant_sign(step_matrix(p));
        EXPECT_TRUE(sign == 1 || sign == -1);
    }
}

TEST(StepMatrix, PermutationMatrixSelectsRows) {
    // (P_rho M)_{i,k} = M_{rho(i),k}
    const Perm rho = P({2, 3, 1});
    IntMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = 10 * i + j;
    const IntMatrix pm = matrix_multiply(permutation_matrix(rho), m);
    for (int i = 1; i <= 3; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_EQ(pm.at(i - 1, j), m.at(rho(i) - 1, j));
}

TEST(MatrixWitness, FindsKnownWitness) {
    const auto w = matrix_equivalence_witness(P({1, 3, 2}), P({2, 1, 3}));
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(format_perm(w->sigma), "21");
    EXPECT_EQ(format_perm(w->rho), "21");
}

TEST(MatrixWitness, AbsentForInequivalentPatterns) {
    EXPECT_FALSE(matrix_equivalence_witness(P({1, 3, 2}), P({2, 3, 1})).has_value());
}

TEST(MatrixWitness, VerifiedIdentityHoldsWhenFound) {
    // re-check P_{rho^{-1}} L(pi) with columns permuted by sigma equals L(tau)
    const Perm pi = P({5, 4, 6, 2, 1, 8, 7, 3});
    const Perm tau = P({7, 3, 2, 1, 8, 4, 6, 5});
    const auto w = matrix_equivalence_witness(pi, tau);
    ASSERT_TRUE(w.has_value());
    const IntMatrix lp = step_matrix(pi);
    IntMatrix permuted(lp.rows, lp.cols);
    for (int i = 0; i < lp.rows; ++i)
        for (int j = 1; j <= lp.cols; ++j) permuted.at(i, w->sigma(j) - 1) = lp.at(i, j - 1);
    EXPECT_EQ(matrix_multiply(permutation_matrix(inverse(w->rho)), permuted),
              step_matrix(tau));
}

TEST(MatrixWitness, EnforcesSearchBudget) {
    std::vector<int> v(9);
    std::iota(v.begin(), v.end(), 1);
    try {
        matrix_equivalence_witness(Perm(v), Perm(v));
        FAIL() << "expected SizeTooLarge";
    } catch (const OwError& e) {
        EXPECT_EQ(e.code(), ErrorCode::SizeTooLarge);
    }
}

TEST(MatrixWitness, RequiresEqualLengths) {
    EXPECT_THROW(matrix_equivalence_witness(P({1, 2}), P({1, 2, 3})), OwError);
}

} // namespace
