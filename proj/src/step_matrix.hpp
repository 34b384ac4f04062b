#pragma once

#include <optional>
#include <string>
#include <vector>

#include "perm.hpp"

namespace ordwalk {

// Dense integer matrix, row-major; small dimensions only.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c), 0) {}

    long long& at(int i, int j) { return a[static_cast<size_t>(i) * static_cast<size_t>(cols) + static_cast<size_t>(j)]; }
    long long at(int i, int j) const { return a[static_cast<size_t>(i) * static_cast<size_t>(cols) + static_cast<size_t>(j)]; }

    bool operator==(const IntMatrix&) const = default;
};

IntMatrix identity_matrix(int n);

// (n-1)x(n-1) matrix whose row i has sgn(p(i+1)-p(i)) on columns
// min(p(i),p(i+1)) .. max(p(i),p(i+1))-1 and zero elsewhere. Requires n >= 2.
IntMatrix step_matrix(const Perm& p);

IntMatrix matrix_multiply(const IntMatrix& a, const IntMatrix& b);

// Exact integer determinant (fraction-free Bareiss elimination).
long long determinant(IntMatrix m);

// Throws SingularMatrix when det = 0 (never legitimate for a step matrix).
int determinant_sign(const IntMatrix& m);

// (P)_{ij} = 1 iff rho(i) = j.
IntMatrix permutation_matrix(const Perm& rho);

// One row per line, entries space-separated.
std::string matrix_text(const IntMatrix& m);

struct MatrixWitness {
    Perm rho;
    Perm sigma;
};

// Searches sigma in S_{n-1} and derives rho by row matching so that
// P_{rho^{-1}} * step_matrix(pi) * P_sigma = step_matrix(tau); the identity is
// re-verified by multiplication before returning. Requires 2 <= n <= max_n.
std::optional<MatrixWitness> matrix_equivalence_witness(const Perm& pi, const Perm& tau,
                                                        int max_n = 8);

} // namespace ordwalk
