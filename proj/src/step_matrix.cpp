#include "step_matrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ordwalk {

IntMatrix identity_matrix(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix step_matrix(const Perm& p) {
    const int n = p.size();
    if (n < 2) fail(ErrorCode::InvalidArgument, "step matrix needs length >= 2");
    IntMatrix m(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
        const int a = p(i), b = p(i + 1);
        const int sign = b > a ? 1 : -1;
        for (int j = std::min(a, b); j < std::max(a, b); ++j)
            m.at(i - 1, j - 1) = sign;
    }
    return m;
}

IntMatrix matrix_multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows)
        fail(ErrorCode::LengthMismatch, "matrix dimensions do not conform");
    IntMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const long long aik = a.at(i, k);
            if (!aik) continue;
            for (int j = 0; j < b.cols; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

long long determinant(IntMatrix m) {
    if (m.rows != m.cols) fail(ErrorCode::InvalidArgument, "determinant of non-square matrix");
    const int n = m.rows;
    if (n == 0) return 1;
    long long prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { pivot = i; break; }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

int determinant_sign(const IntMatrix& m) {
    const long long d = determinant(m);
    if (d == 0) fail(ErrorCode::SingularMatrix, "matrix is singular");
    return d > 0 ? 1 : -1;
}

IntMatrix permutation_matrix(const Perm& rho) {
    const int n = rho.size();
    IntMatrix m(n, n);
    for (int i = 1; i <= n; ++i) m.at(i - 1, rho(i) - 1) = 1;
    return m;
}

std::string matrix_text(const IntMatrix& m) {
    std::string out;
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) {
            if (j) out.push_back(' ');
            out += std::to_string(m.at(i, j));
        }
        out.push_back('\n');
    }
    return out;
}

std::optional<MatrixWitness> matrix_equivalence_witness(const Perm& pi, const Perm& tau,
                                                        int max_n) {
    if (pi.size() != tau.size())
        fail(ErrorCode::LengthMismatch, "witness search requires equal lengths");
    const int n = pi.size();
    if (n < 2) fail(ErrorCode::InvalidArgument, "witness search needs length >= 2");
    if (n > max_n) fail(ErrorCode::SizeTooLarge, "witness search limited to n <= " + std::to_string(max_n));

    const IntMatrix lp = step_matrix(pi);
    const IntMatrix lt = step_matrix(tau);
    const int d = n - 1;

    // Rows of a step matrix are distinct (each encodes a distinct directed interval).
    std::map<std::vector<long long>, int> target_row;
    for (int i = 0; i < d; ++i) {
        std::vector<long long> row(lt.a.begin() + static_cast<long>(i) * d,
                                   lt.a.begin() + static_cast<long>(i + 1) * d);
        if (!target_row.emplace(std::move(row), i + 1).second)
            fail(ErrorCode::Internal, "step matrix has repeated rows");
    }

    std::vector<int> sig(static_cast<size_t>(d));
    std::iota(sig.begin(), sig.end(), 1);
    do {
        // m = lp * P_sigma: column sigma(j) of m is column j of lp.
        IntMatrix m(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                m.at(i, sig[static_cast<size_t>(j)] - 1) = lp.at(i, j);
        // Derive rho by matching rows of m against rows of lt: lt row rho(s) = m row s.
        std::vector<int> rho(static_cast<size_t>(d), 0);
        std::vector<char> used(static_cast<size_t>(d) + 1, 0);
        bool ok = true;
        for (int s = 0; s < d && ok; ++s) {
            std::vector<long long> row(m.a.begin() + static_cast<long>(s) * d,
                                       m.a.begin() + static_cast<long>(s + 1) * d);
            const auto it = target_row.find(row);
            if (it == target_row.end() || used[static_cast<size_t>(it->second)]) {
                ok = false;
            } else {
                rho[static_cast<size_t>(s)] = it->second;
                used[static_cast<size_t>(it->second)] = 1;
            }
        }
        if (!ok) continue;
        MatrixWitness w{Perm(rho), Perm(sig)};
        const IntMatrix lhs =
            matrix_multiply(permutation_matrix(inverse(w.rho)), m);
        if (lhs == lt) return w;
    } while (std::next_permutation(sig.begin(), sig.end()));
    return std::nullopt;
}

} // namespace ordwalk
