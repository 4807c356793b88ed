#include "pkpm/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pkpm {

SparseSymMatrix csr_from_entries(int dim, std::span<const std::tuple<int, int, double>> entries) {
    if (dim <= 0) throw std::invalid_argument("csr_from_entries: dim must be positive");
    std::vector<std::tuple<int, int, double>> work(entries.begin(), entries.end());
    for (int i = 0; i < dim; ++i) work.emplace_back(i, i, 0.0);
    std::sort(work.begin(), work.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });

    SparseSymMatrix A;
    A.dim = dim;
    A.row_ptr.assign(dim + 1, 0);
    int last_r = -1, last_c = -1;
    for (const auto& [r, c, v] : work) {
        if (r < 0 || r >= dim || c < 0 || c >= dim)
            throw std::invalid_argument("csr_from_entries: index out of range");
        if (r == last_r && c == last_c) {
            A.values.back() += v;  // duplicate entry, accumulate
            continue;
        }
        A.col_idx.push_back(c);
        A.values.push_back(v);
        A.row_ptr[r + 1] = static_cast<int>(A.col_idx.size());
        last_r = r;
        last_c = c;
    }
    for (int r = 0; r < dim; ++r) A.row_ptr[r + 1] = std::max(A.row_ptr[r + 1], A.row_ptr[r]);
    return A;
}

std::vector<double> spmv(const SparseSymMatrix& A, std::span<const double> x) {
    if (static_cast<int>(x.size()) != A.dim) throw std::invalid_argument("spmv: dimension mismatch");
    std::vector<double> y(A.dim, 0.0);
    for (int r = 0; r < A.dim; ++r) {
        double acc = 0.0;
        for (int p = A.row_ptr[r]; p < A.row_ptr[r + 1]; ++p) acc += A.values[p] * x[A.col_idx[p]];
        y[r] = acc;
    }
    return y;
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

}  // namespace

std::pair<std::vector<double>, SolveReport> cg_solve(const SparseSymMatrix& A,
                                                     std::span<const double> b, double tol,
                                                     int max_iter) {
    if (static_cast<int>(b.size()) != A.dim)
        throw std::invalid_argument("cg_solve: dimension mismatch");
    if (!(tol > 0.0)) throw std::invalid_argument("cg_solve: tol must be positive");
    const int n = A.dim;
    if (max_iter < 0) max_iter = 20 * n;

    std::vector<double> inv_diag(n, 1.0);
    for (int r = 0; r < n; ++r)
        for (int p = A.row_ptr[r]; p < A.row_ptr[r + 1]; ++p)
            if (A.col_idx[p] == r && A.values[p] != 0.0) inv_diag[r] = 1.0 / A.values[p];

    std::vector<double> x(n, 0.0);
    const double norm_b = norm2(b);
    SolveReport report;
    if (norm_b == 0.0) {
        report.converged = true;
        return {std::move(x), report};
    }

    std::vector<double> r(b.begin(), b.end());  // residual of x = 0
    std::vector<double> z(n), p(n);
    for (int i = 0; i < n; ++i) z[i] = inv_diag[i] * r[i];
    p = z;
    double rz = dot(r, z);

    for (int it = 1; it <= max_iter; ++it) {
        const std::vector<double> Ap = spmv(A, p);
        const double pAp = dot(p, Ap);
        if (pAp <= 0.0) break;  // matrix not positive definite along p
        const double alpha = rz / pAp;
        for (int i = 0; i < n; ++i) x[i] += alpha * p[i];
        for (int i = 0; i < n; ++i) r[i] -= alpha * Ap[i];
        report.iterations = it;
        if (norm2(r) <= tol * norm_b) {
            // Recurrence residual can drift from the true one; confirm.
            std::vector<double> true_r = spmv(A, x);
            for (int i = 0; i < n; ++i) true_r[i] = b[i] - true_r[i];
            report.relative_residual = norm2(true_r) / norm_b;
            if (report.relative_residual <= tol) {
                report.converged = true;
                return {std::move(x), report};
            }
            for (int i = 0; i < n; ++i) r[i] = true_r[i];
        }
        for (int i = 0; i < n; ++i) z[i] = inv_diag[i] * r[i];
        const double rz_next = dot(r, z);
        const double beta = rz_next / rz;
        rz = rz_next;
        for (int i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
    }
    report.relative_residual = norm2(r) / norm_b;
    report.converged = report.relative_residual <= tol;
    return {std::move(x), report};
}

}  // namespace pkpm
