#pragma once

#include <span>
#include <tuple>
#include <utility>
#include <vector>

namespace pkpm {

/// Compressed-row sparse matrix with symmetric structure. Both (i,j) and
/// (j,i) are stored; column indices are strictly increasing within a row and
/// every diagonal entry is present.
struct SparseSymMatrix {
    int dim = 0;
    std::vector<int> row_ptr;  ///< size dim+1
    std::vector<int> col_idx;
    std::vector<double> values;
};

struct SolveReport {
    int iterations = 0;
    double relative_residual = 0.0;
    bool converged = false;
};

/// Build CSR from (row, col, value) entries; duplicates are summed and
/// missing diagonal slots are created with value 0.
SparseSymMatrix csr_from_entries(int dim, std::span<const std::tuple<int, int, double>> entries);

std::vector<double> spmv(const SparseSymMatrix& A, std::span<const double> x);

/// Jacobi-preconditioned conjugate gradients. Convergence means the true
/// residual satisfies ||Ax-b|| <= tol*||b||. max_iter < 0 selects 20*dim.
std::pair<std::vector<double>, SolveReport> cg_solve(const SparseSymMatrix& A,
                                                     std::span<const double> b,
                                                     double tol = 1e-12, int max_iter = -1);

}  // namespace pkpm
