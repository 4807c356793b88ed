#include "pkpm/fem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pkpm/errors.hpp"
#include "pkpm/quadrature.hpp"
#include "pkpm/reference_element.hpp"

namespace pkpm {

namespace {

// Affine map data of one triangle: physical gradient = Jt * reference
// gradient, integral scale = |det| (twice the area).
struct CellMap {
    double jt[2][2];
    double det;
};

CellMap cell_map(Vec2 a, Vec2 b, Vec2 c) {
    const double b11 = b.x - a.x, b12 = c.x - a.x;
    const double b21 = b.y - a.y, b22 = c.y - a.y;
    const double det = b11 * b22 - b12 * b21;
    CellMap m;
    m.det = det;
    // inverse transpose of the Jacobian
    m.jt[0][0] = b22 / det;
    m.jt[0][1] = -b21 / det;
    m.jt[1][0] = -b12 / det;
    m.jt[1][1] = b11 / det;
    return m;
}

// Shape values and reference gradients tabulated at the rule's points.
struct BasisTable {
    int n_basis = 0;
    std::vector<std::vector<double>> phi;                  // [point][basis]
    std::vector<std::vector<std::array<double, 2>>> grad;  // [point][basis]
};

BasisTable tabulate(const ReferenceElement& elem, const QuadratureRule& rule) {
    BasisTable t;
    t.n_basis = elem.num_nodes();
    t.phi.reserve(rule.points.size());
    t.grad.reserve(rule.points.size());
    for (const auto& p : rule.points) {
        t.phi.push_back(elem.eval(p));
        t.grad.push_back(elem.eval_grad(p));
    }
    return t;
}

void local_stiffness(const CellMap& m, const QuadratureRule& rule, const BasisTable& tab,
                     std::vector<double>& k_local) {
    const int n = tab.n_basis;
    k_local.assign(static_cast<std::size_t>(n) * n, 0.0);
    std::vector<std::array<double, 2>> g(n);
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
        for (int i = 0; i < n; ++i) {
            const auto& gr = tab.grad[q][i];
            g[i] = {m.jt[0][0] * gr[0] + m.jt[0][1] * gr[1],
                    m.jt[1][0] * gr[0] + m.jt[1][1] * gr[1]};
        }
        const double w = rule.weights[q] * m.det;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) {
                const double v = w * (g[i][0] * g[j][0] + g[i][1] * g[j][1]);
                k_local[i * n + j] += v;
                if (i != j) k_local[j * n + i] += v;
            }
    }
}

// CSR skeleton covering every (i, j) pair that shares a cell; values zeroed.
SparseSymMatrix build_pattern(const DofMap& dm) {
    std::vector<std::vector<int>> adj(dm.num_dofs);
    for (const auto& dofs : dm.cell_dofs)
        for (int a : dofs)
            for (int b : dofs) adj[a].push_back(b);
    SparseSymMatrix A;
    A.dim = dm.num_dofs;
    A.row_ptr.assign(dm.num_dofs + 1, 0);
    for (int r = 0; r < dm.num_dofs; ++r) {
        auto& row = adj[r];
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        A.row_ptr[r + 1] = A.row_ptr[r] + static_cast<int>(row.size());
        A.col_idx.insert(A.col_idx.end(), row.begin(), row.end());
    }
    A.values.assign(A.col_idx.size(), 0.0);
    return A;
}

int csr_slot(const SparseSymMatrix& A, int r, int c) {
    const auto first = A.col_idx.begin() + A.row_ptr[r];
    const auto last = A.col_idx.begin() + A.row_ptr[r + 1];
    return static_cast<int>(std::lower_bound(first, last, c) - A.col_idx.begin());
}

int resolve_quad_degree(int degree, int quad_degree) {
    return quad_degree > 0 ? quad_degree : default_assembly_quad_degree(degree);
}

}  // namespace

int default_assembly_quad_degree(int k) { return std::max(2 * k - 2, k + 6); }

std::vector<double> element_stiffness(Vec2 a, Vec2 b, Vec2 c, int degree) {
    const ReferenceElement elem(degree);
    const QuadratureRule rule = triangle_rule(default_assembly_quad_degree(degree));
    const BasisTable tab = tabulate(elem, rule);
    std::vector<double> k_local;
    local_stiffness(cell_map(a, b, c), rule, tab, k_local);
    return k_local;
}

SparseSymMatrix assemble_operator(const Mesh& mesh, int degree, int quad_degree) {
    const DofMap dm = build_dof_map(mesh, degree);
    const ReferenceElement elem(degree);
    const QuadratureRule rule = triangle_rule(resolve_quad_degree(degree, quad_degree));
    const BasisTable tab = tabulate(elem, rule);

    SparseSymMatrix A = build_pattern(dm);
    std::vector<double> k_local;
    for (std::size_t c = 0; c < mesh.triangles.size(); ++c) {
        const auto& t = mesh.triangles[c];
        local_stiffness(cell_map(mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]),
                        rule, tab, k_local);
        const auto& dofs = dm.cell_dofs[c];
        const int n = static_cast<int>(dofs.size());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                A.values[csr_slot(A, dofs[i], dofs[j])] += k_local[i * n + j];
    }
    return A;
}

std::vector<double> assemble_load(const Mesh& mesh, int degree, const ProblemCase& pc,
                                  int quad_degree) {
    const DofMap dm = build_dof_map(mesh, degree);
    const ReferenceElement elem(degree);
    const QuadratureRule rule = triangle_rule(resolve_quad_degree(degree, quad_degree));
    const BasisTable tab = tabulate(elem, rule);

    std::vector<double> load(dm.num_dofs, 0.0);
    for (std::size_t c = 0; c < mesh.triangles.size(); ++c) {
        const auto& t = mesh.triangles[c];
        const Vec2 a = mesh.vertices[t[0]], b = mesh.vertices[t[1]], cc = mesh.vertices[t[2]];
        const CellMap m = cell_map(a, b, cc);
        const auto& dofs = dm.cell_dofs[c];
        for (std::size_t q = 0; q < rule.points.size(); ++q) {
            const auto& bary = rule.points[q];
            const Vec2 x = bary[0] * a + bary[1] * b + bary[2] * cc;
            const double wq = rule.weights[q] * m.det * pc.q(x.x, x.y);
            for (std::size_t i = 0; i < dofs.size(); ++i) load[dofs[i]] += wq * tab.phi[q][i];
        }
    }
    return load;
}

AssembledSystem assemble(const Mesh& mesh, int degree, const ProblemCase& pc, int quad_degree) {
    AssembledSystem sys;
    sys.dofs = build_dof_map(mesh, degree);
    const DofMap& dm = sys.dofs;
    const ReferenceElement elem(degree);
    const QuadratureRule rule = triangle_rule(resolve_quad_degree(degree, quad_degree));
    const BasisTable tab = tabulate(elem, rule);

    // one pass per cell for both the operator and the load
    SparseSymMatrix full = build_pattern(dm);
    std::vector<double> load(dm.num_dofs, 0.0);
    std::vector<double> k_local;
    for (std::size_t c = 0; c < mesh.triangles.size(); ++c) {
        const auto& t = mesh.triangles[c];
        const Vec2 a = mesh.vertices[t[0]], b = mesh.vertices[t[1]], cc = mesh.vertices[t[2]];
        const CellMap m = cell_map(a, b, cc);
        const auto& dofs = dm.cell_dofs[c];
        const int n = static_cast<int>(dofs.size());
        local_stiffness(m, rule, tab, k_local);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                full.values[csr_slot(full, dofs[i], dofs[j])] += k_local[i * n + j];
        for (std::size_t q = 0; q < rule.points.size(); ++q) {
            const auto& bary = rule.points[q];
            const Vec2 x = bary[0] * a + bary[1] * b + bary[2] * cc;
            const double wq = rule.weights[q] * m.det * pc.q(x.x, x.y);
            for (int i = 0; i < n; ++i) load[dofs[i]] += wq * tab.phi[q][i];
        }
    }

    sys.boundary_values.assign(dm.num_dofs, 0.0);
    std::vector<char> on_boundary(dm.num_dofs, 0);
    for (int d : dm.boundary_dofs) {
        on_boundary[d] = 1;
        sys.boundary_values[d] = pc.g(dm.dof_coords[d].x, dm.dof_coords[d].y);
    }

    sys.interior_index.assign(dm.num_dofs, -1);
    for (int d = 0; d < dm.num_dofs; ++d) {
        if (on_boundary[d]) continue;
        sys.interior_index[d] = static_cast<int>(sys.interior_dofs.size());
        sys.interior_dofs.push_back(d);
    }
    const int n_int = static_cast<int>(sys.interior_dofs.size());

    // Reduced matrix: interior rows and columns of the full operator.
    // Reduced load: l_i - a(g_h, phi_i), folding the interpolated boundary
    // data into the right-hand side.
    SparseSymMatrix& R = sys.matrix;
    R.dim = n_int;
    R.row_ptr.assign(n_int + 1, 0);
    sys.rhs.assign(n_int, 0.0);
    for (int ri = 0; ri < n_int; ++ri) {
        const int d = sys.interior_dofs[ri];
        double lift = 0.0;
        for (int p = full.row_ptr[d]; p < full.row_ptr[d + 1]; ++p) {
            const int cgl = full.col_idx[p];
            if (on_boundary[cgl]) {
                lift += full.values[p] * sys.boundary_values[cgl];
            } else {
                R.col_idx.push_back(sys.interior_index[cgl]);
                R.values.push_back(full.values[p]);
            }
        }
        R.row_ptr[ri + 1] = static_cast<int>(R.col_idx.size());
        sys.rhs[ri] = load[d] - lift;
    }
    return sys;
}

FemSolution solve_poisson(const Mesh& mesh, int degree, const ProblemCase& pc,
                          const SolveOptions& opts) {
    AssembledSystem sys = assemble(mesh, degree, pc, opts.quad_degree);
    auto [x, report] = cg_solve(sys.matrix, sys.rhs, opts.tol);
    if (!report.converged)
        throw SolveError("solve_poisson: CG stalled at relative residual " +
                         std::to_string(report.relative_residual));

    FemSolution sol;
    sol.degree = degree;
    sol.mesh = &mesh;
    sol.coefficients = std::move(sys.boundary_values);  // boundary part already in place
    for (int ri = 0; ri < static_cast<int>(sys.interior_dofs.size()); ++ri)
        sol.coefficients[sys.interior_dofs[ri]] = x[ri];
    sol.dofs = std::move(sys.dofs);
    return sol;
}

double h1_error(const FemSolution& sol, const ProblemCase& pc, ErrorNorm norm) {
    const Mesh& mesh = *sol.mesh;
    const ReferenceElement elem(sol.degree);
    const QuadratureRule rule = triangle_rule(2 * sol.degree + 4);
    const BasisTable tab = tabulate(elem, rule);
    const int n = tab.n_basis;

    double acc = 0.0;
    for (std::size_t c = 0; c < mesh.triangles.size(); ++c) {
        const auto& t = mesh.triangles[c];
        const Vec2 a = mesh.vertices[t[0]], b = mesh.vertices[t[1]], cc = mesh.vertices[t[2]];
        const CellMap m = cell_map(a, b, cc);
        const auto& dofs = sol.dofs.cell_dofs[c];
        for (std::size_t q = 0; q < rule.points.size(); ++q) {
            double uh = 0.0, gx = 0.0, gy = 0.0;
            for (int i = 0; i < n; ++i) {
                const double ci = sol.coefficients[dofs[i]];
                uh += ci * tab.phi[q][i];
                gx += ci * tab.grad[q][i][0];
                gy += ci * tab.grad[q][i][1];
            }
            const double px = m.jt[0][0] * gx + m.jt[0][1] * gy;
            const double py = m.jt[1][0] * gx + m.jt[1][1] * gy;
            const auto& bary = rule.points[q];
            const Vec2 x = bary[0] * a + bary[1] * b + bary[2] * cc;
            const Vec2 ge = pc.grad_u(x.x, x.y);
            double cell = (px - ge.x) * (px - ge.x) + (py - ge.y) * (py - ge.y);
            if (norm == ErrorNorm::h1) {
                const double du = uh - pc.u(x.x, x.y);
                cell += du * du;
            }
            acc += rule.weights[q] * m.det * cell;
        }
    }
    return std::sqrt(acc);
}

}  // namespace pkpm
