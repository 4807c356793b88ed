#pragma once

#include <vector>

#include "pkpm/dof_map.hpp"
#include "pkpm/linalg.hpp"
#include "pkpm/meshgen.hpp"
#include "pkpm/problems.hpp"

namespace pkpm {

enum class ErrorNorm { h1, h1_semi };

/// Degree-k Lagrange approximation over a mesh. The mesh pointer is not
/// owned and must outlive the solution.
struct FemSolution {
    int degree = 0;
    const Mesh* mesh = nullptr;
    DofMap dofs;
    std::vector<double> coefficients;  ///< one per global DOF
};

/// Reduced linear system after Dirichlet elimination, plus the bookkeeping
/// needed to expand a reduced solution back to the full DOF vector.
struct AssembledSystem {
    SparseSymMatrix matrix;               ///< over interior DOFs only
    std::vector<double> rhs;              ///< load plus lifted boundary term
    DofMap dofs;
    std::vector<int> interior_dofs;       ///< reduced index -> global DOF
    std::vector<int> interior_index;      ///< global DOF -> reduced index, -1 on boundary
    std::vector<double> boundary_values;  ///< full length; g at boundary DOFs, else 0
};

struct SolveOptions {
    double tol = 1e-12;   ///< relative residual target for the CG solve
    int quad_degree = 0;  ///< assembly quadrature override; 0 = default
};

/// Assembly rule degree used when no override is given: the stiffness
/// integrand (degree 2k-2) is integrated exactly, and the floor k+6 keeps
/// quadrature error on non-polynomial loads below discretization error.
int default_assembly_quad_degree(int k);

/// Local stiffness of the triangle (a, b, c), row-major over the canonical
/// local nodes.
std::vector<double> element_stiffness(Vec2 a, Vec2 b, Vec2 c, int degree);

/// Full stiffness matrix of the Laplace form, no boundary elimination.
SparseSymMatrix assemble_operator(const Mesh& mesh, int degree, int quad_degree = 0);

/// Full load vector of the RHS q, no boundary lift.
std::vector<double> assemble_load(const Mesh& mesh, int degree, const ProblemCase& pc,
                                  int quad_degree = 0);

AssembledSystem assemble(const Mesh& mesh, int degree, const ProblemCase& pc,
                         int quad_degree = 0);

/// Assemble and solve; throws SolveError if CG does not converge.
FemSolution solve_poisson(const Mesh& mesh, int degree, const ProblemCase& pc,
                          const SolveOptions& opts = {});

/// Error against the exact solution, integrated with a rule exact to degree
/// 2k+4 (independent of the assembly rule).
double h1_error(const FemSolution& sol, const ProblemCase& pc, ErrorNorm norm = ErrorNorm::h1);

}  // namespace pkpm
