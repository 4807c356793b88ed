#pragma once

#include <vector>

#include "pkpm/geometry.hpp"
#include "pkpm/meshgen.hpp"

namespace pkpm {

/// Global numbering of the degree-k Lagrange nodes over a mesh: vertex DOFs
/// first, then (k-1) DOFs per edge, then cell-interior DOFs. Edge DOFs are
/// enumerated along the global edge direction (lower vertex index to higher),
/// so adjacent triangles agree on shared nodes.
struct DofMap {
    int degree = 0;
    int num_dofs = 0;
    int num_edges = 0;
    std::vector<std::vector<int>> cell_dofs;  ///< per triangle, canonical local order
    std::vector<int> boundary_dofs;           ///< sorted global indices on the boundary
    std::vector<Vec2> dof_coords;             ///< physical position of each DOF
};

DofMap build_dof_map(const Mesh& mesh, int degree);

}  // namespace pkpm
