#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "pkpm/geometry.hpp"

namespace pkpm {

/// Parameters for randomized triangulation of the unit square.
struct MeshParams {
    double h_max = 0.1;           ///< target maximum element diameter
    std::uint64_t seed = 0;       ///< randomness source
    double jitter = 0.0;          ///< interior-node perturbation, fraction of grid spacing, in [0, 0.45]
    double min_angle_deg = 20.0;  ///< quality floor for every triangle angle
};

/// Conforming triangulation of [0,1]^2. Immutable after generation.
struct Mesh {
    std::vector<Vec2> vertices;
    std::vector<std::array<int, 3>> triangles;  ///< counterclockwise vertex indices
    std::vector<int> boundary_vertices;         ///< sorted indices of vertices on the boundary
    double h_actual = 0.0;                      ///< realized maximum element diameter
    std::uint64_t seed = 0;
};

struct MeshStats {
    int num_triangles = 0;
    double h_actual = 0.0;
    double min_angle_deg = 0.0;
    double max_aspect_ratio = 0.0;  ///< worst longest/shortest edge ratio
};

/// Deterministic randomized mesh: same params give a bit-identical mesh.
/// Throws std::invalid_argument on bad params, MeshQualityError if the
/// bounded repair procedure cannot reach min_angle_deg.
Mesh generate_mesh(const MeshParams& params);

MeshStats mesh_statistics(const Mesh& mesh);

/// Line-oriented dump: header `mesh h_actual=<val> seed=<val>`, then one
/// `v x y` line per vertex and one `t i j k` line per triangle.
void write_mesh_dump(std::ostream& os, const Mesh& mesh);

}  // namespace pkpm
