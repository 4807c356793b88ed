#include "pkpm/dof_map.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace pkpm {

DofMap build_dof_map(const Mesh& mesh, int degree) {
    if (degree < 1 || degree > 4) throw std::invalid_argument("build_dof_map: degree must be in 1..4");
    const int k = degree;
    const int nv = static_cast<int>(mesh.vertices.size());
    const int nt = static_cast<int>(mesh.triangles.size());
    const int per_edge = k - 1;
    const int per_cell = (k - 1) * (k - 2) / 2;

    // Number global edges in order of first appearance; count adjacent
    // triangles to tell boundary edges (1 use) from interior ones (2 uses).
    std::map<std::pair<int, int>, int> edge_id;
    std::vector<int> edge_uses;
    std::vector<std::pair<int, int>> edge_ends;
    for (const auto& t : mesh.triangles) {
        for (int e = 0; e < 3; ++e) {
            const int a = t[e], b = t[(e + 1) % 3];
            const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
            auto [it, inserted] = edge_id.try_emplace(key, static_cast<int>(edge_uses.size()));
            if (inserted) {
                edge_uses.push_back(0);
                edge_ends.push_back(key);
            }
            ++edge_uses[it->second];
        }
    }
    const int ne = static_cast<int>(edge_uses.size());

    DofMap dm;
    dm.degree = k;
    dm.num_edges = ne;
    dm.num_dofs = nv + ne * per_edge + nt * per_cell;
    dm.dof_coords.resize(dm.num_dofs);
    dm.cell_dofs.resize(nt);

    for (int v = 0; v < nv; ++v) dm.dof_coords[v] = mesh.vertices[v];
    for (int e = 0; e < ne; ++e) {
        const Vec2 lo = mesh.vertices[edge_ends[e].first];
        const Vec2 hi = mesh.vertices[edge_ends[e].second];
        for (int t = 1; t <= per_edge; ++t)
            dm.dof_coords[nv + e * per_edge + (t - 1)] =
                lo + (static_cast<double>(t) / k) * (hi - lo);
    }

    const int interior_base = nv + ne * per_edge;
    for (int c = 0; c < nt; ++c) {
        const auto& tri = mesh.triangles[c];
        auto& dofs = dm.cell_dofs[c];
        dofs.reserve(3 + 3 * per_edge + per_cell);
        for (int v : tri) dofs.push_back(v);
        for (int e = 0; e < 3; ++e) {
            const int a = tri[e], b = tri[(e + 1) % 3];
            const int id = edge_id.at({std::min(a, b), std::max(a, b)});
            const int base = nv + id * per_edge;
            // Local nodes run from a to b; flip when the global edge
            // direction (low index to high) is the reverse.
            for (int t = 1; t <= per_edge; ++t)
                dofs.push_back(a < b ? base + (t - 1) : base + (per_edge - t));
        }
        const Vec2 v0 = mesh.vertices[tri[0]], v1 = mesh.vertices[tri[1]],
                   v2 = mesh.vertices[tri[2]];
        int local = 0;
        for (int j = 1; j <= k - 2; ++j) {
            for (int i = 1; i <= k - 1 - j; ++i, ++local) {
                const int g = interior_base + c * per_cell + local;
                dofs.push_back(g);
                dm.dof_coords[g] = v0 + (static_cast<double>(i) / k) * (v1 - v0) +
                                   (static_cast<double>(j) / k) * (v2 - v0);
            }
        }
    }

    for (int v : mesh.boundary_vertices) dm.boundary_dofs.push_back(v);
    for (int e = 0; e < ne; ++e) {
        if (edge_uses[e] != 1) continue;
        for (int t = 0; t < per_edge; ++t) dm.boundary_dofs.push_back(nv + e * per_edge + t);
    }
    std::sort(dm.boundary_dofs.begin(), dm.boundary_dofs.end());
    return dm;
}

}  // namespace pkpm
