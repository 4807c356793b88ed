#include "pkpm/meshgen.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "pkpm/errors.hpp"
#include "pkpm/fmt.hpp"
#include "pkpm/rng.hpp"

namespace pkpm {

namespace {

// Grid-based generator: jittered n x n vertex lattice, each quad cell split
// along its shorter diagonal. Vertex positions are pure functions of
// (seed, vertex index, redraw attempt), so generation is order-independent.
struct GridBuilder {
    const MeshParams& p;
    int n;                               // vertices per side
    double s;                            // grid spacing
    std::vector<std::uint32_t> attempt;  // per-vertex redraw counter
    std::vector<Vec2> pos;

    explicit GridBuilder(const MeshParams& params) : p(params) {
        if (p.h_max >= std::sqrt(2.0)) {
            n = 2;  // a single cell already meets the diameter bound
        } else {
            // Spacing reserves room for jitter: two adjacent vertices can move
            // apart by 2*jitter*s, so the worst-case diagonal is
            // sqrt(2)*s*(1+2*jitter) and must stay below h_max.
            const double stretch = std::sqrt(2.0) * (1.0 + 2.0 * p.jitter);
            n = static_cast<int>(std::ceil(stretch / p.h_max)) + 1;
        }
        s = 1.0 / (n - 1);
        attempt.assign(static_cast<std::size_t>(n) * n, 0);
        pos.resize(attempt.size());
        for (int iy = 0; iy < n; ++iy)
            for (int ix = 0; ix < n; ++ix) place(ix, iy);
    }

    void place(int ix, int iy) {
        const int v = iy * n + ix;
        const bool x_fixed = (ix == 0 || ix == n - 1);
        const bool y_fixed = (iy == 0 || iy == n - 1);
        double x = x_fixed ? (ix == 0 ? 0.0 : 1.0) : ix * s;
        double y = y_fixed ? (iy == 0 ? 0.0 : 1.0) : iy * s;
        if (p.jitter > 0.0) {
            // Boundary vertices only slide along their edge; corners stay put.
            const std::uint64_t key =
                hash_key({p.seed, static_cast<std::uint64_t>(v), attempt[v]});
            if (!x_fixed) x += (2.0 * uniform01(hash_key({key, 0})) - 1.0) * p.jitter * s;
            if (!y_fixed) y += (2.0 * uniform01(hash_key({key, 1})) - 1.0) * p.jitter * s;
        }
        pos[v] = {x, y};
    }

    // Split one cell along its shorter diagonal; fall back to the other
    // diagonal if that split would invert a triangle.
    void split_cell(int cx, int cy, std::vector<std::array<int, 3>>& tris) const {
        const int v00 = cy * n + cx, v10 = v00 + 1;
        const int v01 = v00 + n, v11 = v01 + 1;
        const bool use_main = norm(pos[v11] - pos[v00]) <= norm(pos[v01] - pos[v10]);
        const std::array<std::array<int, 3>, 2> main_split = {{{v00, v10, v11}, {v00, v11, v01}}};
        const std::array<std::array<int, 3>, 2> anti_split = {{{v00, v10, v01}, {v10, v11, v01}}};
        for (const auto& split : {use_main ? main_split : anti_split,
                                  use_main ? anti_split : main_split}) {
            if (signed_area(pos[split[0][0]], pos[split[0][1]], pos[split[0][2]]) > 0.0 &&
                signed_area(pos[split[1][0]], pos[split[1][1]], pos[split[1][2]]) > 0.0) {
                tris.push_back(split[0]);
                tris.push_back(split[1]);
                return;
            }
        }
        tris.push_back(main_split[0]);  // degenerate either way; quality scan rejects it
        tris.push_back(main_split[1]);
    }

    bool triangle_ok(const std::array<int, 3>& t) const {
        return signed_area(pos[t[0]], pos[t[1]], pos[t[2]]) > 0.0 &&
               min_angle_deg(pos[t[0]], pos[t[1]], pos[t[2]]) >= p.min_angle_deg;
    }
};

}  // namespace

Mesh generate_mesh(const MeshParams& params) {
    if (!(params.h_max > 0.0)) throw std::invalid_argument("generate_mesh: h_max must be positive");
    if (!(params.jitter >= 0.0 && params.jitter <= 0.45))
        throw std::invalid_argument("generate_mesh: jitter must lie in [0, 0.45]");
    if (!(params.min_angle_deg > 0.0 && params.min_angle_deg < 60.0))
        throw std::invalid_argument("generate_mesh: min_angle_deg must lie in (0, 60)");

    GridBuilder grid(params);
    const int n = grid.n;
    std::vector<std::array<int, 3>> tris;
    tris.reserve(static_cast<std::size_t>(2) * (n - 1) * (n - 1));

    // Quality repair: redraw the jitter of every vertex touching a bad cell,
    // at most 50 rounds. Zero jitter never changes, so a structured mesh that
    // violates min_angle_deg fails deterministically.
    for (int round = 0;; ++round) {
        tris.clear();
        for (int cy = 0; cy < n - 1; ++cy)
            for (int cx = 0; cx < n - 1; ++cx) grid.split_cell(cx, cy, tris);

        std::vector<int> redraw;
        for (std::size_t c = 0; c < tris.size(); c += 2) {
            if (grid.triangle_ok(tris[c]) && grid.triangle_ok(tris[c + 1])) continue;
            const int cell = static_cast<int>(c / 2);
            const int cx = cell % (n - 1), cy = cell / (n - 1);
            const int v00 = cy * n + cx;
            for (int v : {v00, v00 + 1, v00 + n, v00 + n + 1}) redraw.push_back(v);
        }
        if (redraw.empty()) break;
        if (round == 50)
            throw MeshQualityError("generate_mesh: min angle " +
                                   std::to_string(params.min_angle_deg) +
                                   " deg not reachable after 50 redraw rounds");
        std::sort(redraw.begin(), redraw.end());
        redraw.erase(std::unique(redraw.begin(), redraw.end()), redraw.end());
        for (int v : redraw) {
            ++grid.attempt[v];
            grid.place(v % n, v / n);
        }
    }

    Mesh mesh;
    mesh.vertices = std::move(grid.pos);
    mesh.triangles = std::move(tris);
    mesh.seed = params.seed;
    for (int iy = 0; iy < n; ++iy)
        for (int ix = 0; ix < n; ++ix)
            if (ix == 0 || ix == n - 1 || iy == 0 || iy == n - 1)
                mesh.boundary_vertices.push_back(iy * n + ix);
    double h = 0.0;
    for (const auto& t : mesh.triangles)
        h = std::max(h, longest_edge(mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]));
    mesh.h_actual = h;
    return mesh;
}

MeshStats mesh_statistics(const Mesh& mesh) {
    MeshStats st;
    st.num_triangles = static_cast<int>(mesh.triangles.size());
    st.min_angle_deg = 180.0;
    for (const auto& t : mesh.triangles) {
        const Vec2 a = mesh.vertices[t[0]], b = mesh.vertices[t[1]], c = mesh.vertices[t[2]];
        const auto e = edge_lengths(a, b, c);
        const double lo = std::min({e[0], e[1], e[2]});
        const double hi = std::max({e[0], e[1], e[2]});
        st.h_actual = std::max(st.h_actual, hi);
        st.min_angle_deg = std::min(st.min_angle_deg, min_angle_deg(a, b, c));
        if (lo > 0.0) st.max_aspect_ratio = std::max(st.max_aspect_ratio, hi / lo);
    }
    return st;
}

void write_mesh_dump(std::ostream& os, const Mesh& mesh) {
    os << "mesh h_actual=" << fmt_g17(mesh.h_actual) << " seed=" << mesh.seed << "\n";
    for (const auto& v : mesh.vertices) os << "v " << fmt_g17(v.x) << " " << fmt_g17(v.y) << "\n";
    for (const auto& t : mesh.triangles) os << "t " << t[0] << " " << t[1] << " " << t[2] << "\n";
}

}  // namespace pkpm
