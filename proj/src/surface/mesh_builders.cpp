#include <geolab/surface/mesh.hpp>

#include <geolab/common/error.hpp>

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace geolab::surface {

namespace {

// True when every sample along the line coincides (within tol of the patch scale).
bool collapsed(const std::vector<Vec3>& samples, double tol)
{
    for (const auto& p : samples) {
        if ((p - samples.front()).norm() > tol) return false;
    }
    return true;
}

} // namespace

TriangleMesh triangulate(const ParametricPatch& patch, int nu, int nv, bool wrap_u, bool wrap_v)
{
    if (nu < 2 || nv < 2) throw std::invalid_argument("triangulate: nu, nv must be >= 2");
    const ParamDomain& d = patch.domain();
    const int cols = wrap_u ? nu : nu + 1;
    const int rows = wrap_v ? nv : nv + 1;
    const double du = d.span_u() / nu;
    const double dv = d.span_v() / nv;

    std::vector<Vec3> grid(static_cast<size_t>(cols * rows));
    auto at = [cols](int i, int j) { return static_cast<size_t>(j * cols + i); };
    double scale = 0;
    for (int j = 0; j < rows; ++j) {
        for (int i = 0; i < cols; ++i) {
            grid[at(i, j)] = patch.position(d.u0 + i * du, d.v0 + j * dv);
            scale = std::max(scale, grid[at(i, j)].norm());
        }
    }
    const double tol = 1e-10 * std::max(scale, 1.0);

    // Boundary lines that collapse to a point.
    auto row_samples = [&](int j) {
        std::vector<Vec3> s;
        for (int i = 0; i < cols; ++i) s.push_back(grid[at(i, j)]);
        return s;
    };
    auto col_samples = [&](int i) {
        std::vector<Vec3> s;
        for (int j = 0; j < rows; ++j) s.push_back(grid[at(i, j)]);
        return s;
    };
    const bool row_lo = !wrap_v && collapsed(row_samples(0), tol);
    const bool row_hi = !wrap_v && collapsed(row_samples(rows - 1), tol);
    const bool col_lo = !wrap_u && collapsed(col_samples(0), tol);
    const bool col_hi = !wrap_u && collapsed(col_samples(cols - 1), tol);

    std::vector<int> index(grid.size(), -1);
    std::vector<Vec3> vertices;
    std::vector<Vec2> uv;
    auto canonical = [&](int i, int j) -> std::pair<int, int> {
        if (row_lo && j == 0) return {0, 0};
        if (row_hi && j == rows - 1) return {0, rows - 1};
        if (col_lo && i == 0) return {0, 0};
        if (col_hi && i == cols - 1) return {cols - 1, 0};
        return {i, j};
    };
    auto vid = [&](int i, int j) {
        if (wrap_u) i %= cols;
        if (wrap_v) j %= rows;
        const auto [ci, cj] = canonical(i, j);
        int& slot = index[at(ci, cj)];
        if (slot < 0) {
            slot = static_cast<int>(vertices.size());
            vertices.push_back(grid[at(ci, cj)]);
            uv.emplace_back(d.u0 + ci * du, d.v0 + cj * dv);
        }
        return slot;
    };

    std::vector<Triangle> tris;
    auto add = [&tris](int a, int b, int c) {
        if (a != b && b != c && a != c) tris.push_back({a, b, c});
    };
    for (int j = 0; j < nv; ++j) {
        for (int i = 0; i < nu; ++i) {
            const int a = vid(i, j), b = vid(i + 1, j), c = vid(i, j + 1), e = vid(i + 1, j + 1);
            add(a, b, e);
            add(a, e, c);
        }
    }
    return TriangleMesh(std::move(vertices), std::move(tris), std::move(uv));
}

TriangleMesh icosphere(int level, double radius)
{
    const double t = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> v = {{-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0},
                           {0, -1, t}, {0, 1, t}, {0, -1, -t}, {0, 1, -t},
                           {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
    for (auto& p : v) p.normalize();
    std::vector<Triangle> f = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                               {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                               {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                               {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
    for (int l = 0; l < level; ++l) {
        std::map<std::pair<int, int>, int> mid;
        auto midpoint = [&](int a, int b) {
            const auto key = std::minmax(a, b);
            auto it = mid.find(key);
            if (it != mid.end()) return it->second;
            v.push_back((v[static_cast<size_t>(a)] + v[static_cast<size_t>(b)]).normalized());
            const int id = static_cast<int>(v.size()) - 1;
            mid.emplace(key, id);
            return id;
        };
        std::vector<Triangle> next;
        next.reserve(f.size() * 4);
        for (const auto& tri : f) {
            const int ab = midpoint(tri[0], tri[1]);
            const int bc = midpoint(tri[1], tri[2]);
            const int ca = midpoint(tri[2], tri[0]);
            next.push_back({tri[0], ab, ca});
            next.push_back({tri[1], bc, ab});
            next.push_back({tri[2], ca, bc});
            next.push_back({ab, bc, ca});
        }
        f = std::move(next);
    }
    for (auto& p : v) p *= radius;
    return TriangleMesh(std::move(v), std::move(f));
}

TriangleMesh unit_square_mesh()
{
    return TriangleMesh({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}}, {{0, 1, 2}, {0, 2, 3}});
}

TriangleMesh double_torus_mesh(int nu, int nv)
{
    if (nu < 8 || nv < 6) throw std::invalid_argument("double_torus_mesh: grid too coarse");
    const double major = 2.0, minor = 0.75;
    const double pi = std::acos(-1.0);
    auto torus_point = [&](int i, int j) {
        const double u = 2 * pi * i / nu, v = 2 * pi * j / nv;
        const double w = major + minor * std::cos(v);
        return Vec3(w * std::cos(u), w * std::sin(u), minor * std::sin(v));
    };
    auto wrap = [](int k, int n) { return ((k % n) + n) % n; };
    auto grid_id = [&](int i, int j) { return wrap(j, nv) * nu + wrap(i, nu); };

    // Cells (i, j) with i, j in {-1, 0} around grid vertex (0, 0) are removed;
    // that vertex lies on the outer equator facing +x.
    auto removed_cell = [&](int i, int j) {
        const int wi = wrap(i, nu), wj = wrap(j, nv);
        return (wi == 0 || wi == nu - 1) && (wj == 0 || wj == nv - 1);
    };
    const int center = grid_id(0, 0);

    std::vector<Vec3> a_vertices;
    std::vector<int> remap(static_cast<size_t>(nu * nv), -1);
    for (int j = 0; j < nv; ++j) {
        for (int i = 0; i < nu; ++i) {
            const int g = grid_id(i, j);
            if (g == center) continue;
            remap[static_cast<size_t>(g)] = static_cast<int>(a_vertices.size());
            a_vertices.push_back(torus_point(i, j));
        }
    }
    std::vector<Triangle> a_tris;
    for (int j = 0; j < nv; ++j) {
        for (int i = 0; i < nu; ++i) {
            if (removed_cell(i, j)) continue;
            const int a = remap[static_cast<size_t>(grid_id(i, j))];
            const int b = remap[static_cast<size_t>(grid_id(i + 1, j))];
            const int c = remap[static_cast<size_t>(grid_id(i, j + 1))];
            const int e = remap[static_cast<size_t>(grid_id(i + 1, j + 1))];
            a_tris.push_back({a, b, e});
            a_tris.push_back({a, e, c});
        }
    }

    // Second torus: mirror image through x = mirror_x with windings flipped.
    const double mirror_x = major + minor + 0.75;
    const int offset = static_cast<int>(a_vertices.size());
    std::vector<Vec3> vertices = a_vertices;
    for (const auto& p : a_vertices) vertices.emplace_back(2 * mirror_x - p.x(), p.y(), p.z());
    std::vector<Triangle> tris = a_tris;
    for (const auto& t : a_tris) tris.push_back({t[0] + offset, t[2] + offset, t[1] + offset});

    // Directed boundary edges of the first torus; each a->b has a mirrored b'->a'.
    std::set<std::pair<int, int>> directed;
    for (const auto& t : a_tris) {
        for (int k = 0; k < 3; ++k) directed.emplace(t[k], t[(k + 1) % 3]);
    }
    for (const auto& [a, b] : directed) {
        if (directed.count({b, a})) continue;
        const int ap = a + offset, bp = b + offset;
        tris.push_back({b, a, ap});
        tris.push_back({b, ap, bp});
    }
    return TriangleMesh(std::move(vertices), std::move(tris));
}

} // namespace geolab::surface
