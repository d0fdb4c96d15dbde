#include <geolab/surface/mesh.hpp>

#include <geolab/common/error.hpp>

#include <fmt/format.h>

#include <Eigen/Geometry>

#include <algorithm>
#include <map>

namespace geolab::surface {

TriangleMesh::TriangleMesh(std::vector<Vec3> vertices, std::vector<Triangle> triangles,
                           std::vector<Vec2> uv, std::optional<double> area_floor)
    : vertices_(std::move(vertices)), triangles_(std::move(triangles)), uv_(std::move(uv))
{
    if (!uv_.empty() && uv_.size() != vertices_.size()) {
        throw InvalidMesh("uv array size does not match vertex count");
    }
    if (area_floor) {
        area_floor_ = *area_floor;
    } else {
        Vec3 lo = Vec3::Constant(std::numeric_limits<double>::max());
        Vec3 hi = -lo;
        for (const auto& p : vertices_) {
            lo = lo.cwiseMin(p);
            hi = hi.cwiseMax(p);
        }
        const double diag = vertices_.empty() ? 0.0 : (hi - lo).norm();
        area_floor_ = 1e-14 * diag * diag;
    }
    validate_and_build();
}

void TriangleMesh::validate_and_build()
{
    const int nv = static_cast<int>(vertices_.size());
    std::map<std::pair<int, int>, int> directed;
    for (size_t t = 0; t < triangles_.size(); ++t) {
        const auto& tri = triangles_[t];
        for (int k = 0; k < 3; ++k) {
            if (tri[k] < 0 || tri[k] >= nv) {
                throw InvalidMesh(fmt::format("triangle {} references vertex {} out of range", t, tri[k]));
            }
        }
        if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2]) {
            throw InvalidMesh(fmt::format("triangle {} repeats a vertex", t));
        }
        for (int k = 0; k < 3; ++k) {
            const auto key = std::make_pair(tri[k], tri[(k + 1) % 3]);
            if (++directed[key] > 1) {
                throw InvalidMesh(fmt::format(
                    "directed edge ({}, {}) used twice: inconsistent winding or non-manifold edge",
                    key.first, key.second));
            }
        }
    }
    check_areas();

    boundary_.assign(vertices_.size(), false);
    edges_.clear();
    for (const auto& [key, count] : directed) {
        const auto [a, b] = key;
        const bool has_twin = directed.count({b, a}) > 0;
        if (a < b || !has_twin) edges_.emplace_back(std::min(a, b), std::max(a, b));
        if (!has_twin) {
            boundary_[static_cast<size_t>(a)] = true;
            boundary_[static_cast<size_t>(b)] = true;
        }
    }
    std::sort(edges_.begin(), edges_.end());
}

bool TriangleMesh::closed() const
{
    return std::none_of(boundary_.begin(), boundary_.end(), [](bool b) { return b; });
}

int TriangleMesh::euler_characteristic() const
{
    return static_cast<int>(vertices_.size()) - static_cast<int>(edges_.size()) +
           static_cast<int>(triangles_.size());
}

Vec3 TriangleMesh::triangle_normal(size_t t) const
{
    const auto& tri = triangles_[t];
    const Vec3& a = vertices_[static_cast<size_t>(tri[0])];
    const Vec3& b = vertices_[static_cast<size_t>(tri[1])];
    const Vec3& c = vertices_[static_cast<size_t>(tri[2])];
    return (b - a).cross(c - a);
}

double TriangleMesh::triangle_area(size_t t) const
{
    return 0.5 * triangle_normal(t).norm();
}

void TriangleMesh::check_areas() const
{
    for (size_t t = 0; t < triangles_.size(); ++t) {
        const double area = triangle_area(t);
        if (!(area >= area_floor_) || area == 0.0) {
            throw DegenerateTriangle(
                fmt::format("triangle {} has area {:.3e} below floor {:.3e}", t, area, area_floor_));
        }
    }
}

TriangleMesh TriangleMesh::with_vertices(std::vector<Vec3> vertices) const
{
    if (vertices.size() != vertices_.size()) throw InvalidMesh("vertex count changed");
    TriangleMesh out = *this;
    out.vertices_ = std::move(vertices);
    out.check_areas();
    return out;
}

double mesh_area(const TriangleMesh& mesh)
{
    double total = 0;
    for (size_t t = 0; t < mesh.num_triangles(); ++t) total += mesh.triangle_area(t);
    return total;
}

} // namespace geolab::surface
