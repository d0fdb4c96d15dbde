#pragma once

#include <geolab/surface/patch.hpp>

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace geolab::surface {

using Triangle = std::array<int, 3>;

/// Oriented triangle mesh, validated and immutable after construction.
///
/// Every edge belongs to at most two triangles and each directed edge occurs
/// at most once (globally consistent winding). Triangles below the area floor
/// are rejected. The default floor is 1e-14 * (bounding-box diagonal)^2.
class TriangleMesh {
public:
    TriangleMesh(std::vector<Vec3> vertices, std::vector<Triangle> triangles,
                 std::vector<Vec2> uv = {}, std::optional<double> area_floor = std::nullopt);

    const std::vector<Vec3>& vertices() const { return vertices_; }
    const std::vector<Triangle>& triangles() const { return triangles_; }
    /// Parameter coordinates per vertex; empty when the mesh did not come from a patch.
    const std::vector<Vec2>& uv() const { return uv_; }
    bool has_uv() const { return !uv_.empty(); }

    size_t num_vertices() const { return vertices_.size(); }
    size_t num_triangles() const { return triangles_.size(); }
    size_t num_edges() const { return edges_.size(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const std::vector<bool>& boundary() const { return boundary_; }
    bool is_boundary(int v) const { return boundary_[static_cast<size_t>(v)]; }
    bool closed() const;
    int euler_characteristic() const;
    double area_floor() const { return area_floor_; }

    double triangle_area(size_t t) const;
    /// Unnormalized normal (b - a) x (c - a), length twice the area.
    Vec3 triangle_normal(size_t t) const;

    /// Same connectivity and floor with moved vertices; revalidates areas.
    TriangleMesh with_vertices(std::vector<Vec3> vertices) const;

private:
    void validate_and_build();
    void check_areas() const;

    std::vector<Vec3> vertices_;
    std::vector<Triangle> triangles_;
    std::vector<Vec2> uv_;
    double area_floor_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<bool> boundary_;
};

double mesh_area(const TriangleMesh& mesh);

/// Samples the patch on a (nu x nv)-cell grid, each cell split along its
/// (i,j)-(i+1,j+1) diagonal. Wrapped directions identify the last column/row
/// with the first. A non-wrapped boundary line along which the patch
/// collapses to a single point (sphere poles, disk centre) becomes one vertex.
TriangleMesh triangulate(const ParametricPatch& patch, int nu, int nv, bool wrap_u, bool wrap_v);

/// Subdivided icosahedron projected onto the sphere; level 0 has 12 vertices.
TriangleMesh icosphere(int level, double radius = 1.0);

/// Unit square split into two triangles.
TriangleMesh unit_square_mesh();

/// Closed genus-2 surface: two tori with a hole each, joined by a tube.
TriangleMesh double_torus_mesh(int nu = 24, int nv = 12);

} // namespace geolab::surface
