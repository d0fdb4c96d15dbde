#pragma once

#include <geolab/surface/mesh.hpp>

#include <Eigen/SparseCore>

#include <vector>

namespace geolab::surface {

using SparseMatrix = Eigen::SparseMatrix<double>;

/// Cotangent stiffness: L_ij = -(cot a_ij + cot b_ij)/2, rows sum to zero.
/// Positive semidefinite; equals the P1 finite-element stiffness matrix.
SparseMatrix cotan_stiffness(const TriangleMesh& mesh);

/// P1 consistent mass matrix.
SparseMatrix consistent_mass(const TriangleMesh& mesh);

/// Mixed Voronoi vertex areas: Voronoi for non-obtuse triangles, A/2 at the
/// obtuse corner and A/4 at the others otherwise.
std::vector<double> mixed_areas(const TriangleMesh& mesh);

/// Area-weighted vertex normals inheriting the mesh orientation.
std::vector<Vec3> vertex_normals(const TriangleMesh& mesh);

struct VertexCurvature {
    std::vector<double> H;      // (k1 + k2) / 2, signed against `normal`
    std::vector<double> K;      // angle defect / mixed area
    std::vector<Vec3> normal;
    std::vector<Vec3> mean_curvature_normal; // (L x)_i / A_i = 2 H n
    std::vector<double> area;
    std::vector<bool> valid;    // false on boundary or zero-area cells

    /// Max |H - target| over valid vertices.
    double max_error(double target) const;
    size_t valid_count() const;
};

/// Cotangent mean curvature at interior vertices.
VertexCurvature mesh_mean_curvature(const TriangleMesh& mesh);

/// Angle sum at every vertex.
std::vector<double> angle_sums(const TriangleMesh& mesh);

} // namespace geolab::surface
