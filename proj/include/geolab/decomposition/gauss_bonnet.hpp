#pragma once

#include <geolab/surface/mesh.hpp>

namespace geolab::decomposition {

struct GaussBonnet {
    double total_curvature = 0.0; // sum of angle defects
    int euler = 0;                // round(total / 2π)
};

/// Throws InvalidMesh for meshes with boundary.
GaussBonnet gauss_bonnet_mesh(const surface::TriangleMesh& mesh);

} // namespace geolab::decomposition
