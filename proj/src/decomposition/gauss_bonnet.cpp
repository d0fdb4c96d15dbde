#include <geolab/common/error.hpp>
#include <geolab/decomposition/gauss_bonnet.hpp>

#include <Eigen/Geometry>

#include <cmath>
#include <numbers>

namespace geolab::decomposition {

GaussBonnet gauss_bonnet_mesh(const surface::TriangleMesh& mesh)
{
    if (!mesh.closed()) throw InvalidMesh("angle-defect Gauss-Bonnet needs a closed mesh");
    const auto& x = mesh.vertices();
    std::vector<double> angle_sum(mesh.num_vertices(), 0.0);
    for (const auto& t : mesh.triangles())
        for (int k = 0; k < 3; ++k) {
            const auto& a = x[static_cast<size_t>(t[k])];
            const surface::Vec3 e1 = x[static_cast<size_t>(t[(k + 1) % 3])] - a;
            const surface::Vec3 e2 = x[static_cast<size_t>(t[(k + 2) % 3])] - a;
            angle_sum[static_cast<size_t>(t[k])] += std::atan2(e1.cross(e2).norm(), e1.dot(e2));
        }
    GaussBonnet out;
    for (double s : angle_sum) out.total_curvature += 2 * std::numbers::pi - s;
    out.euler = static_cast<int>(std::lround(out.total_curvature / (2 * std::numbers::pi)));
    return out;
}

} // namespace geolab::decomposition
