#include <geolab/surface/discrete_curvature.hpp>

#include <Eigen/Geometry>

#include <cmath>
#include <numbers>

namespace geolab::surface {

namespace {

using Eigen::Triplet;

struct Corner {
    Vec3 p[3];
};

Corner corners(const TriangleMesh& mesh, size_t t)
{
    const auto& tri = mesh.triangles()[t];
    return {{mesh.vertices()[static_cast<size_t>(tri[0])], mesh.vertices()[static_cast<size_t>(tri[1])],
             mesh.vertices()[static_cast<size_t>(tri[2])]}};
}

// Cotangent of the angle at corner k.
double cot_at(const Corner& c, int k)
{
    const Vec3 a = c.p[(k + 1) % 3] - c.p[k];
    const Vec3 b = c.p[(k + 2) % 3] - c.p[k];
    return a.dot(b) / a.cross(b).norm();
}

double angle_at(const Corner& c, int k)
{
    const Vec3 a = c.p[(k + 1) % 3] - c.p[k];
    const Vec3 b = c.p[(k + 2) % 3] - c.p[k];
    return std::atan2(a.cross(b).norm(), a.dot(b));
}

} // namespace

SparseMatrix cotan_stiffness(const TriangleMesh& mesh)
{
    const auto n = static_cast<Eigen::Index>(mesh.num_vertices());
    std::vector<Triplet<double>> trips;
    trips.reserve(mesh.num_triangles() * 12);
    for (size_t t = 0; t < mesh.num_triangles(); ++t) {
        const Corner c = corners(mesh, t);
        const auto& tri = mesh.triangles()[t];
        for (int k = 0; k < 3; ++k) {
            // Angle at k is opposite edge (k+1, k+2).
            const double w = 0.5 * cot_at(c, k);
            const int i = tri[(k + 1) % 3], j = tri[(k + 2) % 3];
            trips.emplace_back(i, j, -w);
            trips.emplace_back(j, i, -w);
            trips.emplace_back(i, i, w);
            trips.emplace_back(j, j, w);
        }
    }
    SparseMatrix L(n, n);
    L.setFromTriplets(trips.begin(), trips.end());
    return L;
}

SparseMatrix consistent_mass(const TriangleMesh& mesh)
{
    const auto n = static_cast<Eigen::Index>(mesh.num_vertices());
    std::vector<Triplet<double>> trips;
    trips.reserve(mesh.num_triangles() * 9);
    for (size_t t = 0; t < mesh.num_triangles(); ++t) {
        const double area = mesh.triangle_area(t);
        const auto& tri = mesh.triangles()[t];
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                trips.emplace_back(tri[a], tri[b], area / (a == b ? 6.0 : 12.0));
            }
        }
    }
    SparseMatrix M(n, n);
    M.setFromTriplets(trips.begin(), trips.end());
    return M;
}

std::vector<double> mixed_areas(const TriangleMesh& mesh)
{
    std::vector<double> area(mesh.num_vertices(), 0.0);
    constexpr double half_pi = std::numbers::pi / 2;
    for (size_t t = 0; t < mesh.num_triangles(); ++t) {
        const Corner c = corners(mesh, t);
        const auto& tri = mesh.triangles()[t];
        const double A = mesh.triangle_area(t);
        int obtuse = -1;
        for (int k = 0; k < 3; ++k) {
            if (angle_at(c, k) > half_pi) obtuse = k;
        }
        for (int k = 0; k < 3; ++k) {
            double share;
            if (obtuse < 0) {
                // Voronoi: (|e_k,k+1|^2 cot(k+2) + |e_k,k+2|^2 cot(k+1)) / 8
                const int k1 = (k + 1) % 3, k2 = (k + 2) % 3;
                share = ((c.p[k] - c.p[k1]).squaredNorm() * cot_at(c, k2) +
                         (c.p[k] - c.p[k2]).squaredNorm() * cot_at(c, k1)) /
                        8.0;
            } else {
                share = (k == obtuse) ? A / 2 : A / 4;
            }
            area[static_cast<size_t>(tri[k])] += share;
        }
    }
    return area;
}

std::vector<Vec3> vertex_normals(const TriangleMesh& mesh)
{
    std::vector<Vec3> n(mesh.num_vertices(), Vec3::Zero());
    for (size_t t = 0; t < mesh.num_triangles(); ++t) {
        const Vec3 fn = mesh.triangle_normal(t);
        for (int v : mesh.triangles()[t]) n[static_cast<size_t>(v)] += fn;
    }
    for (auto& x : n) {
        const double len = x.norm();
        if (len > 0) x /= len;
    }
    return n;
}

std::vector<double> angle_sums(const TriangleMesh& mesh)
{
    std::vector<double> sum(mesh.num_vertices(), 0.0);
    for (size_t t = 0; t < mesh.num_triangles(); ++t) {
        const Corner c = corners(mesh, t);
        for (int k = 0; k < 3; ++k) sum[static_cast<size_t>(mesh.triangles()[t][k])] += angle_at(c, k);
    }
    return sum;
}

double VertexCurvature::max_error(double target) const
{
    double worst = 0;
    for (size_t i = 0; i < H.size(); ++i) {
        if (valid[i]) worst = std::max(worst, std::abs(H[i] - target));
    }
    return worst;
}

size_t VertexCurvature::valid_count() const
{
    size_t n = 0;
    for (bool v : valid) n += v ? 1 : 0;
    return n;
}

VertexCurvature mesh_mean_curvature(const TriangleMesh& mesh)
{
    const size_t n = mesh.num_vertices();
    const SparseMatrix L = cotan_stiffness(mesh);
    Eigen::MatrixXd X(static_cast<Eigen::Index>(n), 3);
    for (size_t i = 0; i < n; ++i) X.row(static_cast<Eigen::Index>(i)) = mesh.vertices()[i].transpose();
    const Eigen::MatrixXd LX = L * X;

    VertexCurvature out;
    out.area = mixed_areas(mesh);
    out.normal = vertex_normals(mesh);
    out.H.assign(n, 0.0);
    out.K.assign(n, 0.0);
    out.mean_curvature_normal.assign(n, Vec3::Zero());
    out.valid.assign(n, false);
    const std::vector<double> angles = angle_sums(mesh);
    const double floor = mesh.area_floor();
    for (size_t i = 0; i < n; ++i) {
        if (mesh.is_boundary(static_cast<int>(i)) || !(out.area[i] > floor)) continue;
        const Vec3 hn = LX.row(static_cast<Eigen::Index>(i)).transpose() / out.area[i];
        out.mean_curvature_normal[i] = hn;
        const double sign = hn.dot(out.normal[i]) < 0 ? -1.0 : 1.0;
        out.H[i] = 0.5 * sign * hn.norm();
        out.K[i] = (2 * std::numbers::pi - angles[i]) / out.area[i];
        out.valid[i] = true;
    }
    return out;
}

} // namespace geolab::surface
