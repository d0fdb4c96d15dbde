#pragma once

#include <geolab/surface/discrete_curvature.hpp>
#include <geolab/surface/mesh.hpp>

#include <filesystem>
#include <string>

namespace geolab::surface {

std::string to_off(const TriangleMesh& mesh);
std::string to_obj(const TriangleMesh& mesh);
TriangleMesh parse_off(const std::string& text);
/// Only `v` and triangular `f` records are honoured; other records are skipped,
/// polygons with more than three corners are rejected.
TriangleMesh parse_obj(const std::string& text);

void write_mesh(const TriangleMesh& mesh, const std::filesystem::path& path);
/// Format picked from the extension (.off or .obj).
TriangleMesh read_mesh(const std::filesystem::path& path);

/// Per-vertex curvature dump with columns vid,x,y,z,H,K (invalid vertices omitted).
std::string curvature_csv(const TriangleMesh& mesh, const VertexCurvature& curvature);

} // namespace geolab::surface
