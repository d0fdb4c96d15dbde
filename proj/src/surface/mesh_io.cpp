#include <geolab/surface/mesh_io.hpp>

#include <geolab/common/csv.hpp>
#include <geolab/common/error.hpp>

#include <fmt/format.h>

#include <fstream>
#include <sstream>

namespace geolab::surface {

std::string to_off(const TriangleMesh& mesh)
{
    std::string out = fmt::format("OFF\n{} {} 0\n", mesh.num_vertices(), mesh.num_triangles());
    for (const auto& p : mesh.vertices()) {
        out += fmt::format("{} {} {}\n", format_double(p.x()), format_double(p.y()), format_double(p.z()));
    }
    for (const auto& t : mesh.triangles()) out += fmt::format("3 {} {} {}\n", t[0], t[1], t[2]);
    return out;
}

std::string to_obj(const TriangleMesh& mesh)
{
    std::string out;
    for (const auto& p : mesh.vertices()) {
        out += fmt::format("v {} {} {}\n", format_double(p.x()), format_double(p.y()), format_double(p.z()));
    }
    for (const auto& t : mesh.triangles()) out += fmt::format("f {} {} {}\n", t[0] + 1, t[1] + 1, t[2] + 1);
    return out;
}

TriangleMesh parse_off(const std::string& text)
{
    std::istringstream is(text);
    std::string magic;
    is >> magic;
    if (magic != "OFF") throw InvalidMesh("missing OFF header");
    size_t nv = 0, nf = 0, ne = 0;
    if (!(is >> nv >> nf >> ne)) throw InvalidMesh("bad OFF counts line");
    std::vector<Vec3> v(nv);
    for (auto& p : v) {
        if (!(is >> p.x() >> p.y() >> p.z())) throw InvalidMesh("truncated OFF vertex list");
    }
    std::vector<Triangle> f(nf);
    for (auto& t : f) {
        int k = 0;
        if (!(is >> k)) throw InvalidMesh("truncated OFF face list");
        if (k != 3) throw InvalidMesh(fmt::format("OFF face with {} corners; only triangles supported", k));
        is >> t[0] >> t[1] >> t[2];
    }
    return TriangleMesh(std::move(v), std::move(f));
}

TriangleMesh parse_obj(const std::string& text)
{
    std::istringstream is(text);
    std::vector<Vec3> v;
    std::vector<Triangle> f;
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "v") {
            Vec3 p;
            if (!(ls >> p.x() >> p.y() >> p.z())) throw InvalidMesh("bad OBJ vertex: " + line);
            v.push_back(p);
        } else if (tag == "f") {
            std::vector<int> ids;
            std::string tok;
            while (ls >> tok) {
                // "a/b/c" keeps only the position index.
                const int id = std::stoi(tok.substr(0, tok.find('/')));
                ids.push_back(id > 0 ? id - 1 : static_cast<int>(v.size()) + id);
            }
            if (ids.size() != 3) throw InvalidMesh("OBJ face is not a triangle: " + line);
            f.push_back({ids[0], ids[1], ids[2]});
        }
    }
    return TriangleMesh(std::move(v), std::move(f));
}

void write_mesh(const TriangleMesh& mesh, const std::filesystem::path& path)
{
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path.string());
    os << (path.extension() == ".obj" ? to_obj(mesh) : to_off(mesh));
}

TriangleMesh read_mesh(const std::filesystem::path& path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open " + path.string());
    std::stringstream ss;
    ss << is.rdbuf();
    if (path.extension() == ".obj") return parse_obj(ss.str());
    if (path.extension() == ".off") return parse_off(ss.str());
    throw InvalidMesh("unsupported mesh extension " + path.extension().string());
}

std::string curvature_csv(const TriangleMesh& mesh, const VertexCurvature& curvature)
{
    CsvWriter csv({"vid", "x", "y", "z", "H", "K"});
    for (size_t i = 0; i < mesh.num_vertices(); ++i) {
        if (!curvature.valid[i]) continue;
        const Vec3& p = mesh.vertices()[i];
        csv.row({std::to_string(i), format_double(p.x()), format_double(p.y()), format_double(p.z()),
                 format_double(curvature.H[i]), format_double(curvature.K[i])});
    }
    return csv.str();
}

} // namespace geolab::surface
