#include "io/mesh_io.hpp"

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "io/ply_detail.hpp"
#include "util/error.hpp"

namespace npr {

MeshFormat mesh_format_from_path(const std::string& path) {
    const auto dot = path.find_last_of('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "obj" || ext == "OBJ") return MeshFormat::Obj;
    if (ext == "ply" || ext == "PLY") return MeshFormat::Ply;
    raise(ErrorCode::InvalidArgument, "unsupported mesh extension in '" + path + "'");
}

static TriangleMesh read_obj(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::Io, "cannot open '" + path + "'");
    TriangleMesh mesh;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "v") {
            Vec3 v;
            if (!(ls >> v.x >> v.y >> v.z))
                raise(ErrorCode::Parse, "obj: bad vertex at line " + std::to_string(lineno));
            mesh.vertices.push_back(v);
        } else if (tag == "f") {
            std::vector<uint32_t> face;
            std::string tok;
            while (ls >> tok) {
                // accept v, v/t, v//n, v/t/n
                const auto slash = tok.find('/');
                const std::string head = slash == std::string::npos ? tok : tok.substr(0, slash);
                long idx = 0;
                try {
                    idx = std::stol(head);
                } catch (...) {
                    raise(ErrorCode::Parse, "obj: bad face index at line " + std::to_string(lineno));
                }
                if (idx < 0) idx = static_cast<long>(mesh.vertices.size()) + idx + 1;
                if (idx < 1 || static_cast<size_t>(idx) > mesh.vertices.size())
                    raise(ErrorCode::Parse,
                          "obj: face index out of range at line " + std::to_string(lineno));
                face.push_back(static_cast<uint32_t>(idx - 1));
            }
            for (size_t i = 2; i < face.size(); ++i)
                mesh.triangles.push_back({face[0], face[i - 1], face[i]});
        }
        // vn/vt/usemtl/etc. ignored
    }
    return mesh;
}

static TriangleMesh read_ply_mesh(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorCode::Io, "cannot open '" + path + "'");
    const ply::Header header = ply::read_header(in);
    const ply::Element* vertex = header.find("vertex");
    if (!vertex) ply::fail(in, "missing 'vertex' element");
    const int ix = vertex->find("x"), iy = vertex->find("y"), iz = vertex->find("z");
    if (ix < 0 || iy < 0 || iz < 0) ply::fail(in, "vertex element lacks x/y/z");

    TriangleMesh mesh;
    for (const ply::Element& elem : header.elements) {
        if (elem.name == "vertex") {
            std::vector<double> row;
            mesh.vertices.reserve(elem.count);
            for (size_t r = 0; r < elem.count; ++r) {
                row.clear();
                for (const auto& p : elem.properties) {
                    if (p.is_list) ply::fail(in, "list property in vertex element");
                    row.push_back(header.binary ? ply::read_scalar_binary(in, p.type)
                                                : ply::read_scalar_ascii(in, p.type));
                }
                mesh.vertices.push_back({static_cast<float>(row[ix]),
                                         static_cast<float>(row[iy]),
                                         static_cast<float>(row[iz])});
            }
        } else if (elem.name == "face") {
            const int ivi = elem.find("vertex_indices") >= 0 ? elem.find("vertex_indices")
                                                             : elem.find("vertex_index");
            if (ivi < 0) ply::fail(in, "face element lacks vertex_indices");
            for (size_t r = 0; r < elem.count; ++r) {
                std::vector<uint32_t> face;
                for (size_t pi = 0; pi < elem.properties.size(); ++pi) {
                    const auto& p = elem.properties[pi];
                    if (p.is_list) {
                        const auto n = static_cast<size_t>(
                            header.binary ? ply::read_scalar_binary(in, p.count_type)
                                          : ply::read_scalar_ascii(in, p.count_type));
                        for (size_t i = 0; i < n; ++i) {
                            const double v = header.binary ? ply::read_scalar_binary(in, p.type)
                                                           : ply::read_scalar_ascii(in, p.type);
                            if (static_cast<int>(pi) == ivi)
                                face.push_back(static_cast<uint32_t>(v));
                        }
                    } else {
                        (void)(header.binary ? ply::read_scalar_binary(in, p.type)
                                             : ply::read_scalar_ascii(in, p.type));
                    }
                }
                for (size_t i = 2; i < face.size(); ++i)
                    mesh.triangles.push_back({face[0], face[i - 1], face[i]});
            }
        } else {
            for (size_t r = 0; r < elem.count; ++r) {
                if (header.binary) {
                    ply::skip_row_binary(in, elem);
                } else {
                    for (const auto& p : elem.properties) {
                        if (p.is_list) {
                            const auto n = static_cast<size_t>(
                                ply::read_scalar_ascii(in, p.count_type));
                            for (size_t i = 0; i < n; ++i) ply::read_scalar_ascii(in, p.type);
                        } else {
                            ply::read_scalar_ascii(in, p.type);
                        }
                    }
                }
            }
        }
    }
    mesh.validate();
    return mesh;
}

TriangleMesh read_mesh(const std::string& path) {
    return mesh_format_from_path(path) == MeshFormat::Obj ? read_obj(path) : read_ply_mesh(path);
}

static void write_obj(const TriangleMesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) raise(ErrorCode::Io, "cannot write '" + path + "'");
    out << std::setprecision(std::numeric_limits<float>::max_digits10);
    for (const Vec3& v : mesh.vertices) out << "v " << v.x << ' ' << v.y << ' ' << v.z << '\n';
    for (const auto& t : mesh.triangles)
        out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
    if (!out) raise(ErrorCode::Io, "write failed for '" + path + "'");
}

static void write_ply(const TriangleMesh& mesh, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(ErrorCode::Io, "cannot write '" + path + "'");
    out << "ply\nformat binary_little_endian 1.0\n";
    out << "element vertex " << mesh.vertices.size() << "\n";
    out << "property float x\nproperty float y\nproperty float z\n";
    out << "element face " << mesh.triangles.size() << "\n";
    out << "property list uchar int vertex_indices\n";
    out << "end_header\n";
    for (const Vec3& v : mesh.vertices)
        for (int a = 0; a < 3; ++a) ply::write_scalar_binary(out, ply::Scalar::F32, v[a]);
    for (const auto& t : mesh.triangles) {
        ply::write_scalar_binary(out, ply::Scalar::U8, 3);
        for (uint32_t idx : t)
            ply::write_scalar_binary(out, ply::Scalar::I32, static_cast<double>(idx));
    }
    if (!out) raise(ErrorCode::Io, "write failed for '" + path + "'");
}

void write_mesh(const TriangleMesh& mesh, const std::string& path, MeshFormat format) {
    mesh.validate();
    if (format == MeshFormat::Obj) write_obj(mesh, path);
    else write_ply(mesh, path);
}

}  // namespace npr
