#include "io/point_cloud_io.hpp"

#include <fstream>
#include <iomanip>
#include <limits>

#include "io/ply_detail.hpp"

namespace npr {

OrientedPointCloud read_point_cloud(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorCode::Io, "cannot open '" + path + "'");

    const ply::Header header = ply::read_header(in);
    const ply::Element* vertex = header.find("vertex");
    if (!vertex) ply::fail(in, "missing 'vertex' element");

    const int ix = vertex->find("x"), iy = vertex->find("y"), iz = vertex->find("z");
    if (ix < 0 || iy < 0 || iz < 0) ply::fail(in, "vertex element lacks x/y/z");
    const int inx = vertex->find("nx"), iny = vertex->find("ny"), inz = vertex->find("nz");
    const bool with_normals = inx >= 0 && iny >= 0 && inz >= 0;
    const int isid = vertex->find("sensor_id");

    // Elements listed before "vertex" must be skipped.
    OrientedPointCloud cloud;
    cloud.points.reserve(vertex->count);
    if (with_normals) cloud.normals.reserve(vertex->count);
    if (isid >= 0) cloud.sensor_ids.reserve(vertex->count);

    std::vector<double> row;
    for (const ply::Element& elem : header.elements) {
        if (elem.name != "vertex") {
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
            continue;
        }
        for (size_t r = 0; r < elem.count; ++r) {
            row.clear();
            for (const auto& p : elem.properties) {
                if (p.is_list) ply::fail(in, "list property in vertex element");
                row.push_back(header.binary ? ply::read_scalar_binary(in, p.type)
                                            : ply::read_scalar_ascii(in, p.type));
            }
            const Vec3 pt{static_cast<float>(row[ix]), static_cast<float>(row[iy]),
                          static_cast<float>(row[iz])};
            if (!pt.is_finite()) ply::fail(in, "non-finite vertex position");
            cloud.points.push_back(pt);
            if (with_normals) {
                const Vec3 n{static_cast<float>(row[inx]), static_cast<float>(row[iny]),
                             static_cast<float>(row[inz])};
                if (!n.is_finite()) ply::fail(in, "non-finite normal");
                cloud.normals.push_back(n);
            }
            if (isid >= 0) cloud.sensor_ids.push_back(static_cast<int32_t>(row[isid]));
        }
    }
    if (cloud.points.size() != vertex->count)
        ply::fail(in, "vertex count mismatch: header says " + std::to_string(vertex->count));

    cloud.recompute_bounds();
    return cloud;
}

void write_point_cloud(const OrientedPointCloud& cloud, const std::string& path, bool ascii) {
    if (cloud.has_normals() && cloud.normals.size() != cloud.points.size())
        raise(ErrorCode::InvalidArgument, "write_point_cloud: |normals| != |points|");
    if (cloud.has_sensor_ids() && cloud.sensor_ids.size() != cloud.points.size())
        raise(ErrorCode::InvalidArgument, "write_point_cloud: |sensor_ids| != |points|");

    std::ofstream out(path, std::ios::binary);
    if (!out) raise(ErrorCode::Io, "cannot write '" + path + "'");

    out << "ply\n";
    out << (ascii ? "format ascii 1.0\n" : "format binary_little_endian 1.0\n");
    out << "element vertex " << cloud.points.size() << "\n";
    out << "property float x\nproperty float y\nproperty float z\n";
    if (cloud.has_normals()) out << "property float nx\nproperty float ny\nproperty float nz\n";
    if (cloud.has_sensor_ids()) out << "property int sensor_id\n";
    out << "end_header\n";

    // max_digits10 keeps the ascii path lossless at f32 precision.
    out << std::setprecision(std::numeric_limits<float>::max_digits10);
    for (size_t i = 0; i < cloud.points.size(); ++i) {
        if (ascii) {
            out << cloud.points[i].x << ' ' << cloud.points[i].y << ' ' << cloud.points[i].z;
            if (cloud.has_normals())
                out << ' ' << cloud.normals[i].x << ' ' << cloud.normals[i].y << ' '
                    << cloud.normals[i].z;
            if (cloud.has_sensor_ids()) out << ' ' << cloud.sensor_ids[i];
            out << '\n';
        } else {
            for (int a = 0; a < 3; ++a)
                ply::write_scalar_binary(out, ply::Scalar::F32, cloud.points[i][a]);
            if (cloud.has_normals())
                for (int a = 0; a < 3; ++a)
                    ply::write_scalar_binary(out, ply::Scalar::F32, cloud.normals[i][a]);
            if (cloud.has_sensor_ids())
                ply::write_scalar_binary(out, ply::Scalar::I32, cloud.sensor_ids[i]);
        }
    }
    if (!out) raise(ErrorCode::Io, "write failed for '" + path + "'");
}

}  // namespace npr
