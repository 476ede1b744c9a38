#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "geom/vec3.hpp"
#include "util/error.hpp"

namespace npr {

struct TriangleMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<uint32_t, 3>> triangles;
    std::vector<Vec3> normals;  // optional per-vertex normals

    size_t vertex_count() const { return vertices.size(); }
    size_t triangle_count() const { return triangles.size(); }
    bool empty() const { return triangles.empty(); }

    Aabb bounds() const {
        Aabb b;
        for (const Vec3& v : vertices) b.expand(v);
        return b;
    }

    void validate() const {
        for (const auto& t : triangles) {
            for (uint32_t idx : t)
                if (idx >= vertices.size())
                    raise(ErrorCode::InvalidArgument, "mesh: triangle index out of range");
            if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
                raise(ErrorCode::InvalidArgument, "mesh: degenerate triangle (repeated index)");
        }
        if (!normals.empty() && normals.size() != vertices.size())
            raise(ErrorCode::InvalidArgument, "mesh: |normals| != |vertices|");
        for (const Vec3& v : vertices)
            if (!v.is_finite()) raise(ErrorCode::InvalidArgument, "mesh: non-finite vertex");
    }

    double area() const {
        double a = 0.0;
        for (const auto& t : triangles) a += triangle_area(t);
        return a;
    }

    double triangle_area(const std::array<uint32_t, 3>& t) const {
        const Vec3d a(vertices[t[0]]), b(vertices[t[1]]), c(vertices[t[2]]);
        return 0.5 * norm(cross(b - a, c - a));
    }
};

}  // namespace npr
