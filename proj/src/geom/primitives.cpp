#include "geom/primitives.hpp"

#include <cmath>

namespace npr {

TriangleMesh make_uv_sphere(const Vec3& center, float radius, int stacks, int slices) {
    TriangleMesh mesh;
    const double pi = 3.14159265358979323846;
    // Interior ring vertices plus two poles.
    mesh.vertices.push_back(center + Vec3{0, 0, radius});   // north pole (+z)
    for (int i = 1; i < stacks; ++i) {
        const double phi = pi * i / stacks;           // from +z
        for (int j = 0; j < slices; ++j) {
            const double theta = 2.0 * pi * j / slices;
            mesh.vertices.push_back(center + Vec3{
                static_cast<float>(radius * std::sin(phi) * std::cos(theta)),
                static_cast<float>(radius * std::sin(phi) * std::sin(theta)),
                static_cast<float>(radius * std::cos(phi))});
        }
    }
    mesh.vertices.push_back(center + Vec3{0, 0, -radius});  // south pole
    const uint32_t north = 0;
    const uint32_t south = static_cast<uint32_t>(mesh.vertices.size() - 1);
    auto ring = [&](int i, int j) -> uint32_t {
        return 1 + static_cast<uint32_t>((i - 1) * slices + (j % slices));
    };

    for (int j = 0; j < slices; ++j)
        mesh.triangles.push_back({north, ring(1, j), ring(1, j + 1)});
    for (int i = 1; i < stacks - 1; ++i) {
        for (int j = 0; j < slices; ++j) {
            const uint32_t a = ring(i, j), b = ring(i, j + 1);
            const uint32_t c = ring(i + 1, j), d = ring(i + 1, j + 1);
            mesh.triangles.push_back({a, c, d});
            mesh.triangles.push_back({a, d, b});
        }
    }
    for (int j = 0; j < slices; ++j)
        mesh.triangles.push_back({south, ring(stacks - 1, j + 1), ring(stacks - 1, j)});
    return mesh;
}

TriangleMesh make_box(const Vec3& lo, const Vec3& hi) {
    TriangleMesh mesh;
    mesh.vertices = {
        {lo.x, lo.y, lo.z}, {hi.x, lo.y, lo.z}, {hi.x, hi.y, lo.z}, {lo.x, hi.y, lo.z},
        {lo.x, lo.y, hi.z}, {hi.x, lo.y, hi.z}, {hi.x, hi.y, hi.z}, {lo.x, hi.y, hi.z}};
    // Outward winding (counter-clockwise seen from outside).
    mesh.triangles = {
        {0, 2, 1}, {0, 3, 2},  // z = lo (-z)
        {4, 5, 6}, {4, 6, 7},  // z = hi (+z)
        {0, 1, 5}, {0, 5, 4},  // y = lo (-y)
        {3, 7, 6}, {3, 6, 2},  // y = hi (+y)
        {0, 4, 7}, {0, 7, 3},  // x = lo (-x)
        {1, 2, 6}, {1, 6, 5},  // x = hi (+x)
    };
    return mesh;
}

TriangleMesh make_quad_z(float x0, float x1, float y0, float y1, float z0, bool flip) {
    TriangleMesh mesh;
    mesh.vertices = {{x0, y0, z0}, {x1, y0, z0}, {x1, y1, z0}, {x0, y1, z0}};
    if (!flip)
        mesh.triangles = {{0, 1, 2}, {0, 2, 3}};
    else
        mesh.triangles = {{0, 2, 1}, {0, 3, 2}};
    return mesh;
}

TriangleMesh merge_meshes(const TriangleMesh& a, const TriangleMesh& b) {
    TriangleMesh out = a;
    const uint32_t offset = static_cast<uint32_t>(a.vertices.size());
    out.vertices.insert(out.vertices.end(), b.vertices.begin(), b.vertices.end());
    for (const auto& t : b.triangles)
        out.triangles.push_back({t[0] + offset, t[1] + offset, t[2] + offset});
    out.normals.clear();
    return out;
}

}  // namespace npr
