#pragma once

#include "geom/mesh.hpp"

namespace npr {

/// Latitude/longitude sphere; poles are shared vertices.
TriangleMesh make_uv_sphere(const Vec3& center, float radius, int stacks = 32, int slices = 64);

/// Axis-aligned box as 12 triangles with outward winding.
TriangleMesh make_box(const Vec3& min, const Vec3& max);

/// Rectangle in the plane z = z0 spanning [x0,x1] x [y0,y1], two triangles.
/// Winding gives a +z facing normal when flip == false.
TriangleMesh make_quad_z(float x0, float x1, float y0, float y1, float z0, bool flip = false);

/// Concatenate meshes (index-shifted).
TriangleMesh merge_meshes(const TriangleMesh& a, const TriangleMesh& b);

}  // namespace npr
