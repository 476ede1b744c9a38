#pragma once

#include <string>

#include "geom/mesh.hpp"

namespace npr {

enum class MeshFormat { Obj, Ply };

/// Reads an OBJ or PLY mesh, chosen by file extension. Polygons are
/// fan-triangulated.
TriangleMesh read_mesh(const std::string& path);

/// OBJ output uses 1-based indices; PLY output is binary little-endian.
void write_mesh(const TriangleMesh& mesh, const std::string& path, MeshFormat format);

/// Format from extension (.obj / .ply); anything else is an error.
MeshFormat mesh_format_from_path(const std::string& path);

}  // namespace npr
