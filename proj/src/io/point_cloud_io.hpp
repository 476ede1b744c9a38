#pragma once

#include <string>

#include "geom/cloud.hpp"

namespace npr {

/// Reads a PLY point cloud (ascii or binary_little_endian) with x,y,z and
/// optional nx,ny,nz / sensor_id vertex properties. Missing normals leave
/// `normals` empty for later estimation. Throws Parse/Io errors; parse
/// errors carry the byte offset of the failure.
OrientedPointCloud read_point_cloud(const std::string& path);

/// Writes positions (f32), normals and sensor ids when present.
void write_point_cloud(const OrientedPointCloud& cloud, const std::string& path,
                       bool ascii = false);

}  // namespace npr
