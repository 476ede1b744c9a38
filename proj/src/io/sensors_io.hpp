#pragma once

#include <string>

#include "geom/cloud.hpp"

namespace npr {

/// Sidecar format: {"sensors": [{"id": 0, "position": [x, y, z]}, ...]}.
/// Entries must form ids 0..n-1 (any order in the file).
SensorSet read_sensors(const std::string& path);
void write_sensors(const SensorSet& sensors, const std::string& path);

}  // namespace npr
