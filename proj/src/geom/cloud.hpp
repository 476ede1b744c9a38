#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "geom/vec3.hpp"
#include "util/error.hpp"

namespace npr {

/// Sensor positions that produced a scan. Orientations (unit quaternions,
/// xyzw) are optional and carried only for provenance.
struct SensorSet {
    std::vector<Vec3> positions;
    std::vector<std::array<float, 4>> orientations;  // empty or same size as positions

    size_t size() const { return positions.size(); }
    bool empty() const { return positions.empty(); }
};

/// Surface samples with inward unit normals and the index of the sensor that
/// observed each point. `normals` may be empty until estimated.
struct OrientedPointCloud {
    std::vector<Vec3> points;
    std::vector<Vec3> normals;
    std::vector<int32_t> sensor_ids;
    Aabb bounds;

    size_t size() const { return points.size(); }
    bool has_normals() const { return !normals.empty(); }
    bool has_sensor_ids() const { return !sensor_ids.empty(); }

    void recompute_bounds() {
        bounds = Aabb{};
        for (const Vec3& p : points) bounds.expand(p);
    }

    /// Checks the size/unit-normal/bounds invariants; throws on violation.
    void validate() const {
        if (has_normals() && normals.size() != points.size())
            raise(ErrorCode::InvalidArgument, "cloud: |normals| != |points|");
        if (has_sensor_ids() && sensor_ids.size() != points.size())
            raise(ErrorCode::InvalidArgument, "cloud: |sensor_ids| != |points|");
        for (const Vec3& p : points)
            if (!p.is_finite()) raise(ErrorCode::InvalidArgument, "cloud: non-finite point");
        for (const Vec3& n : normals) {
            if (!n.is_finite()) raise(ErrorCode::InvalidArgument, "cloud: non-finite normal");
            if (std::abs(norm(n) - 1.f) > 1e-6f)
                raise(ErrorCode::InvalidArgument, "cloud: non-unit normal");
        }
        for (const Vec3& p : points)
            if (!bounds.contains(p)) raise(ErrorCode::InvalidArgument, "cloud: bounds too small");
    }
};

}  // namespace npr
