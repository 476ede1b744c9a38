#pragma once

#include <vector>

#include "geom/mat3.hpp"
#include "geom/vec3.hpp"

namespace npr {

/// Pinhole camera. Camera space: x right, y down, z forward (view direction).
/// `rotation` maps camera space to world space; depth is measured along the
/// camera z axis.
struct Camera {
    Vec3 position{};
    Mat3 rotation{};  // camera -> world
    float fx = 0.f, fy = 0.f, cx = 0.f, cy = 0.f;
    int width = 0, height = 0;

    /// Camera at `position` looking at `target`, with vertical field of view
    /// in degrees. `up` is the world up hint.
    static Camera look_at(const Vec3& position, const Vec3& target, const Vec3& up,
                          float vfov_deg, int width, int height);

    /// World-space ray direction through pixel center (u,v); its camera-space
    /// z component is 1, so the ray parameter equals camera depth.
    Vec3 pixel_ray(int u, int v) const {
        const Vec3 d{(static_cast<float>(u) + 0.5f - cx) / fx,
                     (static_cast<float>(v) + 0.5f - cy) / fy, 1.f};
        return rotation * d;
    }

    /// Back-project pixel (u,v) at camera depth z into camera space.
    Vec3 backproject(int u, int v, float z) const {
        return {(static_cast<float>(u) + 0.5f - cx) / fx * z,
                (static_cast<float>(v) + 0.5f - cy) / fy * z, z};
    }

    Vec3 camera_to_world(const Vec3& pc) const { return rotation * pc + position; }

    /// Project a world point; returns (u, v, depth) in continuous pixel
    /// coordinates (pixel centers at half-integers).
    Vec3 project(const Vec3& pw) const {
        const Vec3 pc = rotation.transposed() * (pw - position);
        return {pc.x / pc.z * fx + cx - 0.5f, pc.y / pc.z * fy + cy - 0.5f, pc.z};
    }
};

/// W x H depth image in meters along the camera z axis; 0 marks "no hit".
struct DepthMap {
    Camera camera;
    std::vector<float> depths;  // row-major, width * height

    float at(int u, int v) const { return depths[static_cast<size_t>(v) * camera.width + u]; }
    float& at(int u, int v) { return depths[static_cast<size_t>(v) * camera.width + u]; }
    bool valid(int u, int v) const { return at(u, v) > 0.f; }
};

}  // namespace npr
