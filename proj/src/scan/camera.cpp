#include "scan/camera.hpp"

#include <cmath>

#include "util/error.hpp"

namespace npr {

Camera Camera::look_at(const Vec3& position, const Vec3& target, const Vec3& up, float vfov_deg,
                       int width, int height) {
    if (width < 2 || height < 2)
        raise(ErrorCode::InvalidArgument, "camera: image must be at least 2x2");
    Camera cam;
    cam.position = position;
    cam.width = width;
    cam.height = height;

    Vec3 forward = normalized(target - position);
    if (norm(forward) == 0.f)
        raise(ErrorCode::InvalidArgument, "camera: target equals position");
    Vec3 right = cross(forward, up);
    if (norm(right) < 1e-6f) {
        // view direction parallel to up; pick another hint
        right = cross(forward, Vec3{1.f, 0.f, 0.f});
        if (norm(right) < 1e-6f) right = cross(forward, Vec3{0.f, 0.f, 1.f});
    }
    right = normalized(right);
    const Vec3 down = normalized(cross(forward, right));
    cam.rotation = Mat3::from_columns(right, down, forward);

    const float vfov = vfov_deg * 3.14159265358979323846f / 180.f;
    cam.fy = 0.5f * static_cast<float>(height) / std::tan(0.5f * vfov);
    cam.fx = cam.fy;  // square pixels
    cam.cx = 0.5f * static_cast<float>(width);
    cam.cy = 0.5f * static_cast<float>(height);
    return cam;
}

}  // namespace npr
