#include "scan/scanner.hpp"

#include <cmath>

#include "util/error.hpp"
#include "util/parallel.hpp"
#include "util/rng.hpp"

namespace npr {

static std::vector<double> grid_coords(double lo, double hi, double spacing) {
    const double extent = hi - lo;
    if (extent < spacing) return {0.5 * (lo + hi)};
    std::vector<double> coords;
    const int n = static_cast<int>(std::floor(extent / spacing + 1e-9));
    for (int i = 0; i <= n; ++i) coords.push_back(lo + i * spacing);
    return coords;
}

std::vector<Camera> sample_cameras(const Aabb& bounds, const CameraGridOptions& opt) {
    if (bounds.empty() || (bounds.extent().x <= 0.f && bounds.extent().z <= 0.f))
        raise(ErrorCode::EmptyScene, "sample_cameras: degenerate scene bounds");
    if (opt.spacing <= 0.0) raise(ErrorCode::InvalidArgument, "sample_cameras: spacing <= 0");
    if (opt.yaw_count < 1) raise(ErrorCode::InvalidArgument, "sample_cameras: yaw_count < 1");

    const auto xs = grid_coords(bounds.min.x, bounds.max.x, opt.spacing);
    const auto zs = grid_coords(bounds.min.z, bounds.max.z, opt.spacing);
    const double y = bounds.min.y + opt.height;

    std::vector<double> pitches = {0.0};
    for (double t : opt.tilts_deg) pitches.push_back(t);

    const double deg = 3.14159265358979323846 / 180.0;
    std::vector<Camera> cameras;
    cameras.reserve(xs.size() * zs.size() * pitches.size() * static_cast<size_t>(opt.yaw_count));
    for (double x : xs) {
        for (double z : zs) {
            const Vec3 pos{static_cast<float>(x), static_cast<float>(y), static_cast<float>(z)};
            for (double pitch_deg : pitches) {
                const double pitch = pitch_deg * deg;
                for (int yi = 0; yi < opt.yaw_count; ++yi) {
                    const double yaw = 2.0 * 3.14159265358979323846 * yi / opt.yaw_count;
                    const Vec3 dir{static_cast<float>(std::cos(pitch) * std::cos(yaw)),
                                   static_cast<float>(std::sin(pitch)),
                                   static_cast<float>(std::cos(pitch) * std::sin(yaw))};
                    cameras.push_back(Camera::look_at(pos, pos + dir, Vec3{0.f, 1.f, 0.f},
                                                      static_cast<float>(opt.vfov_deg),
                                                      opt.width, opt.height_px));
                }
            }
        }
    }
    return cameras;
}

DepthMap render_depth(const Bvh& bvh, const Camera& camera, int threads) {
    DepthMap depth;
    depth.camera = camera;
    depth.depths.assign(static_cast<size_t>(camera.width) * camera.height, 0.f);

    parallel_blocks(static_cast<size_t>(camera.height), 8, threads,
                    [&](size_t, size_t row_begin, size_t row_end) {
                        for (size_t v = row_begin; v < row_end; ++v) {
                            for (int u = 0; u < camera.width; ++u) {
                                const Vec3 dir = camera.pixel_ray(u, static_cast<int>(v));
                                const auto hit =
                                    bvh.intersect(Vec3d(camera.position), Vec3d(dir));
                                if (hit)
                                    depth.at(u, static_cast<int>(v)) =
                                        static_cast<float>(hit->t);
                            }
                        }
                    });
    return depth;
}

DepthMap render_depth(const TriangleMesh& mesh, const Camera& camera, int threads) {
    if (mesh.empty()) raise(ErrorCode::EmptyMesh, "render_depth: empty mesh");
    const Bvh bvh(mesh);
    return render_depth(bvh, camera, threads);
}

void add_depth_noise(DepthMap& depth, double sigma, uint64_t seed) {
    if (sigma <= 0.0) return;
    for (size_t i = 0; i < depth.depths.size(); ++i) {
        if (depth.depths[i] <= 0.f) continue;
        Rng rng(hash_combine(seed, static_cast<uint64_t>(i)));
        const double noisy = depth.depths[i] + sigma * rng.gaussian();
        depth.depths[i] = noisy > 0.0 ? static_cast<float>(noisy) : 0.f;
    }
}

OrientedPointCloud depth_to_oriented_points(const DepthMap& depth, int32_t sensor_id) {
    const Camera& cam = depth.camera;
    OrientedPointCloud cloud;
    for (int v = 1; v + 1 < cam.height; ++v) {
        for (int u = 1; u + 1 < cam.width; ++u) {
            if (!depth.valid(u, v) || !depth.valid(u - 1, v) || !depth.valid(u + 1, v) ||
                !depth.valid(u, v - 1) || !depth.valid(u, v + 1))
                continue;
            const Vec3 pc = cam.backproject(u, v, depth.at(u, v));
            const Vec3 du = cam.backproject(u + 1, v, depth.at(u + 1, v)) -
                            cam.backproject(u - 1, v, depth.at(u - 1, v));
            const Vec3 dv = cam.backproject(u, v + 1, depth.at(u, v + 1)) -
                            cam.backproject(u, v - 1, depth.at(u, v - 1));
            Vec3 n = cross(du, dv);
            const float len = norm(n);
            if (len < 1e-12f) continue;
            n = n / len;
            // Inward convention: away from the sensor (camera origin).
            if (dot(n, pc) < 0.f) n = -n;
            cloud.points.push_back(cam.camera_to_world(pc));
            cloud.normals.push_back(cam.rotation * n);
            cloud.sensor_ids.push_back(sensor_id);
        }
    }
    cloud.recompute_bounds();
    return cloud;
}

OrientedPointCloud subsample(const OrientedPointCloud& cloud, size_t n, uint64_t seed) {
    if (n == 0) raise(ErrorCode::InvalidArgument, "subsample: n must be >= 1");
    if (cloud.size() <= n) return cloud;
    Rng rng(hash_combine(seed, 0x5b5a3713ull));
    const auto keep = rng.sample_without_replacement(cloud.size(), n);
    OrientedPointCloud out;
    out.points.reserve(n);
    if (cloud.has_normals()) out.normals.reserve(n);
    if (cloud.has_sensor_ids()) out.sensor_ids.reserve(n);
    for (size_t idx : keep) {
        out.points.push_back(cloud.points[idx]);
        if (cloud.has_normals()) out.normals.push_back(cloud.normals[idx]);
        if (cloud.has_sensor_ids()) out.sensor_ids.push_back(cloud.sensor_ids[idx]);
    }
    out.recompute_bounds();
    return out;
}

ScanResult scan_mesh_with_cameras(const TriangleMesh& mesh, const std::vector<Camera>& cameras,
                                  size_t target_points, uint64_t seed, double noise_sigma,
                                  int threads) {
    if (mesh.empty()) raise(ErrorCode::EmptyMesh, "scan: empty mesh");
    if (cameras.empty()) raise(ErrorCode::EmptyScene, "scan: no cameras");
    const Bvh bvh(mesh);

    ScanResult result;
    for (size_t c = 0; c < cameras.size(); ++c) {
        DepthMap depth = render_depth(bvh, cameras[c], threads);
        if (noise_sigma > 0.0)
            add_depth_noise(depth, noise_sigma, hash_combine(seed, 0xd3b7ull, c));
        OrientedPointCloud part =
            depth_to_oriented_points(depth, static_cast<int32_t>(c));
        result.cloud.points.insert(result.cloud.points.end(), part.points.begin(),
                                   part.points.end());
        result.cloud.normals.insert(result.cloud.normals.end(), part.normals.begin(),
                                    part.normals.end());
        result.cloud.sensor_ids.insert(result.cloud.sensor_ids.end(), part.sensor_ids.begin(),
                                       part.sensor_ids.end());
        result.sensors.positions.push_back(cameras[c].position);
    }
    result.raw_points = result.cloud.size();
    result.cloud.recompute_bounds();
    if (target_points > 0) result.cloud = subsample(result.cloud, target_points, seed);
    return result;
}

ScanResult scan_mesh(const TriangleMesh& mesh, const ScanOptions& options) {
    const auto cameras = sample_cameras(mesh.bounds(), options.cameras);
    return scan_mesh_with_cameras(mesh, cameras, options.target_points, options.seed,
                                  options.depth_noise_sigma, options.threads);
}

}  // namespace npr
