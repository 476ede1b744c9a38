#pragma once

#include <cstdint>
#include <vector>

#include "geom/cloud.hpp"
#include "geom/mesh.hpp"
#include "scan/bvh.hpp"
#include "scan/camera.hpp"

namespace npr {

struct CameraGridOptions {
    double spacing = 1.5;                  // meters between grid positions
    std::vector<double> tilts_deg = {30.0, -30.0};
    int yaw_count = 4;                     // headings per grid position
    double height = 1.5;                   // camera height above the floor (bounds.min.y)
    double vfov_deg = 60.0;
    int width = 320;
    int height_px = 240;
};

/// Cameras on a horizontal grid inside `bounds` (y up): one level camera plus
/// one per tilt angle, each at `yaw_count` headings. Throws EmptyScene on
/// degenerate bounds.
std::vector<Camera> sample_cameras(const Aabb& bounds, const CameraGridOptions& opt);

/// Per-pixel nearest ray-triangle intersection depth (camera z); 0 where no
/// triangle is hit. Byte-identical for any thread count.
DepthMap render_depth(const Bvh& bvh, const Camera& camera, int threads = 0);
DepthMap render_depth(const TriangleMesh& mesh, const Camera& camera, int threads = 0);

/// Optional sensor noise: adds sigma-scaled gaussian depth error to valid
/// pixels, deterministic per (seed, pixel).
void add_depth_noise(DepthMap& depth, double sigma, uint64_t seed);

/// One point per pixel whose four neighbors are valid, back-projected to
/// world space. Normals come from central differences on the depth grid,
/// signed inward (dot(n, p - sensor) > 0). All points carry `sensor_id`.
OrientedPointCloud depth_to_oriented_points(const DepthMap& depth, int32_t sensor_id);

/// Uniform random subset without replacement (original order kept);
/// identity when the cloud has at most n points.
OrientedPointCloud subsample(const OrientedPointCloud& cloud, size_t n, uint64_t seed);

struct ScanOptions {
    CameraGridOptions cameras;
    size_t target_points = 100'000;
    uint64_t seed = 0;
    double depth_noise_sigma = 0.0;
    int threads = 0;
};

struct ScanResult {
    OrientedPointCloud cloud;
    SensorSet sensors;
    size_t raw_points = 0;  // before subsampling
};

/// Full virtual scan: sample cameras over the mesh bounds, render, back-
/// project, merge, subsample.
ScanResult scan_mesh(const TriangleMesh& mesh, const ScanOptions& options);

/// Scan from an explicit camera list (used for object-centric captures).
ScanResult scan_mesh_with_cameras(const TriangleMesh& mesh, const std::vector<Camera>& cameras,
                                  size_t target_points, uint64_t seed, double noise_sigma = 0.0,
                                  int threads = 0);

}  // namespace npr
