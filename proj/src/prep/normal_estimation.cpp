#include "prep/normal_estimation.hpp"

#include <Eigen/Dense>

#include "util/parallel.hpp"

namespace npr {

NormalEstimationResult estimate_normals_pca(const OrientedPointCloud& cloud,
                                            const SensorSet& sensors, int k, int threads) {
    if (k < 1) raise(ErrorCode::InvalidArgument, "estimate_normals: k must be >= 1");
    if (cloud.size() < static_cast<size_t>(k) + 1)
        raise(ErrorCode::InvalidArgument, "estimate_normals: cloud smaller than k+1");
    if (!cloud.has_sensor_ids())
        raise(ErrorCode::InvalidArgument, "estimate_normals: cloud lacks sensor ids");
    if (sensors.empty())
        raise(ErrorCode::InvalidArgument, "estimate_normals: empty sensor set");
    for (int32_t sid : cloud.sensor_ids)
        if (sid < 0 || static_cast<size_t>(sid) >= sensors.size())
            raise(ErrorCode::InvalidArgument, "estimate_normals: sensor id out of range");

    const KdTree tree(cloud.points);
    const size_t n = cloud.size();
    std::vector<Vec3> normals(n);
    std::vector<uint8_t> valid(n, 0);

    parallel_blocks(n, 1024, threads, [&](size_t, size_t begin, size_t end) {
        std::vector<KnnResult> nn;
        for (size_t i = begin; i < end; ++i) {
            nn = tree.knn(cloud.points[i], static_cast<size_t>(k) + 1);

            Eigen::Vector3d mean = Eigen::Vector3d::Zero();
            for (const auto& r : nn) {
                const Vec3& p = cloud.points[r.index];
                mean += Eigen::Vector3d(p.x, p.y, p.z);
            }
            mean /= static_cast<double>(nn.size());

            Eigen::Matrix3d cov = Eigen::Matrix3d::Zero();
            for (const auto& r : nn) {
                const Vec3& p = cloud.points[r.index];
                const Eigen::Vector3d d = Eigen::Vector3d(p.x, p.y, p.z) - mean;
                cov += d * d.transpose();
            }

            Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(cov);
            const Eigen::Vector3d evals = solver.eigenvalues();  // ascending
            // Collinear neighborhood: two vanishing eigenvalues, no plane.
            const double scale = std::max(evals(2), 1e-300);
            if (evals(1) / scale < 1e-9) continue;

            const Eigen::Vector3d ev = solver.eigenvectors().col(0);
            Vec3 normal{static_cast<float>(ev(0)), static_cast<float>(ev(1)),
                        static_cast<float>(ev(2))};
            normal = normalized(normal);

            const Vec3& s = sensors.positions[static_cast<size_t>(cloud.sensor_ids[i])];
            // Face the sensor, then flip inward.
            if (dot(normal, s - cloud.points[i]) < 0.f) normal = -normal;
            normals[i] = -normal;
            valid[i] = 1;
        }
    });

    NormalEstimationResult result;
    result.cloud.points.reserve(n);
    result.cloud.normals.reserve(n);
    result.cloud.sensor_ids.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        if (!valid[i]) {
            ++result.dropped;
            continue;
        }
        result.cloud.points.push_back(cloud.points[i]);
        result.cloud.normals.push_back(normals[i]);
        result.cloud.sensor_ids.push_back(cloud.sensor_ids[i]);
    }
    result.cloud.recompute_bounds();
    return result;
}

}  // namespace npr
