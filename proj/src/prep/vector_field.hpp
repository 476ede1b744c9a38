#pragma once

#include <memory>
#include <optional>

#include "geom/cloud.hpp"
#include "geom/kdtree.hpp"

namespace npr {

struct VectorFieldOptions {
    int k = 20;
    double cluster_angle_threshold = 60.0 * 3.14159265358979323846 / 180.0;  // radians
    double gaussian_bandwidth = 0.0;  // scene units; 0 = adaptive (mean neighbor distance)
    double near_surface_radius = 0.05;
    bool compare_to_seed_only = false;  // cluster membership vs seed normal instead of running mean
};

/// Smoothed inward-normal field around the oriented points. A query within
/// `near_surface_radius` of the cloud returns a unit vector; farther queries
/// return nullopt ("undefined"). Immutable after construction; queries are
/// safe concurrently.
class VectorFieldEstimator {
public:
    VectorFieldEstimator(const OrientedPointCloud& cloud, VectorFieldOptions options = {});

    /// Greedy neighbor clustering seeded at the closest point; returns the
    /// gaussian-weighted normal of the cluster nearest to x.
    std::optional<Vec3> query(const Vec3& x) const;

    const VectorFieldOptions& options() const { return options_; }
    const KdTree& tree() const { return tree_; }

private:
    KdTree tree_;
    std::vector<Vec3> normals_;
    VectorFieldOptions options_;
};

}  // namespace npr
