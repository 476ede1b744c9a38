#pragma once

#include "geom/cloud.hpp"
#include "geom/kdtree.hpp"

namespace npr {

struct NormalEstimationResult {
    OrientedPointCloud cloud;   // points with degenerate neighborhoods removed
    size_t dropped = 0;         // count of points whose plane fit was degenerate
};

/// Plane-fit normals: for each point, the smallest-eigenvalue eigenvector of
/// the covariance of its k+1 nearest neighbors (the point itself included),
/// oriented to face the point's sensor and then flipped inward. Overwrites
/// existing normals. Requires |cloud| >= k+1 and a sensor id per point.
NormalEstimationResult estimate_normals_pca(const OrientedPointCloud& cloud,
                                            const SensorSet& sensors, int k, int threads = 0);

}  // namespace npr
