#pragma once

#include <cstdint>
#include <vector>

#include "geom/vec3.hpp"

namespace npr {

struct KnnResult {
    uint32_t index;
    double distance;
};

/// Immutable balanced kd-tree over a point list. Queries are exact: they
/// return the same set as a brute-force scan, with ties on distance broken
/// by lower point index. Concurrent queries are safe after construction.
class KdTree {
public:
    /// Builds over a copy of `points`. Throws EmptyInput on an empty list and
    /// InvalidArgument on non-finite coordinates. Construction is
    /// deterministic for a fixed input order.
    explicit KdTree(std::vector<Vec3> points, int leaf_size = 16);

    size_t size() const { return points_.size(); }
    const std::vector<Vec3>& points() const { return points_; }

    /// k nearest neighbors sorted ascending by (distance, index). Returns
    /// min(k, n) results; k must be >= 1.
    std::vector<KnnResult> knn(const Vec3& query, size_t k) const;

    /// Nearest neighbor shortcut.
    KnnResult nearest(const Vec3& query) const;

    /// Squared distance from query to its nearest stored point.
    double nearest_dist2(const Vec3& query) const;

private:
    struct Node {
        Aabb box;
        uint32_t begin = 0, end = 0;   // range in index_
        int32_t left = -1, right = -1; // children; leaf when left < 0
        int axis = 0;
        float split = 0.f;
    };

    int build_node(uint32_t begin, uint32_t end, int leaf_size);

    struct Candidate {
        double d2;
        uint32_t index;
        bool operator<(const Candidate& o) const {  // max-heap: worst on top
            if (d2 != o.d2) return d2 < o.d2;
            return index < o.index;
        }
    };

    void search(int node, const Vec3& query, size_t k, std::vector<Candidate>& heap) const;

    std::vector<Vec3> points_;
    std::vector<uint32_t> index_;  // permutation of point indices, partitioned per node
    std::vector<Node> nodes_;
    int root_ = -1;
};

}  // namespace npr
