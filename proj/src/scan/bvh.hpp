#pragma once

#include <optional>
#include <vector>

#include "geom/mesh.hpp"

namespace npr {

struct RayHit {
    double t = 0.0;          // ray parameter (units of the direction vector)
    uint32_t triangle = 0;
};

/// Bounding-volume hierarchy over mesh triangles for nearest-hit ray queries.
/// Immutable after construction; concurrent queries are safe. Equal-t hits
/// resolve to the lower triangle index so results do not depend on traversal
/// order.
class Bvh {
public:
    explicit Bvh(const TriangleMesh& mesh, int leaf_size = 4);

    /// Nearest intersection with t in (t_min, t_max); intersection math in
    /// double precision.
    std::optional<RayHit> intersect(const Vec3d& origin, const Vec3d& dir,
                                    double t_min = 1e-9,
                                    double t_max = std::numeric_limits<double>::infinity()) const;

    const TriangleMesh& mesh() const { return *mesh_; }

private:
    struct Node {
        Aabb box;
        uint32_t begin = 0, end = 0;
        int32_t left = -1, right = -1;
    };

    int build(uint32_t begin, uint32_t end, int leaf_size, std::vector<Vec3>& centroids);
    static bool box_hit(const Aabb& box, const Vec3d& origin, const Vec3d& inv_dir, double t_max);

    const TriangleMesh* mesh_;
    std::vector<uint32_t> order_;
    std::vector<Node> nodes_;
    int root_ = -1;
};

/// Möller-Trumbore in double precision; returns the ray parameter or nothing.
std::optional<double> ray_triangle(const Vec3d& origin, const Vec3d& dir, const Vec3d& a,
                                   const Vec3d& b, const Vec3d& c);

}  // namespace npr
