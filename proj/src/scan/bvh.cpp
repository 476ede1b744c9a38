#include "scan/bvh.hpp"

#include <algorithm>

#include "util/error.hpp"

namespace npr {

std::optional<double> ray_triangle(const Vec3d& origin, const Vec3d& dir, const Vec3d& a,
                                   const Vec3d& b, const Vec3d& c) {
    const Vec3d ab = b - a;
    const Vec3d ac = c - a;
    const Vec3d pvec = cross(dir, ac);
    const double det = dot(ab, pvec);
    if (std::abs(det) < 1e-14) return std::nullopt;  // parallel
    const double inv_det = 1.0 / det;
    const Vec3d tvec = origin - a;
    const double u = dot(tvec, pvec) * inv_det;
    if (u < 0.0 || u > 1.0) return std::nullopt;
    const Vec3d qvec = cross(tvec, ab);
    const double v = dot(dir, qvec) * inv_det;
    if (v < 0.0 || u + v > 1.0) return std::nullopt;
    return dot(ac, qvec) * inv_det;
}

Bvh::Bvh(const TriangleMesh& mesh, int leaf_size) : mesh_(&mesh) {
    if (mesh.triangles.empty()) raise(ErrorCode::EmptyMesh, "bvh: mesh has no triangles");
    order_.resize(mesh.triangles.size());
    for (uint32_t i = 0; i < order_.size(); ++i) order_[i] = i;
    std::vector<Vec3> centroids(mesh.triangles.size());
    for (size_t i = 0; i < mesh.triangles.size(); ++i) {
        const auto& t = mesh.triangles[i];
        centroids[i] =
            (mesh.vertices[t[0]] + mesh.vertices[t[1]] + mesh.vertices[t[2]]) / 3.f;
    }
    nodes_.reserve(2 * mesh.triangles.size() / static_cast<size_t>(leaf_size) + 2);
    root_ = build(0, static_cast<uint32_t>(order_.size()), std::max(1, leaf_size), centroids);
}

int Bvh::build(uint32_t begin, uint32_t end, int leaf_size, std::vector<Vec3>& centroids) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    Aabb box;
    for (uint32_t i = begin; i < end; ++i) {
        const auto& t = mesh_->triangles[order_[i]];
        box.expand(mesh_->vertices[t[0]]);
        box.expand(mesh_->vertices[t[1]]);
        box.expand(mesh_->vertices[t[2]]);
    }
    nodes_[id].box = box;
    nodes_[id].begin = begin;
    nodes_[id].end = end;
    if (end - begin <= static_cast<uint32_t>(leaf_size)) return id;

    Aabb cbox;
    for (uint32_t i = begin; i < end; ++i) cbox.expand(centroids[order_[i]]);
    const int axis = cbox.longest_axis();
    const uint32_t mid = begin + (end - begin) / 2;
    std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                     [&](uint32_t a, uint32_t b) {
                         const float ca = centroids[a][axis], cb = centroids[b][axis];
                         if (ca != cb) return ca < cb;
                         return a < b;
                     });
    const int l = build(begin, mid, leaf_size, centroids);
    const int r = build(mid, end, leaf_size, centroids);
    nodes_[id].left = l;
    nodes_[id].right = r;
    return id;
}

bool Bvh::box_hit(const Aabb& box, const Vec3d& origin, const Vec3d& inv_dir, double t_max) {
    double t0 = 0.0, t1 = t_max;
    for (int a = 0; a < 3; ++a) {
        const double lo = (static_cast<double>(box.min[a]) - origin[a]) * inv_dir[a];
        const double hi = (static_cast<double>(box.max[a]) - origin[a]) * inv_dir[a];
        t0 = std::max(t0, std::min(lo, hi));
        t1 = std::min(t1, std::max(lo, hi));
        if (t0 > t1) return false;
    }
    return true;
}

std::optional<RayHit> Bvh::intersect(const Vec3d& origin, const Vec3d& dir, double t_min,
                                     double t_max) const {
    const Vec3d inv_dir{1.0 / dir.x, 1.0 / dir.y, 1.0 / dir.z};
    std::optional<RayHit> best;
    double best_t = t_max;

    int stack[64];
    int top = 0;
    stack[top++] = root_;
    while (top > 0) {
        const Node& node = nodes_[stack[--top]];
        if (!box_hit(node.box, origin, inv_dir, best_t)) continue;
        if (node.left < 0) {
            for (uint32_t i = node.begin; i < node.end; ++i) {
                const uint32_t tri = order_[i];
                const auto& t = mesh_->triangles[tri];
                const auto hit = ray_triangle(origin, dir, Vec3d(mesh_->vertices[t[0]]),
                                              Vec3d(mesh_->vertices[t[1]]),
                                              Vec3d(mesh_->vertices[t[2]]));
                if (!hit) continue;
                const double tv = *hit;
                if (tv <= t_min || tv > best_t) continue;
                if (!best || tv < best->t || (tv == best->t && tri < best->triangle)) {
                    best = RayHit{tv, tri};
                    best_t = tv;
                }
            }
        } else {
            stack[top++] = node.right;
            stack[top++] = node.left;
        }
    }
    return best;
}

}  // namespace npr
