#include "geom/kdtree.hpp"

#include <algorithm>

#include "util/error.hpp"

namespace npr {

KdTree::KdTree(std::vector<Vec3> points, int leaf_size) : points_(std::move(points)) {
    if (points_.empty()) raise(ErrorCode::EmptyInput, "kdtree: empty point list");
    for (const Vec3& p : points_)
        if (!p.is_finite()) raise(ErrorCode::InvalidArgument, "kdtree: non-finite point");
    if (leaf_size < 1) leaf_size = 1;
    index_.resize(points_.size());
    for (uint32_t i = 0; i < index_.size(); ++i) index_[i] = i;
    nodes_.reserve(2 * points_.size() / static_cast<size_t>(leaf_size) + 2);
    root_ = build_node(0, static_cast<uint32_t>(points_.size()), leaf_size);
}

int KdTree::build_node(uint32_t begin, uint32_t end, int leaf_size) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    Aabb box;
    for (uint32_t i = begin; i < end; ++i) box.expand(points_[index_[i]]);
    nodes_[id].box = box;
    nodes_[id].begin = begin;
    nodes_[id].end = end;

    if (end - begin <= static_cast<uint32_t>(leaf_size)) return id;

    const int axis = box.longest_axis();
    const uint32_t mid = begin + (end - begin) / 2;
    // nth_element with (coordinate, index) ordering keeps the partition
    // deterministic even with duplicate coordinates.
    std::nth_element(index_.begin() + begin, index_.begin() + mid, index_.begin() + end,
                     [&](uint32_t a, uint32_t b) {
                         const float ca = points_[a][axis], cb = points_[b][axis];
                         if (ca != cb) return ca < cb;
                         return a < b;
                     });
    nodes_[id].axis = axis;
    nodes_[id].split = points_[index_[mid]][axis];

    const int l = build_node(begin, mid, leaf_size);
    const int r = build_node(mid, end, leaf_size);
    nodes_[id].left = l;
    nodes_[id].right = r;
    return id;
}

void KdTree::search(int node_id, const Vec3& query, size_t k,
                    std::vector<Candidate>& heap) const {
    const Node& node = nodes_[node_id];
    if (heap.size() == k && node.box.dist2_to(query) > heap.front().d2) return;

    if (node.left < 0) {
        for (uint32_t i = node.begin; i < node.end; ++i) {
            const uint32_t idx = index_[i];
            const Candidate c{dist2(query, points_[idx]), idx};
            if (heap.size() < k) {
                heap.push_back(c);
                std::push_heap(heap.begin(), heap.end());
            } else if (c < heap.front()) {
                std::pop_heap(heap.begin(), heap.end());
                heap.back() = c;
                std::push_heap(heap.begin(), heap.end());
            }
        }
        return;
    }

    const bool left_first = query[nodes_[node_id].axis] <= node.split;
    search(left_first ? node.left : node.right, query, k, heap);
    search(left_first ? node.right : node.left, query, k, heap);
}

std::vector<KnnResult> KdTree::knn(const Vec3& query, size_t k) const {
    if (k == 0) raise(ErrorCode::InvalidArgument, "knn: k must be >= 1");
    k = std::min(k, points_.size());
    std::vector<Candidate> heap;
    heap.reserve(k + 1);
    search(root_, query, k, heap);
    std::sort_heap(heap.begin(), heap.end());
    std::vector<KnnResult> out;
    out.reserve(heap.size());
    for (const Candidate& c : heap) out.push_back({c.index, std::sqrt(c.d2)});
    return out;
}

KnnResult KdTree::nearest(const Vec3& query) const { return knn(query, 1)[0]; }

double KdTree::nearest_dist2(const Vec3& query) const {
    std::vector<Candidate> heap;
    heap.reserve(2);
    search(root_, query, 1, heap);
    return heap.front().d2;
}

}  // namespace npr
