#pragma once

#include <cstddef>
#include <vector>

#include "geom/vec3.hpp"
#include "util/error.hpp"

namespace npr {

/// Dense 3D grid with a linear index->world map: world(i) = origin + i * spacing,
/// where `origin` is the world position of index (0,0,0). Used both for field
/// lattices (nodes on the domain boundary) and occupancy grids (voxel centers).
template <typename T>
class VoxelGrid {
public:
    VoxelGrid() = default;
    VoxelGrid(int nx, int ny, int nz, Vec3d origin, double spacing, T fill = T{})
        : nx_(nx), ny_(ny), nz_(nz), origin_(origin), spacing_(spacing),
          data_(static_cast<size_t>(nx) * ny * nz, fill) {
        if (nx < 1 || ny < 1 || nz < 1)
            raise(ErrorCode::InvalidArgument, "voxel grid: resolution must be >= 1 per axis");
        if (spacing <= 0.0) raise(ErrorCode::InvalidArgument, "voxel grid: spacing must be > 0");
    }

    /// Grid of `n` samples per axis whose nodes span [lo, hi] inclusive.
    static VoxelGrid lattice(int n, double lo, double hi, T fill = T{}) {
        if (n < 2) raise(ErrorCode::InvalidArgument, "voxel grid: lattice needs >= 2 samples");
        const double spacing = (hi - lo) / (n - 1);
        return VoxelGrid(n, n, n, Vec3d{lo, lo, lo}, spacing, fill);
    }

    /// Grid of `n` cells per axis covering [lo, hi]; indices address cell centers.
    static VoxelGrid cells(int n, double lo, double hi, T fill = T{}) {
        if (n < 1) raise(ErrorCode::InvalidArgument, "voxel grid: needs >= 1 cell");
        const double spacing = (hi - lo) / n;
        const double half = 0.5 * spacing;
        return VoxelGrid(n, n, n, Vec3d{lo + half, lo + half, lo + half}, spacing, fill);
    }

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int nz() const { return nz_; }
    size_t count() const { return data_.size(); }
    double spacing() const { return spacing_; }
    const Vec3d& origin() const { return origin_; }

    size_t linear(int i, int j, int k) const {
        return (static_cast<size_t>(k) * ny_ + j) * nx_ + i;
    }

    T& at(int i, int j, int k) { return data_[linear(i, j, k)]; }
    const T& at(int i, int j, int k) const { return data_[linear(i, j, k)]; }

    std::vector<T>& data() { return data_; }
    const std::vector<T>& data() const { return data_; }

    Vec3d index_to_world(double i, double j, double k) const {
        return {origin_.x + i * spacing_, origin_.y + j * spacing_, origin_.z + k * spacing_};
    }

    Vec3d world_to_index(const Vec3d& p) const {
        return {(p.x - origin_.x) / spacing_, (p.y - origin_.y) / spacing_,
                (p.z - origin_.z) / spacing_};
    }

    bool in_bounds(int i, int j, int k) const {
        return i >= 0 && i < nx_ && j >= 0 && j < ny_ && k >= 0 && k < nz_;
    }

private:
    int nx_ = 0, ny_ = 0, nz_ = 0;
    Vec3d origin_{};
    double spacing_ = 1.0;
    std::vector<T> data_;
};

}  // namespace npr
