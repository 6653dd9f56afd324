#pragma once

#include <array>
#include <vector>

#include "nfd/errors.hpp"
#include "nfd/tensor.hpp"

namespace nfd {

/// One injection well in level-0 index coordinates.
struct WellSpec {
    i64 x = 0, y = 0;
    i64 perf_z0 = 0, perf_z1 = 1;  // half-open depth interval in level-0 z cells
    double rate_mt_per_yr = 1.0;
};

/// Geometry of one refinement level relative to its parent. Each local level
/// occupies a footprint x footprint box of parent cells (full depth), refined
/// by xy_ratio laterally and z_ratio vertically. `window` is the level-1
/// context window edge length in parent (level-0) cells.
struct LevelSpec {
    i64 xy_ratio = 2;
    i64 z_ratio = 1;
    i64 footprint = 8;
    i64 window = 8;
};

/// The nested-domain layout: a global grid plus a chain of local levels.
struct Geometry {
    std::array<i64, 3> global_grid{20, 20, 5};
    std::vector<LevelSpec> locals;  // levels 1..n

    i64 n_levels() const { return static_cast<i64>(locals.size()) + 1; }
    void validate() const;  // ConfigError naming the field
};

/// Axis-aligned index box.
struct Box {
    i64 x0 = 0, y0 = 0, z0 = 0;
    i64 nx = 0, ny = 0, nz = 0;

    bool contains(i64 x, i64 y, i64 z) const {
        return x >= x0 && x < x0 + nx && y >= y0 && y < y0 + ny && z >= z0 && z < z0 + nz;
    }
    bool intersects(const Box& o) const {
        return x0 < o.x0 + o.nx && o.x0 < x0 + nx && y0 < o.y0 + o.ny && o.y0 < y0 + ny &&
               z0 < o.z0 + o.nz && o.z0 < z0 + nz;
    }
};

/// Concrete per-well placement of every local level. box_in_parent[l-1] is
/// the level-l box in parent-level cells (clamped so a full-extent box stays
/// inside the parent); grid[l-1] is the level's own cell extents.
struct WellChain {
    std::vector<Box> box_in_parent;
    std::vector<std::array<i64, 3>> grid;
};

WellChain well_chain(const Geometry& g, const WellSpec& w);

/// Level-1 context window around a well, in level-0 coordinates (clamped).
Box window_box(const Geometry& g, const WellSpec& w);

/// Placement of a level on a uniformly fine reference grid: origin and cell
/// size in fine cells. Index 0 is level 0. Throws ContractError when the
/// fine grid is not an integer refinement of some level.
struct FinePlacement {
    std::array<i64, 3> origin{0, 0, 0};
    std::array<i64, 3> cell{1, 1, 1};
    std::array<i64, 3> grid{0, 0, 0};
};

std::vector<FinePlacement> fine_placements(const Geometry& g, const WellChain& chain,
                                           i64 fine_xy, i64 fine_z);

/// Piecewise-constant injection of a parent-level field onto a child grid
/// covering `box` (in parent cells). Works on trailing-3-spatial tensors with
/// arbitrary leading axes.
Tensor inject_to_child(const Tensor& parent, const Box& box, i64 xy_ratio, i64 z_ratio);

/// Cell-average restriction of a fine-grid field onto one placement's grid.
Tensor restrict_from_fine(const Tensor& fine, const FinePlacement& p);

}  // namespace nfd
