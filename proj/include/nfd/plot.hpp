#pragma once

#include <string>

#include "nfd/tensor.hpp"

namespace nfd {

/// x-y plane of a [X, Y, Z] or [T, X, Y, Z] field (time index t) at layer z.
Tensor slice_xy(const Tensor& field, i64 t, i64 z);

/// x-z plane at row y.
Tensor slice_xz(const Tensor& field, i64 t, i64 y);

/// Binary PPM (P6) heatmap, one pixel per cell; values mapped onto a fixed
/// blue-white-red ramp over [lo, hi].
void write_ppm(const std::string& path, const Tensor& slice2d, double lo, double hi);

/// RFC-4180-style CSV of a 2-D slice (rows = first axis), '.' decimal point,
/// full round-trip precision.
void write_slice_csv(const std::string& path, const Tensor& slice2d);

}  // namespace nfd
