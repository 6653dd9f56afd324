#pragma once

#include <span>

#include "nfd/tensor.hpp"

namespace nfd {

/// Unnormalized forward DFT along the last three axes. Leading axes are
/// batch/channel. Throws ShapeError for rank < 3.
ComplexTensor fft3(const Tensor& x);

/// Inverse DFT along the last three axes with 1/(N1*N2*N3) normalization;
/// returns the real part. ifft3(fft3(x)) == x.
Tensor ifft3(const ComplexTensor& X);

/// In-place transform of `axes` of a split-complex buffer with the given
/// shape. Unnormalized in both directions; callers scale inverse transforms.
void fft_axes_raw(double* re, double* im, std::span<const i64> shape,
                  std::span<const int> axes, bool inverse);

/// Zero-pads each of the last three axes by p cells on each side.
Tensor pad3(const Tensor& x, i64 p);

/// Removes p cells from each side of the last three axes; inverse of pad3.
/// Throws ShapeError when an extent is <= 2p.
Tensor crop3(const Tensor& x, i64 p);

/// Analytic cost model: complex MACs * 8 flops for transforming `axes` of a
/// tensor with the given extents (mixed-radix cost N * sum of prime factors
/// per axis). Used for the 3D-vs-4D comparison in bench.
double fft_flops_estimate(std::span<const i64> shape, std::span<const int> axes);

}  // namespace nfd
