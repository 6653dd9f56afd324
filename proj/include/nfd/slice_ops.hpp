#pragma once

#include <array>
#include <cmath>
#include <cstring>
#include <vector>

#include "nfd/fft.hpp"
#include "nfd/kernels.hpp"
#include "nfd/tensor.hpp"

// Shared per-time-slice compute routines. Both the plain evaluation path and
// the tape (training) path run these, slice by slice, so the two paths agree
// bitwise.
namespace nfd::sliceops {

/// out[co,s] = sum_ci x[ci,s] * W[ci,co] + b[co]
inline void lift(const double* x, i64 cin, i64 S, const double* W, i64 cout,
                 const double* b, double* out) {
    const auto& K = kernels::active();
    for (i64 co = 0; co < cout; ++co) {
        double* row = out + co * S;
        const double bv = b[co];
        for (i64 s = 0; s < S; ++s) row[s] = bv;
    }
    for (i64 ci = 0; ci < cin; ++ci) {
        const double* xr = x + ci * S;
        for (i64 co = 0; co < cout; ++co) {
            K.axpy(W[ci * cout + co], xr, out + co * S, static_cast<std::size_t>(S));
        }
    }
}

inline double gelu_value(double x) {
    return 0.5 * x * (1.0 + std::erf(x * 0.7071067811865475244));
}

inline double gelu_deriv(double x) {
    const double phi = 0.5 * (1.0 + std::erf(x * 0.7071067811865475244));
    const double pdf = std::exp(-0.5 * x * x) * 0.3989422804014326779;
    return phi + x * pdf;
}

inline void gelu(const double* x, double* out, i64 n) {
    for (i64 i = 0; i < n; ++i) out[i] = gelu_value(x[i]);
}

/// gx[i] += g[i] * gelu'(x[i])
inline void gelu_backward(const double* x, const double* g, double* gx, i64 n) {
    for (i64 i = 0; i < n; ++i) gx[i] += g[i] * gelu_deriv(x[i]);
}

struct SpectralDims {
    i64 channels;
    std::array<i64, 3> grid;   // transform extents
    std::array<i64, 3> modes;  // retained corner extents
    i64 spatial() const { return grid[0] * grid[1] * grid[2]; }
    i64 mode_count() const { return modes[0] * modes[1] * modes[2]; }
};

inline void check_modes(const SpectralDims& d) {
    for (int a = 0; a < 3; ++a) {
        if (d.modes[a] < 1 || d.modes[a] > d.grid[a] / 2 + 1)
            throw ShapeError("spectral modes exceed grid extents");
    }
}

/// Truncated spectral convolution of one [C, X, Y, Z] slice.
///
/// The retained set is the all-nonnegative low-frequency corner
/// k in [0,m1)x[0,m2)x[0,m3) plus its conjugate-mirror bins. R acts on the
/// corner; mirror bins receive the conjugate so the output stays real;
/// self-conjugate bins are projected onto their real part.
///
/// r layout: [m1, m2, m3, c_out, c_in], split re/im.
/// If zk_re/zk_im are non-null they receive the corner spectrum of z as
/// [C, m1*m2*m3] (needed by the backward pass).
inline void spectral_forward(const double* z, const SpectralDims& d, const double* r_re,
                             const double* r_im, double* y, double* zk_re = nullptr,
                             double* zk_im = nullptr) {
    check_modes(d);
    const i64 C = d.channels;
    const i64 S = d.spatial();
    const std::array<i64, 4> shape = {C, d.grid[0], d.grid[1], d.grid[2]};
    static constexpr int kAxes[3] = {1, 2, 3};

    std::vector<double> wre(static_cast<std::size_t>(C * S));
    std::vector<double> wim(static_cast<std::size_t>(C * S), 0.0);
    std::memcpy(wre.data(), z, static_cast<std::size_t>(C * S) * sizeof(double));
    fft_axes_raw(wre.data(), wim.data(), shape, kAxes, false);

    std::vector<double> yre(static_cast<std::size_t>(C * S), 0.0);
    std::vector<double> yim(static_cast<std::size_t>(C * S), 0.0);
    std::vector<double> zr(static_cast<std::size_t>(C)), zi(static_cast<std::size_t>(C));

    const i64 X = d.grid[0], Y = d.grid[1], Z = d.grid[2];
    for (i64 k1 = 0; k1 < d.modes[0]; ++k1)
        for (i64 k2 = 0; k2 < d.modes[1]; ++k2)
            for (i64 k3 = 0; k3 < d.modes[2]; ++k3) {
                const i64 kidx = (k1 * Y + k2) * Z + k3;
                const i64 m1 = (X - k1) % X, m2 = (Y - k2) % Y, m3 = (Z - k3) % Z;
                const i64 midx = (m1 * Y + m2) * Z + m3;
                const bool self = (midx == kidx);
                const i64 kslot = (k1 * d.modes[1] + k2) * d.modes[2] + k3;

                for (i64 ci = 0; ci < C; ++ci) {
                    zr[static_cast<std::size_t>(ci)] = wre[static_cast<std::size_t>(ci * S + kidx)];
                    zi[static_cast<std::size_t>(ci)] = wim[static_cast<std::size_t>(ci * S + kidx)];
                    if (zk_re != nullptr) {
                        zk_re[ci * d.mode_count() + kslot] = zr[static_cast<std::size_t>(ci)];
                        zk_im[ci * d.mode_count() + kslot] = zi[static_cast<std::size_t>(ci)];
                    }
                }
                for (i64 co = 0; co < C; ++co) {
                    double ar = 0.0, ai = 0.0;
                    const double* rr = r_re + (kslot * C + co) * C;
                    const double* ri = r_im + (kslot * C + co) * C;
                    for (i64 ci = 0; ci < C; ++ci) {
                        ar += rr[ci] * zr[static_cast<std::size_t>(ci)] -
                              ri[ci] * zi[static_cast<std::size_t>(ci)];
                        ai += rr[ci] * zi[static_cast<std::size_t>(ci)] +
                              ri[ci] * zr[static_cast<std::size_t>(ci)];
                    }
                    if (self) {
                        yre[static_cast<std::size_t>(co * S + kidx)] = ar;
                    } else {
                        yre[static_cast<std::size_t>(co * S + kidx)] = ar;
                        yim[static_cast<std::size_t>(co * S + kidx)] = ai;
                        yre[static_cast<std::size_t>(co * S + midx)] = ar;
                        yim[static_cast<std::size_t>(co * S + midx)] = -ai;
                    }
                }
            }

    fft_axes_raw(yre.data(), yim.data(), shape, kAxes, true);
    kernels::active().scale(1.0 / static_cast<double>(S), yre.data(),
                            static_cast<std::size_t>(C * S));
    std::memcpy(y, yre.data(), static_cast<std::size_t>(C * S) * sizeof(double));
}

/// Backward of spectral_forward for one slice.
///
/// The input-gradient is itself a spectral convolution of the cotangent with
/// the channel-transposed conjugate weights; the weight gradient uses the
/// saved corner spectrum of the input.
inline void spectral_backward(const double* gout, const SpectralDims& d, const double* r_re,
                              const double* r_im, const double* zk_re, const double* zk_im,
                              double* gz_accum, double* gr_re, double* gr_im) {
    check_modes(d);
    const i64 C = d.channels;
    const i64 S = d.spatial();
    const std::array<i64, 4> shape = {C, d.grid[0], d.grid[1], d.grid[2]};
    static constexpr int kAxes[3] = {1, 2, 3};

    std::vector<double> wre(static_cast<std::size_t>(C * S));
    std::vector<double> wim(static_cast<std::size_t>(C * S), 0.0);
    std::memcpy(wre.data(), gout, static_cast<std::size_t>(C * S) * sizeof(double));
    fft_axes_raw(wre.data(), wim.data(), shape, kAxes, false);

    std::vector<double> yre(static_cast<std::size_t>(C * S), 0.0);
    std::vector<double> yim(static_cast<std::size_t>(C * S), 0.0);

    const double inv_s = 1.0 / static_cast<double>(S);
    const i64 X = d.grid[0], Y = d.grid[1], Z = d.grid[2];
    const i64 Km = d.mode_count();
    for (i64 k1 = 0; k1 < d.modes[0]; ++k1)
        for (i64 k2 = 0; k2 < d.modes[1]; ++k2)
            for (i64 k3 = 0; k3 < d.modes[2]; ++k3) {
                const i64 kidx = (k1 * Y + k2) * Z + k3;
                const i64 m1 = (X - k1) % X, m2 = (Y - k2) % Y, m3 = (Z - k3) % Z;
                const i64 midx = (m1 * Y + m2) * Z + m3;
                const bool self = (midx == kidx);
                const i64 kslot = (k1 * d.modes[1] + k2) * d.modes[2] + k3;
                const double fac = self ? 1.0 : 2.0;

                // Weight gradient: gR[k,co,ci] += fac * G[co,k] * conj(Z[ci,k])
                // with G the 1/S-normalized cotangent spectrum (real at
                // self-conjugate bins).
                for (i64 co = 0; co < C; ++co) {
                    const double gr = wre[static_cast<std::size_t>(co * S + kidx)] * inv_s;
                    const double gi =
                        self ? 0.0 : wim[static_cast<std::size_t>(co * S + kidx)] * inv_s;
                    double* drr = gr_re + (kslot * C + co) * C;
                    double* dri = gr_im + (kslot * C + co) * C;
                    for (i64 ci = 0; ci < C; ++ci) {
                        const double zr = zk_re[ci * Km + kslot];
                        const double zi = zk_im[ci * Km + kslot];
                        drr[ci] += fac * (gr * zr + gi * zi);
                        dri[ci] += fac * (gi * zr - gr * zi);
                    }
                }
                // Input gradient: apply conj(R)^T to the cotangent spectrum.
                for (i64 ci = 0; ci < C; ++ci) {
                    double ar = 0.0, ai = 0.0;
                    for (i64 co = 0; co < C; ++co) {
                        const double rr = r_re[(kslot * C + co) * C + ci];
                        const double ri = r_im[(kslot * C + co) * C + ci];
                        const double wr = wre[static_cast<std::size_t>(co * S + kidx)];
                        const double wi = wim[static_cast<std::size_t>(co * S + kidx)];
                        ar += rr * wr + ri * wi;
                        ai += rr * wi - ri * wr;
                    }
                    if (self) {
                        yre[static_cast<std::size_t>(ci * S + kidx)] = ar;
                    } else {
                        yre[static_cast<std::size_t>(ci * S + kidx)] = ar;
                        yim[static_cast<std::size_t>(ci * S + kidx)] = ai;
                        yre[static_cast<std::size_t>(ci * S + midx)] = ar;
                        yim[static_cast<std::size_t>(ci * S + midx)] = -ai;
                    }
                }
            }

    fft_axes_raw(yre.data(), yim.data(), shape, kAxes, true);
    kernels::active().scale(inv_s, yre.data(), static_cast<std::size_t>(C * S));
    kernels::active().add(gz_accum, yre.data(), gz_accum, static_cast<std::size_t>(C * S));
}

}  // namespace nfd::sliceops
