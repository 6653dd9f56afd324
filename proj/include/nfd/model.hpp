#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nfd/autodiff.hpp"
#include "nfd/tensor.hpp"

namespace nfd {

/// Per-level architecture description.
struct ArchSpec {
    std::array<i64, 3> grid{20, 20, 5};
    i64 in_channels = 4;
    i64 width = 32;
    i64 padding = 8;
    i64 n_fourier_layers = 4;
    std::array<i64, 3> modes{12, 12, 4};
    i64 projection_hidden = 128;
    i64 trunk_in = 1;  // temporal coordinate

    std::array<i64, 3> padded() const {
        return {grid[0] + 2 * padding, grid[1] + 2 * padding, grid[2] + 2 * padding};
    }

    /// Throws ConfigError naming the offending field.
    void validate() const;

    std::string to_json() const;
    static ArchSpec from_json(const std::string& text);
};

// The published level architectures: 100x100x5 global grid at width 32 and
// the 40x40x25 / 40x40x50 local grids at width 36.
ArchSpec arch_global();
ArchSpec arch_lgr1();
ArchSpec arch_lgr234();

struct FourierLayerParams {
    ComplexTensor R;  // [m1, m2, m3, width, width]
    Tensor W;         // [width, width]
    Tensor b;         // [width]
};

/// Branch net (channel lift), trunk net (affine in time), L Fourier layers,
/// and a two-layer projection head.
struct FourierDeepONet {
    ArchSpec arch;
    Tensor branch_w;  // [C_in, width]
    Tensor branch_b;  // [width]
    Tensor trunk_w;   // [width]
    Tensor trunk_b;   // [width]
    std::vector<FourierLayerParams> layers;
    Tensor proj_w1;  // [width, hidden]
    Tensor proj_b1;  // [hidden]
    Tensor proj_w2;  // [hidden, 1]
    Tensor proj_b2;  // [1]
};

/// Deterministic initialization: same (arch, seed) gives identical bytes.
FourierDeepONet build(const ArchSpec& arch, std::uint64_t seed);

/// Exact scalar parameter count (complex scalars count as 2).
i64 count_params(const FourierDeepONet& m);

/// Mutable flat views over every parameter array, in declaration order.
/// Spectral weights appear as separate ".re" / ".im" entries.
struct ParamRef {
    std::string name;
    double* data;
    i64 n;
};
std::vector<ParamRef> param_refs(FourierDeepONet& m);

using ShapeTrace = std::vector<std::pair<std::string, std::vector<i64>>>;

/// Inference path: pad -> lift -> merge with trunk(times) -> Fourier layers
/// -> de-pad -> projection. branch_in is [C_in, nx, ny, nz]; times holds
/// normalized coordinates in [0, 1]. Returns [T, nx, ny, nz]. Processes one
/// time slice at a time, which both bounds memory and makes the output
/// independent of how the time axis is batched.
Tensor forward(const FourierDeepONet& m, const Tensor& branch_in, const Tensor& times,
               ShapeTrace* trace = nullptr);

/// Differentiable path used by training. Registers every parameter as a tape
/// leaf (order matches param_refs) and returns the output node.
struct TapeForward {
    int out = -1;
    std::vector<int> param_nodes;
};
TapeForward forward_tape(Tape& tape, const FourierDeepONet& m, const Tensor& branch_in,
                         const Tensor& times);

// Checkpoint file: magic "FDON1", length-prefixed ArchSpec JSON, then the
// parameter tensors in declaration order (spectral weights as re then im).
void save_checkpoint(const std::string& path, const FourierDeepONet& m);
FourierDeepONet load_checkpoint(const std::string& path);

}  // namespace nfd
