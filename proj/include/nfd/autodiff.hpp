#pragma once

#include <array>
#include <vector>

#include "nfd/tensor.hpp"

namespace nfd {

enum class Op {
    Leaf,
    LiftChannels,
    Gelu,
    SpectralConv,
    Pad3,
    Crop3,
    Merge,
    TrunkAffine,
    Add,
    Sum,
    SumSq,
    Scale,
    Reshape,
    L2RelLoss,
};

/// One recorded operation. Parents always point at earlier nodes, so the tape
/// is topologically ordered by construction.
struct Node {
    Op op = Op::Leaf;
    Tensor value;
    std::array<int, 3> parents{-1, -1, -1};
    int n_parents = 0;
    i64 pad = 0;                       // Pad3 / Crop3
    std::array<i64, 3> modes{0, 0, 0}; // SpectralConv
    ComplexTensor saved_spec;          // SpectralConv: corner spectrum [B, C, Km]
    Tensor aux;                        // L2RelLoss: truth tensor
    double scalar = 0.0;               // Scale factor / L2RelLoss guard
    double cache_a = 0.0, cache_b = 0.0;
};

/// Reverse-mode tape over the fixed operation set the operator model needs.
/// Single-writer: one logical thread builds and differentiates a tape.
/// Element counts of node values, saved contexts, and gradient buffers are
/// tracked so training can report peak live activations.
class Tape {
public:
    int leaf(Tensor v);

    /// x: [C_in, ...spatial] or [B, C_in, ...spatial]; W: [C_in, C_out]; b: [C_out].
    /// out[co] = sum_ci x[ci] * W[ci, co] + b[co] at every site.
    int lift_channels(int x, int W, int b);

    int gelu(int x);

    /// z: [C, X, Y, Z] or [B, C, X, Y, Z]; r_re/r_im: [m1, m2, m3, C, C].
    int spectral_conv(int z, int r_re, int r_im, std::array<i64, 3> modes);

    int pad3(int x, i64 p);
    int crop3(int x, i64 p);

    /// b: [C, X, Y, Z]; c: [T, C] -> [T, C, X, Y, Z], z0[t,ch,s] = b[ch,s]*c[t,ch].
    int merge(int b, int c);

    /// times: [T]; w, b: [C] -> [T, C], out[t,c] = times[t]*w[c] + b[c].
    int trunk_affine(int times, int w, int b);

    int add(int a, int b);
    int sum(int x);
    int sumsq(int x);
    int scale(int x, double a);
    int reshape(int x, std::vector<i64> shape);

    /// ||pred - truth|| / (||truth|| + guard), scalar node. truth is constant.
    int l2_rel_loss(int pred, Tensor truth, double guard = 1e-12);

    /// Exact reverse sweep from a scalar loss node. ContractError otherwise.
    void backward(int loss);

    const Tensor& value(int id) const { return nodes_[static_cast<std::size_t>(id)].value; }
    bool has_grad(int id) const;
    const Tensor& grad(int id) const;

    int size() const { return static_cast<int>(nodes_.size()); }
    i64 live_elements() const { return live_; }
    i64 peak_elements() const { return peak_; }
    void reset();

private:
    int push(Node n);
    Tensor& grad_buf(int id);
    void note_alloc(i64 elems);

    std::vector<Node> nodes_;
    std::vector<Tensor> grads_;
    std::vector<char> grad_set_;
    i64 live_ = 0;
    i64 peak_ = 0;
};

}  // namespace nfd
