#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "nfd/errors.hpp"

namespace nfd {

using i64 = std::int64_t;

/// Dense row-major tensor of 64-bit floats. Value semantics throughout; all
/// operations build new tensors.
class Tensor {
public:
    Tensor() = default;

    explicit Tensor(std::vector<i64> shape) : shape_(std::move(shape)) {
        data_.assign(static_cast<std::size_t>(count(shape_)), 0.0);
    }

    static Tensor zeros(std::vector<i64> shape) { return Tensor(std::move(shape)); }

    static Tensor full(std::vector<i64> shape, double v) {
        Tensor t(std::move(shape));
        for (auto& x : t.data_) x = v;
        return t;
    }

    static Tensor from(std::vector<i64> shape, std::vector<double> data) {
        if (count(shape) != static_cast<i64>(data.size()))
            throw ShapeError("tensor data length does not match shape product");
        Tensor t;
        t.shape_ = std::move(shape);
        t.data_ = std::move(data);
        return t;
    }

    i64 rank() const { return static_cast<i64>(shape_.size()); }
    i64 extent(i64 axis) const { return shape_[static_cast<std::size_t>(axis)]; }
    i64 size() const { return static_cast<i64>(data_.size()); }
    const std::vector<i64>& shape() const { return shape_; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    double operator[](i64 i) const { return data_[static_cast<std::size_t>(i)]; }
    double& operator[](i64 i) { return data_[static_cast<std::size_t>(i)]; }

    bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

    /// Reinterprets the buffer under a new shape with the same element count.
    Tensor reshaped(std::vector<i64> shape) const {
        if (count(shape) != size()) throw ShapeError("reshape changes element count");
        Tensor t;
        t.shape_ = std::move(shape);
        t.data_ = data_;
        return t;
    }

    /// Gathers slices along axis 0 in the given order.
    Tensor gather_axis0(const std::vector<i64>& idx) const;

    bool all_finite() const;
    double max_abs() const;

    static i64 count(const std::vector<i64>& shape) {
        i64 n = 1;
        for (i64 e : shape) {
            if (e <= 0) throw ShapeError("tensor extents must be positive");
            n *= e;
        }
        return n;
    }

private:
    std::vector<i64> shape_;
    std::vector<double> data_;
};

/// Complex tensor stored as split real/imaginary arrays.
class ComplexTensor {
public:
    ComplexTensor() = default;

    explicit ComplexTensor(std::vector<i64> shape) : shape_(std::move(shape)) {
        const auto n = static_cast<std::size_t>(Tensor::count(shape_));
        re_.assign(n, 0.0);
        im_.assign(n, 0.0);
    }

    i64 rank() const { return static_cast<i64>(shape_.size()); }
    i64 extent(i64 axis) const { return shape_[static_cast<std::size_t>(axis)]; }
    i64 size() const { return static_cast<i64>(re_.size()); }
    const std::vector<i64>& shape() const { return shape_; }

    double* re() { return re_.data(); }
    double* im() { return im_.data(); }
    const double* re() const { return re_.data(); }
    const double* im() const { return im_.data(); }

    bool same_shape(const ComplexTensor& o) const { return shape_ == o.shape_; }

private:
    std::vector<i64> shape_;
    std::vector<double> re_, im_;
};

// Elementwise helpers on matching shapes (ShapeError otherwise).
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scaled(const Tensor& a, double s);
double sumsq(const Tensor& a);
double dot(const Tensor& a, const Tensor& b);
double max_abs_diff(const Tensor& a, const Tensor& b);

}  // namespace nfd
