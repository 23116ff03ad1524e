#ifndef LDRLAB_TENSOR_HPP
#define LDRLAB_TENSOR_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ldrlab {

struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Dense row-major tensor of 64-bit floats. The one numeric carrier used by
// every module; invariant product(shape) == data.size() is enforced on
// construction and reshape.
class Tensor {
public:
    Tensor() = default;

    explicit Tensor(std::vector<std::size_t> shape)
        : shape_(std::move(shape)), data_(checked_numel(shape_), 0.0) {}

    Tensor(std::vector<std::size_t> shape, std::vector<double> data)
        : shape_(std::move(shape)), data_(std::move(data)) {
        if (checked_numel(shape_) != data_.size())
            throw ShapeError("Tensor: shape " + shape_string(shape_) + " does not match buffer of " +
                             std::to_string(data_.size()) + " elements");
    }

    static Tensor zeros(std::vector<std::size_t> shape) { return Tensor(std::move(shape)); }

    static Tensor full(std::vector<std::size_t> shape, double v) {
        Tensor t(std::move(shape));
        for (double& x : t.data_) x = v;
        return t;
    }

    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t rank() const { return shape_.size(); }
    std::size_t numel() const { return data_.size(); }
    std::size_t dim(std::size_t i) const { return shape_.at(i); }

    std::size_t rows() const {
        require_rank2("rows");
        return shape_[0];
    }
    std::size_t cols() const {
        require_rank2("cols");
        return shape_[1];
    }

    double& at(std::size_t i, std::size_t j) { return data_[i * shape_[1] + j]; }
    double at(std::size_t i, std::size_t j) const { return data_[i * shape_[1] + j]; }

    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }
    double* row_ptr(std::size_t i) { return data_.data() + i * shape_[1]; }
    const double* row_ptr(std::size_t i) const { return data_.data() + i * shape_[1]; }

    bool same_shape(const Tensor& o) const { return shape_ == o.shape_; }

    void reshape(std::vector<std::size_t> shape) {
        if (checked_numel(shape) != data_.size())
            throw ShapeError("reshape: " + shape_string(shape) + " incompatible with " +
                             std::to_string(data_.size()) + " elements");
        shape_ = std::move(shape);
    }

    void fill(double v) {
        for (double& x : data_) x = v;
    }

    bool all_finite() const;

    static std::string shape_string(const std::vector<std::size_t>& s);

private:
    static std::size_t checked_numel(const std::vector<std::size_t>& shape) {
        std::size_t n = 1;
        for (std::size_t d : shape) n *= d;
        return n;
    }
    void require_rank2(const char* op) const {
        if (shape_.size() != 2)
            throw ShapeError(std::string(op) + ": tensor is not 2-D, shape " + shape_string(shape_));
    }

    std::vector<std::size_t> shape_;
    std::vector<double> data_;
};

// Trainable buffer triple. value/grad/velocity stay shape-identical for the
// buffer's whole life; decay marks weight matrices (biases are excluded from
// weight decay).
struct Parameter {
    std::string name;
    Tensor value;
    Tensor grad;
    Tensor velocity;
    bool decay = true;

    Parameter(std::string param_name, Tensor v, bool apply_decay)
        : name(std::move(param_name)),
          value(std::move(v)),
          grad(Tensor::zeros(value.shape())),
          velocity(Tensor::zeros(value.shape())),
          decay(apply_decay) {}
};

// C = A x B with sequential-k accumulation (bit-reproducible)
Tensor matmul(const Tensor& a, const Tensor& b);

// Vector-Jacobian products of matmul: dA = dC x B^T, dB = A^T x dC
void matmul_backward(const Tensor& a, const Tensor& b, const Tensor& dc, Tensor& da, Tensor& db);

// Row-wise stable softmax; rows sum to 1 within 1e-9
Tensor softmax_rows(const Tensor& logits);

// Given y = softmax_rows(z) and dL/dy, returns dL/dz:
// dz_i = y_i * (dy_i - <dy, y>) per row
Tensor softmax_rows_backward(const Tensor& y, const Tensor& dy);

// z = x + 1*b^T (the only broadcast in the library)
Tensor add_bias_rows(const Tensor& x, const Tensor& bias);

Tensor relu(const Tensor& x);
// dL/dx = dL/dy where x > 0, else 0
Tensor relu_backward(const Tensor& x, const Tensor& dy);

Tensor transpose(const Tensor& a);

// Column sums of a 2-D tensor, shape {cols}
Tensor colsum(const Tensor& a);

}  // namespace ldrlab

#endif
