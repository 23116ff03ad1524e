#include "ldrlab/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ldrlab {

std::string Tensor::shape_string(const std::vector<std::size_t>& s) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) os << "x";
        os << s[i];
    }
    os << "]";
    return os.str();
}

bool Tensor::all_finite() const {
    for (double x : data_)
        if (!std::isfinite(x)) return false;
    return true;
}

Tensor matmul(const Tensor& a, const Tensor& b) {
    if (a.rank() != 2 || b.rank() != 2 || a.cols() != b.rows())
        throw ShapeError("matmul: incompatible shapes " + Tensor::shape_string(a.shape()) + " x " +
                         Tensor::shape_string(b.shape()));
    const std::size_t m = a.rows();
    const std::size_t k = a.cols();
    const std::size_t n = b.cols();
    Tensor c({m, n});
    // i-k-j order: for each c[i][j] the k accumulation runs in ascending index
    // order, matching the naive triple loop bit for bit.
    for (std::size_t i = 0; i < m; ++i) {
        double* crow = c.row_ptr(i);
        const double* arow = a.row_ptr(i);
        for (std::size_t kk = 0; kk < k; ++kk) {
            const double aik = arow[kk];
            const double* brow = b.row_ptr(kk);
            for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
    return c;
}

void matmul_backward(const Tensor& a, const Tensor& b, const Tensor& dc, Tensor& da, Tensor& db) {
    if (dc.rank() != 2 || dc.rows() != a.rows() || dc.cols() != b.cols())
        throw ShapeError("matmul_backward: dC shape " + Tensor::shape_string(dc.shape()) +
                         " does not match " + std::to_string(a.rows()) + "x" + std::to_string(b.cols()));
    const std::size_t m = a.rows();
    const std::size_t k = a.cols();
    const std::size_t n = b.cols();
    da = Tensor({m, k});
    db = Tensor({k, n});
    // dA = dC x B^T
    for (std::size_t i = 0; i < m; ++i) {
        const double* dcrow = dc.row_ptr(i);
        double* darow = da.row_ptr(i);
        for (std::size_t kk = 0; kk < k; ++kk) {
            const double* brow = b.row_ptr(kk);
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) acc += dcrow[j] * brow[j];
            darow[kk] = acc;
        }
    }
    // dB = A^T x dC
    for (std::size_t i = 0; i < m; ++i) {
        const double* arow = a.row_ptr(i);
        const double* dcrow = dc.row_ptr(i);
        for (std::size_t kk = 0; kk < k; ++kk) {
            const double aik = arow[kk];
            double* dbrow = db.row_ptr(kk);
            for (std::size_t j = 0; j < n; ++j) dbrow[j] += aik * dcrow[j];
        }
    }
}

Tensor softmax_rows(const Tensor& logits) {
    if (logits.rank() != 2)
        throw ShapeError("softmax_rows: expected 2-D input, got " + Tensor::shape_string(logits.shape()));
    const std::size_t m = logits.rows();
    const std::size_t n = logits.cols();
    Tensor out({m, n});
    for (std::size_t i = 0; i < m; ++i) {
        const double* in = logits.row_ptr(i);
        double* o = out.row_ptr(i);
        double mx = in[0];
        for (std::size_t j = 1; j < n; ++j) mx = std::max(mx, in[j]);
        double total = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            o[j] = std::exp(in[j] - mx);
            total += o[j];
        }
        const double inv = 1.0 / total;
        for (std::size_t j = 0; j < n; ++j) o[j] *= inv;
    }
    return out;
}

Tensor softmax_rows_backward(const Tensor& y, const Tensor& dy) {
    if (!y.same_shape(dy))
        throw ShapeError("softmax_rows_backward: shapes differ " + Tensor::shape_string(y.shape()) +
                         " vs " + Tensor::shape_string(dy.shape()));
    const std::size_t m = y.rows();
    const std::size_t n = y.cols();
    Tensor dz({m, n});
    for (std::size_t i = 0; i < m; ++i) {
        const double* yi = y.row_ptr(i);
        const double* di = dy.row_ptr(i);
        double dot = 0.0;
        for (std::size_t j = 0; j < n; ++j) dot += di[j] * yi[j];
        double* o = dz.row_ptr(i);
        for (std::size_t j = 0; j < n; ++j) o[j] = yi[j] * (di[j] - dot);
    }
    return dz;
}

Tensor add_bias_rows(const Tensor& x, const Tensor& bias) {
    if (x.rank() != 2 || bias.rank() != 1 || bias.dim(0) != x.cols())
        throw ShapeError("add_bias_rows: bias " + Tensor::shape_string(bias.shape()) +
                         " does not fit " + Tensor::shape_string(x.shape()));
    Tensor out = x;
    const std::size_t m = x.rows();
    const std::size_t n = x.cols();
    for (std::size_t i = 0; i < m; ++i) {
        double* row = out.row_ptr(i);
        for (std::size_t j = 0; j < n; ++j) row[j] += bias[j];
    }
    return out;
}

Tensor relu(const Tensor& x) {
    Tensor out = x;
    for (double& v : out.data()) v = v > 0.0 ? v : 0.0;
    return out;
}

Tensor relu_backward(const Tensor& x, const Tensor& dy) {
    if (!x.same_shape(dy))
        throw ShapeError("relu_backward: shapes differ");
    Tensor dx = dy;
    for (std::size_t i = 0; i < x.numel(); ++i)
        if (x[i] <= 0.0) dx[i] = 0.0;
    return dx;
}

Tensor transpose(const Tensor& a) {
    if (a.rank() != 2) throw ShapeError("transpose: expected 2-D input");
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    Tensor out({n, m});
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(j, i) = a.at(i, j);
    return out;
}

Tensor colsum(const Tensor& a) {
    if (a.rank() != 2) throw ShapeError("colsum: expected 2-D input");
    Tensor out({a.cols()});
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* row = a.row_ptr(i);
        for (std::size_t j = 0; j < a.cols(); ++j) out[j] += row[j];
    }
    return out;
}

}  // namespace ldrlab
