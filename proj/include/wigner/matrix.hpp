#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace wigner {

// Minimal dense square matrix, column-major storage.
template <typename T>
class Mat {
public:
    Mat() = default;
    explicit Mat(int n, T fill = T{}) : n_(n), data_(static_cast<std::size_t>(n) * n, fill) {}

    static Mat identity(int n) {
        Mat m(n);
        for (int i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    int n() const { return n_; }
    T& operator()(int i, int j) { return data_[static_cast<std::size_t>(j) * n_ + i]; }
    const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(j) * n_ + i]; }
    T* col(int j) { return data_.data() + static_cast<std::size_t>(j) * n_; }
    const T* col(int j) const { return data_.data() + static_cast<std::size_t>(j) * n_; }
    std::vector<T>& data() { return data_; }
    const std::vector<T>& data() const { return data_; }

private:
    int n_ = 0;
    std::vector<T> data_;
};

using RMat = Mat<double>;
using CMat = Mat<std::complex<double>>;

// C = A * B, plain triple loop ordered for column-major access.
template <typename T>
Mat<T> multiply(const Mat<T>& a, const Mat<T>& b) {
    if (a.n() != b.n()) throw std::invalid_argument("multiply: size mismatch");
    const int n = a.n();
    Mat<T> c(n);
    for (int j = 0; j < n; ++j) {
        T* cj = c.col(j);
        for (int k = 0; k < n; ++k) {
            const T bkj = b(k, j);
            if (bkj == T{}) continue;
            const T* ak = a.col(k);
            for (int i = 0; i < n; ++i) cj[i] += ak[i] * bkj;
        }
    }
    return c;
}

inline double abs_max(const RMat& a) {
    double m = 0;
    for (double v : a.data()) m = std::max(m, std::abs(v));
    return m;
}

inline double abs_max(const CMat& a) {
    double m = 0;
    for (const auto& v : a.data()) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace wigner
