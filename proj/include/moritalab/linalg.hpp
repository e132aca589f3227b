#pragma once

#include <cstddef>
#include <vector>

namespace moritalab {

// Dense square matrix, row major. Dimensions here are |Gamma|^(k-1) <= 64,
// so nothing fancier than contiguous doubles is warranted.
struct Mat {
    std::size_t n = 0;
    std::vector<double> a;

    Mat() = default;
    explicit Mat(std::size_t dim, double fill = 0.0) : n(dim), a(dim * dim, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    static Mat identity(std::size_t dim) {
        Mat m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }
};

Mat mat_mul(const Mat& x, const Mat& y);
std::vector<double> mat_vec(const Mat& m, const std::vector<double>& v);
std::vector<double> vec_mat(const std::vector<double>& v, const Mat& m);
double max_abs(const std::vector<double>& v);
double max_abs(const Mat& m);

struct SpectralResult {
    double rho = 0.0;
    std::vector<double> right;
    std::vector<double> left;
    std::size_t iterations = 0;
    double residual = 0.0;
};

// Power iteration for the dominant eigenvalue of an irreducible
// nonnegative matrix, both eigenvectors. Throws on non-convergence or a
// zero row/column. Normalization: sum(right) = 1, dot(left, right) = 1.
SpectralResult perron_eigen(const Mat& m, double tol = 1e-13, std::size_t max_iter = 1000000);

// Spectral radius only (no left vector); used in inner loops.
double spectral_radius(const Mat& m, double tol = 1e-13, std::size_t max_iter = 1000000);

} // namespace moritalab
