#include "moritalab/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace moritalab {

Mat mat_mul(const Mat& x, const Mat& y) {
    Mat out(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t k = 0; k < x.n; ++k) {
            double xv = x(i, k);
            if (xv == 0.0) continue;
            for (std::size_t j = 0; j < x.n; ++j) out(i, j) += xv * y(k, j);
        }
    return out;
}

std::vector<double> mat_vec(const Mat& m, const std::vector<double>& v) {
    std::vector<double> out(m.n, 0.0);
    for (std::size_t i = 0; i < m.n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.n; ++j) s += m(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

std::vector<double> vec_mat(const std::vector<double>& v, const Mat& m) {
    std::vector<double> out(m.n, 0.0);
    for (std::size_t i = 0; i < m.n; ++i) {
        double vi = v[i];
        if (vi == 0.0) continue;
        for (std::size_t j = 0; j < m.n; ++j) out[j] += vi * m(i, j);
    }
    return out;
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double max_abs(const Mat& m) { return max_abs(m.a); }

namespace {

// One normalized power step; returns the Rayleigh quotient and the
// max-norm eigen residual of the pre-step vector.
double rayleigh_step(const Mat& m, std::vector<double>& v, std::vector<double>& scratch, bool transpose,
                     double& residual) {
    if (!transpose)
        scratch = mat_vec(m, v);
    else
        scratch = vec_mat(v, m);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        num += scratch[i] * v[i];
        den += v[i] * v[i];
    }
    double rho = num / den;
    residual = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) residual = std::max(residual, std::abs(scratch[i] - rho * v[i]));
    double norm = 0.0;
    for (double x : scratch) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0.0) throw std::runtime_error("perron_eigen: operator annihilates a positive vector");
    for (double& x : scratch) x /= norm;
    v.swap(scratch);
    return rho;
}

std::vector<double> power_vector(const Mat& m, bool transpose, double tol, std::size_t max_iter,
                                 double& rho_out, std::size_t& iters_out, double& residual_out) {
    std::vector<double> v(m.n, 1.0 / double(m.n)), scratch;
    double rho = 0.0, res = 0.0;
    std::size_t it = 0;
    for (; it < max_iter; ++it) {
        rho = rayleigh_step(m, v, scratch, transpose, res);
        if (res <= tol * std::max(1.0, std::abs(rho))) break;
    }
    if (it == max_iter) throw std::runtime_error("perron_eigen: power iteration did not converge");
    rho_out = rho;
    iters_out = it + 1;
    residual_out = res;
    return v;
}

} // namespace

SpectralResult perron_eigen(const Mat& m, double tol, std::size_t max_iter) {
    if (m.n == 0) throw std::invalid_argument("perron_eigen: empty matrix");
    for (std::size_t i = 0; i < m.n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < m.n; ++j) {
            if (m(i, j) < 0.0) throw std::invalid_argument("perron_eigen: negative entry");
            row += m(i, j);
        }
        if (row == 0.0) throw std::invalid_argument("perron_eigen: zero row");
    }
    if (m.n == 1) {
        return SpectralResult{m(0, 0), {1.0}, {1.0}, 1, 0.0};
    }
    SpectralResult out;
    std::size_t it_r = 0, it_l = 0;
    double rho_r = 0.0, rho_l = 0.0, res_r = 0.0, res_l = 0.0;
    out.right = power_vector(m, false, tol, max_iter, rho_r, it_r, res_r);
    out.left = power_vector(m, true, tol, max_iter, rho_l, it_l, res_l);
    out.rho = rho_r;
    out.iterations = it_r + it_l;

    double sum_r = 0.0;
    for (double x : out.right) sum_r += x;
    for (double& x : out.right) x /= sum_r;
    double dot = 0.0;
    for (std::size_t i = 0; i < m.n; ++i) dot += out.left[i] * out.right[i];
    for (double& x : out.left) x /= dot;

    std::vector<double> res = mat_vec(m, out.right);
    double r = 0.0;
    for (std::size_t i = 0; i < m.n; ++i) r = std::max(r, std::abs(res[i] - out.rho * out.right[i]));
    out.residual = r;
    return out;
}

double spectral_radius(const Mat& m, double tol, std::size_t max_iter) {
    if (m.n == 1) return m(0, 0);
    std::vector<double> v(m.n, 1.0 / double(m.n)), scratch;
    double rho = 0.0, res = 0.0;
    for (std::size_t it = 0; it < max_iter; ++it) {
        rho = rayleigh_step(m, v, scratch, false, res);
        if (res <= tol * std::max(1.0, std::abs(rho))) return rho;
    }
    throw std::runtime_error("spectral_radius: power iteration did not converge");
}

} // namespace moritalab
