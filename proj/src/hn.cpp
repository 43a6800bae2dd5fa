#include "smf/hn.hpp"

#include <cmath>
#include <stdexcept>

namespace smf {

CMat CMat::identity(int n) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMat operator*(const CMat& x, const CMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("CMat: size mismatch");
    CMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            Complex v = x(i, k);
            if (v == Complex(0)) continue;
            for (int j = 0; j < y.cols; ++j) z(i, j) += v * y(k, j);
        }
    return z;
}

CMat operator+(const CMat& x, const CMat& y) {
    CMat z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.a[i] + y.a[i];
    return z;
}

CMat cmat_inverse(const CMat& m) {
    int n = m.rows;
    CMat a = m, inv = CMat::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double mx = std::abs(a(col, col));
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > mx) {
                mx = std::abs(a(r, col));
                piv = r;
            }
        if (mx == 0.0) throw std::domain_error("cmat_inverse: singular");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a.a[a.cols * piv + j], a.a[a.cols * col + j]);
                std::swap(inv.a[inv.cols * piv + j], inv.a[inv.cols * col + j]);
            }
        Complex p = a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Complex f = a(r, col);
            if (f == Complex(0)) continue;
            for (int j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

Complex cmat_det(const CMat& m) {
    int n = m.rows;
    CMat a = m;
    Complex det = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double mx = std::abs(a(col, col));
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > mx) {
                mx = std::abs(a(r, col));
                piv = r;
            }
        if (mx == 0.0) return Complex(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a.a[a.cols * piv + j], a.a[a.cols * col + j]);
            det = -det;
        }
        det *= a(col, col);
        for (int r = col + 1; r < n; ++r) {
            Complex f = a(r, col) / a(col, col);
            for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return det;
}

PointInHn PointInHn::diagonal_i(int n) {
    CMat t(n, n);
    for (int i = 0; i < n; ++i) t(i, i) = Complex(0, 1);
    return PointInHn(n, t);
}

PointInHn PointInHn::block_diag(const PointInHn& t1, const PointInHn& t2) {
    int n = t1.n + t2.n;
    CMat t(n, n);
    for (int i = 0; i < t1.n; ++i)
        for (int j = 0; j < t1.n; ++j) t(i, j) = t1.tau(i, j);
    for (int i = 0; i < t2.n; ++i)
        for (int j = 0; j < t2.n; ++j) t(t1.n + i, t1.n + j) = t2.tau(i, j);
    return PointInHn(n, t);
}

CMat PointInHn::imag() const {
    CMat y(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) y(i, j) = Complex(tau(i, j).imag(), 0);
    return y;
}

CMat PointInHn::real() const {
    CMat x(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x(i, j) = Complex(tau(i, j).real(), 0);
    return x;
}

bool PointInHn::valid(double tol) const {
    // Cholesky with tolerance on Im(tau)
    std::vector<std::vector<double>> l(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            if (std::abs(tau(i, j) - tau(j, i)) > 1e-9) return false;
            double s = tau(i, j).imag();
            for (int k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
            if (i == j) {
                if (s <= tol) return false;
                l[i][i] = std::sqrt(s);
            } else {
                l[i][j] = s / l[j][j];
            }
        }
    }
    return true;
}

JacobiF jacobi_decompose_f(const CMat& y) {
    int n = y.rows;
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = y(i, j).real();
    JacobiF jd;
    jd.d.assign(n, 0.0);
    jd.w.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) jd.w[i][i] = 1.0;
    for (int k = 0; k < n; ++k) {
        if (a[k][k] <= 0.0) throw std::domain_error("jacobi_decompose_f: not positive definite");
        jd.d[k] = a[k][k];
        for (int j = k + 1; j < n; ++j) jd.w[k][j] = a[k][j] / a[k][k];
        for (int i = k + 1; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double v = a[i][j] - a[k][i] * a[k][j] / a[k][k];
                a[i][j] = v;
                a[j][i] = v;
            }
    }
    return jd;
}

double lambda_min_lower_bound(const CMat& y) {
    int n = y.rows;
    JacobiF jd = jacobi_decompose_f(y);
    // invert the unit upper triangular W by back substitution
    std::vector<std::vector<double>> inv(n, std::vector<double>(n, 0.0));
    for (int i = n - 1; i >= 0; --i) {
        inv[i][i] = 1.0;
        for (int j = i + 1; j < n; ++j) {
            double s = 0.0;
            for (int k = i + 1; k <= j; ++k) s += jd.w[i][k] * inv[k][j];
            inv[i][j] = -s;
        }
    }
    double dmin = jd.d[0];
    for (double v : jd.d) dmin = std::min(dmin, v);
    double norm1 = 0.0, norminf = 0.0;
    for (int j = 0; j < n; ++j) {
        double c = 0.0;
        for (int i = 0; i < n; ++i) c += std::abs(inv[i][j]);
        norm1 = std::max(norm1, c);
    }
    for (int i = 0; i < n; ++i) {
        double r = 0.0;
        for (int j = 0; j < n; ++j) r += std::abs(inv[i][j]);
        norminf = std::max(norminf, r);
    }
    // ||W^-1||_2^2 <= ||W^-1||_1 ||W^-1||_inf, and y >= d_min W^t W
    return dmin / (norm1 * norminf);
}

bool siegel_domain_contains(const PointInHn& z, double u) {
    if (!z.valid()) throw std::domain_error("siegel_domain_contains: invalid point");
    if (u <= 0) throw std::domain_error("siegel_domain_contains: u must be positive");
    int n = z.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(std::abs(z.tau(i, j).real()) < u)) return false;
    JacobiF jd = jacobi_decompose_f(z.imag());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!(std::abs(jd.w[i][j]) < u)) return false;
    for (int i = 0; i + 1 < n; ++i)
        if (!(jd.d[i] < u * jd.d[i + 1])) return false;
    return 1.0 < u * jd.d[0];
}

PointInHn moebius_act(const IMat& gamma, const PointInHn& z) {
    int n = z.n;
    if (gamma.rows != 2 * n || gamma.cols != 2 * n)
        throw std::invalid_argument("moebius_act: size mismatch");
    CMat num(n, n), den(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Complex sn = gamma(i, n + j), sd = gamma(n + i, n + j);
            for (int k = 0; k < n; ++k) {
                sn += static_cast<double>(gamma(i, k)) * z.tau(k, j);
                sd += static_cast<double>(gamma(n + i, k)) * z.tau(k, j);
            }
            num(i, j) = sn;
            den(i, j) = sd;
        }
    PointInHn w(n, num * cmat_inverse(den));
    // symmetrize away rounding noise
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Complex m = (w.tau(i, j) + w.tau(j, i)) / 2.0;
            w.tau(i, j) = m;
            w.tau(j, i) = m;
        }
    return w;
}

Complex moebius_factor(const IMat& gamma, const PointInHn& z) {
    int n = z.n;
    CMat den(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Complex sd = gamma(n + i, n + j);
            for (int k = 0; k < n; ++k) sd += static_cast<double>(gamma(n + i, k)) * z.tau(k, j);
            den(i, j) = sd;
        }
    return cmat_det(den);
}

}  // namespace smf
