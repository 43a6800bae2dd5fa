#ifndef SMF_HN_HPP
#define SMF_HN_HPP

#include <complex>
#include <vector>

#include "smf/matrix.hpp"

namespace smf {

using Complex = std::complex<double>;

// Dense complex matrix, n <= 4 in practice.
struct CMat {
    int rows = 0, cols = 0;
    std::vector<Complex> a;

    CMat() = default;
    CMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Complex(0)) {}
    static CMat identity(int n);

    Complex& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    Complex operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    friend CMat operator*(const CMat& x, const CMat& y);
    friend CMat operator+(const CMat& x, const CMat& y);
};

CMat cmat_inverse(const CMat& m);
Complex cmat_det(const CMat& m);

// Point of the Siegel upper half space: tau = x + i y, y positive definite.
struct PointInHn {
    int n = 0;
    CMat tau;

    PointInHn() = default;
    PointInHn(int genus, CMat t) : n(genus), tau(std::move(t)) {}

    static PointInHn diagonal_i(int n);  // tau = i * identity
    // Block-diagonal embedding diag(tau1, tau2).
    static PointInHn block_diag(const PointInHn& t1, const PointInHn& t2);

    CMat imag() const;
    CMat real() const;
    bool valid(double tol = 1e-12) const;  // y positive definite (Cholesky)
};

// Floating Jacobi decomposition y = t(W) D W of a positive definite matrix.
struct JacobiF {
    std::vector<double> d;
    std::vector<std::vector<double>> w;  // unit upper triangular
};
JacobiF jacobi_decompose_f(const CMat& y);

// Certified-style lower bound on the smallest eigenvalue of Im(tau),
// d_min / ||W^-1||_1 ||W^-1||_inf, from the Jacobi decomposition.
double lambda_min_lower_bound(const CMat& y);

// Conditions (a)-(d) of the Siegel domain F_n(u):
//   (a) |x_ij| < u, (b) |w_ij| < u, (c) d_i < u d_{i+1}, (d) 1 < u d_1.
bool siegel_domain_contains(const PointInHn& z, double u);

// (A tau + B)(C tau + D)^{-1} for an integer symplectic gamma (2n x 2n).
PointInHn moebius_act(const IMat& gamma, const PointInHn& z);
// det(C tau + D)
Complex moebius_factor(const IMat& gamma, const PointInHn& z);

}  // namespace smf

#endif
