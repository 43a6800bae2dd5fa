#ifndef SMF_MATRIX_HPP
#define SMF_MATRIX_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "smf/rational.hpp"

namespace smf {

// Small dense matrices. Everything in this project is n <= 8 on a side, so
// plain row-major vectors are fine.

struct IMat {
    int rows = 0, cols = 0;
    std::vector<long long> a;

    IMat() = default;
    IMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    static IMat identity(int n) {
        IMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    long long& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    long long operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    friend IMat operator*(const IMat& x, const IMat& y) {
        if (x.cols != y.rows) throw std::invalid_argument("IMat: size mismatch");
        IMat z(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                long long v = x(i, k);
                if (v == 0) continue;
                for (int j = 0; j < y.cols; ++j) z(i, j) += v * y(k, j);
            }
        return z;
    }

    IMat transposed() const {
        IMat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const IMat& x, const IMat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
};

// Determinant by integer expansion; used only for n <= 4.
long long imat_det(const IMat& m);

inline bool is_unimodular(const IMat& u) {
    if (u.rows != u.cols) return false;
    long long d = imat_det(u);
    return d == 1 || d == -1;
}

struct QMat {
    int rows = 0, cols = 0;
    std::vector<Rational> a;

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rational(0)) {}

    static QMat identity(int n) {
        QMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static QMat from_int(const IMat& m) {
        QMat q(m.rows, m.cols);
        for (size_t i = 0; i < m.a.size(); ++i) q.a[i] = Rational(static_cast<long>(m.a[i]));
        return q;
    }

    Rational& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rational& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    friend QMat operator*(const QMat& x, const QMat& y) {
        if (x.cols != y.rows) throw std::invalid_argument("QMat: size mismatch");
        QMat z(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                if (sgn(x(i, k)) == 0) continue;
                for (int j = 0; j < y.cols; ++j) z(i, j) += x(i, k) * y(k, j);
            }
        return z;
    }
    friend QMat operator-(const QMat& x, const QMat& y) {
        if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("QMat: size mismatch");
        QMat z(x.rows, x.cols);
        for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.a[i] - y.a[i];
        return z;
    }
    friend QMat operator*(const Rational& c, QMat m) {
        for (auto& v : m.a) v *= c;
        return m;
    }

    QMat transposed() const {
        QMat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        for (const auto& v : a)
            if (sgn(v) != 0) return false;
        return true;
    }
    friend bool operator==(const QMat& x, const QMat& y) {
        if (x.rows != y.rows || x.cols != y.cols) return false;
        for (size_t i = 0; i < x.a.size(); ++i)
            if (cmp(x.a[i], y.a[i]) != 0) return false;
        return true;
    }
};

// Gauss-Jordan inverse; throws on singular input.
QMat qmat_inverse(const QMat& m);
Rational qmat_det(const QMat& m);

}  // namespace smf

#endif
