#include "smf/exponent.hpp"

#include <sstream>
#include <stdexcept>

namespace smf {

long long imat_det(const IMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det of non-square matrix");
    int n = m.rows;
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    long long det = 0;
    IMat sub(n - 1, n - 1);
    for (int p = 0; p < n; ++p) {
        for (int i = 1; i < n; ++i) {
            int jj = 0;
            for (int j = 0; j < n; ++j) {
                if (j == p) continue;
                sub(i - 1, jj++) = m(i, j);
            }
        }
        long long c = m(0, p) * imat_det(sub);
        det += (p % 2 == 0) ? c : -c;
    }
    return det;
}

QMat qmat_inverse(const QMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
    int n = m.rows;
    QMat a = m, inv = QMat::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (sgn(a(r, col)) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("singular matrix");
        for (int j = 0; j < n; ++j) {
            std::swap(a.a[a.cols * piv + j], a.a[a.cols * col + j]);
            std::swap(inv.a[inv.cols * piv + j], inv.a[inv.cols * col + j]);
        }
        Rational p = a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || sgn(a(r, col)) == 0) continue;
            Rational f = a(r, col);
            for (int j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

Rational qmat_det(const QMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det of non-square matrix");
    int n = m.rows;
    QMat a = m;
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (sgn(a(r, col)) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return Rational(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a.a[a.cols * piv + j], a.a[a.cols * col + j]);
            det = -det;
        }
        det *= a(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (sgn(a(r, col)) == 0) continue;
            Rational f = a(r, col) / a(col, col);
            for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return det;
}

std::string ExponentMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n; ++i) {
        if (i) os << "; ";
        for (int j = 0; j < n; ++j) {
            if (j) os << " ";
            os << get(i, j);
        }
    }
    os << "]";
    return os.str();
}

namespace {

// LDL with exact rationals. psd iff every pivot is >= 0, where a zero pivot
// must be accompanied by a zero residual row.
bool psd_check(const ExponentMatrix& m, bool strict) {
    int n = m.n;
    QMat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Rational(static_cast<long>(m.get(i, j)));
    for (int k = 0; k < n; ++k) {
        int s = sgn(a(k, k));
        if (s < 0) return false;
        if (s == 0) {
            if (strict) return false;
            for (int j = k + 1; j < n; ++j)
                if (sgn(a(k, j)) != 0) return false;
            continue;
        }
        for (int i = k + 1; i < n; ++i) {
            if (sgn(a(k, i)) == 0) continue;
            Rational f = a(k, i) / a(k, k);
            for (int j = i; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return true;
}

}  // namespace

bool is_psd(const ExponentMatrix& m) { return psd_check(m, false); }
bool is_positive_definite(const ExponentMatrix& m) { return psd_check(m, true); }

ExponentMatrix transform(const ExponentMatrix& m, const IMat& u) {
    if (u.rows != m.n || u.cols != m.n) throw std::invalid_argument("transform: size mismatch");
    int n = m.n;
    ExponentMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            int64_t s = 0;
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) s += u(k, i) * m.get(k, l) * u(l, j);
            r.set(i, j, s);
        }
    return r;
}

ExponentMatrix rank_one(const std::vector<long long>& w) {
    int n = static_cast<int>(w.size());
    ExponentMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) r.set(i, j, w[i] * w[j]);
    return r;
}

std::vector<int64_t> to_row_major(const ExponentMatrix& m) {
    std::vector<int64_t> v;
    v.reserve(static_cast<size_t>(m.n) * m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) v.push_back(m.get(i, j));
    return v;
}

ExponentMatrix from_row_major(int n, const std::vector<int64_t>& entries) {
    if (entries.size() != static_cast<size_t>(n) * n)
        throw std::invalid_argument("exponent matrix: wrong entry count");
    ExponentMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (entries[i * n + j] != entries[j * n + i])
                throw std::invalid_argument("exponent matrix: not symmetric");
            if (i <= j) m.set(i, j, entries[i * n + j]);
        }
    return m;
}

}  // namespace smf
