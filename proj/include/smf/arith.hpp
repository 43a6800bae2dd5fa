#ifndef SMF_ARITH_HPP
#define SMF_ARITH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "smf/exponent.hpp"
#include "smf/matrix.hpp"

namespace smf {

// Symmetric matrix with exact rational entries (imaginary parts y, exponents
// T, quadratic forms v). Packed upper triangle like ExponentMatrix.
struct QSymMatrix {
    int n = 0;
    std::vector<Rational> e;

    QSymMatrix() = default;
    explicit QSymMatrix(int size)
        : n(size), e(static_cast<size_t>(size) * (size + 1) / 2, Rational(0)) {}

    static QSymMatrix from_exponent(const ExponentMatrix& m) {
        QSymMatrix q(m.n);
        for (size_t i = 0; i < m.e.size(); ++i) q.e[i] = Rational(static_cast<long>(m.e[i]));
        return q;
    }

    size_t idx(int i, int j) const {
        if (i > j) std::swap(i, j);
        return static_cast<size_t>(i) * n - static_cast<size_t>(i) * (i - 1) / 2 + (j - i);
    }
    const Rational& get(int i, int j) const { return e[idx(i, j)]; }
    void set(int i, int j, const Rational& v) { e[idx(i, j)] = v; }

    // v[x] = t(x) v x
    Rational eval(const std::vector<long long>& x) const;

    QSymMatrix transform(const IMat& u) const;  // t(u) * v * u

    friend bool operator==(const QSymMatrix& a, const QSymMatrix& b) {
        if (a.n != b.n) return false;
        for (size_t i = 0; i < a.e.size(); ++i)
            if (cmp(a.e[i], b.e[i]) != 0) return false;
        return true;
    }
};

// y = t(W) D W with D positive diagonal and W unit upper triangular,
// all exact. Exists iff y is positive definite.
struct JacobiDecomposition {
    std::vector<Rational> d;  // diagonal of D
    QMat w;                   // unit upper triangular

    QSymMatrix reconstruct() const;
};

// Throws std::domain_error unless y is positive definite.
JacobiDecomposition jacobi_decompose(const QSymMatrix& y);

bool is_positive_definite(const QSymMatrix& y);

// Minimum of t(x) v x over nonzero integer vectors. The search box comes
// from the Jacobi decomposition by back substitution, so the reported value
// is the true minimum, not a heuristic.
Rational minkowski_min(const QSymMatrix& v);

// All integer symmetric psd E of size n with trace <= bound, each exactly
// once, in increasing key order.
std::vector<ExponentMatrix> enumerate_psd_exponents(int n, int64_t bound);

// Gauss reduction of a binary psd form under GL_2(Z).
// Convention: 2|E12| <= E11 <= E22, and E12 >= 0 whenever 2|E12| = E11 or
// E11 = E22. Returns the representative and a witness u with t(u) T u = R.
struct Gl2Reduction {
    ExponentMatrix reduced;
    IMat u;
};
Gl2Reduction reduce_gl2(const ExponentMatrix& t);

bool is_gl2_reduced(const ExponentMatrix& t);

}  // namespace smf

#endif
