#include "smf/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace smf {

Rational QSymMatrix::eval(const std::vector<long long>& x) const {
    Rational s(0);
    for (int i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (x[j] == 0) continue;
            s += get(i, j) * Rational(static_cast<long>(x[i])) * Rational(static_cast<long>(x[j]));
        }
    }
    return s;
}

QSymMatrix QSymMatrix::transform(const IMat& u) const {
    if (u.rows != n || u.cols != n) throw std::invalid_argument("transform: size mismatch");
    QSymMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Rational s(0);
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    s += Rational(static_cast<long>(u(k, i))) * get(k, l) *
                         Rational(static_cast<long>(u(l, j)));
            r.set(i, j, s);
        }
    return r;
}

QSymMatrix JacobiDecomposition::reconstruct() const {
    int n = static_cast<int>(d.size());
    QSymMatrix y(n);
    // t(W) D W = sum_k d_k * row_k(W)^t row_k(W)
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Rational s(0);
            for (int k = 0; k <= i; ++k) s += d[k] * w(k, i) * w(k, j);
            y.set(i, j, s);
        }
    return y;
}

JacobiDecomposition jacobi_decompose(const QSymMatrix& y) {
    int n = y.n;
    if (n < 1) throw std::domain_error("jacobi_decompose: empty matrix");
    QMat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = y.get(i, j);
    JacobiDecomposition jd;
    jd.d.assign(n, Rational(0));
    jd.w = QMat::identity(n);
    for (int k = 0; k < n; ++k) {
        if (sgn(a(k, k)) <= 0)
            throw std::domain_error("jacobi_decompose: input not positive definite");
        jd.d[k] = a(k, k);
        for (int j = k + 1; j < n; ++j) jd.w(k, j) = a(k, j) / a(k, k);
        for (int i = k + 1; i < n; ++i)
            for (int j = i; j < n; ++j) {
                Rational v = a(i, j) - a(k, i) * a(k, j) / a(k, k);
                a(i, j) = v;
                a(j, i) = v;
            }
    }
    return jd;
}

bool is_positive_definite(const QSymMatrix& y) {
    try {
        jacobi_decompose(y);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

namespace {

// ceil of sqrt(p/q) as an integer, p,q > 0
long long sqrt_ceil(const Rational& r) {
    Integer p = r.get_num(), q = r.get_den();
    Integer pq = p * q;
    Integer s;
    mpz_sqrt(s.get_mpz_t(), pq.get_mpz_t());
    // sqrt(p/q) = sqrt(pq)/q <= (s+1)/q
    Integer c = (s + q) / q;  // ceil((s+1)/q) >= sqrt
    while (c * c * q < p) ++c;
    return c.get_si();
}

struct MinSearch {
    const QSymMatrix* v;
    const JacobiDecomposition* jd;
    std::vector<long long> box;
    std::vector<long long> x;
    Rational best;

    // Enumerate coordinates from the last one down; (Wx)_i depends only on
    // x_i..x_{n-1}, so partial sums give a sound prune.
    void rec(int i, const Rational& partial) {
        int n = v->n;
        if (cmp(partial, best) >= 0) return;
        if (i < 0) {
            bool zero = std::all_of(x.begin(), x.end(), [](long long t) { return t == 0; });
            if (!zero && cmp(partial, best) < 0) best = partial;
            return;
        }
        for (long long xi = -box[i]; xi <= box[i]; ++xi) {
            x[i] = xi;
            Rational wx(static_cast<long>(xi));
            for (int j = i + 1; j < n; ++j)
                wx += jd->w(i, j) * Rational(static_cast<long>(x[j]));
            rec(i - 1, partial + jd->d[i] * wx * wx);
        }
        x[i] = 0;
    }
};

}  // namespace

Rational minkowski_min(const QSymMatrix& v) {
    int n = v.n;
    JacobiDecomposition jd = jacobi_decompose(v);  // rejects non-p.d. input

    // A feasible value: the smallest diagonal entry, attained at a unit vector.
    Rational bound = v.get(0, 0);
    for (int i = 1; i < n; ++i) bound = std::min(bound, v.get(i, i), [](const Rational& a, const Rational& b) {
        return cmp(a, b) < 0;
    });

    // v[x] <= bound forces (Wx)_i^2 <= bound/d_i; back substitution turns
    // that into coordinate bounds |x_i| <= sqrt(bound/d_i) + sum_j |w_ij| s_j.
    std::vector<Rational> s(n);
    std::vector<long long> box(n);
    for (int i = n - 1; i >= 0; --i) {
        Rational si(static_cast<long>(sqrt_ceil(bound / jd.d[i])));
        for (int j = i + 1; j < n; ++j) si += abs(jd.w(i, j)) * s[j];
        s[i] = si;
        Integer fl = si.get_num() / si.get_den();
        box[i] = fl.get_si();
    }

    MinSearch ms{&v, &jd, box, std::vector<long long>(n, 0), bound};
    ms.rec(n - 1, Rational(0));
    return ms.best;
}

namespace {

long long isqrt_ll(long long v) {
    if (v < 0) return -1;
    Integer z(static_cast<long>(v)), s;
    mpz_sqrt(s.get_mpz_t(), z.get_mpz_t());
    return s.get_si();
}

void fill_offdiag(ExponentMatrix& m, int i, int j, std::vector<ExponentMatrix>& out) {
    int n = m.n;
    if (i == n) {
        if (is_psd(m)) out.push_back(m);
        return;
    }
    int ni = (j == n - 1) ? i + 1 : i;
    int nj = (j == n - 1) ? ni + 1 : j + 1;
    long long cap = isqrt_ll(m.get(i, i) * m.get(j, j));
    for (long long v = -cap; v <= cap; ++v) {
        m.set(i, j, v);
        if (ni >= n - 1)
            fill_offdiag(m, n, 0, out);
        else
            fill_offdiag(m, ni, nj, out);
    }
    m.set(i, j, 0);
}

void fill_diag(ExponentMatrix& m, int k, int64_t left, std::vector<ExponentMatrix>& out) {
    int n = m.n;
    if (k == n) {
        if (n == 1) {
            out.push_back(m);
            return;
        }
        fill_offdiag(m, 0, 1, out);
        return;
    }
    for (int64_t v = 0; v <= left; ++v) {
        m.set(k, k, v);
        fill_diag(m, k + 1, left - v, out);
    }
    m.set(k, k, 0);
}

}  // namespace

std::vector<ExponentMatrix> enumerate_psd_exponents(int n, int64_t bound) {
    if (n < 1) throw std::invalid_argument("enumerate_psd_exponents: genus must be positive");
    std::vector<ExponentMatrix> out;
    ExponentMatrix m(n);
    fill_diag(m, 0, bound < 0 ? -1 : bound, out);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_gl2_reduced(const ExponentMatrix& t) {
    // 0 <= 2b <= a <= c: diag(1,-1) lies in GL_2(Z), so the sign of b is
    // never an invariant and b >= 0 must hold throughout, not only on ties
    int64_t a = t.get(0, 0), b = t.get(0, 1), c = t.get(1, 1);
    return b >= 0 && 2 * b <= a && a <= c;
}

Gl2Reduction reduce_gl2(const ExponentMatrix& t) {
    if (t.n != 2) throw std::invalid_argument("reduce_gl2: genus 2 keys only");
    if (!is_psd(t)) throw std::domain_error("reduce_gl2: input not psd");
    int64_t a = t.get(0, 0), b = t.get(0, 1), c = t.get(1, 1);
    IMat u = IMat::identity(2);
    auto apply = [&](long long u00, long long u01, long long u10, long long u11) {
        IMat s(2, 2);
        s(0, 0) = u00;
        s(0, 1) = u01;
        s(1, 0) = u10;
        s(1, 1) = u11;
        u = u * s;
    };

    for (int iter = 0; iter < 512; ++iter) {
        if (a > c) {  // swap basis vectors
            std::swap(a, c);
            apply(0, 1, 1, 0);
            continue;
        }
        if (a > 0 && 2 * std::llabs(b) > a) {  // shear e2 -> e2 + t*e1
            long long q;
            if (b >= 0)
                q = (2 * b + a) / (2 * a);
            else
                q = -((-2 * b + a) / (2 * a));
            int64_t nb = b - q * a;
            int64_t nc = c - 2 * q * b + q * q * a;
            b = nb;
            c = nc;
            apply(1, -q, 0, 1);
            continue;
        }
        break;
    }
    if (a == 0 && b != 0) throw std::logic_error("reduce_gl2: psd invariant violated");
    if ((2 * std::llabs(b) == a || a == c) && b < 0) {
        b = -b;
        apply(1, 0, 0, -1);
    }

    ExponentMatrix r(2);
    r.set(0, 0, a);
    r.set(0, 1, b);
    r.set(1, 1, c);
    if (!(transform(t, u) == r)) throw std::logic_error("reduce_gl2: witness mismatch");
    if (!is_gl2_reduced(r)) throw std::logic_error("reduce_gl2: failed to reach reduced form");
    return Gl2Reduction{r, u};
}

}  // namespace smf
