#ifndef SMF_TEST_HELPERS_HPP
#define SMF_TEST_HELPERS_HPP

#include <cstdint>
#include <vector>

#include "smf/arith.hpp"
#include "smf/characteristics.hpp"
#include "smf/hn.hpp"

namespace smf::test {

inline uint64_t rng_next(uint64_t& s) {
    s ^= s >> 12;
    s ^= s << 25;
    s ^= s >> 27;
    return s * 2685821657736338717ull;
}
inline long long rng_range(uint64_t& s, long long lo, long long hi) {
    return lo + static_cast<long long>(rng_next(s) % static_cast<uint64_t>(hi - lo + 1));
}
inline double rng_double(uint64_t& s, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng_next(s) >> 11) / 9007199254740992.0);
}

// random unimodular matrix as a short product of elementary operations
inline IMat random_unimodular(int n, uint64_t& s, int steps = 4) {
    IMat u = IMat::identity(n);
    for (int k = 0; k < steps; ++k) {
        switch (rng_range(s, 0, 2)) {
            case 0: {  // shear
                int i = static_cast<int>(rng_range(s, 0, n - 1));
                int j = static_cast<int>(rng_range(s, 0, n - 1));
                if (i == j) break;
                IMat e = IMat::identity(n);
                e(i, j) = rng_range(s, -2, 2);
                u = u * e;
                break;
            }
            case 1: {  // swap
                int i = static_cast<int>(rng_range(s, 0, n - 1));
                int j = static_cast<int>(rng_range(s, 0, n - 1));
                if (i == j) break;
                IMat e(n, n);
                for (int t = 0; t < n; ++t) e(t, t) = 1;
                e(i, i) = e(j, j) = 0;
                e(i, j) = 1;
                e(j, i) = 1;
                u = u * e;
                break;
            }
            default: {  // sign flip
                int i = static_cast<int>(rng_range(s, 0, n - 1));
                IMat e = IMat::identity(n);
                e(i, i) = -1;
                u = u * e;
                break;
            }
        }
    }
    return u;
}

// random positive definite rational symmetric matrix t(A) A + I
inline QSymMatrix random_positive_definite(int n, uint64_t& s) {
    IMat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = rng_range(s, -2, 2);
    IMat g = a.transposed() * a;
    QSymMatrix v(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Rational x(static_cast<long>(g(i, j)));
            if (i == j) x += make_rational(rng_range(s, 1, 6), rng_range(s, 1, 3));
            v.set(i, j, x);
        }
    return v;
}

// random integer symplectic matrix as a word in the generators
inline IMat random_symplectic_word(int n, uint64_t& s, int len = 4) {
    auto gens = sp_generators(n);
    IMat g = IMat::identity(2 * n);
    for (int k = 0; k < len; ++k) g = g * gens[rng_next(s) % gens.size()];
    return g;
}

// random point with Im part comfortably inside the Siegel domain boxes
inline PointInHn random_point(int n, uint64_t& s) {
    CMat t(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double x = rng_double(s, -0.45, 0.45);
            double y = (i == j) ? rng_double(s, 0.9 + 0.3 * i, 1.2 + 0.3 * i)
                                : rng_double(s, -0.2, 0.2);
            t(i, j) = t(j, i) = Complex(x, y);
        }
    return PointInHn(n, t);
}

}  // namespace smf::test

#endif
