#ifndef SMF_EXPONENT_HPP
#define SMF_EXPONENT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "smf/matrix.hpp"

namespace smf {

// Fourier exponent key E = 8*T for a symmetric half-ish-integral exponent T.
// The factor 8 makes every exponent appearing in single theta constants
// integral (diagonal entries v_i^2/2 with v_i in Z + 1/2 give eighths).
// Stored as the packed upper triangle, row-major, so that lexicographic
// comparison of the packed vector agrees with row-major comparison of the
// full symmetric matrix.
struct ExponentMatrix {
    int n = 0;
    std::vector<int64_t> e;  // size n(n+1)/2

    ExponentMatrix() = default;
    explicit ExponentMatrix(int genus)
        : n(genus), e(static_cast<size_t>(genus) * (genus + 1) / 2, 0) {}

    static size_t packed_size(int n) { return static_cast<size_t>(n) * (n + 1) / 2; }

    size_t idx(int i, int j) const {
        if (i > j) std::swap(i, j);
        return static_cast<size_t>(i) * n - static_cast<size_t>(i) * (i - 1) / 2 + (j - i);
    }
    int64_t get(int i, int j) const { return e[idx(i, j)]; }
    void set(int i, int j, int64_t v) { e[idx(i, j)] = v; }

    int64_t trace() const {
        int64_t t = 0;
        for (int i = 0; i < n; ++i) t += get(i, i);
        return t;
    }

    ExponentMatrix operator+(const ExponentMatrix& o) const {
        ExponentMatrix r(n);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] = e[i] + o.e[i];
        return r;
    }

    auto operator<=>(const ExponentMatrix& o) const = default;

    std::string str() const;
};

// Exact positive semidefiniteness of an integer symmetric matrix via
// rational LDL elimination (a zero pivot forces a zero row).
bool is_psd(const ExponentMatrix& m);
bool is_positive_definite(const ExponentMatrix& m);

// t(u) * E * u for an integer matrix u (columns transform the form).
ExponentMatrix transform(const ExponentMatrix& m, const IMat& u);

// Outer product E = w * t(w) of an integer vector.
ExponentMatrix rank_one(const std::vector<long long>& w);

// Row-major full matrix for serialization.
std::vector<int64_t> to_row_major(const ExponentMatrix& m);
ExponentMatrix from_row_major(int n, const std::vector<int64_t>& entries);

}  // namespace smf

#endif
