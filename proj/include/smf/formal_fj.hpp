#ifndef SMF_FORMAL_FJ_HPP
#define SMF_FORMAL_FJ_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "smf/series.hpp"

namespace smf {

// Cogenus-1 containers for genus 2. A Fourier key
//   T = [[T1, T12], [T12, T2]]
// is stored in scaled units (n, r, idx) = h * (T1, 2*T12, T2) with one
// declared denominator h per series; h = 1 recovers the classical
// (n, r, index) coordinates of half-integral lattices.

struct JacobiTable {
    int64_t index = 0;  // scaled: actual index = index / h
    Rational weight = Rational(0);
    int64_t denom = 1;  // h
    std::map<std::pair<int64_t, int64_t>, Rational> coeffs;  // (n, r) -> c

    Rational coeff(int64_t n, int64_t r) const {
        auto it = coeffs.find({n, r});
        return it == coeffs.end() ? Rational(0) : it->second;
    }
    bool is_zero() const { return coeffs.empty(); }
};

struct FormalFJSeries {
    Rational weight = Rational(0);
    int64_t denom = 1;
    std::vector<JacobiTable> tables;  // tables[m].index == m, m = 0..M

    friend bool operator==(const FormalFJSeries&, const FormalFJSeries&) = default;
};

struct FourierTable {
    Rational weight = Rational(0);
    int64_t trunc = 0;
    std::map<ExponentMatrix, Rational> coeffs;  // genus-2 keys E = 8T

    Rational coeff(const ExponentMatrix& e) const {
        auto it = coeffs.find(e);
        return it == coeffs.end() ? Rational(0) : it->second;
    }
    friend bool operator==(const FourierTable&, const FourierTable&) = default;
};

// Real-coefficient genus-2 series as a FourierTable (throws if a
// coefficient has nonzero imaginary part).
FourierTable fourier_table(const SiegelFourierSeries& f);
SiegelFourierSeries to_series(const FourierTable& t);

struct JacobiWitness {
    int64_t n, r, n2, r2;
    Rational lhs, rhs;
};
struct JacobiValidationReport {
    bool psd_ok = true;
    bool elliptic_ok = true;
    std::vector<JacobiWitness> violations;       // elliptic consistency failures
    std::vector<std::pair<int64_t, int64_t>> bad_support;  // keys outside psd support
    bool pass() const { return psd_ok && elliptic_ok; }
};

// (1) support lies where [[n, r/2], [r/2, m]] is psd; (2) for index m > 0,
// c(n, r) = c(n + lambda r + lambda^2 m, r + 2 lambda m) for every integer
// lambda keeping the image inside the table's box. The SL2 part of the
// Jacobi transformation law is not table-checkable and is out of scope here.
JacobiValidationReport validate_jacobi(const JacobiTable& t);

// Group a genus-2 expansion by the bottom-right entry of E.
FormalFJSeries fj_decompose(const SiegelFourierSeries& f);

// a([[T1, T12], [T12, T2]]) = table_{T2}(T1, 2*T12); throws on scaling
// mismatch (a table key that does not land on the E-lattice).
FourierTable assemble_formal_fourier(const FormalFJSeries& s);

struct SymmetryViolation {
    size_t generator_index;
    ExponentMatrix key;
    Rational expected, found;
};
struct SymmetryReport {
    uint64_t pairs_checked = 0;
    std::vector<SymmetryViolation> violations;
    bool pass() const { return violations.empty(); }
};

std::vector<IMat> default_gl2_generators();

// a(t(u) T u) = det(u)^k a(T) on all key pairs inside trunc.
SymmetryReport check_symmetric(const FourierTable& t, long k, const std::vector<IMat>& generators);

}  // namespace smf

#endif
