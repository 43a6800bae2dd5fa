#ifndef SMF_PARAMODULAR_HPP
#define SMF_PARAMODULAR_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "smf/formal_fj.hpp"
#include "smf/matrix.hpp"

namespace smf {

// sqrt(d) is never taken: (M, d) stands for M / sqrt(d), so the symplectic
// similitude condition M J t(M) = d J and all projective statements stay in
// exact rational arithmetic.
struct ScaledSymplectic {
    QMat m;  // 4x4
    long long d = 1;

    ScaledSymplectic inverse() const;  // (d M^{-1}, d)
    friend ScaledSymplectic operator*(const ScaledSymplectic& a, const ScaledSymplectic& b) {
        return {a.m * b.m, a.d * b.d};
    }
};

bool is_symplectic_similitude(const QMat& m, long long scale);

// Membership in K(N): symplectic, with the divisibility pattern
//   (  *   N*   *   *  )
//   (  *   *    *  */N )
//   (  *   N*   *   *  )
//   ( N*   N*  N*   *  )
bool is_paramodular(const QMat& m, long long n);

// (M, d) lies in K(N) up to the projective identification; requires d to be
// a perfect square so that the underlying matrix is rational.
bool projectively_paramodular(const ScaledSymplectic& g, long long n);

bool is_exact_divisor(long long d, long long n);
std::vector<long long> exact_divisors(long long n);
int num_prime_divisors(long long n);

// Atkin-Lehner element V_d for d || N, from a Bezout solution of
// alpha delta d - beta gamma d' = 1. For d = N the parameters are pinned to
// beta = 1, gamma = -1, alpha = delta = 0, which gives the involution mu_N.
ScaledSymplectic make_atkin_lehner(long long n, long long d);
ScaledSymplectic mu_n(long long n);

// The 2x2 Atkin-Lehner block (u, d) with u = [[d a, b], [N c, d e]],
// det u = d, as an element of Gamma_0(N)^*.
struct Gamma0StarElement {
    IMat u;  // 2x2 integral
    long long d = 1;
};
Gamma0StarElement make_atkin_lehner_2x2(long long n, long long d);

// Same coset test for two V_d (procedure: V_a V_b V_{a*b}^{-1} must lie in
// K(N) projectively, a*b = ab/gcd(a,b)^2).
bool atkin_lehner_classes_multiply(long long n, long long d1, long long d2);

// Fourier table on the K(N) index lattice: psd keys with E11, 2*E12
// divisible by 8 resp. 8, and 8N | E22.
struct ParamodularTable {
    long long N = 1;
    Rational weight = Rational(0);
    int64_t trunc = 0;
    std::map<ExponentMatrix, Rational> coeffs;

    Rational coeff(const ExponentMatrix& e) const {
        auto it = coeffs.find(e);
        return it == coeffs.end() ? Rational(0) : it->second;
    }
};
bool in_paramodular_lattice(const ExponentMatrix& e, long long n);
ParamodularTable paramodular_table(const FourierTable& t, long long n);

// Index map of the Fricke involution: (T1, T12, T2) -> (T2/N, -T12, N T1).
ExponentMatrix mu_index_action(const ExponentMatrix& e, long long n);

// Sign character on K(N)*/K(N) = (Z/2)^{nu(N)}, stored on exact divisors.
struct SignCharacter {
    long long N = 1;
    std::map<long long, int> values;  // d || N -> +-1

    static SignCharacter trivial(long long n);
    // from signs on the prime exact divisors, extended multiplicatively
    static SignCharacter from_prime_signs(long long n, const std::map<long long, int>& primes);
    int chi(long long d) const;
    bool multiplicative() const;  // chi(d1) chi(d2) = chi(d1*d2 / gcd^2)
};

struct InvolutionWitness {
    ExponentMatrix key, image;
    Rational value, image_value;
};
struct InvolutionResult {
    bool consistent = false;
    bool determined = false;  // at least one nonzero pair seen
    int eps = 1;
    uint64_t pairs = 0, skipped = 0;
    std::vector<InvolutionWitness> witnesses;
};
// Scan all in-bound pairs (T, mu T); the unique consistent sign, or a
// failure with conflicting witnesses.
InvolutionResult check_involution(const ParamodularTable& t);

struct StrongSymmetryViolation {
    size_t element_index;
    ExponentMatrix key, image;
    Rational expected, found;
};
struct StrongSymmetryReport {
    uint64_t pairs_checked = 0, skipped = 0;
    std::vector<StrongSymmetryViolation> violations;
    bool pass() const { return violations.empty(); }
};

// translation, reflection diag(1,-1), -identity, and W_d for every d || N;
// for N <= 3 translation and the Fricke element already generate.
std::vector<Gamma0StarElement> default_gamma0_star_elements(long long n);

// a((u T t(u))/d) = chi(d) det(u/sqrt d)^k a(T) over the element set.
StrongSymmetryReport check_strong_symmetry(const ParamodularTable& t, long k,
                                           const SignCharacter& chi,
                                           const std::vector<Gamma0StarElement>& elements);

// Experiment: does the involution condition already force strong symmetry
// on the available keys? Tries every character with chi(N) = eps.
struct InvolutionVsStrongReport {
    bool involution_holds = false;
    int eps = 1;
    bool some_character_passes = false;
    std::vector<std::string> tried;
};
InvolutionVsStrongReport involution_vs_strong(const ParamodularTable& t, long k);

}  // namespace smf

#endif
