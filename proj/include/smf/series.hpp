#ifndef SMF_SERIES_HPP
#define SMF_SERIES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "smf/characteristics.hpp"
#include "smf/exponent.hpp"
#include "smf/rational.hpp"

namespace smf {

// Trace-truncated Fourier expansion of a genus-n form. Keys are E = 8T with
// tr(E) <= trunc; an absent key means coefficient zero. The weight is
// metadata (rational: a single theta constant has weight 1/2).
struct SiegelFourierSeries {
    int genus = 0;
    Rational weight = Rational(0);
    int64_t trunc = 0;
    std::map<ExponentMatrix, GaussianRational> coeffs;

    SiegelFourierSeries() = default;
    SiegelFourierSeries(int n, Rational k, int64_t b)
        : genus(n), weight(std::move(k)), trunc(b) {}

    static SiegelFourierSeries one(int n, int64_t b);
    static SiegelFourierSeries zero(int n, const Rational& k, int64_t b) {
        return SiegelFourierSeries(n, k, b);
    }

    GaussianRational coeff(const ExponentMatrix& e) const {
        auto it = coeffs.find(e);
        return it == coeffs.end() ? GaussianRational() : it->second;
    }
    void add_to(const ExponentMatrix& e, const GaussianRational& c);
    bool is_zero() const { return coeffs.empty(); }
    size_t support_size() const { return coeffs.size(); }

    friend bool operator==(const SiegelFourierSeries&, const SiegelFourierSeries&) = default;
};

// Ring operations. add requires equal genus and weight; mul convolves keys
// with output trunc = min(trunc_f, trunc_g), which is exact because psd keys
// have nonnegative trace.
SiegelFourierSeries add(const SiegelFourierSeries& f, const SiegelFourierSeries& g);
SiegelFourierSeries sub(const SiegelFourierSeries& f, const SiegelFourierSeries& g);
SiegelFourierSeries neg(SiegelFourierSeries f);
SiegelFourierSeries scale(SiegelFourierSeries f, const GaussianRational& c);
SiegelFourierSeries mul(const SiegelFourierSeries& f, const SiegelFourierSeries& g);
SiegelFourierSeries pow(const SiegelFourierSeries& f, uint32_t e);

// Siegel Phi operator: keep keys whose last row and column vanish, drop that
// row/column. Weight and trunc are preserved.
SiegelFourierSeries phi(const SiegelFourierSeries& f);

// f(diag(tau1, tau2)): coefficient at (E1, E2) is the sum of f's
// coefficients over all keys with those diagonal blocks.
struct BlockRestriction {
    int n1 = 0, n2 = 0;
    int64_t trunc = 0;
    std::map<std::pair<ExponentMatrix, ExponentMatrix>, GaussianRational> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    friend bool operator==(const BlockRestriction&, const BlockRestriction&) = default;
};
BlockRestriction restrict_block(const SiegelFourierSeries& f, int n1);

// Outer product f1 (x) f2 as a BlockRestriction table, truncated so that
// tr E1 + tr E2 <= trunc.
BlockRestriction tensor_blocks(const SiegelFourierSeries& f1, const SiegelFourierSeries& f2,
                               int64_t trunc);
BlockRestriction mul_blocks(const BlockRestriction& x, const BlockRestriction& y);

// Symmetry (eq for the Siegel parabolic): a(t(u) E u) = det(u)^k a(E) for
// unimodular u. Only key pairs that both stay inside trunc are checked.
struct GlSymmetryViolation {
    size_t generator_index;
    ExponentMatrix key;
    GaussianRational expected, found;
};
struct GlSymmetryReport {
    uint64_t pairs_checked = 0;
    std::vector<GlSymmetryViolation> violations;
    bool pass() const { return violations.empty(); }
};
GlSymmetryReport check_gl_symmetry(const SiegelFourierSeries& f, long k,
                                   const std::vector<IMat>& generators);

// Phi f = 0 up to trunc.
bool is_cusp_qexp(const SiegelFourierSeries& f);

// Lemma-style combinatorial cuspidality of theta[S]^8: every set in the
// orbit of S must contain a characteristic whose a-vector has odd last
// entry. BFS over the set orbit, with a node budget.
enum class TriState { False, True, Inconclusive };
TriState cuspidality_combinatorial(const CharacteristicSet& s, uint64_t node_budget = 1u << 20);

}  // namespace smf

#endif
