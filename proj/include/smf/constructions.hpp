#ifndef SMF_CONSTRUCTIONS_HPP
#define SMF_CONSTRUCTIONS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "smf/series.hpp"
#include "smf/theta.hpp"

namespace smf {

enum class NamedForm { FNull, F1, FT, FH, F12, F111 };

NamedForm named_form_from_string(const std::string& s);
std::string named_form_name(NamedForm f);

// Closed-form weights: theta[S] has weight |S|/2, F_null weight
// 2^{n-2}(2^n+1), F_1 weight 2^{n+1}(2^n+1)-4, F_T weight 8, F_H weight
// 2 binom(2n+2, n+1).
Rational named_form_weight(NamedForm f, int n);

// Exact q-expansion. F_null and F_1 are feasible for n <= 3, F_T for
// n <= 4 at small trunc; infeasible combinations throw std::domain_error
// carrying a cost estimate. F_H throws: the defining sets of v(n)
// characteristics come from external tables that are not part of this
// library (only the count v(4) = 10 is recorded).
SiegelFourierSeries construct_named(NamedForm f, int n, int64_t trunc);
int hyperelliptic_set_size_v4();  // = 10

// prod over S of theta[m], to the given power
SiegelFourierSeries theta_set_product(const CharacteristicSet& s, uint32_t power, int64_t trunc);

// F_1 = sum_m theta[E_n \ m]^8 assembled with prefix/suffix partial
// products (no series division).
SiegelFourierSeries f1_series(int n, int64_t trunc);

// Integer q-expansion of Delta = q prod (1-q^m)^24 in E-scaled keys
// (coefficient of q^k sits at E = [8k]). Independent eta-product oracle.
std::vector<Integer> delta_eta_coefficients(int64_t trunc);

struct DeltaCompareReport {
    bool pass = false;
    Rational constant;          // F_null^8 = constant * Delta
    int64_t first_nonzero_key;  // in E units
    uint64_t keys_checked = 0;
    std::string failure;
};
DeltaCompareReport delta_compare(int64_t trunc);

// The two computable facts behind the restriction identity of F_{1,2}:
// summand splitting (restriction of each theta factor is the outer product
// of the block thetas), the 80/24 multiplicity count, vanishing of
// odd-first-component summands, and the proportionality constants tying
// theta[E_1]^8 to Delta and theta[E_2]^2 to chi_10.
struct F12Report {
    bool pass = false;
    uint64_t factors_checked = 0;
    uint64_t multiplicity_m1 = 0;  // occurrences of each genus-1 characteristic
    uint64_t multiplicity_m2 = 0;
    bool odd_summand_vanishes = false;
    bool window_identity = false;  // restrict(theta[E12]^8) == tensor, as truncated tables
    Rational delta_constant;       // theta[E_1]^8 = c * Delta
    std::string failure;
};
F12Report verify_f12_restriction(int64_t trunc);

// Numerical evaluation of the named forms through cached theta values.
// Pushforward forms need the set orbit; budget exhaustion is reported by
// OrbitBudgetExhausted.
struct OrbitBudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};
Complex eval_named_numeric(NamedForm f, const ThetaCache& cache, uint64_t orbit_budget = 1u << 20);

// Sampling check: for each point record per-form magnitudes and flag the
// points where every form is below tol. Never a proof.
struct ScanRow {
    size_t point_index;
    std::vector<double> magnitudes;
    bool flagged;
};
struct ScanReport {
    std::vector<ScanRow> rows;
    size_t flag_count = 0;
};
ScanReport scan_common_zeros(const std::vector<PointInHn>& points,
                             const std::vector<NamedForm>& forms, double tol,
                             uint64_t orbit_budget = 1u << 20);

// Reducible-locus sampling behind the no-common-zero statement for genus 3:
// at seeded points diag(tau1, tau2) the forms F_null and F_1 must vanish
// relative to scale = |theta[E_1](tau1)^80 theta[E_2](tau2)^24| while
// F_{1,2} or F_{1,1,1} stays away from zero.
struct Acn3Row {
    double scale;
    double f_null, f_1, f_12, f_111;
    bool pass_vanishing, pass_nonvanishing;
};
struct Acn3Report {
    std::vector<Acn3Row> rows;
    bool pass = false;
    size_t common_zero_flags = 0;
    uint64_t seed = 0;
};
Acn3Report acn3_scan(size_t num_points, uint64_t seed, double tol_zero = 1e-6,
                     double tol_nonzero = 1e-3, uint64_t orbit_budget = 1u << 20);

// Genus-4 analogue on the two reducible strata (1+3 and 2+2 splits); the
// five pushforward cusp forms of the covering argument must not vanish
// simultaneously at any sampled point.
struct Acn4Report {
    size_t points = 0;
    size_t common_zero_flags = 0;
    bool pass = false;
    bool inconclusive = false;
    uint64_t seed = 0;
};
Acn4Report acn4_scan(size_t num_points, uint64_t seed, double tol = 1e-8,
                     uint64_t orbit_budget = 1u << 21);

// Seeded sample boxes used by the scans (also exposed for tests).
PointInHn random_siegel_box_point(int n, uint64_t& state);

}  // namespace smf

#endif
