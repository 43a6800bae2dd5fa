#ifndef SMF_THETA_HPP
#define SMF_THETA_HPP

#include "smf/characteristics.hpp"
#include "smf/hn.hpp"
#include "smf/series.hpp"

namespace smf {

// Exact q-expansion of the theta constant
//   theta[m](tau) = sum_x exp(pi i (t(x+a/2) tau (x+a/2) + t(x+a/2) b)).
// A term with integer vector w = 2x + a contributes i^(t(w) b) at the key
// E = w t(w); terms with tr(E) = |w|^2 <= bound are collected. Weight 1/2.
SiegelFourierSeries theta_qexp(const ThetaCharacteristic& m, int64_t bound);

// Numerical value of the same sum with tail error <= tol. Odd
// characteristics short-circuit to exactly zero.
Complex theta_numeric(const ThetaCharacteristic& m, const PointInHn& tau, double tol);

// Value of theta[S]^8-style products from per-characteristic values;
// kept here for the evaluators in constructions.
struct ThetaCache {
    PointInHn tau;
    double tol;
    std::vector<Complex> values;  // indexed by ThetaCharacteristic::index()

    ThetaCache(const PointInHn& t, double tolerance);
    Complex value(const ThetaCharacteristic& m) const { return values[m.index()]; }
    Complex set_power8(const CharacteristicSet& s) const;  // prod theta[m]^8
};

}  // namespace smf

#endif
