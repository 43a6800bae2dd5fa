#include "smf/theta.hpp"

#include <cmath>
#include <stdexcept>

namespace smf {

SiegelFourierSeries theta_qexp(const ThetaCharacteristic& m, int64_t bound) {
    if (bound < 0) throw std::invalid_argument("theta_qexp: bound must be >= 0");
    SiegelFourierSeries f(m.n, make_rational(1, 2), bound);
    std::vector<long long> w(m.n, 0);
    // w = 2x + a runs over integer vectors with w == a (mod 2) and
    // tr(w t(w)) = |w|^2 <= bound
    struct Rec {
        int n;
        const ThetaCharacteristic& m;
        SiegelFourierSeries& out;
        std::vector<long long>& w;
        void go(int coord, int64_t budget) {
            if (coord == n) {
                long tw_b = 0;
                for (int i = 0; i < n; ++i) tw_b += static_cast<long>(w[i]) * m.b_entry(i);
                out.add_to(rank_one(w), GaussianRational::i_power(tw_b));
                return;
            }
            for (long long v = m.a_entry(coord); v * v <= budget; v += 2) {
                w[coord] = v;
                go(coord + 1, budget - v * v);
                if (v != 0) {
                    w[coord] = -v;
                    go(coord + 1, budget - v * v);
                }
            }
            w[coord] = 0;
        }
    };
    Rec rec{m.n, m, f, w};
    rec.go(0, bound);
    return f;
}

namespace {

// Lattice points with max-norm in (r-1, r] number at most
// (2r+1)^n - (2r-1)^n and satisfy |v|^2 > (r-1)^2.
double tail_bound(int n, double lambda, long long radius) {
    double tail = 0.0;
    for (long long r = radius + 1;; ++r) {
        double shell = std::pow(2.0 * r + 1.0, n) - std::pow(2.0 * r - 1.0, n);
        double term = shell * std::exp(-M_PI * lambda * (r - 1.0) * (r - 1.0));
        tail += term;
        if (term < 1e-300 || term < tail * 1e-18) break;
        if (r > radius + 10000) return tail + 1.0;  // not converging at this radius
    }
    return tail;
}

}  // namespace

Complex theta_numeric(const ThetaCharacteristic& m, const PointInHn& tau, double tol) {
    if (tol <= 0) throw std::invalid_argument("theta_numeric: tol must be positive");
    if (m.n != tau.n) throw std::invalid_argument("theta_numeric: genus mismatch");
    if (!is_even(m)) return Complex(0);

    int n = m.n;
    double lambda = lambda_min_lower_bound(tau.imag());
    long long radius = 1;
    while (tail_bound(n, lambda, radius) >= tol) {
        ++radius;
        if (radius > 10000) throw std::domain_error("theta_numeric: tolerance unreachable");
    }

    // v = x + a/2; x in [-radius-1, radius] covers |v|_inf <= radius for
    // both parities
    std::vector<double> v(n, 0.0);
    std::vector<long long> x(n, 0);
    Complex sum(0);
    int coord = 0;
    x[0] = -radius - 2;
    while (coord >= 0) {
        if (coord == n) {
            Complex quad(0);
            for (int i = 0; i < n; ++i) {
                quad += v[i] * v[i] * tau.tau(i, i);
                for (int j = i + 1; j < n; ++j) quad += 2.0 * v[i] * v[j] * tau.tau(i, j);
            }
            double lin = 0.0;
            for (int i = 0; i < n; ++i) lin += v[i] * m.b_entry(i);
            sum += std::exp(Complex(0, M_PI) * (quad + lin));
            --coord;
            continue;
        }
        ++x[coord];
        if (x[coord] > radius) {
            x[coord] = -radius - 2;
            --coord;
            continue;
        }
        v[coord] = x[coord] + 0.5 * m.a_entry(coord);
        ++coord;
        if (coord < n) x[coord] = -radius - 2;
    }
    return sum;
}

ThetaCache::ThetaCache(const PointInHn& t, double tolerance) : tau(t), tol(tolerance) {
    int n = t.n;
    values.assign(1u << (2 * n), Complex(0));
    for (uint32_t idx = 0; idx < values.size(); ++idx) {
        ThetaCharacteristic m = ThetaCharacteristic::from_index(n, idx);
        if (is_even(m)) values[idx] = theta_numeric(m, tau, tol);
    }
}

Complex ThetaCache::set_power8(const CharacteristicSet& s) const {
    Complex prod(1);
    for (const auto& m : s.members) {
        Complex t = values[m.index()];
        Complex t2 = t * t, t4 = t2 * t2;
        prod *= t4 * t4;
    }
    return prod;
}

}  // namespace smf
