#include "smf/formal_fj.hpp"

#include <numeric>
#include <stdexcept>

namespace smf {

FourierTable fourier_table(const SiegelFourierSeries& f) {
    if (f.genus != 2) throw std::invalid_argument("fourier_table: genus 2 only");
    FourierTable t;
    t.weight = f.weight;
    t.trunc = f.trunc;
    for (const auto& [e, c] : f.coeffs) {
        if (!c.is_real())
            throw std::domain_error("fourier_table: coefficient has nonzero imaginary part at " +
                                    e.str());
        t.coeffs.emplace(e, c.re);
    }
    return t;
}

SiegelFourierSeries to_series(const FourierTable& t) {
    SiegelFourierSeries f(2, t.weight, t.trunc);
    for (const auto& [e, c] : t.coeffs) f.add_to(e, GaussianRational(c));
    return f;
}

JacobiValidationReport validate_jacobi(const JacobiTable& t) {
    JacobiValidationReport rep;
    int64_t m = t.index;
    int64_t nmax = 0;
    for (const auto& [key, c] : t.coeffs) {
        auto [n, r] = key;
        if (n < 0 || m < 0 || 4 * n * m - r * r < 0) {
            rep.psd_ok = false;
            rep.bad_support.push_back(key);
        }
        nmax = std::max(nmax, n);
    }
    if (m > 0) {
        for (const auto& [key, c] : t.coeffs) {
            auto [n, r] = key;
            for (int64_t lam = -nmax - 1; lam <= nmax + 1; ++lam) {
                if (lam == 0) continue;
                int64_t n2 = n + lam * r + lam * lam * m;
                int64_t r2 = r + 2 * lam * m;
                if (n2 < 0 || n2 > nmax) continue;
                Rational other = t.coeff(n2, r2);
                if (cmp(other, c) != 0) {
                    rep.elliptic_ok = false;
                    rep.violations.push_back({n, r, n2, r2, c, other});
                }
            }
        }
    }
    return rep;
}

FormalFJSeries fj_decompose(const SiegelFourierSeries& f) {
    if (f.genus != 2) throw std::invalid_argument("fj_decompose: genus 2 only");
    FourierTable ft = fourier_table(f);

    // pick the smallest scaling denominator h = 8/g that makes all three
    // scaled coordinates integral
    int64_t g = 8;
    for (const auto& [e, c] : ft.coeffs) {
        g = std::gcd(g, e.get(0, 0));
        g = std::gcd(g, e.get(1, 1));
        g = std::gcd(g, 2 * e.get(0, 1));
    }
    if (g == 0) g = 8;

    FormalFJSeries s;
    s.weight = f.weight;
    s.denom = 8 / g;
    int64_t maxm = 0;
    for (const auto& [e, c] : ft.coeffs) maxm = std::max(maxm, e.get(1, 1) / g);
    s.tables.resize(maxm + 1);
    for (int64_t m = 0; m <= maxm; ++m) {
        s.tables[m].index = m;
        s.tables[m].weight = f.weight;
        s.tables[m].denom = s.denom;
    }
    for (const auto& [e, c] : ft.coeffs)
        s.tables[e.get(1, 1) / g].coeffs.emplace(
            std::make_pair(e.get(0, 0) / g, 2 * e.get(0, 1) / g), c);
    return s;
}

FourierTable assemble_formal_fourier(const FormalFJSeries& s) {
    FourierTable t;
    t.weight = s.weight;
    int64_t h = s.denom;
    int64_t maxtrace = 0;
    for (const auto& tab : s.tables) {
        if (tab.denom != h) throw std::invalid_argument("assemble: mixed denominators");
        for (const auto& [key, c] : tab.coeffs) {
            auto [n, r] = key;
            if ((8 * n) % h || (8 * tab.index) % h || (4 * r) % h)
                throw std::invalid_argument("assemble: scaling mismatch, key off the E-lattice");
            ExponentMatrix e(2);
            e.set(0, 0, 8 * n / h);
            e.set(1, 1, 8 * tab.index / h);
            e.set(0, 1, 4 * r / h);
            if (!is_psd(e))
                throw std::domain_error("assemble: key violates psd support at " + e.str());
            if (sgn(c) == 0) continue;
            auto [it, inserted] = t.coeffs.emplace(e, c);
            if (!inserted) throw std::invalid_argument("assemble: duplicate key " + e.str());
            maxtrace = std::max(maxtrace, e.trace());
        }
    }
    t.trunc = maxtrace;
    return t;
}

std::vector<IMat> default_gl2_generators() {
    std::vector<IMat> gens;
    IMat t = IMat::identity(2);
    t(0, 1) = 1;
    gens.push_back(t);
    IMat s(2, 2);
    s(0, 1) = 1;
    s(1, 0) = 1;
    gens.push_back(s);
    IMat r = IMat::identity(2);
    r(0, 0) = -1;
    gens.push_back(r);
    return gens;
}

SymmetryReport check_symmetric(const FourierTable& t, long k, const std::vector<IMat>& generators) {
    SymmetryReport rep;
    for (size_t gi = 0; gi < generators.size(); ++gi) {
        const IMat& u = generators[gi];
        if (u.rows != 2 || u.cols != 2)
            throw std::invalid_argument("check_symmetric: 2x2 generators expected");
        long long det = imat_det(u);
        if (det != 1 && det != -1)
            throw std::invalid_argument("check_symmetric: generator not unimodular");
        Rational sign((det < 0 && (k % 2 != 0)) ? -1 : 1);
        for (const auto& [e, c] : t.coeffs) {
            ExponentMatrix img = transform(e, u);
            if (img.trace() > t.trunc) continue;
            ++rep.pairs_checked;
            Rational expected = sign * c;
            Rational found = t.coeff(img);
            if (cmp(expected, found) != 0) rep.violations.push_back({gi, e, expected, found});
        }
    }
    return rep;
}

}  // namespace smf
