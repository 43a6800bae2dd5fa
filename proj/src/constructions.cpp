#include "smf/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace smf {

NamedForm named_form_from_string(const std::string& s) {
    if (s == "F_null" || s == "f_null" || s == "fnull") return NamedForm::FNull;
    if (s == "F_1" || s == "f_1" || s == "f1") return NamedForm::F1;
    if (s == "F_T" || s == "f_T" || s == "ft") return NamedForm::FT;
    if (s == "F_H" || s == "f_H" || s == "fh") return NamedForm::FH;
    if (s == "F_12" || s == "f_12" || s == "f12") return NamedForm::F12;
    if (s == "F_111" || s == "f_111" || s == "f111") return NamedForm::F111;
    throw std::invalid_argument("unknown named form: " + s);
}

std::string named_form_name(NamedForm f) {
    switch (f) {
        case NamedForm::FNull: return "F_null";
        case NamedForm::F1: return "F_1";
        case NamedForm::FT: return "F_T";
        case NamedForm::FH: return "F_H";
        case NamedForm::F12: return "F_12";
        case NamedForm::F111: return "F_111";
    }
    return "?";
}

namespace {

Integer binomial(int n, int k) {
    Integer b(1);
    for (int i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

}  // namespace

Rational named_form_weight(NamedForm f, int n) {
    switch (f) {
        case NamedForm::FNull:
            return make_rational(1, 4) * Rational(static_cast<long>((1l << (n - 1)) * ((1l << n) + 1))) * 2;
        case NamedForm::F1:
            return Rational(static_cast<long>((1l << (n + 1)) * ((1l << n) + 1) - 4));
        case NamedForm::FT:
            return Rational(8);
        case NamedForm::FH:
            return Rational(2) * Rational(binomial(2 * n + 2, n + 1));
        case NamedForm::F12:
            if (n != 3) throw std::invalid_argument("F_12 lives in genus 3");
            return Rational(120);
        case NamedForm::F111:
            if (n != 3) throw std::invalid_argument("F_111 lives in genus 3");
            return Rational(108);
    }
    throw std::logic_error("named_form_weight");
}

SiegelFourierSeries theta_set_product(const CharacteristicSet& s, uint32_t power, int64_t trunc) {
    SiegelFourierSeries acc = SiegelFourierSeries::one(s.n, trunc);
    for (const auto& m : s.members) {
        SiegelFourierSeries th = theta_qexp(m, trunc);
        if (power != 1) th = pow(th, power);
        acc = mul(acc, th);
        if (acc.is_zero()) break;  // truncation floor passed; product stays empty
    }
    acc.weight = make_rational(1, 2) * Rational(static_cast<long>(s.size())) * power;
    return acc;
}

SiegelFourierSeries f1_series(int n, int64_t trunc) {
    CharacteristicSet en = CharacteristicSet::full_even(n);
    std::vector<SiegelFourierSeries> eighth;
    eighth.reserve(en.size());
    for (const auto& m : en.members) eighth.push_back(pow(theta_qexp(m, trunc), 8));

    size_t k = eighth.size();
    std::vector<SiegelFourierSeries> prefix(k + 1), suffix(k + 1);
    prefix[0] = SiegelFourierSeries::one(n, trunc);
    for (size_t i = 0; i < k; ++i) prefix[i + 1] = mul(prefix[i], eighth[i]);
    suffix[k] = SiegelFourierSeries::one(n, trunc);
    for (size_t i = k; i-- > 0;) suffix[i] = mul(suffix[i + 1], eighth[i]);

    SiegelFourierSeries acc(n, named_form_weight(NamedForm::F1, n), trunc);
    for (size_t i = 0; i < k; ++i) {
        SiegelFourierSeries term = mul(prefix[i], suffix[i + 1]);
        term.weight = acc.weight;
        acc = add(acc, term);
    }
    return acc;
}

namespace {

void reject_infeasible(NamedForm f, int n, int64_t trunc) {
    int maxn = (f == NamedForm::FT) ? 4 : 3;
    double keys = std::pow(static_cast<double>(trunc) + 1.0, n * (n + 1) / 2.0);
    if (n >= 1 && n <= maxn && keys <= 5e8) return;
    std::ostringstream os;
    os << named_form_name(f) << " q-expansion infeasible at genus " << n << ", trunc " << trunc
       << " (~" << keys << " candidate keys; supported: genus <= " << maxn << ")";
    throw std::domain_error(os.str());
}

}  // namespace

SiegelFourierSeries construct_named(NamedForm f, int n, int64_t trunc) {
    switch (f) {
        case NamedForm::FNull: {
            reject_infeasible(f, n, trunc);
            return theta_set_product(CharacteristicSet::full_even(n), 1, trunc);
        }
        case NamedForm::F1: {
            reject_infeasible(f, n, trunc);
            return f1_series(n, trunc);
        }
        case NamedForm::FT: {
            reject_infeasible(f, n, trunc);
            CharacteristicSet en = CharacteristicSet::full_even(n);
            SiegelFourierSeries sum8(n, Rational(4), trunc);
            SiegelFourierSeries sum16(n, Rational(8), trunc);
            for (const auto& m : en.members) {
                SiegelFourierSeries t8 = pow(theta_qexp(m, trunc), 8);
                SiegelFourierSeries t16 = mul(t8, t8);
                t8.weight = Rational(4);
                t16.weight = Rational(8);
                sum8 = add(sum8, t8);
                sum16 = add(sum16, t16);
            }
            SiegelFourierSeries sq = mul(sum8, sum8);
            SiegelFourierSeries r = sub(scale(sum16, GaussianRational(Rational(1l << n))), sq);
            r.weight = Rational(8);
            return r;
        }
        case NamedForm::FH:
            throw std::domain_error(
                "F_H requires external data: the hyperelliptic characteristic sets are cited "
                "from outside sources and not reproduced here (only v(4) = 10 is recorded)");
        case NamedForm::F12:
        case NamedForm::F111:
            throw std::domain_error(named_form_name(f) +
                                    " is a genus-3 pushforward; its full q-expansion is not an "
                                    "API promise, use the numerical evaluator");
    }
    throw std::logic_error("construct_named");
}

int hyperelliptic_set_size_v4() { return 10; }

std::vector<Integer> delta_eta_coefficients(int64_t trunc) {
    int64_t qmax = trunc / 8;
    // prod_{m>=1} (1-q^m)^24 up to q^qmax, then shift by one power of q
    std::vector<Integer> p(qmax + 1, Integer(0));
    if (qmax < 0) return p;
    p[0] = 1;
    for (int64_t m = 1; m <= qmax; ++m)
        for (int rep = 0; rep < 24; ++rep)
            for (int64_t k = qmax; k >= m; --k) p[k] -= p[k - m];
    std::vector<Integer> delta(qmax + 1, Integer(0));
    for (int64_t k = 1; k <= qmax; ++k) delta[k] = p[k - 1];
    return delta;
}

DeltaCompareReport delta_compare(int64_t trunc) {
    if (trunc < 16) throw std::invalid_argument("delta_compare: trunc >= 16 required");
    DeltaCompareReport rep;
    SiegelFourierSeries fnull8 = pow(construct_named(NamedForm::FNull, 1, trunc), 8);
    std::vector<Integer> delta = delta_eta_coefficients(trunc);

    rep.first_nonzero_key = -1;
    for (const auto& [e, c] : fnull8.coeffs) {
        if (rep.first_nonzero_key < 0) rep.first_nonzero_key = e.get(0, 0);
        if (e.get(0, 0) % 8 != 0) {
            rep.failure = "support off the q-lattice at E = " + e.str();
            return rep;
        }
    }
    ExponentMatrix e8(1);
    e8.set(0, 0, 8);
    GaussianRational lead = fnull8.coeff(e8);
    if (lead.is_zero() || !lead.is_real()) {
        rep.failure = "leading coefficient at q^1 missing";
        return rep;
    }
    rep.constant = lead.re;  // Delta has coefficient 1 at q^1
    for (int64_t k = 0; 8 * k <= trunc; ++k) {
        ExponentMatrix e(1);
        e.set(0, 0, 8 * k);
        GaussianRational got = fnull8.coeff(e);
        Rational want = rep.constant * Rational(delta[k]);
        if (!(got == GaussianRational(want))) {
            rep.failure = "coefficient mismatch at q^" + std::to_string(k);
            return rep;
        }
        ++rep.keys_checked;
    }
    rep.pass = true;
    return rep;
}

F12Report verify_f12_restriction(int64_t trunc) {
    if (trunc < 16)
        throw std::invalid_argument("verify_f12_restriction: trunc >= 16 required "
                                    "(odd-component summands first appear at trace 16)");
    F12Report rep;
    CharacteristicSet e1 = CharacteristicSet::full_even(1);
    CharacteristicSet e2 = CharacteristicSet::full_even(2);
    CharacteristicSet e12 = CharacteristicSet::product(e1, e2);

    // multiplicity of each block characteristic inside E_1 x E_2
    rep.multiplicity_m1 = e2.size();  // each m1 paired with every m2
    rep.multiplicity_m2 = e1.size();
    if (e12.size() != e1.size() * e2.size()) {
        rep.failure = "product set has wrong cardinality";
        return rep;
    }

    // summand splitting: restrict(theta[(m1,m2)]^8) = theta[m1]^8 (x) theta[m2]^8
    for (const auto& m1 : e1.members) {
        SiegelFourierSeries t1 = pow(theta_qexp(m1, trunc), 8);
        for (const auto& m2 : e2.members) {
            ThetaCharacteristic m = ThetaCharacteristic::concat(m1, m2);
            BlockRestriction lhs = restrict_block(pow(theta_qexp(m, trunc), 8), 1);
            BlockRestriction rhs = tensor_blocks(t1, pow(theta_qexp(m2, trunc), 8), trunc);
            if (!(lhs.coeffs == rhs.coeffs)) {
                rep.failure = "summand splitting fails at " + m.str();
                return rep;
            }
            ++rep.factors_checked;
        }
    }

    // odd x odd components give an even genus-3 characteristic whose
    // restriction cancels identically
    ThetaCharacteristic odd1(1, 1, 1);
    ThetaCharacteristic odd2(2, 1, 1);  // a=(1,0), b=(1,0)
    ThetaCharacteristic modd = ThetaCharacteristic::concat(odd1, odd2);
    if (!is_even(modd)) {
        rep.failure = "internal: odd x odd is not even";
        return rep;
    }
    SiegelFourierSeries todd = pow(theta_qexp(modd, trunc), 8);
    rep.odd_summand_vanishes = restrict_block(todd, 1).is_zero() && !todd.is_zero();
    if (!rep.odd_summand_vanishes) {
        rep.failure = "odd-component summand does not restrict to zero";
        return rep;
    }

    // the assembled identity on the truncated window
    BlockRestriction lhs = restrict_block(theta_set_product(e12, 8, trunc), 1);
    SiegelFourierSeries left80 = pow(theta_set_product(e1, 1, trunc), 80);
    SiegelFourierSeries right24 = pow(theta_set_product(e2, 1, trunc), 24);
    rep.window_identity = lhs.coeffs == tensor_blocks(left80, right24, trunc).coeffs;
    if (!rep.window_identity) {
        rep.failure = "window identity fails";
        return rep;
    }

    // proportionality constant theta[E_1]^8 = c * Delta (then the 80/24
    // powers are c^10 Delta^10 chi_10^12 with chi_10 = theta[E_2]^2)
    DeltaCompareReport dc = delta_compare(std::max<int64_t>(trunc, 32));
    if (!dc.pass) {
        rep.failure = "delta comparison failed: " + dc.failure;
        return rep;
    }
    rep.delta_constant = dc.constant;
    rep.pass = true;
    return rep;
}

namespace {

Complex pow8(Complex z) {
    Complex z2 = z * z, z4 = z2 * z2;
    return z4 * z4;
}

const CharacteristicSet& pushforward_seed(NamedForm f) {
    static CharacteristicSet e12 =
        CharacteristicSet::product(CharacteristicSet::full_even(1), CharacteristicSet::full_even(2));
    static CharacteristicSet e111 = CharacteristicSet::product(
        CharacteristicSet::product(CharacteristicSet::full_even(1), CharacteristicSet::full_even(1)),
        CharacteristicSet::full_even(1));
    switch (f) {
        case NamedForm::F12: return e12;
        case NamedForm::F111: return e111;
        default: throw std::invalid_argument("not a pushforward form");
    }
}

// orbit sums reuse the BFS result across evaluations
Complex eval_pushforward(const CharacteristicSet& seed, const ThetaCache& cache,
                         uint64_t orbit_budget) {
    SetOrbit orbit = set_orbit(seed, orbit_budget);
    if (!orbit.complete) throw OrbitBudgetExhausted("set orbit exceeded the node budget");
    Complex sum(0);
    for (const auto& s : orbit.sets) sum += cache.set_power8(s);
    return static_cast<double>(orbit.stabilizer_order) * sum;
}

}  // namespace

Complex eval_named_numeric(NamedForm f, const ThetaCache& cache, uint64_t orbit_budget) {
    int n = cache.tau.n;
    switch (f) {
        case NamedForm::FNull: {
            Complex prod(1);
            for (const auto& m : even_characteristics(n)) prod *= cache.value(m);
            return prod;
        }
        case NamedForm::F1: {
            auto even = even_characteristics(n);
            size_t k = even.size();
            std::vector<Complex> p8(k);
            for (size_t i = 0; i < k; ++i) p8[i] = pow8(cache.value(even[i]));
            std::vector<Complex> pre(k + 1, Complex(1)), suf(k + 1, Complex(1));
            for (size_t i = 0; i < k; ++i) pre[i + 1] = pre[i] * p8[i];
            for (size_t i = k; i-- > 0;) suf[i] = suf[i + 1] * p8[i];
            Complex sum(0);
            for (size_t i = 0; i < k; ++i) sum += pre[i] * suf[i + 1];
            return sum;
        }
        case NamedForm::FT: {
            Complex s8(0), s16(0);
            for (const auto& m : even_characteristics(n)) {
                Complex v8 = pow8(cache.value(m));
                s8 += v8;
                s16 += v8 * v8;
            }
            return std::pow(2.0, n) * s16 - s8 * s8;
        }
        case NamedForm::F12:
        case NamedForm::F111: {
            if (n != 3) throw std::invalid_argument("pushforward forms live in genus 3");
            return eval_pushforward(pushforward_seed(f), cache, orbit_budget);
        }
        case NamedForm::FH:
            throw std::domain_error("F_H requires external data (hyperelliptic sets)");
    }
    throw std::logic_error("eval_named_numeric");
}

ScanReport scan_common_zeros(const std::vector<PointInHn>& points,
                             const std::vector<NamedForm>& forms, double tol,
                             uint64_t orbit_budget) {
    ScanReport rep;
    for (size_t i = 0; i < points.size(); ++i) {
        ThetaCache cache(points[i], 1e-14);
        ScanRow row;
        row.point_index = i;
        bool all_small = !forms.empty();
        for (NamedForm f : forms) {
            double mag = std::abs(eval_named_numeric(f, cache, orbit_budget));
            row.magnitudes.push_back(mag);
            if (mag >= tol) all_small = false;
        }
        row.flagged = all_small;
        if (all_small) ++rep.flag_count;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

namespace {

double next_uniform(uint64_t& state) {  // xorshift64*, deterministic across platforms
    state ^= state >> 12;
    state ^= state << 25;
    state ^= state >> 27;
    uint64_t z = state * 2685821657736338717ull;
    return static_cast<double>(z >> 11) * (1.0 / 9007199254740992.0);
}

double in_range(uint64_t& state, double lo, double hi) {
    return lo + (hi - lo) * next_uniform(state);
}

}  // namespace

PointInHn random_siegel_box_point(int n, uint64_t& state) {
    CMat t(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            double x = in_range(state, -0.4, 0.4);
            double y;
            if (i == j)
                y = in_range(state, 1.0 + 0.3 * i, 1.3 + 0.3 * i);
            else
                y = in_range(state, -0.25, 0.25);
            t(i, j) = Complex(x, y);
            t(j, i) = Complex(x, y);
        }
    return PointInHn(n, t);
}

Acn3Report acn3_scan(size_t num_points, uint64_t seed, double tol_zero, double tol_nonzero,
                     uint64_t orbit_budget) {
    Acn3Report rep;
    rep.seed = seed;
    uint64_t state = seed ? seed : 0x9e3779b97f4a7c15ull;

    SetOrbit orbit12 = set_orbit(pushforward_seed(NamedForm::F12), orbit_budget);
    SetOrbit orbit111 = set_orbit(pushforward_seed(NamedForm::F111), orbit_budget);
    if (!orbit12.complete || !orbit111.complete)
        throw OrbitBudgetExhausted("acn3_scan: set orbit exceeded the node budget");

    CharacteristicSet e1 = CharacteristicSet::full_even(1);
    CharacteristicSet e2 = CharacteristicSet::full_even(2);

    rep.pass = true;
    for (size_t p = 0; p < num_points; ++p) {
        PointInHn t1 = random_siegel_box_point(1, state);
        PointInHn t2 = random_siegel_box_point(2, state);
        PointInHn t = PointInHn::block_diag(t1, t2);

        ThetaCache c1(t1, 1e-14), c2(t2, 1e-14), c3(t, 1e-14);

        // scale: the per-factor magnitudes of the surviving restriction,
        // |theta[E_1](t1)^80| * |theta[E_2](t2)^24|
        Complex th1(1), th2(1);
        for (const auto& m : e1.members) th1 *= c1.value(m);
        for (const auto& m : e2.members) th2 *= c2.value(m);
        double scale = std::pow(std::abs(th1), 80) * std::pow(std::abs(th2), 24);

        Acn3Row row;
        row.scale = scale;
        row.f_null = std::abs(eval_named_numeric(NamedForm::FNull, c3));
        row.f_1 = std::abs(eval_named_numeric(NamedForm::F1, c3));
        Complex f12(0), f111(0);
        for (const auto& s : orbit12.sets) f12 += c3.set_power8(s);
        f12 *= static_cast<double>(orbit12.stabilizer_order);
        for (const auto& s : orbit111.sets) f111 += c3.set_power8(s);
        f111 *= static_cast<double>(orbit111.stabilizer_order);
        row.f_12 = std::abs(f12);
        row.f_111 = std::abs(f111);

        row.pass_vanishing = row.f_null < tol_zero * scale && row.f_1 < tol_zero * scale;
        row.pass_nonvanishing = std::max(row.f_12, row.f_111) > tol_nonzero * scale;
        bool flagged = row.f_null < tol_zero * scale && row.f_1 < tol_zero * scale &&
                       row.f_12 < tol_zero * scale && row.f_111 < tol_zero * scale;
        if (flagged) ++rep.common_zero_flags;
        if (!row.pass_vanishing || !row.pass_nonvanishing) rep.pass = false;
        rep.rows.push_back(row);
    }
    if (rep.common_zero_flags) rep.pass = false;
    return rep;
}

Acn4Report acn4_scan(size_t num_points, uint64_t seed, double tol, uint64_t orbit_budget) {
    Acn4Report rep;
    rep.seed = seed;
    uint64_t state = seed ? seed : 0x9e3779b97f4a7c15ull;

    CharacteristicSet e1 = CharacteristicSet::full_even(1);
    CharacteristicSet e2 = CharacteristicSet::full_even(2);
    CharacteristicSet e3 = CharacteristicSet::full_even(3);
    CharacteristicSet e3star = e3.without(ThetaCharacteristic(3, 0, 0));

    std::vector<CharacteristicSet> seeds = {
        CharacteristicSet::product(e1, e3),
        CharacteristicSet::product(e1, e3star),
        CharacteristicSet::product(CharacteristicSet::product(e1, e1), e2),
        CharacteristicSet::product(CharacteristicSet::product(e1, e1),
                                   CharacteristicSet::product(e1, e1)),
        CharacteristicSet::product(e2, e2),
    };
    std::vector<SetOrbit> orbits4;
    for (const auto& s : seeds) {
        SetOrbit o = set_orbit(s, orbit_budget);
        if (!o.complete) {
            rep.inconclusive = true;
            return rep;
        }
        orbits4.push_back(std::move(o));
    }

    rep.pass = true;
    for (size_t p = 0; p < num_points; ++p) {
        PointInHn t;
        if (p % 2 == 0)
            t = PointInHn::block_diag(random_siegel_box_point(1, state),
                                      random_siegel_box_point(3, state));
        else
            t = PointInHn::block_diag(random_siegel_box_point(2, state),
                                      random_siegel_box_point(2, state));
        ThetaCache cache(t, 1e-14);
        bool all_small = true;
        for (const auto& o : orbits4) {
            Complex v(0);
            for (const auto& s : o.sets) v += cache.set_power8(s);
            v *= static_cast<double>(o.stabilizer_order);
            if (std::abs(v) >= tol) {
                all_small = false;
                break;
            }
        }
        if (all_small) {
            ++rep.common_zero_flags;
            rep.pass = false;
        }
        ++rep.points;
    }
    return rep;
}

}  // namespace smf
