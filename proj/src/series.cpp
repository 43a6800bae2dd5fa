#include "smf/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace smf {

SiegelFourierSeries SiegelFourierSeries::one(int n, int64_t b) {
    SiegelFourierSeries f(n, Rational(0), b);
    f.coeffs.emplace(ExponentMatrix(n), GaussianRational(Rational(1)));
    return f;
}

void SiegelFourierSeries::add_to(const ExponentMatrix& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

SiegelFourierSeries add(const SiegelFourierSeries& f, const SiegelFourierSeries& g) {
    if (f.genus != g.genus) throw std::invalid_argument("add: genus mismatch");
    if (cmp(f.weight, g.weight) != 0) throw std::invalid_argument("add: weight mismatch");
    SiegelFourierSeries r(f.genus, f.weight, std::min(f.trunc, g.trunc));
    for (const auto& [e, c] : f.coeffs)
        if (e.trace() <= r.trunc) r.add_to(e, c);
    for (const auto& [e, c] : g.coeffs)
        if (e.trace() <= r.trunc) r.add_to(e, c);
    return r;
}

SiegelFourierSeries sub(const SiegelFourierSeries& f, const SiegelFourierSeries& g) {
    return add(f, neg(g));
}

SiegelFourierSeries neg(SiegelFourierSeries f) {
    for (auto& [e, c] : f.coeffs) c = -c;
    return f;
}

SiegelFourierSeries scale(SiegelFourierSeries f, const GaussianRational& c) {
    if (c.is_zero()) {
        f.coeffs.clear();
        return f;
    }
    for (auto& [e, v] : f.coeffs) v = v * c;
    return f;
}

SiegelFourierSeries mul(const SiegelFourierSeries& f, const SiegelFourierSeries& g) {
    if (f.genus != g.genus) throw std::invalid_argument("mul: genus mismatch");
    SiegelFourierSeries r(f.genus, f.weight + g.weight, std::min(f.trunc, g.trunc));

    // iterate the smaller factor outside; sort the inner one by trace so the
    // trace bound cuts each inner scan short
    const SiegelFourierSeries& a = f.coeffs.size() <= g.coeffs.size() ? f : g;
    const SiegelFourierSeries& b = f.coeffs.size() <= g.coeffs.size() ? g : f;
    std::vector<const std::pair<const ExponentMatrix, GaussianRational>*> byTrace;
    byTrace.reserve(b.coeffs.size());
    for (const auto& kv : b.coeffs) byTrace.push_back(&kv);
    std::stable_sort(byTrace.begin(), byTrace.end(),
                     [](auto* x, auto* y) { return x->first.trace() < y->first.trace(); });

    for (const auto& [ea, ca] : a.coeffs) {
        int64_t room = r.trunc - ea.trace();
        if (room < 0) continue;
        for (const auto* kv : byTrace) {
            if (kv->first.trace() > room) break;
            r.add_to(ea + kv->first, ca * kv->second);
        }
    }
    return r;
}

SiegelFourierSeries pow(const SiegelFourierSeries& f, uint32_t e) {
    SiegelFourierSeries acc = SiegelFourierSeries::one(f.genus, f.trunc);
    acc.weight = Rational(0);
    SiegelFourierSeries base = f;
    uint32_t k = e;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        k >>= 1;
        if (k) base = mul(base, base);
    }
    acc.weight = f.weight * e;
    return acc;
}

SiegelFourierSeries phi(const SiegelFourierSeries& f) {
    if (f.genus < 1) throw std::invalid_argument("phi: genus must be >= 1");
    int n = f.genus;
    SiegelFourierSeries r(n - 1, f.weight, f.trunc);
    for (const auto& [e, c] : f.coeffs) {
        bool lastZero = true;
        for (int i = 0; i < n && lastZero; ++i)
            if (e.get(i, n - 1) != 0) lastZero = false;
        if (!lastZero) continue;
        ExponentMatrix cut(n - 1);
        for (int i = 0; i < n - 1; ++i)
            for (int j = i; j < n - 1; ++j) cut.set(i, j, e.get(i, j));
        r.add_to(cut, c);
    }
    return r;
}

BlockRestriction restrict_block(const SiegelFourierSeries& f, int n1) {
    if (n1 < 1 || n1 >= f.genus) throw std::invalid_argument("restrict_block: 1 <= n1 < genus");
    int n = f.genus, n2 = n - n1;
    BlockRestriction r;
    r.n1 = n1;
    r.n2 = n2;
    r.trunc = f.trunc;
    for (const auto& [e, c] : f.coeffs) {
        ExponentMatrix e1(n1), e2(n2);
        for (int i = 0; i < n1; ++i)
            for (int j = i; j < n1; ++j) e1.set(i, j, e.get(i, j));
        for (int i = 0; i < n2; ++i)
            for (int j = i; j < n2; ++j) e2.set(i, j, e.get(n1 + i, n1 + j));
        auto key = std::make_pair(std::move(e1), std::move(e2));
        auto [it, inserted] = r.coeffs.emplace(std::move(key), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) r.coeffs.erase(it);
        }
    }
    return r;
}

BlockRestriction tensor_blocks(const SiegelFourierSeries& f1, const SiegelFourierSeries& f2,
                               int64_t trunc) {
    BlockRestriction r;
    r.n1 = f1.genus;
    r.n2 = f2.genus;
    r.trunc = trunc;
    for (const auto& [e1, c1] : f1.coeffs) {
        if (e1.trace() > trunc) continue;
        for (const auto& [e2, c2] : f2.coeffs) {
            if (e1.trace() + e2.trace() > trunc) continue;
            GaussianRational c = c1 * c2;
            if (c.is_zero()) continue;
            auto [it, inserted] = r.coeffs.emplace(std::make_pair(e1, e2), c);
            if (!inserted) it->second += c;
        }
    }
    return r;
}

BlockRestriction mul_blocks(const BlockRestriction& x, const BlockRestriction& y) {
    if (x.n1 != y.n1 || x.n2 != y.n2) throw std::invalid_argument("mul_blocks: shape mismatch");
    BlockRestriction r;
    r.n1 = x.n1;
    r.n2 = x.n2;
    r.trunc = std::min(x.trunc, y.trunc);
    for (const auto& [kx, cx] : x.coeffs)
        for (const auto& [ky, cy] : y.coeffs) {
            ExponentMatrix e1 = kx.first + ky.first;
            ExponentMatrix e2 = kx.second + ky.second;
            if (e1.trace() + e2.trace() > r.trunc) continue;
            GaussianRational c = cx * cy;
            if (c.is_zero()) continue;
            auto [it, inserted] = r.coeffs.emplace(std::make_pair(std::move(e1), std::move(e2)), c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) r.coeffs.erase(it);
            }
        }
    return r;
}

GlSymmetryReport check_gl_symmetry(const SiegelFourierSeries& f, long k,
                                   const std::vector<IMat>& generators) {
    GlSymmetryReport rep;
    for (size_t gi = 0; gi < generators.size(); ++gi) {
        const IMat& u = generators[gi];
        if (u.rows != f.genus || u.cols != f.genus)
            throw std::invalid_argument("check_gl_symmetry: generator size mismatch");
        long long det = imat_det(u);
        if (det != 1 && det != -1)
            throw std::invalid_argument("check_gl_symmetry: generator not unimodular");
        GaussianRational sign(Rational((det < 0 && (k % 2 != 0)) ? -1 : 1));
        for (const auto& [e, c] : f.coeffs) {
            ExponentMatrix img = transform(e, u);
            if (img.trace() > f.trunc) continue;
            ++rep.pairs_checked;
            GaussianRational expected = sign * c;
            GaussianRational found = f.coeff(img);
            if (!(expected == found))
                rep.violations.push_back({gi, e, expected, found});
        }
    }
    return rep;
}

bool is_cusp_qexp(const SiegelFourierSeries& f) { return phi(f).is_zero(); }

TriState cuspidality_combinatorial(const CharacteristicSet& s, uint64_t node_budget) {
    for (const auto& m : s.members)
        if (!is_even(m))
            throw std::invalid_argument("cuspidality_combinatorial: odd member in S");
    int n = s.n;
    auto vanishes_at_boundary = [n](const CharacteristicSet& cs) {
        for (const auto& m : cs.members)
            if (m.a_entry(n - 1) == 1) return true;
        return false;
    };
    // Walk the set orbit; any translate visible at the standard boundary
    // settles the question negatively without finishing the BFS.
    auto gens = sp_generators_mod2(n);
    std::vector<CharacteristicSet> work{s};
    std::vector<CharacteristicSet> seen{s};
    std::sort(seen.begin(), seen.end(), [](const CharacteristicSet& a, const CharacteristicSet& b) {
        return a.members < b.members;
    });
    if (!vanishes_at_boundary(s)) return TriState::False;
    while (!work.empty()) {
        if (seen.size() > node_budget) return TriState::Inconclusive;
        CharacteristicSet cur = std::move(work.back());
        work.pop_back();
        for (const auto& g : gens) {
            std::vector<ThetaCharacteristic> ms;
            ms.reserve(cur.members.size());
            for (const auto& m : cur.members) ms.push_back(sp_act(g, m));
            CharacteristicSet img(n, std::move(ms));
            auto it = std::lower_bound(seen.begin(), seen.end(), img,
                                       [](const CharacteristicSet& a, const CharacteristicSet& b) {
                                           return a.members < b.members;
                                       });
            if (it != seen.end() && *it == img) continue;
            if (!vanishes_at_boundary(img)) return TriState::False;
            seen.insert(it, img);
            work.push_back(std::move(img));
        }
    }
    return TriState::True;
}

}  // namespace smf
