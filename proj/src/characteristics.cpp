#include "smf/characteristics.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace smf {

ThetaCharacteristic ThetaCharacteristic::concat(const ThetaCharacteristic& m1,
                                                const ThetaCharacteristic& m2) {
    int n = m1.n + m2.n;
    return ThetaCharacteristic(n, m1.a | (m2.a << m1.n), m1.b | (m2.b << m1.n));
}

std::string ThetaCharacteristic::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < n; ++i) os << a_entry(i);
    os << ";";
    for (int i = 0; i < n; ++i) os << b_entry(i);
    os << ")";
    return os.str();
}

std::pair<uint64_t, uint64_t> characteristic_counts(int n) {
    if (n < 1) throw std::invalid_argument("characteristic_counts: n >= 1 required");
    uint64_t even = 0, odd = 0;
    for (uint32_t idx = 0; idx < (1u << (2 * n)); ++idx) {
        if (is_even(ThetaCharacteristic::from_index(n, idx)))
            ++even;
        else
            ++odd;
    }
    uint64_t closed_even = (1ull << (n - 1)) * ((1ull << n) + 1);
    uint64_t closed_odd = (1ull << (n - 1)) * ((1ull << n) - 1);
    if (even != closed_even || odd != closed_odd)
        throw std::logic_error("characteristic_counts: enumeration disagrees with closed form");
    return {even, odd};
}

std::vector<ThetaCharacteristic> all_characteristics(int n) {
    std::vector<ThetaCharacteristic> v;
    v.reserve(1u << (2 * n));
    for (uint32_t idx = 0; idx < (1u << (2 * n)); ++idx)
        v.push_back(ThetaCharacteristic::from_index(n, idx));
    return v;
}

std::vector<ThetaCharacteristic> even_characteristics(int n) {
    std::vector<ThetaCharacteristic> v;
    for (const auto& m : all_characteristics(n))
        if (is_even(m)) v.push_back(m);
    return v;
}

CharacteristicSet::CharacteristicSet(int genus, std::vector<ThetaCharacteristic> ms)
    : n(genus), members(std::move(ms)) {
    for (const auto& m : members)
        if (m.n != n) throw std::invalid_argument("CharacteristicSet: mixed genus");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

CharacteristicSet CharacteristicSet::full_even(int n) {
    return CharacteristicSet(n, even_characteristics(n));
}

CharacteristicSet CharacteristicSet::product(const CharacteristicSet& s1,
                                             const CharacteristicSet& s2) {
    std::vector<ThetaCharacteristic> ms;
    for (const auto& m1 : s1.members)
        for (const auto& m2 : s2.members) ms.push_back(ThetaCharacteristic::concat(m1, m2));
    return CharacteristicSet(s1.n + s2.n, std::move(ms));
}

bool CharacteristicSet::contains(const ThetaCharacteristic& m) const {
    return std::binary_search(members.begin(), members.end(), m);
}

CharacteristicSet CharacteristicSet::without(const ThetaCharacteristic& m) const {
    std::vector<ThetaCharacteristic> ms;
    for (const auto& x : members)
        if (!(x == m)) ms.push_back(x);
    return CharacteristicSet(n, std::move(ms));
}

SymplecticMod2 SymplecticMod2::identity(int n) {
    SymplecticMod2 g(n);
    for (int i = 0; i < 2 * n; ++i) g.rows[i] = 1u << i;
    return g;
}

SymplecticMod2 SymplecticMod2::from_integer(const IMat& gamma) {
    if (gamma.rows != gamma.cols || gamma.rows % 2 != 0)
        throw std::invalid_argument("from_integer: not a 2n x 2n matrix");
    int n = gamma.rows / 2;
    SymplecticMod2 g(n);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2 * n; ++j) g.set(i, j, static_cast<int>(gamma(i, j) & 1));
    return g;
}

bool SymplecticMod2::is_symplectic() const {
    // over F_2, J = (0 I; I 0); require M J t(M) = J
    int N = 2 * n;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            int s = 0;
            for (int k = 0; k < n; ++k)
                s ^= (get(i, k) & get(j, n + k)) ^ (get(i, n + k) & get(j, k));
            int want = (j == i + n || i == j + n) ? 1 : 0;
            if (s != want) return false;
        }
    return true;
}

SymplecticMod2 operator*(const SymplecticMod2& x, const SymplecticMod2& y) {
    if (x.n != y.n) throw std::invalid_argument("SymplecticMod2: size mismatch");
    int N = 2 * x.n;
    SymplecticMod2 z(x.n);
    for (int i = 0; i < N; ++i) {
        uint32_t row = 0;
        for (int k = 0; k < N; ++k)
            if (x.get(i, k)) row ^= y.rows[k];
        z.rows[i] = row;
    }
    return z;
}

ThetaCharacteristic sp_act(const SymplecticMod2& g, const ThetaCharacteristic& m) {
    int n = g.n;
    if (m.n != n) throw std::invalid_argument("sp_act: genus mismatch");
    if (!g.is_symplectic()) throw std::invalid_argument("sp_act: matrix is not symplectic mod 2");
    auto blk = [&](int bi, int bj, int i, int j) { return g.get(bi * n + i, bj * n + j); };
    // blocks: a = (0,0), b = (0,1), c = (1,0), d = (1,1)
    uint32_t na = 0, nb = 0;
    for (int i = 0; i < n; ++i) {
        int va = 0, vb = 0;
        for (int j = 0; j < n; ++j) {
            va ^= (blk(1, 1, i, j) & m.a_entry(j)) ^ (blk(1, 0, i, j) & m.b_entry(j));
            vb ^= (blk(0, 1, i, j) & m.a_entry(j)) ^ (blk(0, 0, i, j) & m.b_entry(j));
        }
        // diag(c t(d))_i and diag(a t(b))_i
        for (int k = 0; k < n; ++k) {
            va ^= blk(1, 0, i, k) & blk(1, 1, i, k);
            vb ^= blk(0, 0, i, k) & blk(0, 1, i, k);
        }
        na |= static_cast<uint32_t>(va) << i;
        nb |= static_cast<uint32_t>(vb) << i;
    }
    return ThetaCharacteristic(n, na, nb);
}

std::vector<IMat> sp_generators(int n) {
    std::vector<IMat> gens;
    IMat j(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        j(i, n + i) = 1;
        j(n + i, i) = -1;
    }
    gens.push_back(j);
    for (int p = 0; p < n; ++p)
        for (int q = p; q < n; ++q) {
            IMat t = IMat::identity(2 * n);
            t(p, n + q) = 1;
            t(q, n + p) = 1;
            gens.push_back(t);
        }
    return gens;
}

std::vector<SymplecticMod2> sp_generators_mod2(int n) {
    std::vector<SymplecticMod2> gens;
    for (const auto& g : sp_generators(n)) {
        SymplecticMod2 m = SymplecticMod2::from_integer(g);
        if (!m.is_symplectic()) throw std::logic_error("generator not symplectic mod 2");
        gens.push_back(m);
    }
    return gens;
}

uint64_t sp2n_f2_order(int n) {
    uint64_t ord = 1;
    for (int i = 1; i <= n; ++i) ord *= (1ull << (2 * i)) - 1;
    return ord << (static_cast<uint64_t>(n) * n);
}

std::vector<std::vector<ThetaCharacteristic>> orbits(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("orbits: 1 <= n <= 4");
    auto gens = sp_generators_mod2(n);
    uint32_t total = 1u << (2 * n);
    std::vector<int> block(total, -1);
    std::vector<std::vector<ThetaCharacteristic>> out;
    for (uint32_t start = 0; start < total; ++start) {
        if (block[start] >= 0) continue;
        int id = static_cast<int>(out.size());
        std::vector<ThetaCharacteristic> orb;
        std::deque<uint32_t> work{start};
        block[start] = id;
        while (!work.empty()) {
            uint32_t cur = work.front();
            work.pop_front();
            orb.push_back(ThetaCharacteristic::from_index(n, cur));
            for (const auto& g : gens) {
                uint32_t img = sp_act(g, ThetaCharacteristic::from_index(n, cur)).index();
                if (block[img] < 0) {
                    block[img] = id;
                    work.push_back(img);
                }
            }
        }
        std::sort(orb.begin(), orb.end());
        out.push_back(std::move(orb));
    }
    return out;
}

namespace {

// subset of F_2^{2n} as a 256-bit mask (n <= 4)
struct SetMask {
    std::array<uint64_t, 4> w{};
    bool operator==(const SetMask&) const = default;
};
struct SetMaskHash {
    size_t operator()(const SetMask& m) const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t x : m.w) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

}  // namespace

SetOrbit set_orbit(const CharacteristicSet& s, uint64_t node_budget) {
    int n = s.n;
    if (n < 1 || n > 4) throw std::invalid_argument("set_orbit: 1 <= n <= 4");
    auto gens = sp_generators_mod2(n);
    uint32_t total = 1u << (2 * n);

    // permutation tables of the generator action on characteristic indices
    std::vector<std::vector<uint32_t>> perm(gens.size(), std::vector<uint32_t>(total));
    for (size_t g = 0; g < gens.size(); ++g)
        for (uint32_t idx = 0; idx < total; ++idx)
            perm[g][idx] = sp_act(gens[g], ThetaCharacteristic::from_index(n, idx)).index();

    auto to_mask = [&](const CharacteristicSet& cs) {
        SetMask m;
        for (const auto& c : cs.members) {
            uint32_t i = c.index();
            m.w[i >> 6] |= 1ull << (i & 63);
        }
        return m;
    };
    auto apply = [&](const SetMask& m, const std::vector<uint32_t>& p) {
        SetMask r;
        for (uint32_t i = 0; i < total; ++i)
            if (m.w[i >> 6] & (1ull << (i & 63))) {
                uint32_t j = p[i];
                r.w[j >> 6] |= 1ull << (j & 63);
            }
        return r;
    };

    SetMask start = to_mask(s);
    std::unordered_set<SetMask, SetMaskHash> seen{start};
    std::deque<SetMask> work{start};
    std::vector<SetMask> order{start};
    SetOrbit result;
    while (!work.empty()) {
        if (seen.size() > node_budget) {
            result.complete = false;
            return result;
        }
        SetMask cur = work.front();
        work.pop_front();
        for (const auto& p : perm) {
            SetMask img = apply(cur, p);
            if (seen.insert(img).second) {
                work.push_back(img);
                order.push_back(img);
            }
        }
    }

    result.complete = true;
    std::sort(order.begin(), order.end(), [](const SetMask& a, const SetMask& b) {
        return a.w < b.w;
    });
    for (const auto& m : order) {
        std::vector<ThetaCharacteristic> ms;
        for (uint32_t i = 0; i < total; ++i)
            if (m.w[i >> 6] & (1ull << (i & 63)))
                ms.push_back(ThetaCharacteristic::from_index(n, i));
        result.sets.emplace_back(n, std::move(ms));
    }
    uint64_t group = sp2n_f2_order(n);
    if (group % result.sets.size() != 0)
        throw std::logic_error("set_orbit: orbit size does not divide the group order");
    result.stabilizer_order = group / result.sets.size();
    return result;
}

}  // namespace smf
