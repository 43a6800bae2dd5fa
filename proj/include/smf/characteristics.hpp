#ifndef SMF_CHARACTERISTICS_HPP
#define SMF_CHARACTERISTICS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "smf/matrix.hpp"

namespace smf {

enum class Parity { Even, Odd };

// m = (a; b) in F_2^{2n}, components stored as bitmasks (bit i = entry i).
struct ThetaCharacteristic {
    int n = 0;
    uint32_t a = 0, b = 0;

    ThetaCharacteristic() = default;
    ThetaCharacteristic(int genus, uint32_t av, uint32_t bv) : n(genus), a(av), b(bv) {}

    uint32_t index() const { return (a << n) | b; }
    static ThetaCharacteristic from_index(int n, uint32_t idx) {
        return ThetaCharacteristic(n, idx >> n, idx & ((1u << n) - 1));
    }

    int a_entry(int i) const { return (a >> i) & 1; }
    int b_entry(int i) const { return (b >> i) & 1; }

    // concatenation (m1, m2) of characteristics of genus n1 and n2
    static ThetaCharacteristic concat(const ThetaCharacteristic& m1, const ThetaCharacteristic& m2);

    friend bool operator==(const ThetaCharacteristic&, const ThetaCharacteristic&) = default;
    auto operator<=>(const ThetaCharacteristic& o) const { return index() <=> o.index(); }

    std::string str() const;
};

inline Parity parity(const ThetaCharacteristic& m) {
    return (__builtin_popcount(m.a & m.b) & 1) ? Parity::Odd : Parity::Even;
}
inline bool is_even(const ThetaCharacteristic& m) { return parity(m) == Parity::Even; }

// enumerated pair (count_even, count_odd); matches 2^{n-1}(2^n +- 1)
std::pair<uint64_t, uint64_t> characteristic_counts(int n);

std::vector<ThetaCharacteristic> all_characteristics(int n);
std::vector<ThetaCharacteristic> even_characteristics(int n);

// Duplicate-free set of characteristics of one genus, kept sorted.
struct CharacteristicSet {
    int n = 0;
    std::vector<ThetaCharacteristic> members;

    CharacteristicSet() = default;
    CharacteristicSet(int genus, std::vector<ThetaCharacteristic> ms);

    static CharacteristicSet full_even(int n);
    // E_{n1} x E_{n2} style products
    static CharacteristicSet product(const CharacteristicSet& s1, const CharacteristicSet& s2);

    size_t size() const { return members.size(); }
    bool contains(const ThetaCharacteristic& m) const;
    CharacteristicSet without(const ThetaCharacteristic& m) const;

    friend bool operator==(const CharacteristicSet&, const CharacteristicSet&) = default;
};

// Matrix in Sp_{2n}(F_2); rows as bitmasks over 2n columns.
struct SymplecticMod2 {
    int n = 0;
    std::vector<uint32_t> rows;  // 2n rows

    explicit SymplecticMod2(int genus) : n(genus), rows(2 * genus, 0) {}
    static SymplecticMod2 identity(int n);
    static SymplecticMod2 from_integer(const IMat& gamma);  // reduce mod 2

    int get(int i, int j) const { return (rows[i] >> j) & 1; }
    void set(int i, int j, int v) {
        if (v & 1)
            rows[i] |= (1u << j);
        else
            rows[i] &= ~(1u << j);
    }

    bool is_symplectic() const;  // M J t(M) = J over F_2
    friend SymplecticMod2 operator*(const SymplecticMod2& x, const SymplecticMod2& y);
    friend bool operator==(const SymplecticMod2&, const SymplecticMod2&) = default;
};

// The classical affine action gamma.(alpha; beta) =
//   (d alpha - c beta + diag(c t(d)); -b alpha + a beta + diag(a t(b)))
// reduced mod 2. Its correctness is pinned by the numerical theta
// transformation law test, not assumed.
ThetaCharacteristic sp_act(const SymplecticMod2& g, const ThetaCharacteristic& m);

// Integer generators of Sp_{2n}(Z): J and the translations (I S; 0 I) with
// S running over the symmetric 0/1 basis matrices. Reduced mod 2 they
// generate Sp_{2n}(F_2).
std::vector<IMat> sp_generators(int n);
std::vector<SymplecticMod2> sp_generators_mod2(int n);

// |Sp_{2n}(F_2)| = 2^{n^2} prod_{i=1..n} (4^i - 1)
uint64_t sp2n_f2_order(int n);

// BFS closure of every characteristic under the generator action; returns
// the orbit blocks (expected: exactly two, even and odd).
std::vector<std::vector<ThetaCharacteristic>> orbits(int n);

// Orbit of a set of characteristics under the mod-2 symplectic action,
// with the stabilizer order |Sp_{2n}(F_2)| / orbit size.
struct SetOrbit {
    bool complete = false;  // false: node budget exhausted, inconclusive
    std::vector<CharacteristicSet> sets;
    uint64_t stabilizer_order = 0;
};
SetOrbit set_orbit(const CharacteristicSet& s, uint64_t node_budget);

}  // namespace smf

#endif
