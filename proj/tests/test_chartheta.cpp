#include <doctest.h>

#include "smf/characteristics.hpp"
#include "test_helpers.hpp"

using namespace smf;
using namespace smf::test;

TEST_SUITE("chartheta") {

TEST_CASE("parity examples") {
    CHECK(parity(ThetaCharacteristic(2, 0, 0)) == Parity::Even);
    CHECK(parity(ThetaCharacteristic(1, 1, 1)) == Parity::Odd);
    // a=(1,0), b=(0,1)
    CHECK(parity(ThetaCharacteristic(2, 1, 2)) == Parity::Even);
}

TEST_CASE("characteristic counts match the closed forms") {
    CHECK(characteristic_counts(1) == std::pair<uint64_t, uint64_t>{3, 1});
    CHECK(characteristic_counts(2) == std::pair<uint64_t, uint64_t>{10, 6});
    CHECK(characteristic_counts(3) == std::pair<uint64_t, uint64_t>{36, 28});
    CHECK(characteristic_counts(4) == std::pair<uint64_t, uint64_t>{136, 120});
}

TEST_CASE("group order formula against brute force for n = 1, 2") {
    // n = 1: count invertible 2x2 matrices over F_2
    int count1 = 0;
    for (uint32_t bits = 0; bits < 16; ++bits) {
        SymplecticMod2 g(1);
        g.rows = {bits & 3u, (bits >> 2) & 3u};
        if (g.is_symplectic()) ++count1;
    }
    CHECK(count1 == 6);
    CHECK(sp2n_f2_order(1) == 6);

    // n = 2: filter all 4x4 matrices over F_2
    uint64_t count2 = 0;
    for (uint32_t bits = 0; bits < (1u << 16); ++bits) {
        SymplecticMod2 g(2);
        for (int r = 0; r < 4; ++r) g.rows[r] = (bits >> (4 * r)) & 0xFu;
        if (g.is_symplectic()) ++count2;
    }
    CHECK(count2 == 720);
    CHECK(sp2n_f2_order(2) == 720);
    CHECK(sp2n_f2_order(3) == 1451520ull);
}

TEST_CASE("sp_act fixes nothing for the identity and rejects bad input") {
    SymplecticMod2 id = SymplecticMod2::identity(2);
    for (const auto& m : all_characteristics(2)) CHECK(sp_act(id, m) == m);

    SymplecticMod2 bad(2);
    CHECK_THROWS_AS(sp_act(bad, ThetaCharacteristic(2, 0, 0)), std::invalid_argument);
}

TEST_CASE("sp_act is a group action (exhaustive n = 1, generator products n = 2)") {
    // n = 1: all six group elements
    std::vector<SymplecticMod2> sp2;
    for (uint32_t bits = 0; bits < 16; ++bits) {
        SymplecticMod2 g(1);
        g.rows = {bits & 3u, (bits >> 2) & 3u};
        if (g.is_symplectic()) sp2.push_back(g);
    }
    for (const auto& g : sp2)
        for (const auto& h : sp2)
            for (const auto& m : all_characteristics(1))
                CHECK(sp_act(g * h, m) == sp_act(g, sp_act(h, m)));

    // n = 2: generator pairs and short random words
    auto gens = sp_generators_mod2(2);
    for (const auto& g : gens)
        for (const auto& h : gens)
            for (const auto& m : all_characteristics(2))
                CHECK(sp_act(g * h, m) == sp_act(g, sp_act(h, m)));

    uint64_t s = 0x5eed1001;
    for (int it = 0; it < 50; ++it) {
        SymplecticMod2 g = gens[rng_next(s) % gens.size()];
        SymplecticMod2 h = gens[rng_next(s) % gens.size()];
        for (int k = 0; k < 3; ++k) {
            g = g * gens[rng_next(s) % gens.size()];
            h = h * gens[rng_next(s) % gens.size()];
        }
        for (const auto& m : all_characteristics(2))
            CHECK(sp_act(g * h, m) == sp_act(g, sp_act(h, m)));
    }
}

TEST_CASE("sp_act preserves parity (exhaustive n = 1, 2)") {
    for (int n : {1, 2}) {
        auto gens = sp_generators_mod2(n);
        for (const auto& g : gens)
            for (const auto& m : all_characteristics(n))
                CHECK(parity(sp_act(g, m)) == parity(m));
    }
}

TEST_CASE("orbit of an even characteristic is the full even set at n = 2") {
    auto blocks = orbits(2);
    REQUIRE(blocks.size() == 2);
    std::vector<size_t> sizes = {blocks[0].size(), blocks[1].size()};
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes[0] == 6);
    CHECK(sizes[1] == 10);
}

TEST_CASE("two orbits with the paper's cardinalities for n = 1, 2, 3") {
    std::vector<std::pair<size_t, size_t>> want = {{3, 1}, {10, 6}, {36, 28}};
    for (int n = 1; n <= 3; ++n) {
        auto blocks = orbits(n);
        REQUIRE(blocks.size() == 2);
        size_t even_size = 0, odd_size = 0;
        for (const auto& b : blocks) {
            if (parity(b.front()) == Parity::Even)
                even_size = b.size();
            else
                odd_size = b.size();
            for (const auto& m : b) CHECK(parity(m) == parity(b.front()));
        }
        CHECK(even_size == want[n - 1].first);
        CHECK(odd_size == want[n - 1].second);
    }
}

TEST_CASE("set_orbit: the full even set is invariant") {
    for (int n : {1, 2, 3}) {
        SetOrbit o = set_orbit(CharacteristicSet::full_even(n), 1u << 16);
        REQUIRE(o.complete);
        CHECK(o.sets.size() == 1);
        CHECK(o.stabilizer_order == sp2n_f2_order(n));
    }
}

TEST_CASE("set_orbit of E_2 minus a point recovers the ten complements") {
    CharacteristicSet e2 = CharacteristicSet::full_even(2);
    CharacteristicSet star = e2.without(ThetaCharacteristic(2, 0, 0));
    SetOrbit o = set_orbit(star, 1u << 16);
    REQUIRE(o.complete);
    CHECK(o.sets.size() == 10);
    CHECK(o.stabilizer_order == 72);
    for (const auto& s : o.sets) CHECK(s.size() == 9);
}

TEST_CASE("set_orbit respects the node budget") {
    CharacteristicSet e1 = CharacteristicSet::full_even(1);
    CharacteristicSet seed(2, {ThetaCharacteristic::concat(e1.members[0], e1.members[1])});
    SetOrbit o = set_orbit(seed, 2);
    CHECK(!o.complete);
}

TEST_CASE("orbit size times stabilizer order is the group order (E_1 x E_2)") {
    CharacteristicSet e12 =
        CharacteristicSet::product(CharacteristicSet::full_even(1), CharacteristicSet::full_even(2));
    SetOrbit o = set_orbit(e12, 1u << 20);
    REQUIRE(o.complete);
    CHECK(o.sets.size() * o.stabilizer_order == sp2n_f2_order(3));
    for (const auto& s : o.sets) CHECK(s.size() == 30);
}

}  // TEST_SUITE
