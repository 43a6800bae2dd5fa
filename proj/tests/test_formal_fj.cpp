#include <doctest.h>

#include "smf/constructions.hpp"
#include "smf/formal_fj.hpp"
#include "test_helpers.hpp"

using namespace smf;
using namespace smf::test;

namespace {

SiegelFourierSeries chi10_series(int64_t trunc) {
    return pow(theta_set_product(CharacteristicSet::full_even(2), 1, trunc), 2);
}

SiegelFourierSeries random_theta_product(uint64_t& s, int64_t trunc) {
    auto even = even_characteristics(2);
    int factors = 1 + static_cast<int>(rng_next(s) % 4);
    SiegelFourierSeries acc = SiegelFourierSeries::one(2, trunc);
    for (int i = 0; i < factors; ++i)
        acc = mul(acc, pow(theta_qexp(even[rng_next(s) % even.size()], trunc), 8));
    return acc;
}

}  // namespace

TEST_SUITE("formal_fj") {

TEST_CASE("index 0 tables only carry r = 0 keys") {
    JacobiTable t;
    t.index = 0;
    t.coeffs[{0, 0}] = Rational(1);
    t.coeffs[{2, 0}] = Rational(-3);
    CHECK(validate_jacobi(t).pass());

    t.coeffs[{2, 1}] = Rational(1);  // psd needs 4*2*0 - 1 >= 0
    JacobiValidationReport rep = validate_jacobi(t);
    CHECK(!rep.psd_ok);
    REQUIRE(rep.bad_support.size() == 1);
    CHECK(rep.bad_support[0] == std::pair<int64_t, int64_t>{2, 1});
}

TEST_CASE("elliptic consistency violation is reported with a witness") {
    JacobiTable t;
    t.index = 1;
    t.coeffs[{1, 2}] = Rational(5);  // lambda = -1 maps (1,2) to (0,0)
    t.coeffs[{0, 0}] = Rational(3);
    JacobiValidationReport rep = validate_jacobi(t);
    CHECK(rep.psd_ok);
    CHECK(!rep.elliptic_ok);
    bool found = false;
    for (const auto& w : rep.violations)
        if (w.n == 1 && w.r == 2 && w.n2 == 0 && w.r2 == 0) found = true;
    CHECK(found);
}

TEST_CASE("tables extracted from chi10 validate") {
    FormalFJSeries s = fj_decompose(chi10_series(24));
    REQUIRE(s.tables.size() >= 2);
    CHECK(s.denom == 1);  // chi10 sits on the half-integral lattice
    for (const auto& t : s.tables) CHECK(validate_jacobi(t).pass());
    // chi10 is cuspidal: the index-0 coefficient is the zero Jacobi form
    CHECK(s.tables[0].is_zero());
    CHECK(!s.tables[1].is_zero());
}

TEST_CASE("round trip decompose then assemble") {
    SiegelFourierSeries f = chi10_series(24);
    FourierTable back = assemble_formal_fourier(fj_decompose(f));
    CHECK(back.coeffs == fourier_table(f).coeffs);

    SiegelFourierSeries zero(2, Rational(10), 8);
    FormalFJSeries zs = fj_decompose(zero);
    REQUIRE(zs.tables.size() == 1);
    CHECK(zs.tables[0].is_zero());
}

TEST_CASE("round trip on random theta products") {
    uint64_t s = 0x5eed5001;
    for (int it = 0; it < 10; ++it) {
        SiegelFourierSeries f = random_theta_product(s, 16);
        FourierTable back = assemble_formal_fourier(fj_decompose(f));
        CHECK(back.coeffs == fourier_table(f).coeffs);
    }
}

TEST_CASE("assemble places a single index-0 table at the zero key") {
    FormalFJSeries s;
    s.weight = Rational(10);
    s.denom = 1;
    JacobiTable t;
    t.index = 0;
    t.denom = 1;
    t.weight = Rational(10);
    t.coeffs[{0, 0}] = Rational(1);
    s.tables.push_back(t);
    FourierTable ft = assemble_formal_fourier(s);
    REQUIRE(ft.coeffs.size() == 1);
    CHECK(ft.coeffs.begin()->first == ExponentMatrix(2));
    CHECK(cmp(ft.coeffs.begin()->second, Rational(1)) == 0);
}

TEST_CASE("assemble rejects keys off the E-lattice") {
    FormalFJSeries s;
    s.weight = Rational(10);
    s.denom = 3;  // 8/3 is not integral
    JacobiTable t;
    t.index = 3;
    t.denom = 3;
    t.coeffs[{3, 0}] = Rational(1);
    s.tables.push_back(t);
    CHECK_NOTHROW(assemble_formal_fourier(s));  // 8*3/3 = 8 is fine
    t.coeffs[{1, 0}] = Rational(1);             // 8*1/3 is not
    s.tables[0] = t;
    CHECK_THROWS_AS(assemble_formal_fourier(s), std::invalid_argument);
}

TEST_CASE("fourier keys are partitioned by the bottom-right entry") {
    SiegelFourierSeries f = chi10_series(24);
    FormalFJSeries s = fj_decompose(f);
    size_t total = 0;
    for (const auto& t : s.tables) total += t.coeffs.size();
    CHECK(total == f.coeffs.size());
}

TEST_CASE("check_symmetric passes on genuine genus-2 forms") {
    FourierTable chi = fourier_table(chi10_series(24));
    CHECK(check_symmetric(chi, 10, default_gl2_generators()).pass());

    FourierTable f1 = fourier_table(construct_named(NamedForm::F1, 2, 16));
    CHECK(check_symmetric(f1, 36, default_gl2_generators()).pass());
}

TEST_CASE("check_symmetric catches a perturbed coefficient") {
    FourierTable chi = fourier_table(chi10_series(24));
    ExponentMatrix k(2);
    k.set(0, 0, 8);
    k.set(0, 1, 4);
    k.set(1, 1, 8);
    REQUIRE(cmp(chi.coeff(k), Rational(0)) != 0);
    chi.coeffs[k] += 1;
    SymmetryReport rep = check_symmetric(chi, 10, default_gl2_generators());
    CHECK(!rep.pass());
    REQUIRE(!rep.violations.empty());
}

TEST_CASE("odd weight with a reflection forces diagonal keys to vanish") {
    // det u = -1 and odd k: a(T) with T12 = 0 must be its own negative.
    // (-1_2 itself has determinant +1 in GL_2, so the forcing element is
    // the reflection.)
    FourierTable t;
    t.weight = Rational(5);
    t.trunc = 16;
    ExponentMatrix k(2);
    k.set(0, 0, 8);
    k.set(1, 1, 8);
    t.coeffs[k] = Rational(1);
    IMat refl = IMat::identity(2);
    refl(0, 0) = -1;
    SymmetryReport rep = check_symmetric(t, 5, {refl});
    CHECK(!rep.pass());
}

TEST_CASE("injected single-key violations are always detected") {
    FourierTable chi = fourier_table(chi10_series(24));
    uint64_t s = 0x5eed5002;
    std::vector<ExponentMatrix> keys;
    for (const auto& [e, c] : chi.coeffs)
        if (e.get(0, 1) != 0) keys.push_back(e);  // reflection-active keys
    REQUIRE(!keys.empty());
    for (int it = 0; it < 20; ++it) {
        FourierTable bad = chi;
        const ExponentMatrix& k = keys[rng_next(s) % keys.size()];
        bad.coeffs[k] += Rational(1 + static_cast<long>(rng_next(s) % 5));
        CHECK(!check_symmetric(bad, 10, default_gl2_generators()).pass());
    }
}

TEST_CASE("validate_jacobi accepts every table from random products") {
    uint64_t s = 0x5eed5003;
    for (int it = 0; it < 6; ++it) {
        FormalFJSeries fj = fj_decompose(random_theta_product(s, 16));
        for (const auto& t : fj.tables) CHECK(validate_jacobi(t).pass());
    }
}

}  // TEST_SUITE
