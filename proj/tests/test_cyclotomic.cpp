#include "oracles.hpp"

#include "mfc/cyclotomic.hpp"

#include <doctest.h>

using namespace mfc;

static bool close(std::complex<long double> a, std::complex<long double> b, long double tol = 1e-12L) {
    return std::abs(a - b) < tol;
}

TEST_CASE("roots of unity match the complex exponential") {
    for (long n : {1, 2, 3, 4, 5, 7, 8, 12, 15, 24, 35}) {
        for (long k = -n; k <= 2 * n; ++k) CHECK(close(CycNum::zeta(n, k).to_complex(), oracle::root_of_unity(n, k)));
    }
}

TEST_CASE("cyclotomic relations reduce to zero") {
    for (long n : {3, 5, 7, 9, 12, 30}) {
        CycNum s;
        for (long k = 0; k < n; ++k) s += CycNum::zeta(n, k);
        CHECK(s.is_zero());
    }
    CHECK((CycNum::zeta(4) * CycNum::zeta(4)) == CycNum(-1));
    CHECK(CycNum::zeta(6).pow(6).is_one());
}

TEST_CASE("equality across conductors") {
    CycNum a = CycNum::zeta(3);
    CycNum b = CycNum::zeta(12, 4);
    CHECK(a == b);
    CHECK(b.reduce().conductor() == 3);
    CHECK(CycNum::zeta(5).embed(35) == CycNum::zeta(35, 7));
    CHECK((CycNum::zeta(8) + CycNum::zeta(8, 7)).pow(2) == CycNum(2));
}

TEST_CASE("golden ratio") {
    CycNum phi = CycNum(1) + CycNum::zeta(5) + CycNum::zeta(5, 4);
    CHECK(phi.is_real());
    CHECK(phi * phi == phi + CycNum(1));
    CHECK(close(phi.to_complex(), {(1 + std::sqrt(5.0L)) / 2, 0}));
    CHECK(sign_real(phi) == 1);
    CHECK(sign_real(phi.galois(2)) == -1);
    CHECK(compare_real(phi, CycNum(qq(8, 5))) == 1);
}

TEST_CASE("inverse and rational values") {
    CycNum x = CycNum(3) + CycNum::zeta(7) - CycNum::zeta(7, 3).scaled(qq(2, 5));
    CHECK((x * x.inverse()).is_one());
    CHECK(close(x.inverse().to_complex(), 1.0L / x.to_complex()));
    CycNum r(qq(-7, 3));
    CHECK(r.is_rational());
    CHECK(r.rational_value() == qq(-7, 3));
}

TEST_CASE("galois action and orbits") {
    CycNum z = CycNum::zeta(7);
    CHECK(z.galois(3) == CycNum::zeta(7, 3));
    CHECK(z.conj() == CycNum::zeta(7, 6));
    CycNum c = z + z.conj();
    CHECK(galois_orbit(c).size() == 3);
    CHECK(algebraic_degree(c) == 3);
    CHECK(field_trace(CycNum::zeta(7)) == -1);
    GaloisAut s(7, 3), t(7, 5);
    CHECK(s.compose(t).apply(z) == s.apply(t.apply(z)));
}

TEST_CASE("root of unity recognition") {
    auto r = as_root_of_unity(CycNum::zeta(12, 9));
    REQUIRE(r);
    CHECK(r->first == 4);
    CHECK(r->second == 3);
    CHECK(as_root_of_unity(-CycNum::zeta(5))->first == 10);
    CHECK_FALSE(as_root_of_unity(CycNum(2)));
    CHECK_FALSE(as_root_of_unity(CycNum(1) + CycNum::zeta(5)));
}

TEST_CASE("arithmetic helpers") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(36) == 12);
    CHECK(is_prime(23));
    CHECK_FALSE(is_prime(91));
    CHECK(mod_l(-3, 7) == 4);
    CHECK(lcm_l(4, 6) == 12);
    CHECK(field(9).units == std::vector<long>{1, 2, 4, 5, 7, 8});
}

TEST_CASE("numeric rendering") {
    CHECK(numeric_string(CycNum(qq(1, 4)), 10).rfind("0.25", 0) == 0);
}
