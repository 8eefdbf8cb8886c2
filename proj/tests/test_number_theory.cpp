#include "oracles.hpp"

#include "mfc/number_theory.hpp"

#include <doctest.h>

using namespace mfc;

TEST_CASE("d-number condition") {
    CHECK(is_d_number(IntPoly::parse("[1,-49,686,-2401]")));
    CHECK(is_d_number(IntPoly::parse("[1,-5]")));
    // a_2 = 4 but a_1^2 = 9 is not divisible by 4
    CHECK_FALSE(is_d_number(IntPoly::parse("[1,-3,4]")));
    // 7^2 does not divide 10^3
    CHECK_FALSE(is_d_number(IntPoly::parse("[1,-10,7]")));
}

TEST_CASE("gaussian periods") {
    auto eta = gaussian_periods(7, 3);
    REQUIRE(eta.size() == 3);
    CycNum s;
    for (auto& e : eta) s += e;
    CHECK(s == CycNum(-1));
    for (auto& e : eta) CHECK(e.is_real());
    auto quad = gaussian_periods(5, 2);
    CHECK(quad[0] * quad[1] == CycNum(-1));
    CHECK(primitive_root(7) == 3);
}

TEST_CASE("cyclotomic test") {
    CHECK(cyclotomic_test(IntPoly::parse("[1,-49,686,-2401]"), 7));
    CHECK(cyclotomic_test(IntPoly::parse("[1,-98,1029,-2401]"), 7));
    CHECK(cyclotomic_test(IntPoly::parse("[1,-1,-1]"), 5));
    // x^3 - 2 is not real-rooted, x^3 - 3x - 1 has discriminant 81 but splits in Q(zeta_9)+ only
    CHECK_FALSE(cyclotomic_test(IntPoly::parse("[1,0,-3,-1]"), 7));
    CHECK_FALSE(cyclotomic_test(IntPoly::parse("[1,-3,1]"), 13));
    CHECK_THROWS_AS(cyclotomic_test(IntPoly::parse("[1,-6,11,-6]"), 7), ReducibleError);
    CHECK_THROWS_AS(cyclotomic_test(IntPoly::parse("[1,0,-2]"), 7), DegreeError);
    auto r = cyclotomic_root(IntPoly::parse("[1,-49,686,-2401]"), 7);
    REQUIRE(r);
    CHECK(r->is_real());
    CHECK(*r * *r * *r - r->pow(2).scaled(49) + r->scaled(686) == CycNum(2401));
}

TEST_CASE("quadratic surds") {
    QuadraticSurd x(1, 1, 5), y(qq(1, 2), qq(-3, 2), 5);
    CHECK((x * y).value() == doctest::Approx(static_cast<double>(x.value() * y.value())));
    CHECK((x * x.inverse()) == QuadraticSurd(1, 0, 5));
    CHECK(x.norm() == -4);
    CHECK(compare(x, y) == 1);
    CHECK(x.pow(3) == x * x * x);
    CycNum c = x.to_cyc();
    CHECK(c * c == CycNum(4) + c.scaled(2));
}

TEST_CASE("fundamental units") {
    // Brute force oracle on a^2 - p b^2 = +-4 with smallest positive b
    for (long p : {5, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97}) {
        QuadraticUnit u = fundamental_unit(p);
        long best_b = 0, best_a = 0;
        for (long b = 1; b < 2000 && !best_b; ++b) {
            for (long s : {-4, 4}) {
                long double a2 = static_cast<long double>(p) * b * b + s;
                long a = std::lround(std::sqrt(a2));
                if (a > 0 && static_cast<long double>(a) * a == a2) {
                    best_b = b;
                    best_a = a;
                    break;
                }
            }
        }
        if (!best_b) continue;
        CHECK(u.b == best_b);
        CHECK(u.a == best_a);
        CHECK(u.a * u.a - p * u.b * u.b == 4 * u.norm_sign);
    }
}

TEST_CASE("siegel trace filter") {
    CycNum phi2 = (CycNum(1) + CycNum::zeta(5) + CycNum::zeta(5, 4)).pow(2);
    SiegelResult r = siegel_trace_filter(phi2);
    CHECK(r.trace == 3);
    CHECK(r.degree == 2);
    CHECK_FALSE(r.passes_bound);
    CHECK(r.borderline);
    CHECK(siegel_trace_filter(CycNum(1)).is_exception);
}

TEST_CASE("unit windows") {
    CHECK(unit_window_search(5) == std::vector<long>{-2, 0, 2});
    UnitWindowOptions odd;
    odd.parity = UnitWindowOptions::Parity::Odd;
    odd.scale_sqrt_p = true;
    CHECK(unit_window_search(5, odd) == std::vector<long>{-3, -1, 1, 3});
    UnitWindowOptions nz;
    nz.exclude_zero = true;
    for (long p : {13, 17, 29, 37, 41}) CHECK(unit_window_search(p, nz).empty());
    CHECK(unit_window_constant_certificate());
}
