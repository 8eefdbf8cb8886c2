#include "oracles.hpp"

#include "mfc/algebraic.hpp"

#include <doctest.h>

#include <algorithm>

using namespace mfc;

TEST_CASE("text form round trip") {
    IntPoly g = IntPoly::parse("[1,-49,686,-2401]");
    CHECK(g.degree() == 3);
    CHECK(g.a(3) == -2401);
    CHECK(g.to_string() == "[1,-49,686,-2401]");
    CHECK_THROWS_AS(IntPoly::parse("[2,1]"), std::invalid_argument);
    CHECK_THROWS_AS(IntPoly::parse("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(IntPoly::parse("[1,x]"), std::invalid_argument);
}

TEST_CASE("sturm root counting agrees with explicit roots") {
    // (x-1)(x-2)(x-5)(x+3)
    auto c = oracle::poly_from_roots({1, 2, 5, -3});
    std::vector<mpq_class> asc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) asc.emplace_back(static_cast<long>(std::llround(*it)));
    QPoly f(asc);
    CHECK(count_real_roots(f) == 4);
    CHECK(count_roots_in(f, 0, 2) == 2);
    CHECK(count_roots_in(f, 2, 5) == 1);
    CHECK(count_roots_in(f, -10, 0) == 1);
    CHECK_FALSE(all_roots_positive(f));
    CHECK(all_roots_real(f));
}

TEST_CASE("positivity and irreducibility") {
    CHECK(all_roots_positive(IntPoly::parse("[1,-49,686,-2401]")));
    CHECK_FALSE(all_roots_positive(IntPoly::parse("[1,0,1]")));
    CHECK(is_irreducible(IntPoly::parse("[1,-49,686,-2401]")));
    CHECK_FALSE(is_irreducible(IntPoly::parse("[1,-3,2]")));
    CHECK_FALSE(is_irreducible(IntPoly::parse("[1,0,0,0,4]")));  // (x^2+2x+2)(x^2-2x+2)
    CHECK(is_irreducible(IntPoly::parse("[1,0,0,0,2]")));
}

TEST_CASE("graeffe squares the roots") {
    QPoly f({-6, 11, -6, 1});  // roots 1, 2, 3
    QPoly g = graeffe(f);
    CHECK(g.monic() == QPoly({-36, 49, -14, 1}));
}

TEST_CASE("polynomial arithmetic") {
    QPoly a({1, 1}), b({-1, 1});
    CHECK(a * b == QPoly({-1, 0, 1}));
    auto [q, r] = divmod(QPoly({-1, 0, 1}), a);
    CHECK(q == b);
    CHECK(r.is_zero());
    CHECK(poly_gcd(a * b, a * a) == a);
    CHECK(squarefree_part(a * a * b) == a * b);
    CHECK(QPoly({1, 2, 3}).derivative() == QPoly({2, 6}));
}

TEST_CASE("isolating intervals contain the numeric roots") {
    QPoly f({-2, 0, 1});
    auto iv = isolate_real_roots(f, qq(1, 1000));
    REQUIRE(iv.size() == 2);
    long double s = std::sqrt(2.0L);
    CHECK(iv[0].first.get_d() < -s);
    CHECK(iv[0].second.get_d() >= -s);
    CHECK(iv[1].first.get_d() < s);
    CHECK(iv[1].second.get_d() >= s);
}

TEST_CASE("minimal polynomials of cyclotomic numbers") {
    CycNum b7 = CycNum(2) - CycNum::zeta(7) - CycNum::zeta(7, 6);
    auto g = integral_minimal_polynomial(b7.scaled(7));
    REQUIRE(g);
    CHECK(g->to_string() == "[1,-49,686,-2401]");
    CHECK(norm(b7) == 7);
    CHECK(trace(b7) == 7);
    CHECK(is_algebraic_unit(CycNum(1) + CycNum::zeta(5) + CycNum::zeta(5, 4)));
    CHECK_FALSE(is_algebraic_integer(CycNum(qq(1, 2))));
    CHECK(is_totally_positive(b7));
    CHECK_FALSE(is_totally_positive(CycNum(1) + CycNum::zeta(5) + CycNum::zeta(5, 4)));
    QPoly m = minimal_polynomial(b7);
    CHECK(evaluate(m, b7).is_zero());
    // numeric oracle: roots of the minimal polynomial are 4 sin^2(k pi / 7)
    std::vector<long double> roots;
    for (int k = 1; k <= 3; ++k) roots.push_back(4 * std::pow(std::sin(k * std::numbers::pi_v<long double> / 7), 2));
    auto c = oracle::poly_from_roots(roots);
    for (int j = 0; j <= 3; ++j) CHECK(std::abs(m.at(3 - j).get_d() - static_cast<double>(c[j])) < 1e-9);
}
