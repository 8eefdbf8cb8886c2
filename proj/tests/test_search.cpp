#include "oracles.hpp"

#include "mfc/search.hpp"

#include <doctest.h>

#include <set>

using namespace mfc;

namespace {

// Independent enumeration of cubics x^3 - a x^2 + b x - 7^4 whose roots are codegree candidates:
// real, f^2 > 4/3, sum 1/f <= budget, d-number, and with integer coordinates in the period basis of Q(zeta_7)+.
std::set<std::string> p7_cubic_oracle(long budget_num, long budget_den) {
    const long N = 2401;
    const long double pi = std::numbers::pi_v<long double>;
    long double eta[3];
    for (int i = 0, g = 1; i < 3; ++i, g = g * 3 % 7) eta[i] = 2 * std::cos(2 * pi * g / 7);
    std::set<std::string> out;
    for (long b = 1; b * budget_den <= budget_num * N; ++b) {
        if (b % 343 != 0) continue;  // 7^8 | b^3
        for (long a = 1; a <= 3 * N; ++a) {
            if (a % 49 != 0) continue;  // 7^4 | a^3
            // trigonometric solution of the depressed cubic
            long double A = a, B = b;
            long double pp = B - A * A / 3, qq = -2 * A * A * A / 27 + A * B / 3 - N;
            if (pp >= 0) continue;
            long double m = 2 * std::sqrt(-pp / 3);
            long double arg = 3 * qq / (pp * m);
            if (std::abs(arg) > 1) continue;
            long double th = std::acos(arg) / 3;
            std::vector<long double> r;
            for (int k = 0; k < 3; ++k) r.push_back(A / 3 + m * std::cos(th - 2 * pi * k / 3));
            bool ok = true;
            for (auto x : r) ok = ok && x > 0 && x * x > 4.0L / 3 + 1e-9L;
            if (!ok) continue;
            // coordinates c with r_k = sum_i c_i eta_(i+k) for some ordering of the roots
            bool found = false;
            std::sort(r.begin(), r.end());
            do {
                // circulant system solved by Cramer
                long double M[3][3];
                for (int k = 0; k < 3; ++k)
                    for (int i = 0; i < 3; ++i) M[k][i] = eta[(i + k) % 3];
                auto det3 = [](long double X[3][3]) {
                    return X[0][0] * (X[1][1] * X[2][2] - X[1][2] * X[2][1]) - X[0][1] * (X[1][0] * X[2][2] - X[1][2] * X[2][0]) +
                           X[0][2] * (X[1][0] * X[2][1] - X[1][1] * X[2][0]);
                };
                long double D = det3(M);
                bool integral = true;
                for (int col = 0; col < 3; ++col) {
                    long double T[3][3];
                    for (int k = 0; k < 3; ++k)
                        for (int i = 0; i < 3; ++i) T[k][i] = i == col ? r[k] : M[k][i];
                    long double c = det3(T) / D;
                    integral = integral && std::abs(c - std::round(c)) < 1e-6L;
                }
                found = found || integral;
            } while (!found && std::next_permutation(r.begin(), r.end()));
            if (found) out.insert(IntPoly({1, -a, b, -N}).to_string());
        }
    }
    return out;
}

std::set<std::string> as_set(const std::vector<IntPoly>& v) {
    std::set<std::string> s;
    for (auto& g : v) s.insert(g.to_string());
    return s;
}

}  // namespace

TEST_CASE("reason vocabulary round trips") {
    for (Reason r : {Reason::Positivity, Reason::ClassEquation, Reason::DNumber, Reason::Reducible, Reason::Cyclotomic,
                     Reason::Norm, Reason::CoefficientBound, Reason::FpDimension})
        CHECK(reason_from_name(reason_name(r)) == r);
    CHECK_FALSE(reason_from_name("bogus"));
}

TEST_CASE("classify candidate") {
    CodegreeSearchOptions opt;
    CHECK_FALSE(classify_candidate(IntPoly::parse("[1,-49,686,-2401]"), 7, opt));
    CHECK(classify_candidate(IntPoly::parse("[1,49,686,2401]"), 7, opt) == Reason::Positivity);
    CHECK(classify_candidate(IntPoly::parse("[1,-50,686,-2401]"), 7, opt) == Reason::DNumber);
    opt.class_budget = qq(1, 10);
    CHECK(classify_candidate(IntPoly::parse("[1,-49,686,-2401]"), 7, opt) == Reason::ClassEquation);
}

TEST_CASE("p = 7 cubic search agrees with an independent enumeration") {
    CodegreeSearchOptions opt;
    opt.class_budget = pbeta_class_budget(7);
    opt.dim_norm_exponent = 4;
    SearchCertificate c = codegree_search(7, 3, 4, opt);
    CHECK(as_set(c.survivors) == p7_cubic_oracle(5, 7));
    CHECK(reverify(c, 7, opt).empty());
    CodegreeSearchOptions def;
    CHECK(as_set(codegree_search(7, 3, 4, def).survivors) == p7_cubic_oracle(1, 1));
}

TEST_CASE("pruned and oracle modes agree and threads are deterministic") {
    CodegreeSearchOptions opt;
    opt.class_budget = pbeta_class_budget(7);
    SearchCertificate pruned = codegree_search(7, 3, 4, opt);
    opt.threads = 3;
    SearchCertificate threaded = codegree_search(7, 3, 4, opt);
    CHECK(pruned.survivors == threaded.survivors);
    CHECK(pruned.candidates_tested == threaded.candidates_tested);
    CHECK(pruned.eliminations.size() == threaded.eliminations.size());
    CodegreeSearchOptions small;
    small.prune = false;
    SearchCertificate box = codegree_search(5, 2, 3, small);
    small.prune = true;
    CHECK(codegree_search(5, 2, 3, small).survivors == box.survivors);
}

TEST_CASE("degree one search") {
    SearchCertificate c = codegree_search(5, 1, 1);
    REQUIRE(c.survivors.size() == 1);
    CHECK(c.survivors[0].to_string() == "[1,-5]");
}

TEST_CASE("cosecant sums match the numeric oracle") {
    for (long p : {5, 7, 11, 13, 17, 19, 23}) {
        long double s = 0;
        for (long k = 1; k <= (p - 1) / 2; ++k) s += 1 / (4 * std::pow(std::sin(k * std::numbers::pi_v<long double> / p), 2));
        CHECK(cosecant_sum(p).get_d() == doctest::Approx(static_cast<double>(s)));
        CHECK(cosecant_sum(p) == qq(p * p - 1, 24));
    }
    CHECK(pbeta_class_budget(13) == qq(6, 13));
    CHECK(beta(7).is_real());
}

TEST_CASE("proper degree eliminations") {
    for (long p : {13, 17, 19}) {
        SearchCertificate c = proper_degree_elimination(p);
        CHECK(c.survivors.empty());
        CHECK(c.verified);
        CHECK(c.candidates_tested > 0);
    }
}

TEST_CASE("rank eliminations") {
    for (long p : {11, 13}) {
        SearchCertificate c = rank_elimination_p11_13(p);
        CHECK(c.survivors.empty());
        CHECK(c.surviving_cases.empty());
        CHECK(c.verified);
    }
    CHECK_THROWS(rank_elimination_p11_13(7));
}

TEST_CASE("p = 17 trace contradiction") {
    TraceContradiction t = trace_contradiction_p17();
    CHECK(t.trace_identity);
    CHECK(t.sine_bound);
    CHECK(t.verdict);
    CHECK(compare_real(t.lhs, t.rhs) <= 0);
}

TEST_CASE("window bound and rank windows") {
    WindowBound w = monotone_window_p_bound();
    CHECK(w.certified);
    CHECK(w.max_p == 23);
    // numeric oracle: 4 p sin^2(pi/p) crosses 4 sqrt3/5 between 23 and 29
    auto f = [](long p) { return 4 * p * std::pow(std::sin(std::numbers::pi / p), 2); };
    CHECK(f(23) > 4 * std::sqrt(3.0) / 5);
    CHECK(f(29) < 4 * std::sqrt(3.0) / 5);
    CHECK(rank_window(7, 4).allowed == std::vector<long>{6, 9, 12});
    CHECK(rank_window(19, 10).allowed == std::vector<long>{18});
}

TEST_CASE("fusion ring reconstruction at p = 7") {
    SearchCertificate c = fusion_reconstruct_p7();
    CHECK(c.verified);
    REQUIRE(c.fusion_ring);
    CHECK(c.fusion_ring->rank == 9);
    CHECK(c.fusion_ring->check_invariants().empty());
    CHECK(grothendieck_match(sl2_5_adjoint_ring(), verlinde(sl2_adjoint(7))).has_value());
    FusionRing t = tensor_product(sl2_5_adjoint_ring(), sl2_5_adjoint_ring());
    CHECK(grothendieck_match(*c.fusion_ring, t).has_value());
}
