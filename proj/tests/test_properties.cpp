#include "mfc/serialize.hpp"

#include <doctest.h>

#include <random>

using namespace mfc;

namespace {

constexpr int kCases = 10000;

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
    bool coin() { return uniform(0, 1) == 1; }
    mpq_class rational(long h = 9) {
        long d = uniform(1, h);
        return qq(uniform(-h, h), d);
    }
    long conductor() {
        static const long ns[] = {1, 3, 4, 5, 7, 8, 9, 12, 15, 20, 24};
        return ns[uniform(0, 10)];
    }
    CycNum cyc(long n) {
        std::vector<std::pair<long, mpq_class>> t;
        long terms = uniform(0, 4);
        for (long i = 0; i < terms; ++i) t.emplace_back(uniform(0, n - 1), rational());
        return CycNum::from_terms(n, t);
    }
    CycNum cyc() { return cyc(conductor()); }
    CycNum nonzero(long n) {
        CycNum x = cyc(n);
        while (x.is_zero()) x = cyc(n);
        return x;
    }
    long unit_mod(long n) {
        const auto& u = field(n).units;
        return u[uniform(0, static_cast<long>(u.size()) - 1)];
    }
    CycNum real(long n) {
        CycNum x = cyc(n);
        return x + x.conj();
    }
};

}  // namespace

TEST_CASE("field axioms") {
    Gen g(1);
    for (int i = 0; i < kCases; ++i) {
        long n = g.conductor(), m = g.conductor();
        CycNum a = g.cyc(n), b = g.cyc(m), c = g.cyc(g.conductor());
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + CycNum() == a);
        CHECK(a * CycNum(1) == a);
        CHECK((a - a).is_zero());
        CycNum d = g.nonzero(n);
        CHECK((d * d.inverse()).is_one());
        CHECK((a / d) * d == a);
    }
}

TEST_CASE("galois action is a field automorphism") {
    Gen g(2);
    for (int i = 0; i < kCases; ++i) {
        long n = lcm_l(g.conductor(), g.conductor());
        long s = g.unit_mod(n), t = g.unit_mod(n);
        CycNum a = g.cyc(n), b = g.cyc(n);
        CHECK((a + b).galois(s) == a.galois(s) + b.galois(s));
        CHECK((a * b).galois(s) == a.galois(s) * b.galois(s));
        CHECK(a.galois(s).galois(t) == a.galois(mod_l(s * t, n)));
        CHECK(a.galois(1) == a);
        CHECK(CycNum(g.rational()).galois(s).is_rational());
        GaloisAut sa(n, s), ta(n, t);
        CHECK(sa.compose(ta).apply(a) == sa.apply(ta.apply(a)));
    }
}

TEST_CASE("total positivity is closed under products") {
    Gen g(3);
    int positives = 0;
    for (int i = 0; i < kCases; ++i) {
        long n = g.conductor() == 1 ? 5 : g.conductor();
        CycNum a, b;
        if (g.coin()) {
            CycNum y = g.real(n), z = g.real(n);
            a = y * y + CycNum(qq(g.uniform(1, 5), g.uniform(1, 5)));
            b = z * z + CycNum(qq(g.uniform(1, 5), g.uniform(1, 5)));
        } else {
            a = g.real(n);
            b = g.real(n);
        }
        if (a.is_zero() || b.is_zero()) continue;
        bool pa = is_totally_positive(a), pb = is_totally_positive(b);
        if (pa && pb) {
            ++positives;
            CHECK(is_totally_positive(a * b));
            CHECK(is_totally_positive(a + b));
            CHECK(is_totally_positive(a.inverse()));
        }
    }
    CHECK(positives > kCases / 3);
}

TEST_CASE("deligne product codegrees multiply") {
    std::vector<ModularDatum> pool;
    for (const char* id : {"trivial", "fib", "sl2:1", "sl2:2", "sl2:3", "sl2-ad:7", "pointed-zp:3:1", "pointed-zp:5:2", "sl2-a0:5"})
        pool.push_back(from_category_id(id));
    Gen g(4);
    for (int i = 0; i < kCases; ++i) {
        ModularDatum a = pool[g.uniform(0, static_cast<long>(pool.size()) - 1)];
        ModularDatum b = pool[g.uniform(0, static_cast<long>(pool.size()) - 1)];
        a = galois_conjugate(a, GaloisAut(a.conductor(), g.unit_mod(a.conductor())));
        b = galois_conjugate(b, GaloisAut(b.conductor(), g.unit_mod(b.conductor())));
        auto fa = formal_codegrees(a), fb = formal_codegrees(b);
        std::vector<CycNum> prod;
        for (auto& x : fa)
            for (auto& y : fb) prod.push_back(x * y);
        CHECK(same_multiset(formal_codegrees(deligne_product(a, b)), prod));
    }
}

TEST_CASE("serialization round trips") {
    Gen g(5);
    for (int i = 0; i < kCases; ++i) {
        CycNum x = g.cyc();
        Json jx = to_json(x);
        CHECK(cyc_from_json(Json::parse(jx.dump())) == x);

        long d = g.uniform(1, 6);
        std::vector<mpz_class> c{1};
        for (long j = 0; j < d; ++j) c.push_back(mpz_class(g.uniform(-100000, 100000)) * g.uniform(-100000, 100000));
        IntPoly p(c);
        CHECK(poly_from_json(Json::parse(to_json(p).dump())) == p);

        long r = g.uniform(1, 4);
        FusionRing fr(r, 0);
        for (long k = 0; k < r; ++k) fr.dual[k] = g.uniform(0, r - 1);
        for (auto& n : fr.N) n = g.uniform(0, 3);
        CHECK(ring_from_json(Json::parse(to_json(fr).dump())) == fr);

        SearchCertificate cert;
        cert.procedure = "random";
        cert.parameters["seed"] = std::to_string(i);
        cert.candidates_tested = g.uniform(0, 1000);
        cert.survivors.push_back(p);
        cert.eliminations.push_back({p.to_string(), static_cast<Reason>(g.uniform(0, 7)), "detail"});
        cert.log.push_back("line");
        cert.verified = g.coin();
        if (g.coin()) cert.fusion_ring = fr;
        Json jc = to_json(cert);
        CHECK(to_json(certificate_from_json(Json::parse(jc.dump()))) == jc);
    }
}
