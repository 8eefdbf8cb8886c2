#include "mfc/number_theory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace mfc {

bool is_d_number(const IntPoly& g) {
    long n = g.degree();
    mpz_class an = abs(g.a(n));
    for (long j = 1; j <= n; ++j) {
        mpz_class aj = abs(g.a(j));
        if (aj == 0) continue;
        mpz_class lhs, rhs;
        mpz_pow_ui(lhs.get_mpz_t(), an.get_mpz_t(), static_cast<unsigned long>(j));
        mpz_pow_ui(rhs.get_mpz_t(), aj.get_mpz_t(), static_cast<unsigned long>(n));
        if (lhs == 0) return false;
        if (!mpz_divisible_p(rhs.get_mpz_t(), lhs.get_mpz_t())) return false;
    }
    return true;
}

long primitive_root(long p) {
    auto fac = prime_factors(p - 1);
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : fac) {
            mpz_class r;
            mpz_class base = g, mod = p;
            mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>((p - 1) / q), mod.get_mpz_t());
            if (r == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    return 1;
}

static long powmod(long b, long e, long m) {
    long r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

std::vector<CycNum> gaussian_periods(long p, long d) {
    if ((p - 1) % d) throw std::invalid_argument("period degree must divide p-1");
    long g = primitive_root(p), L = (p - 1) / d;
    std::vector<CycNum> eta;
    for (long i = 0; i < d; ++i) {
        std::vector<std::pair<long, mpq_class>> terms;
        for (long k = 0; k < L; ++k) terms.emplace_back(powmod(g, i + d * k, p), mpq_class(1));
        eta.push_back(CycNum::from_terms(p, terms));
    }
    return eta;
}

namespace {

bool invert(std::vector<std::vector<long double>> a, std::vector<std::vector<long double>>& inv) {
    std::size_t n = a.size();
    inv.assign(n, std::vector<long double>(n, 0));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (std::fabs(a[r][c]) > std::fabs(a[piv][c])) piv = r;
        if (std::fabs(a[piv][c]) < 1e-300L) return false;
        std::swap(a[c], a[piv]);
        std::swap(inv[c], inv[piv]);
        long double f = a[c][c];
        for (std::size_t k = 0; k < n; ++k) {
            a[c][k] /= f;
            inv[c][k] /= f;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            long double m = a[r][c];
            for (std::size_t k = 0; k < n; ++k) {
                a[r][k] -= m * a[c][k];
                inv[r][k] -= m * inv[c][k];
            }
        }
    }
    return true;
}

}  // namespace

std::optional<CycNum> cyclotomic_root(const IntPoly& g, long p) {
    long d = g.degree();
    if (!is_prime(p)) throw std::invalid_argument("cyclotomic_test: p must be prime");
    if (((p - 1) / 2) % d != 0) throw DegreeError("degree does not divide (p-1)/2");
    if (!is_irreducible(g)) throw ReducibleError("polynomial is reducible");
    QPoly f = g.to_qpoly();
    if (SturmChain(f).count_real() != d) return std::nullopt;
    if (d == 1) return CycNum(-f.at(0));
    auto roots = real_roots_ld(f, 80);
    auto eta = gaussian_periods(p, d);
    std::vector<long double> eta_v;
    for (auto& e : eta) eta_v.push_back(e.to_complex().real());
    std::vector<std::vector<long double>> C(d, std::vector<long double>(d)), Cinv;
    for (long k = 0; k < d; ++k)
        for (long i = 0; i < d; ++i) C[k][i] = eta_v[(i + k) % d];
    if (!invert(C, Cinv)) throw std::logic_error("period matrix is singular");
    long double scale = 1;
    for (auto r : roots) scale = std::max(scale, std::fabs(r));
    std::vector<long> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::vector<long double> c(d);
    do {
        bool near = true;
        for (long i = 0; i < d && near; ++i) {
            long double s = 0;
            for (long k = 0; k < d; ++k) s += Cinv[i][k] * roots[order[k]];
            c[i] = s;
            near = std::fabs(s - std::round(s)) < 1e-6L * std::max(1.0L, scale);
        }
        if (!near) continue;
        CycNum cand(0);
        for (long i = 0; i < d; ++i) {
            long ci = std::lround(c[i]);
            if (ci) cand += eta[i].scaled(mpq_class(ci));
        }
        if (evaluate(f, cand).is_zero()) return cand;
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return std::nullopt;
}

bool cyclotomic_test(const IntPoly& g, long p) { return cyclotomic_root(g, p).has_value(); }

int QuadraticSurd::sign() const {
    int sa = sgn(a), sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with b^2 r
    mpq_class d = a * a - b * b * r;
    return sgn(d) * sa;
}

long double QuadraticSurd::value() const {
    return static_cast<long double>(a.get_d()) + static_cast<long double>(b.get_d()) * std::sqrt(static_cast<long double>(r));
}

std::string QuadraticSurd::to_string() const {
    std::ostringstream os;
    os << a << (b < 0 ? " - " : " + ") << abs(b) << "*sqrt(" << r << ")";
    return os.str();
}

static void same_radicand(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (x.r != y.r && x.b != 0 && y.b != 0) throw std::invalid_argument("quadratic surds over different fields");
}

QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
    same_radicand(x, y);
    return {x.a + y.a, x.b + y.b, x.b != 0 ? x.r : y.r};
}

QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) {
    same_radicand(x, y);
    return {x.a - y.a, x.b - y.b, x.b != 0 ? x.r : y.r};
}

QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
    same_radicand(x, y);
    long r = x.b != 0 ? x.r : y.r;
    return {x.a * y.a + x.b * y.b * r, x.a * y.b + x.b * y.a, r};
}

QuadraticSurd QuadraticSurd::inverse() const {
    mpq_class n = norm();
    if (n == 0) throw std::domain_error("inverse of zero surd");
    return {a / n, -b / n, r};
}

QuadraticSurd QuadraticSurd::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    QuadraticSurd res{1, 0, r}, base = *this;
    while (e) {
        if (e & 1) res = res * base;
        base = base * base;
        e >>= 1;
    }
    return res;
}

CycNum QuadraticSurd::to_cyc() const {
    CycNum root;
    if (r == 2) {
        root = CycNum::zeta(8, 1) + CycNum::zeta(8, -1);
    } else {
        if (!is_prime(r)) throw std::invalid_argument("to_cyc: radicand must be prime");
        std::vector<std::pair<long, mpq_class>> t;
        for (long x = 1; x < r; ++x) t.emplace_back(x * x % r, mpq_class(1));
        CycNum gauss = CycNum::from_terms(r, t) + CycNum(1);  // sum over all residues of zeta^(x^2)
        root = (r % 4 == 1) ? gauss : gauss * CycNum::zeta(4, -1);
    }
    return CycNum(a) + root.scaled(b);
}

int compare(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign(); }

QuadraticUnit fundamental_unit(long p) {
    for (long b = 1;; ++b) {
        for (int s : {-1, 1}) {
            mpz_class t = mpz_class(p) * b * b + 4 * s;
            if (t < 0) continue;
            mpz_class a = sqrt(t);
            if (a * a == t && a > 0) {
                QuadraticUnit u;
                u.p = p;
                u.a = a;
                u.b = b;
                u.norm_sign = s;
                return u;
            }
        }
    }
}

SiegelResult siegel_trace_filter(const CycNum& u) {
    if (!u.is_real() || !is_totally_positive(u)) throw std::domain_error("siegel_trace_filter: not totally positive");
    QPoly f = minimal_polynomial(u);
    SiegelResult r;
    r.degree = f.degree();
    r.trace = -f.at(r.degree - 1);
    r.passes_bound = r.trace > qq(179, 100) * r.degree;
    QPoly exceptional({mpq_class(-1), mpq_class(6), mpq_class(-5), mpq_class(1)});
    r.is_exception = u.is_one() || f == exceptional;
    r.borderline = !r.passes_bound && !r.is_exception;
    return r;
}

std::vector<long> unit_window_search(long p, const UnitWindowOptions& opt) {
    QuadraticUnit eps = fundamental_unit(p);
    QuadraticSurd e = eps.value();
    QuadraticSurd scale = opt.scale_sqrt_p ? QuadraticSurd{0, p, p} : QuadraticSurd{p, 0, p};
    auto exceeds = [&](const QuadraticSurd& v) {
        if (v.sign() <= 0) return false;
        QuadraticSurd sq = v * v;
        return compare(sq, QuadraticSurd{opt.lower_bound_sq, 0, p}) > 0;
    };
    std::vector<long> out;
    for (long n = -opt.max_abs_exponent; n <= opt.max_abs_exponent; ++n) {
        bool even = n % 2 == 0;
        if (opt.parity == UnitWindowOptions::Parity::Even && !even) continue;
        if (opt.parity == UnitWindowOptions::Parity::Odd && even) continue;
        if (n == 0 && opt.exclude_zero) continue;
        QuadraticSurd v = scale * e.pow(n);
        if (exceeds(v) && exceeds(v.conj())) out.push_back(n);
    }
    return out;
}

bool unit_window_constant_certificate() {
    QuadraticSurd t{0, qq(5, 12), 3};  // 5/(4 sqrt 3) = 5 sqrt 3 / 12
    if ((t * t).a != qq(25, 48)) return false;
    // sqrt(t) > t + 12/100  <=>  t > (t + 12/100)^2
    QuadraticSurd s = t + QuadraticSurd{qq(12, 100), 0, 3};
    bool first = (t - s * s).sign() > 0;
    bool second = qq(12, 100) > qq(1, 13);
    return first && second;
}

}  // namespace mfc
