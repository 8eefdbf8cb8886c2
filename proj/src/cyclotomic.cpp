#include "mfc/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <climits>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace mfc {

using i128 = __int128;

long gcd_l(long a, long b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long lcm_l(long a, long b) { return a / gcd_l(a, b) * b; }

long mod_l(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

std::vector<long> prime_factors(long n) {
    std::vector<long> f;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            f.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) f.push_back(n);
    return f;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

long euler_phi(long n) {
    long r = n;
    for (long p : prime_factors(n)) r = r / p * (p - 1);
    return r;
}

static int mobius(long n) {
    int m = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            m = -m;
        }
    }
    if (n > 1) m = -m;
    return m;
}

namespace {

std::vector<long> poly_mul_xd_minus_1(const std::vector<long>& a, long d) {
    std::vector<long> r(a.size() + d, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i + d] += a[i];
        r[i] -= a[i];
    }
    return r;
}

// exact division by x^d - 1
std::vector<long> poly_div_xd_minus_1(std::vector<long> a, long d) {
    std::size_t deg = a.size() - 1;
    std::vector<long> q(deg - d + 1, 0);
    for (long i = static_cast<long>(deg); i >= d; --i) {
        long c = a[i];
        q[i - d] = c;
        a[i] -= c;
        a[i - d] += c;
    }
    for (long i = 0; i < d; ++i)
        if (a[i] != 0) throw std::logic_error("cyclotomic polynomial division not exact");
    return q;
}

std::unique_ptr<FieldData> build_field(long n) {
    auto F = std::make_unique<FieldData>();
    F->n = n;
    F->phi = euler_phi(n);
    std::vector<long> num{1}, divs_neg;
    for (long d = 1; d <= n; ++d) {
        if (n % d) continue;
        int mu = mobius(n / d);
        if (mu == 1) num = poly_mul_xd_minus_1(num, d);
        if (mu == -1) divs_neg.push_back(d);
    }
    for (long d : divs_neg) num = poly_div_xd_minus_1(num, d);
    if (static_cast<long>(num.size()) != F->phi + 1) throw std::logic_error("bad cyclotomic degree");
    F->cyclo = num;
    long phi = F->phi;
    std::vector<long> r(phi);
    for (long i = 0; i < phi; ++i) r[i] = -num[i];
    for (long k = phi; k < n; ++k) {
        F->high.push_back(r);
        long top = r[phi - 1];
        std::vector<long> nr(phi);
        for (long i = phi - 1; i >= 1; --i) nr[i] = r[i - 1];
        nr[0] = 0;
        for (long i = 0; i < phi; ++i) {
            i128 v = static_cast<i128>(nr[i]) - static_cast<i128>(top) * num[i];
            if (v > LONG_MAX / 4 || v < LONG_MIN / 4) throw std::overflow_error("reduction row overflow");
            nr[i] = static_cast<long>(v);
        }
        r = nr;
    }
    long gain = 1;
    for (long i = 0; i < phi; ++i) {
        long s = 1;
        for (auto& row : F->high) s += std::labs(row[i]);
        gain = std::max(gain, s);
    }
    long bits = 0;
    while ((1L << bits) < gain) ++bits;
    F->gain_bits = bits;
    F->trace.resize(phi);
    for (long i = 0; i < phi; ++i) {
        long g = gcd_l(i, n);
        long m = n / g;
        F->trace[i] = mobius(m) * (phi / euler_phi(m));
    }
    for (long a = 1; a <= n; ++a)
        if (gcd_l(a, n) == 1) F->units.push_back(a % n);
    std::sort(F->units.begin(), F->units.end());
    return F;
}

std::mutex g_field_mutex;
std::map<long, std::unique_ptr<FieldData>> g_fields;

long max_bits(const std::vector<mpz_class>& v) {
    long b = 0;
    for (auto& z : v)
        if (z != 0) b = std::max<long>(b, static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2)));
    return b;
}

long bits_of(long x) {
    long b = 0;
    while (x > 0) {
        ++b;
        x >>= 1;
    }
    return b;
}

void set_i128(mpz_class& z, i128 v) {
    if (v >= LONG_MIN && v <= LONG_MAX) {
        z = static_cast<long>(v);
        return;
    }
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(u >> 64));
    mpz_mul_2exp(z.get_mpz_t(), z.get_mpz_t(), 64);
    mpz_add_ui(z.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(u));
    if (neg) mpz_neg(z.get_mpz_t(), z.get_mpz_t());
}

void addmul_l(mpz_class& acc, const mpz_class& a, long b) {
    if (b >= 0)
        mpz_addmul_ui(acc.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(b));
    else
        mpz_submul_ui(acc.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(-b));
}

// v has length n; writes the canonical length-phi vector.
void reduce_i128(const FieldData& F, const std::vector<i128>& v, std::vector<mpz_class>& out) {
    long phi = F.phi, n = F.n;
    std::vector<i128> r(v.begin(), v.begin() + phi);
    for (long k = phi; k < n; ++k) {
        i128 c = v[k];
        if (c == 0) continue;
        const auto& row = F.high[k - phi];
        for (long i = 0; i < phi; ++i)
            if (row[i]) r[i] += c * row[i];
    }
    out.assign(phi, mpz_class(0));
    for (long i = 0; i < phi; ++i) set_i128(out[i], r[i]);
}

void reduce_mpz(const FieldData& F, std::vector<mpz_class>& v, std::vector<mpz_class>& out) {
    long phi = F.phi, n = F.n;
    out.assign(v.begin(), v.begin() + phi);
    for (long k = phi; k < n; ++k) {
        const mpz_class& c = v[k];
        if (c == 0) continue;
        const auto& row = F.high[k - phi];
        for (long i = 0; i < phi; ++i)
            if (row[i]) addmul_l(out[i], c, row[i]);
    }
}

}  // namespace

const FieldData& field(long n) {
    if (n < 1) throw std::invalid_argument("conductor must be positive");
    std::lock_guard<std::mutex> lock(g_field_mutex);
    auto it = g_fields.find(n);
    if (it != g_fields.end()) return *it->second;
    auto F = build_field(n);
    auto& ref = *F;
    g_fields.emplace(n, std::move(F));
    return ref;
}

struct CycKernel {
    // Places sum c_i zeta^{map(i)} (length n) and reduces, choosing the integer width.
    template <class MapFn>
    static std::vector<mpz_class> scatter_reduce(const FieldData& F, const std::vector<mpz_class>& c, MapFn map) {
        long n = F.n;
        std::vector<mpz_class> out;
        if (max_bits(c) <= 62 && max_bits(c) + F.gain_bits + 4 <= 124) {
            std::vector<i128> v(n, 0);
            for (std::size_t i = 0; i < c.size(); ++i)
                if (c[i] != 0) v[map(static_cast<long>(i))] += c[i].get_si();
            reduce_i128(F, v, out);
        } else {
            std::vector<mpz_class> v(n, mpz_class(0));
            for (std::size_t i = 0; i < c.size(); ++i)
                if (c[i] != 0) v[map(static_cast<long>(i))] += c[i];
            reduce_mpz(F, v, out);
        }
        return out;
    }

    static std::vector<mpz_class> mul_coeffs(const FieldData& F, const std::vector<mpz_class>& a,
                                             const std::vector<mpz_class>& b) {
        long n = F.n, phi = F.phi;
        long ba = max_bits(a), bb = max_bits(b);
        std::vector<mpz_class> out;
        if (ba == 0 || bb == 0) {
            out.assign(phi, mpz_class(0));
            return out;
        }
        if (ba <= 62 && bb <= 62 && ba + bb + bits_of(phi) + F.gain_bits + 4 <= 124) {
            std::vector<long> al(phi), bl(phi);
            for (long i = 0; i < phi; ++i) {
                al[i] = a[i].get_si();
                bl[i] = b[i].get_si();
            }
            std::vector<i128> v(n, 0);
            for (long i = 0; i < phi; ++i) {
                if (!al[i]) continue;
                i128 x = al[i];
                for (long j = 0; j < phi; ++j) {
                    if (!bl[j]) continue;
                    long k = i + j;
                    if (k >= n) k -= n;
                    v[k] += x * bl[j];
                }
            }
            reduce_i128(F, v, out);
        } else {
            std::vector<mpz_class> v(n, mpz_class(0));
            for (long i = 0; i < phi; ++i) {
                if (a[i] == 0) continue;
                for (long j = 0; j < phi; ++j) {
                    if (b[j] == 0) continue;
                    long k = i + j;
                    if (k >= n) k -= n;
                    mpz_addmul(v[k].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
                }
            }
            reduce_mpz(F, v, out);
        }
        return out;
    }
};

CycNum::CycNum() : n_(1), num_(1, mpz_class(0)), den_(1) {}

CycNum::CycNum(long v) : n_(1), num_(1, mpz_class(v)), den_(1) {}

CycNum::CycNum(const mpq_class& q, long conductor) : n_(1), num_(1, q.get_num()), den_(q.get_den()) {
    if (conductor != 1) *this = embed(conductor);
}

CycNum CycNum::zeta(long n, long k) {
    if (n < 1) throw std::invalid_argument("root_of_unity: n must be positive");
    const FieldData& F = field(n);
    CycNum r;
    r.n_ = n;
    std::vector<mpz_class> c(1, mpz_class(1));
    long e = mod_l(k, n);
    r.num_ = CycKernel::scatter_reduce(F, c, [e](long) { return e; });
    r.den_ = 1;
    return r;
}

CycNum CycNum::from_terms(long n, const std::vector<std::pair<long, mpq_class>>& terms) {
    const FieldData& F = field(n);
    mpz_class den = 1;
    for (auto& t : terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.second.get_den_mpz_t());
    std::vector<mpz_class> v(n, mpz_class(0));
    for (auto& t : terms) {
        mpz_class scale = den / t.second.get_den();
        v[mod_l(t.first, n)] += t.second.get_num() * scale;
    }
    std::vector<long> idx(n);
    std::vector<mpz_class> out;
    reduce_mpz(F, v, out);
    return from_coeffs(n, std::move(out), den);
}

CycNum CycNum::from_coeffs(long n, std::vector<mpz_class> num, mpz_class den) {
    const FieldData& F = field(n);
    if (static_cast<long>(num.size()) != F.phi) throw std::invalid_argument("coefficient length must equal phi(n)");
    if (den == 0) throw std::invalid_argument("zero denominator");
    CycNum r;
    r.n_ = n;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.normalize();
    return r;
}

void CycNum::normalize() {
    if (den_ < 0) {
        den_ = -den_;
        for (auto& z : num_) z = -z;
    }
    if (den_ == 1) return;
    mpz_class g = den_;
    bool allzero = true;
    for (auto& z : num_) {
        if (z == 0) continue;
        allzero = false;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        if (g == 1) return;
    }
    if (allzero) {
        den_ = 1;
        return;
    }
    for (auto& z : num_) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

mpq_class CycNum::coeff(long i) const {
    return qq(num_.at(i), den_);
}

bool CycNum::is_zero() const {
    for (auto& z : num_)
        if (z != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (std::size_t i = 1; i < num_.size(); ++i)
        if (num_[i] != 0) return false;
    return true;
}

bool CycNum::is_one() const { return is_rational() && den_ == 1 && num_[0] == 1; }

mpq_class CycNum::rational_value() const {
    if (!is_rational()) throw std::logic_error("not a rational element");
    return coeff(0);
}

CycNum CycNum::embed(long m) const {
    if (m == n_) return *this;
    if (m % n_ != 0) throw std::invalid_argument("embed: target conductor must be a multiple");
    const FieldData& F = field(m);
    long step = m / n_;
    CycNum r;
    r.n_ = m;
    r.num_ = CycKernel::scatter_reduce(F, num_, [step](long i) { return i * step; });
    r.den_ = den_;
    return r;
}

CycNum CycNum::galois(long a) const {
    long e = mod_l(a, n_);
    if (gcd_l(e, n_) != 1 && n_ != 1) throw std::invalid_argument("Galois exponent not coprime to conductor");
    if (e == 1 || n_ <= 2) return *this;
    const FieldData& F = field(n_);
    CycNum r;
    r.n_ = n_;
    long n = n_;
    r.num_ = CycKernel::scatter_reduce(F, num_, [e, n](long i) { return (i * e) % n; });
    r.den_ = den_;
    return r;
}

bool CycNum::is_real() const { return conj() == *this; }

CycNum& CycNum::operator+=(const CycNum& o) {
    if (o.n_ != n_) {
        long m = lcm_l(n_, o.n_);
        *this = embed(m);
        return *this += o.embed(m);
    }
    if (den_ == o.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
    } else {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_.get_mpz_t(), o.den_.get_mpz_t());
        mpz_class sa = o.den_ / g, sb = den_ / g;
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * sa + o.num_[i] * sb;
        den_ *= sa;
    }
    normalize();
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& z : r.num_) z = -z;
    return r;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
    if (a.n_ != b.n_) {
        long m = lcm_l(a.n_, b.n_);
        return a.embed(m) * b.embed(m);
    }
    if (b.is_rational()) return a.scaled(b.coeff(0));
    if (a.is_rational()) return b.scaled(a.coeff(0));
    const FieldData& F = field(a.n_);
    CycNum r;
    r.n_ = a.n_;
    r.num_ = CycKernel::mul_coeffs(F, a.num_, b.num_);
    r.den_ = a.den_ * b.den_;
    r.normalize();
    return r;
}

CycNum& CycNum::operator*=(const CycNum& o) {
    *this = *this * o;
    return *this;
}

CycNum& CycNum::operator/=(const CycNum& o) {
    *this = *this * o.inverse();
    return *this;
}

CycNum CycNum::scaled(const mpq_class& q) const {
    CycNum r = *this;
    if (q == 0) {
        for (auto& z : r.num_) z = 0;
        r.den_ = 1;
        return r;
    }
    for (auto& z : r.num_) z *= q.get_num();
    r.den_ *= q.get_den();
    r.normalize();
    return r;
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.n_ != b.n_) {
        long m = lcm_l(a.n_, b.n_);
        return a.embed(m) == b.embed(m);
    }
    return a.den_ == b.den_ && a.num_ == b.num_;
}

std::vector<CycNum> galois_orbit(const CycNum& x) {
    std::vector<CycNum> orbit{x};
    if (x.is_rational()) return orbit;
    std::unordered_set<std::size_t> seen_hash;
    seen_hash.insert(x.hash());
    for (long a : field(x.conductor()).units) {
        if (a == 1) continue;
        CycNum y = x.galois(a);
        std::size_t h = y.hash();
        if (seen_hash.count(h)) {
            bool dup = false;
            for (auto& z : orbit)
                if (z == y) {
                    dup = true;
                    break;
                }
            if (dup) continue;
        }
        seen_hash.insert(h);
        orbit.push_back(std::move(y));
    }
    return orbit;
}

long algebraic_degree(const CycNum& x) {
    if (x.is_rational()) return 1;
    const FieldData& F = field(x.conductor());
    long stab = 0;
    for (long a : F.units)
        if (x.galois(a) == x) ++stab;
    return F.phi / stab;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (is_rational()) return CycNum(mpq_class(1) / coeff(0), n_);
    auto orbit = galois_orbit(*this);
    CycNum prod(1);
    for (std::size_t i = 1; i < orbit.size(); ++i) prod *= orbit[i];
    CycNum nrm = prod * *this;
    if (!nrm.is_rational()) throw std::logic_error("orbit product is not rational");
    return prod.scaled(mpq_class(1) / nrm.coeff(0));
}

CycNum CycNum::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNum result(1), base = *this;
    result = result.embed(n_);
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

CycNum CycNum::reduce() const {
    if (n_ <= 2) return CycNum(coeff(0));
    if (is_rational()) return CycNum(coeff(0));
    const FieldData& F = field(n_);
    std::vector<long> divs;
    for (long m = 1; m <= n_; ++m)
        if (n_ % m == 0 && m % 4 != 2) divs.push_back(m);
    for (long m : divs) {
        if (m == n_) break;
        bool fixed = true;
        for (long a : F.units) {
            if (a % m != 1 % m) continue;
            if (galois(a) != *this) {
                fixed = false;
                break;
            }
        }
        if (!fixed) continue;
        // express in Q(zeta_m): solve E c = x over Q
        const FieldData& G = field(m);
        long rows = F.phi, cols = G.phi;
        std::vector<std::vector<mpq_class>> A(rows, std::vector<mpq_class>(cols + 1));
        for (long j = 0; j < cols; ++j) {
            CycNum e = CycNum::zeta(m, j).embed(n_);
            for (long i = 0; i < rows; ++i) A[i][j] = e.num_[i];
        }
        for (long i = 0; i < rows; ++i) A[i][cols] = coeff(i);
        long r = 0;
        std::vector<long> piv;
        for (long c = 0; c < cols && r < rows; ++c) {
            long p = -1;
            for (long i = r; i < rows; ++i)
                if (A[i][c] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            std::swap(A[p], A[r]);
            for (long i = 0; i < rows; ++i) {
                if (i == r || A[i][c] == 0) continue;
                mpq_class f = A[i][c] / A[r][c];
                for (long k = c; k <= cols; ++k) A[i][k] -= f * A[r][k];
            }
            piv.push_back(c);
            ++r;
        }
        std::vector<std::pair<long, mpq_class>> terms;
        for (long i = 0; i < r; ++i) terms.emplace_back(piv[i], A[i][cols] / A[i][piv[i]]);
        CycNum res = CycNum::from_terms(m, terms);
        if (res.embed(n_) != *this) throw std::logic_error("conductor reduction failed");
        return res;
    }
    return *this;
}

std::complex<long double> CycNum::to_complex() const {
    std::complex<long double> s = 0;
    const long double two_pi = 6.283185307179586476925286766559L;
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        long double c = den_ == 1 ? num_[i].get_d() : qq(num_[i], den_).get_d();
        long double ang = two_pi * static_cast<long double>(i) / static_cast<long double>(n_);
        s += c * std::complex<long double>(std::cos(ang), std::sin(ang));
    }
    return s;
}

std::complex<double> CycNum::to_complex_d() const {
    auto z = to_complex();
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

std::size_t CycNum::hash() const {
    std::size_t h = std::hash<long>()(n_) ^ (mpz_get_ui(den_.get_mpz_t()) * 0x9e3779b97f4a7c15ULL);
    for (auto& z : num_) {
        std::size_t v = mpz_get_ui(z.get_mpz_t()) ^ (static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1) << 62);
        h = (h ^ v) * 0x100000001b3ULL + 0x9e3779b97f4a7c15ULL;
    }
    return h;
}

std::string CycNum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        mpq_class c = coeff(static_cast<long>(i));
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        mpq_class a = abs(c);
        if (i == 0) os << a;
        else {
            if (a != 1) os << a << "*";
            os << "z" << n_;
            if (i != 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.to_string(); }

GaloisAut::GaloisAut(long n_, long a_) : n(n_), a(mod_l(a_, n_)) {
    if (gcd_l(a, n) != 1 && n != 1) throw std::invalid_argument("Galois exponent not coprime to conductor");
    if (n == 1) a = 0;
}

GaloisAut GaloisAut::compose(const GaloisAut& o) const {
    if (o.n != n) throw std::invalid_argument("compose: conductors differ");
    return GaloisAut(n, a * o.a);
}

CycNum GaloisAut::apply(const CycNum& x) const {
    if (n % x.conductor() != 0) throw std::invalid_argument("automorphism conductor must be a multiple of element conductor");
    return x.galois(a);
}

std::vector<long> unit_group_generators(long n) {
    const auto& units = field(n).units;
    std::set<long> sub{1 % n};
    std::vector<long> gens;
    for (long a : units) {
        if (sub.count(a)) continue;
        gens.push_back(a);
        std::vector<long> frontier(sub.begin(), sub.end());
        std::set<long> next = sub;
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<long> cur(next.begin(), next.end());
            for (long s : cur) {
                long t = (s * a) % n;
                if (!next.count(t)) {
                    next.insert(t);
                    grew = true;
                }
            }
        }
        sub = next;
    }
    return gens;
}

std::optional<std::pair<long, long>> as_root_of_unity(const CycNum& x) {
    long n = x.conductor();
    long N = lcm_l(2, n);
    auto z = x.to_complex();
    long double mag = std::abs(z);
    if (std::fabs(mag - 1.0L) > 1e-6L) return std::nullopt;
    long double ang = std::arg(z);
    const long double two_pi = 6.283185307179586476925286766559L;
    long k = mod_l(std::lround(ang * N / two_pi), N);
    if (CycNum::zeta(N, k) != x) return std::nullopt;
    long g = gcd_l(k, N);
    if (k == 0) return std::make_pair(1L, 0L);
    return std::make_pair(N / g, k / g);
}

mpq_class field_trace(const CycNum& x) {
    const FieldData& F = field(x.conductor());
    mpz_class s = 0;
    for (long i = 0; i < F.phi; ++i)
        if (F.trace[i] && x.numerators()[i] != 0) addmul_l(s, x.numerators()[i], F.trace[i]);
    return qq(s, x.denominator());
}

CycNum dot(const std::vector<const CycNum*>& a, const std::vector<const CycNum*>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    if (a.empty()) return CycNum(0);
    long n = 1;
    for (std::size_t i = 0; i < a.size(); ++i) n = lcm_l(n, lcm_l(a[i]->conductor(), b[i]->conductor()));
    const FieldData& F = field(n);
    mpz_class da = 1, db = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        mpz_lcm(da.get_mpz_t(), da.get_mpz_t(), a[i]->denominator().get_mpz_t());
        mpz_lcm(db.get_mpz_t(), db.get_mpz_t(), b[i]->denominator().get_mpz_t());
    }
    auto prep = [&](const CycNum* x, const mpz_class& D) {
        CycNum y = x->conductor() == n ? *x : x->embed(n);
        std::vector<mpz_class> v = y.numerators();
        if (y.denominator() != D) {
            mpz_class s = D / y.denominator();
            for (auto& z : v) z *= s;
        }
        return v;
    };
    std::vector<std::vector<mpz_class>> A, B;
    A.reserve(a.size());
    B.reserve(b.size());
    long ba = 0, bb = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        A.push_back(prep(a[i], da));
        B.push_back(prep(b[i], db));
        ba = std::max(ba, max_bits(A.back()));
        bb = std::max(bb, max_bits(B.back()));
    }
    long phi = F.phi;
    std::vector<mpz_class> out;
    long extra = bits_of(phi) + bits_of(static_cast<long>(a.size())) + F.gain_bits + 4;
    if (ba <= 62 && bb <= 62 && ba + bb + extra <= 124) {
        std::vector<i128> v(n, 0);
        std::vector<long> al(phi), bl(phi);
        for (std::size_t t = 0; t < A.size(); ++t) {
            bool za = true, zb = true;
            for (long i = 0; i < phi; ++i) {
                al[i] = A[t][i].get_si();
                bl[i] = B[t][i].get_si();
                za = za && !al[i];
                zb = zb && !bl[i];
            }
            if (za || zb) continue;
            for (long i = 0; i < phi; ++i) {
                if (!al[i]) continue;
                i128 x = al[i];
                for (long j = 0; j < phi; ++j) {
                    if (!bl[j]) continue;
                    long k = i + j;
                    if (k >= n) k -= n;
                    v[k] += x * bl[j];
                }
            }
        }
        reduce_i128(F, v, out);
    } else {
        std::vector<mpz_class> v(n, mpz_class(0));
        for (std::size_t t = 0; t < A.size(); ++t)
            for (long i = 0; i < phi; ++i) {
                if (A[t][i] == 0) continue;
                for (long j = 0; j < phi; ++j) {
                    if (B[t][j] == 0) continue;
                    long k = i + j;
                    if (k >= n) k -= n;
                    mpz_addmul(v[k].get_mpz_t(), A[t][i].get_mpz_t(), B[t][j].get_mpz_t());
                }
            }
        reduce_mpz(F, v, out);
    }
    return CycNum::from_coeffs(n, std::move(out), da * db);
}

CycNum dot(const std::vector<CycNum>& a, const std::vector<CycNum>& b) {
    std::vector<const CycNum*> pa, pb;
    for (auto& x : a) pa.push_back(&x);
    for (auto& x : b) pb.push_back(&x);
    return dot(pa, pb);
}

namespace {

// value of the real part at the given precision plus a rigorous error bound
void eval_real(const CycNum& x, mpfr_prec_t prec, mpfr_t val, mpfr_t err) {
    long n = x.conductor();
    mpfr_t two_pi, ang, c, term, absum;
    mpfr_inits2(prec, two_pi, ang, c, term, absum, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(two_pi, MPFR_RNDN);
    mpfr_mul_ui(two_pi, two_pi, 2, MPFR_RNDN);
    mpfr_set_ui(val, 0, MPFR_RNDN);
    mpfr_set_ui(absum, 0, MPFR_RNDN);
    const auto& num = x.numerators();
    long terms = 0;
    for (std::size_t i = 0; i < num.size(); ++i) {
        if (num[i] == 0) continue;
        ++terms;
        mpfr_mul_ui(ang, two_pi, static_cast<unsigned long>(i), MPFR_RNDN);
        mpfr_div_ui(ang, ang, static_cast<unsigned long>(n), MPFR_RNDN);
        mpfr_cos(c, ang, MPFR_RNDN);
        mpfr_mul_z(term, c, num[i].get_mpz_t(), MPFR_RNDN);
        mpfr_add(val, val, term, MPFR_RNDN);
        mpfr_set_z(c, num[i].get_mpz_t(), MPFR_RNDN);
        mpfr_abs(c, c, MPFR_RNDN);
        mpfr_add(absum, absum, c, MPFR_RNDU);
    }
    mpfr_div_z(val, val, x.denominator().get_mpz_t(), MPFR_RNDN);
    // each term carries a few ulps of relative error; the running sum adds one ulp per step
    mpfr_mul_ui(err, absum, static_cast<unsigned long>(4 * terms + 16), MPFR_RNDU);
    mpfr_div_z(err, err, x.denominator().get_mpz_t(), MPFR_RNDU);
    mpfr_div_2si(err, err, prec - 2, MPFR_RNDU);
    mpfr_clears(two_pi, ang, c, term, absum, static_cast<mpfr_ptr>(nullptr));
}

}  // namespace

int sign_real(const CycNum& x) {
    if (x.is_zero()) return 0;
    if (x.is_rational()) return sgn(x.coeff(0));
    if (!x.is_real()) throw std::domain_error("sign_real: element is not real");
    for (mpfr_prec_t prec = 96; prec <= (1 << 18); prec *= 2) {
        mpfr_t val, err, a;
        mpfr_inits2(prec, val, err, a, static_cast<mpfr_ptr>(nullptr));
        eval_real(x, prec, val, err);
        mpfr_abs(a, val, MPFR_RNDN);
        int s = 0;
        if (mpfr_cmp(a, err) > 0) s = mpfr_sgn(val);
        mpfr_clears(val, err, a, static_cast<mpfr_ptr>(nullptr));
        if (s != 0) return s > 0 ? 1 : -1;
    }
    throw std::runtime_error("sign_real: precision limit reached");
}

int compare_real(const CycNum& x, const CycNum& y) { return sign_real(x - y); }

std::string numeric_string(const CycNum& x, int digits) {
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 3.33 + 64);
    mpfr_t val, err;
    mpfr_inits2(prec, val, err, static_cast<mpfr_ptr>(nullptr));
    eval_real(x, prec, val, err);
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, val);
    std::string s(buf);
    mpfr_free_str(buf);
    mpfr_clears(val, err, static_cast<mpfr_ptr>(nullptr));
    return s;
}

}  // namespace mfc
