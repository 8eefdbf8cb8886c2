#include "mfc/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mfc {

QPoly::QPoly(std::vector<mpq_class> coeffs) : c(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(const mpq_class& a, long k) {
    std::vector<mpq_class> v(k + 1, mpq_class(0));
    v[k] = a;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

mpq_class QPoly::at(long i) const {
    if (i < 0 || i >= static_cast<long>(c.size())) return 0;
    return c[i];
}

QPoly QPoly::derivative() const {
    std::vector<mpq_class> d;
    for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<long>(i));
    return QPoly(std::move(d));
}

mpq_class QPoly::eval(const mpq_class& x) const {
    mpq_class r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

std::complex<long double> QPoly::eval(std::complex<long double> z) const {
    std::complex<long double> r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + static_cast<long double>(it->get_d());
    return r;
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(mpq_class(1) / lead());
}

QPoly QPoly::primitive() const {
    if (is_zero()) return *this;
    mpz_class l = 1, g = 0;
    for (auto& q : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpq_class> v;
    for (auto& q : c) {
        mpq_class t = q * l;
        v.push_back(t);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_num_mpz_t());
    }
    if (lead() < 0) g = -g;
    for (auto& t : v) t /= g;
    return QPoly(std::move(v));
}

QPoly QPoly::scaled(const mpq_class& s) const {
    std::vector<mpq_class> v(c);
    for (auto& q : v) q *= s;
    return QPoly(std::move(v));
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<mpq_class> v(std::max(a.c.size(), b.c.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) v[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) v[i] += b.c[i];
    return QPoly(std::move(v));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + b.scaled(-1); }

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<mpq_class> v(a.c.size() + b.c.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
    return QPoly(std::move(v));
}

std::string QPoly::to_string() const {
    std::ostringstream os;
    os << "[";
    for (long i = degree(); i >= 0; --i) {
        os << c[i];
        if (i) os << ",";
    }
    os << "]";
    return os.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<mpq_class> r = a.c;
    long db = b.degree();
    if (a.degree() < db) return {QPoly(), a};
    std::vector<mpq_class> q(a.degree() - db + 1, mpq_class(0));
    for (long i = a.degree(); i >= db; --i) {
        if (r[i] == 0) continue;
        mpq_class f = r[i] / b.lead();
        q[i - db] = f;
        for (long j = 0; j <= db; ++j) r[i - db + j] -= f * b.c[j];
    }
    r.resize(db);
    return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly poly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = divmod(a, b).second;
        a = std::move(b);
        b = r.primitive();
    }
    return a.monic();
}

QPoly squarefree_part(const QPoly& f) {
    QPoly g = poly_gcd(f, f.derivative());
    return divmod(f, g).first.monic();
}

QPoly graeffe(const QPoly& f) {
    std::vector<mpq_class> e, o;
    for (std::size_t i = 0; i < f.c.size(); ++i) (i % 2 == 0 ? e : o).push_back(f.c[i]);
    QPoly E(e), O(o);
    QPoly r = E * E - (QPoly::monomial(1, 1) * O * O);
    if (f.degree() % 2 == 1) r = r.scaled(-1);
    return r;
}

IntPoly::IntPoly(std::vector<mpz_class> descending) : coeffs_(std::move(descending)) {
    if (coeffs_.size() < 2) throw std::invalid_argument("polynomial degree must be at least 1");
    if (coeffs_[0] != 1) throw std::invalid_argument("polynomial must be monic");
}

IntPoly IntPoly::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw std::invalid_argument("expected [c0,c1,...]");
    s = s.substr(1, s.size() - 2);
    std::vector<mpz_class> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        mpz_class z;
        if (tok.empty() || z.set_str(tok[0] == '+' ? tok.substr(1) : tok, 10) != 0)
            throw std::invalid_argument("bad coefficient '" + tok + "'");
        v.push_back(z);
    }
    return IntPoly(std::move(v));
}

std::optional<IntPoly> IntPoly::from_qpoly(const QPoly& f) {
    if (f.degree() < 1 || f.lead() != 1) return std::nullopt;
    std::vector<mpz_class> v;
    for (long i = f.degree(); i >= 0; --i) {
        if (f.c[i].get_den() != 1) return std::nullopt;
        v.push_back(f.c[i].get_num());
    }
    return IntPoly(std::move(v));
}

QPoly IntPoly::to_qpoly() const {
    std::vector<mpq_class> v;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v.emplace_back(*it);
    return QPoly(std::move(v));
}

std::string IntPoly::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ",";
        os << coeffs_[i];
    }
    os << "]";
    return os.str();
}

std::vector<long double> IntPoly::to_ld() const {
    std::vector<long double> v;
    for (auto& z : coeffs_) v.push_back(static_cast<long double>(z.get_d()));
    return v;
}

bool operator<(const IntPoly& x, const IntPoly& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    for (std::size_t i = 0; i < x.coeffs_.size(); ++i)
        if (x.coeffs_[i] != y.coeffs_[i]) return x.coeffs_[i] < y.coeffs_[i];
    return false;
}

namespace {

// scale by a positive rational so that coefficients are coprime integers
QPoly positive_normalize(const QPoly& f) {
    QPoly p = f.primitive();
    if (!f.is_zero() && (f.lead() < 0) != (p.lead() < 0)) p = p.scaled(-1);
    return p;
}

int sgn_eval(const QPoly& f, const mpq_class& x) { return sgn(f.eval(x)); }

}  // namespace

SturmChain::SturmChain(const QPoly& f) {
    if (f.degree() < 0) throw std::invalid_argument("Sturm chain of zero polynomial");
    seq_.push_back(positive_normalize(f));
    if (f.degree() == 0) return;
    seq_.push_back(positive_normalize(f.derivative()));
    while (true) {
        QPoly r = divmod(seq_[seq_.size() - 2], seq_.back()).second;
        if (r.is_zero()) break;
        seq_.push_back(positive_normalize(r.scaled(-1)));
    }
}

int SturmChain::variations_at(const mpq_class& x) const {
    int v = 0, last = 0;
    for (auto& p : seq_) {
        int s = sgn_eval(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int SturmChain::variations_at_pos_inf() const {
    int v = 0, last = 0;
    for (auto& p : seq_) {
        int s = sgn(p.lead());
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int SturmChain::variations_at_neg_inf() const {
    int v = 0, last = 0;
    for (auto& p : seq_) {
        int s = sgn(p.lead()) * (p.degree() % 2 == 0 ? 1 : -1);
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

long SturmChain::count(const mpq_class& lo, const mpq_class& hi) const {
    return variations_at(lo) - variations_at(hi);
}

long SturmChain::count_above(const mpq_class& lo) const { return variations_at(lo) - variations_at_pos_inf(); }

long SturmChain::count_real() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

long count_real_roots(const QPoly& f) { return SturmChain(squarefree_part(f)).count_real(); }

long count_roots_in(const QPoly& f, const mpq_class& lo, const mpq_class& hi) {
    return SturmChain(squarefree_part(f)).count(lo, hi);
}

bool all_roots_real(const QPoly& f) {
    QPoly s = squarefree_part(f);
    return SturmChain(s).count_real() == s.degree();
}

bool all_roots_positive(const QPoly& g) {
    if (g.degree() < 1) return false;
    QPoly s = squarefree_part(g);
    if (s.at(0) == 0) return false;
    return SturmChain(s).count_above(0) == s.degree();
}

bool all_roots_positive(const IntPoly& g) { return all_roots_positive(g.to_qpoly()); }

mpq_class root_bound(const QPoly& f) {
    mpq_class m = 0;
    for (long i = 0; i < f.degree(); ++i) m = std::max(m, mpq_class(abs(f.c[i] / f.lead())));
    return m + 1;
}

std::vector<std::pair<mpq_class, mpq_class>> isolate_real_roots(const QPoly& f, const mpq_class& width) {
    QPoly s = squarefree_part(f);
    SturmChain chain(s);
    mpq_class B = root_bound(s);
    std::vector<std::pair<mpq_class, mpq_class>> out;
    struct Item {
        mpq_class lo, hi;
        long n;
    };
    std::vector<Item> stack{{-B, B, chain.count(-B, B)}};
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (it.n == 0) continue;
        if (it.n == 1 && it.hi - it.lo <= width) {
            out.emplace_back(it.lo, it.hi);
            continue;
        }
        mpq_class mid = (it.lo + it.hi) / 2;
        long left = chain.count(it.lo, mid);
        stack.push_back({mid, it.hi, it.n - left});
        stack.push_back({it.lo, mid, left});
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.first < b.first; });
    return out;
}

std::vector<long double> real_roots_ld(const QPoly& f, int bits) {
    mpq_class B = root_bound(f);
    mpz_class scale = 1;
    scale <<= bits;
    auto iv = isolate_real_roots(f, B / scale);
    std::vector<long double> r;
    for (auto& p : iv) {
        mpq_class mid = (p.first + p.second) / 2;
        r.push_back(static_cast<long double>(mid.get_d()));
    }
    return r;
}

std::vector<std::complex<long double>> complex_roots(const QPoly& f) {
    QPoly m = f.monic();
    long n = m.degree();
    std::vector<std::complex<long double>> z(n);
    if (n <= 0) return z;
    long double R = static_cast<long double>(root_bound(m).get_d());
    for (long k = 0; k < n; ++k) {
        long double ang = 2.0L * 3.14159265358979323846L * (k + 0.25L) / n + 0.4L;
        z[k] = std::polar(R * 0.5L, ang);
    }
    QPoly d = m.derivative();
    for (int iter = 0; iter < 2000; ++iter) {
        long double maxstep = 0;
        for (long k = 0; k < n; ++k) {
            std::complex<long double> pv = m.eval(z[k]), dv = d.eval(z[k]);
            if (std::abs(pv) == 0) continue;
            std::complex<long double> ratio = pv / dv;
            std::complex<long double> s = 0;
            for (long j = 0; j < n; ++j)
                if (j != k) s += 1.0L / (z[k] - z[j]);
            std::complex<long double> w = ratio / (1.0L - ratio * s);
            z[k] -= w;
            maxstep = std::max(maxstep, std::abs(w) / std::max(1.0L, std::abs(z[k])));
        }
        if (maxstep < 1e-18L) break;
    }
    return z;
}

bool is_irreducible(const IntPoly& g) {
    long n = g.degree();
    if (n == 1) return true;
    QPoly f = g.to_qpoly();
    if (poly_gcd(f, f.derivative()).degree() > 0) return false;
    if (n > 20) throw std::invalid_argument("irreducibility check limited to degree 20");
    auto roots = complex_roots(f);
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
        long k = __builtin_popcountl(mask);
        if (k > n / 2) continue;
        if (2 * k == n && (mask & 1UL) == 0) continue;  // complement already covered
        std::vector<std::complex<long double>> prod{1.0L};
        for (long i = 0; i < n; ++i) {
            if (!(mask & (1UL << i))) continue;
            std::vector<std::complex<long double>> next(prod.size() + 1, 0.0L);
            for (std::size_t j = 0; j < prod.size(); ++j) {
                next[j + 1] += prod[j];
                next[j] -= prod[j] * roots[i];
            }
            prod = next;
        }
        bool near = true;
        std::vector<mpq_class> cand;
        for (auto& c : prod) {
            long double re = std::round(c.real());
            long double tol = 1e-6L * std::max(1.0L, std::fabs(c.real()));
            if (std::fabs(c.imag()) > tol || std::fabs(c.real() - re) > tol) {
                near = false;
                break;
            }
            mpz_class z;
            mpz_set_d(z.get_mpz_t(), static_cast<double>(re));
            cand.emplace_back(z);
        }
        if (!near) continue;
        QPoly h(cand);
        if (h.degree() >= 1 && divmod(f, h).second.is_zero()) return false;
    }
    return true;
}

}  // namespace mfc
