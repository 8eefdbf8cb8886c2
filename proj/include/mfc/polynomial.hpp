#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mfc {

// Rational polynomial, ascending coefficients, trailing zeros trimmed.
struct QPoly {
    std::vector<mpq_class> c;

    QPoly() = default;
    explicit QPoly(std::vector<mpq_class> coeffs);
    static QPoly monomial(const mpq_class& a, long k);

    long degree() const { return static_cast<long>(c.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c.empty(); }
    const mpq_class& lead() const { return c.back(); }
    mpq_class at(long i) const;
    void trim();

    QPoly derivative() const;
    mpq_class eval(const mpq_class& x) const;
    std::complex<long double> eval(std::complex<long double> z) const;
    QPoly monic() const;
    QPoly primitive() const;  // integer coefficients, positive leading coefficient

    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }
    QPoly scaled(const mpq_class& s) const;

    std::string to_string() const;
};

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly poly_gcd(QPoly a, QPoly b);  // monic
QPoly squarefree_part(const QPoly& f);  // monic
// Polynomial whose roots are the squares of the roots of f.
QPoly graeffe(const QPoly& f);

// Monic integer polynomial with descending coefficients, text form [1,-49,686,-2401].
class IntPoly {
public:
    IntPoly() : coeffs_{1, 0} {}
    explicit IntPoly(std::vector<mpz_class> descending);
    static IntPoly parse(const std::string& text);
    static std::optional<IntPoly> from_qpoly(const QPoly& f);  // requires monic integral

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    // a(j) is the coefficient of x^(n-j), so a(0) = 1
    const mpz_class& a(long j) const { return coeffs_.at(j); }
    QPoly to_qpoly() const;
    std::string to_string() const;
    std::vector<long double> to_ld() const;

    friend bool operator==(const IntPoly& x, const IntPoly& y) { return x.coeffs_ == y.coeffs_; }
    friend bool operator!=(const IntPoly& x, const IntPoly& y) { return !(x == y); }
    friend bool operator<(const IntPoly& x, const IntPoly& y);

private:
    std::vector<mpz_class> coeffs_;
};

// Sturm chain of a squarefree polynomial.
class SturmChain {
public:
    explicit SturmChain(const QPoly& squarefree);
    int variations_at(const mpq_class& x) const;
    int variations_at_pos_inf() const;
    int variations_at_neg_inf() const;
    // distinct real roots in (lo, hi]
    long count(const mpq_class& lo, const mpq_class& hi) const;
    long count_above(const mpq_class& lo) const;  // (lo, +inf)
    long count_real() const;
    const QPoly& base() const { return seq_.front(); }

private:
    std::vector<QPoly> seq_;
};

long count_real_roots(const QPoly& f);                       // distinct
long count_roots_in(const QPoly& f, const mpq_class& lo, const mpq_class& hi);  // distinct, (lo, hi]
bool all_roots_real(const QPoly& f);
bool all_roots_positive(const IntPoly& g);
bool all_roots_positive(const QPoly& g);

// Disjoint rational isolating intervals (lo, hi] of all real roots, each of width <= width.
std::vector<std::pair<mpq_class, mpq_class>> isolate_real_roots(const QPoly& f, const mpq_class& width);
std::vector<long double> real_roots_ld(const QPoly& f, int bits = 70);

// All complex roots by simultaneous iteration, long double.
std::vector<std::complex<long double>> complex_roots(const QPoly& f);

// Cauchy bound on |root|.
mpq_class root_bound(const QPoly& f);

bool is_irreducible(const IntPoly& g);

}  // namespace mfc
