#pragma once

#include "mfc/algebraic.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mfc {

bool is_d_number(const IntPoly& g);

struct ReducibleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegreeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

long primitive_root(long p);
// Gaussian periods of the degree-d subfield of Q(zeta_p): eta_i = sum_k zeta^(g^(i + d k)).
std::vector<CycNum> gaussian_periods(long p, long d);

// True iff every root of g lies in Q(zeta_p)+. Throws ReducibleError or DegreeError.
bool cyclotomic_test(const IntPoly& g, long p);
// An exact root of g in Q(zeta_p)+ written in Gaussian periods, if one exists. Same errors.
std::optional<CycNum> cyclotomic_root(const IntPoly& g, long p);

// a + b sqrt(r) with rational a, b and squarefree r > 1.
struct QuadraticSurd {
    mpq_class a, b;
    long r = 5;

    QuadraticSurd() = default;
    QuadraticSurd(mpq_class a_, mpq_class b_, long r_) : a(std::move(a_)), b(std::move(b_)), r(r_) {}
    QuadraticSurd conj() const { return {a, -b, r}; }
    mpq_class norm() const { return a * a - b * b * r; }
    int sign() const;
    long double value() const;
    std::string to_string() const;
    friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y);
    friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y);
    friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
        return x.a == y.a && x.b == y.b && x.r == y.r;
    }
    QuadraticSurd inverse() const;
    QuadraticSurd pow(long e) const;
    CycNum to_cyc() const;  // via Gauss sums, requires r prime
};

int compare(const QuadraticSurd& x, const QuadraticSurd& y);

// (a + b sqrt p)/2 with a^2 - p b^2 = 4 norm_sign.
struct QuadraticUnit {
    long p = 5;
    mpz_class a, b;
    int norm_sign = -1;
    QuadraticSurd value() const { return {qq(a, 2), qq(b, 2), p}; }
};

QuadraticUnit fundamental_unit(long p);

struct SiegelResult {
    mpq_class trace;
    long degree = 1;
    bool passes_bound = false;  // trace > 179/100 * degree
    bool is_exception = false;  // u = 1 or a root of x^3 - 5x^2 + 6x - 1
    bool borderline = false;    // bound fails without a listed exception
};

SiegelResult siegel_trace_filter(const CycNum& u);

struct UnitWindowOptions {
    enum class Parity { Even, Odd, Any } parity = Parity::Even;
    bool scale_sqrt_p = false;  // values p sqrt(p) eps^n instead of p eps^n
    bool exclude_zero = false;
    long max_abs_exponent = 64;
    // lower bound x > sqrt(lower_bound_sq), default (4 sqrt 3/5)^2 = 48/25
    mpq_class lower_bound_sq = qq(48, 25);
};

std::vector<long> unit_window_search(long p, const UnitWindowOptions& opt = {});

// sqrt(t) - t > 12/100 > 1/13 for t = 5/(4 sqrt 3).
bool unit_window_constant_certificate();

}  // namespace mfc
