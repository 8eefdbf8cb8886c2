#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mfc {

// canonical rational n/d
inline mpq_class qq(const mpz_class& n, const mpz_class& d) {
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

long euler_phi(long n);
long gcd_l(long a, long b);
long lcm_l(long a, long b);
long mod_l(long a, long n);
std::vector<long> prime_factors(long n);
bool is_prime(long n);

// Per-conductor constants. Rows of `high` express zeta^k (phi <= k < n) in the power basis.
struct FieldData {
    long n = 1;
    long phi = 1;
    std::vector<long> cyclo;               // ascending coefficients of Phi_n, length phi+1
    std::vector<std::vector<long>> high;   // index k-phi
    std::vector<long> trace;               // Tr_{Q(zeta_n)/Q}(zeta^i), i < phi
    long gain_bits = 0;                    // bound on coefficient growth during reduction
    std::vector<long> units;               // residues coprime to n, ascending
};

const FieldData& field(long n);

class CycNum {
public:
    CycNum();
    CycNum(long v);  // NOLINT(google-explicit-constructor)
    explicit CycNum(const mpq_class& q, long conductor = 1);

    static CycNum zeta(long n, long k = 1);
    // sum of c_k zeta_n^k over arbitrary exponents
    static CycNum from_terms(long n, const std::vector<std::pair<long, mpq_class>>& terms);
    static CycNum from_coeffs(long n, std::vector<mpz_class> num, mpz_class den = 1);

    long conductor() const { return n_; }
    const std::vector<mpz_class>& numerators() const { return num_; }
    const mpz_class& denominator() const { return den_; }
    mpq_class coeff(long i) const;

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    mpq_class rational_value() const;  // requires is_rational()
    bool is_integral_coeffs() const { return den_ == 1; }

    CycNum embed(long m) const;
    CycNum reduce() const;

    CycNum galois(long a) const;
    CycNum conj() const { return galois(-1); }
    bool is_real() const;

    CycNum inverse() const;
    CycNum pow(long e) const;

    std::complex<long double> to_complex() const;
    std::complex<double> to_complex_d() const;

    CycNum& operator+=(const CycNum& o);
    CycNum& operator-=(const CycNum& o);
    CycNum& operator*=(const CycNum& o);
    CycNum& operator/=(const CycNum& o);
    CycNum operator-() const;

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(const CycNum& a, const CycNum& b);
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    CycNum scaled(const mpq_class& q) const;

    std::size_t hash() const;
    std::string to_string() const;

private:
    friend struct CycKernel;
    long n_ = 1;
    std::vector<mpz_class> num_;
    mpz_class den_ = 1;

    void normalize();
};

std::ostream& operator<<(std::ostream& os, const CycNum& x);

struct GaloisAut {
    long n = 1;
    long a = 1;
    GaloisAut() = default;
    GaloisAut(long n_, long a_);
    GaloisAut compose(const GaloisAut& other) const;  // this after other
    CycNum apply(const CycNum& x) const;
    bool operator==(const GaloisAut& o) const { return n == o.n && a == o.a; }
};

// Generators of (Z/n)^*, small and deterministic.
std::vector<long> unit_group_generators(long n);

// If x = zeta_N^k for some N, returns (N, k) with N minimal and 0 <= k < N.
std::optional<std::pair<long, long>> as_root_of_unity(const CycNum& x);

// Exact Galois orbit over Q (distinct conjugates), first element is x.
std::vector<CycNum> galois_orbit(const CycNum& x);
long algebraic_degree(const CycNum& x);

mpq_class field_trace(const CycNum& x);  // trace over Q(zeta_conductor)/Q

// Dot product sum a_i b_i and matrix helpers with a fast integer kernel.
CycNum dot(const std::vector<const CycNum*>& a, const std::vector<const CycNum*>& b);
CycNum dot(const std::vector<CycNum>& a, const std::vector<CycNum>& b);

// Certified sign of a real element under the embedding zeta_n -> exp(2 pi i / n).
int sign_real(const CycNum& x);
int compare_real(const CycNum& x, const CycNum& y);
// Diagnostic high precision value of the real part.
std::string numeric_string(const CycNum& x, int digits = 30);

}  // namespace mfc
