#pragma once

#include "mfc/algebraic.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mfc {

using Matrix = std::vector<std::vector<CycNum>>;

long matrix_conductor(const Matrix& m);
Matrix embed_matrix(const Matrix& m, long n);
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix identity_matrix(long r);

struct ModularDatum {
    std::string name;
    Matrix S;                          // as constructed, not necessarily S_II = 1
    std::vector<CycNum> twists;        // roots of unity theta_X
    long unit = 0;
    std::optional<CycNum> cube_root;   // default choice of a cube root of xi
    std::map<std::string, std::string> metadata;

    long rank() const { return static_cast<long>(S.size()); }
    Matrix normalized_S() const;       // S / S_II, entries embedded in a common conductor
    CycNum dim(long x) const;          // S_IX / S_II
    std::vector<CycNum> dims() const;
    CycNum global_dim() const;         // sum of dim(X)^2
    long conductor() const;            // common conductor of S entries
    // Structural checks: square, symmetric, theta_I = 1, roots of unity, dims real, S unitary up to scale.
    void validate() const;
};

struct FusionRing {
    long rank = 1;
    long unit = 0;
    std::vector<long> dual;
    std::vector<long> N;  // N[(x * r + y) * r + z]

    FusionRing() : dual{0}, N{1} {}
    FusionRing(long r, long u);
    long at(long x, long y, long z) const { return N[(x * rank + y) * rank + z]; }
    long& at(long x, long y, long z) { return N[(x * rank + y) * rank + z]; }
    // Unit, commutativity, duality and associativity. Returns an empty string when all hold.
    std::string check_invariants() const;
    std::vector<double> numeric_fp_dims() const;
    friend bool operator==(const FusionRing& a, const FusionRing& b) {
        return a.rank == b.rank && a.unit == b.unit && a.N == b.N && a.dual == b.dual;
    }
};

struct VerlindeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

FusionRing verlinde(const ModularDatum& md);

struct GaussSums {
    CycNum tau_plus, tau_minus, xi, sqrt_dim;
};

GaussSums gauss_sums(const ModularDatum& md);

struct NormalizedT {
    std::vector<CycNum> t;
    long level = 1;
    bool qs_in_qt = false;
};

NormalizedT normalized_t(const ModularDatum& md, const CycNum& cube_root);

std::vector<long> galois_permutation(const ModularDatum& md, const GaloisAut& sigma);
bool check_galois_symmetry(const ModularDatum& md, const CycNum& cube_root);
std::vector<std::vector<long>> galois_orbits(const ModularDatum& md);

struct CodegreeOptions {
    bool certify = true;  // total positivity, integrality and d-number checks
};
std::vector<CycNum> formal_codegrees(const ModularDatum& md, const CodegreeOptions& opt = {});

bool verify_sl2z_relations(const ModularDatum& md, const CycNum& cube_root);

ModularDatum deligne_product(const ModularDatum& a, const ModularDatum& b);
ModularDatum galois_conjugate(const ModularDatum& md, const GaloisAut& sigma);

std::vector<CycNum> fp_dimensions(const FusionRing& fr, const ModularDatum& md);

std::optional<std::vector<long>> grothendieck_match(const FusionRing& fr, const FusionRing& reference);

struct QuadraticForm {
    long p = 5;
    std::vector<CycNum> values;  // eta(a), a = 0..p-1
    static QuadraticForm from_exponent(long p, long e);  // eta(a) = zeta_p^(e a^2)
    bool satisfies_functional_equations() const;
};

// Multiset equality of exact values.
bool same_multiset(std::vector<CycNum> a, std::vector<CycNum> b);

}  // namespace mfc
