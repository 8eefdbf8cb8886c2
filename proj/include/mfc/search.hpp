#pragma once

#include "mfc/constructors.hpp"
#include "mfc/number_theory.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mfc {

enum class Reason { Positivity, ClassEquation, DNumber, Reducible, Cyclotomic, Norm, CoefficientBound, FpDimension };

std::string reason_name(Reason r);
std::optional<Reason> reason_from_name(const std::string& s);

struct Elimination {
    std::string candidate;
    Reason reason = Reason::Positivity;
    std::string detail;
};

struct SearchCertificate {
    std::string procedure;
    std::map<std::string, std::string> parameters;
    std::vector<std::string> constraints;
    long candidates_tested = 0;
    std::vector<IntPoly> survivors;
    std::vector<std::string> surviving_cases;  // non-polynomial survivors, e.g. branch labels
    std::vector<Elimination> eliminations;
    std::vector<std::string> log;              // exact inequalities and identities used
    std::optional<FusionRing> fusion_ring;
    bool verified = true;                      // every logged identity checked out

    std::map<std::string, long> reason_counts() const;
};

// c_j * a_j <= c_k * a_k on coefficient magnitudes
struct LinearBound {
    long j = 1, k = 2;
    mpz_class cj = 1, ck = 1;
};

struct CodegreeSearchOptions {
    mpq_class class_budget = 1;          // sum over the orbit of 1/f
    mpq_class min_root_sq = qq(4, 3);    // every root f satisfies f^2 > min_root_sq
    // When set, dim/f must be a unit for dim of norm p^e over Q(zeta_p)+: m (p-1)/2 = d e.
    std::optional<long> dim_norm_exponent;
    std::map<long, mpz_class> lower, upper;  // extra bounds on a_j
    std::vector<LinearBound> linear;
    bool prune = true;  // false enumerates the full coefficient box (oracle mode)
    int threads = 1;
};

// Filter pipeline for one candidate with constant term (-1)^d p^m; empty result means survivor.
std::optional<Reason> classify_candidate(const IntPoly& g, long p, const CodegreeSearchOptions& opt);

SearchCertificate codegree_search(long p, long d, long m, const CodegreeSearchOptions& opt = {});
// Re-runs every survivor and elimination through classify_candidate. Returns an empty string on success.
std::string reverify(const SearchCertificate& cert, long p, const CodegreeSearchOptions& opt);

// 1 - sum over Gal(Q(zeta_p)+/Q) of 1/sigma(p beta_p)
mpq_class pbeta_class_budget(long p);
// sum_{k=1}^{(p-1)/2} 1/(4 sin^2(k pi/p)) computed in Q(zeta_p); must be rational
mpq_class cosecant_sum(long p);
CycNum beta(long p);  // 2 - zeta_p - zeta_p^-1

// Proper divisor degree searches for dim = p beta_p over 1 <= m <= (p+1)/2.
SearchCertificate proper_degree_elimination(long p, int threads = 1);

SearchCertificate rank_elimination_p11_13(long p);

struct TraceContradiction {
    CycNum lhs, rhs;
    CycNum trace_sum;        // sum_sigma dim/sigma(dim)
    CycNum max_conjugate;    // M
    bool trace_identity = false;  // trace_sum == 12 beta_17
    bool sine_bound = false;      // sin^2(8 pi/17) < 1
    bool verdict = false;         // lhs > rhs is false, so the assumed rank is impossible
    std::vector<std::string> log;
};
TraceContradiction trace_contradiction_p17();

struct WindowBound {
    long max_p = 0;
    bool certified = false;
    std::vector<std::string> certificate;
};
WindowBound monotone_window_p_bound();

struct RankWindow {
    long min_rank = 0, max_rank = 0;
    long orbit_size = 1;
    std::vector<long> allowed;
    std::string certificate;
};
// Ranks allowed by the norm-rank inequality for dim of norm p^norm_exponent over Q(zeta_p)+,
// with Galois orbits of size (p-1)/2 and at least two orbits.
RankWindow rank_window(long p, long norm_exponent);

SearchCertificate fusion_reconstruct_p7();

// Rank 3 fusion ring I, X, Y with Y Y = I + X, X X = I + X + Y, X Y = X + Y.
FusionRing sl2_5_adjoint_ring();
FusionRing tensor_product(const FusionRing& a, const FusionRing& b);

}  // namespace mfc
