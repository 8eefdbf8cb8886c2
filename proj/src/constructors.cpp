#include "mfc/constructors.hpp"

#include <sstream>
#include <stdexcept>

namespace mfc {

namespace {

// [m]_q with q = zeta_n^s: sum_{l<m} q^(m-1-2l)
CycNum quantum_integer(long m, long n, long s) {
    std::vector<std::pair<long, mpq_class>> t;
    for (long l = 0; l < m; ++l) t.emplace_back(s * (m - 1 - 2 * l), mpq_class(1));
    return CycNum::from_terms(n, t);
}

void require_prime(long p, long lo) {
    if (p < lo || !is_prime(p)) throw std::invalid_argument("expected a prime >= " + std::to_string(lo));
}

}  // namespace

ModularDatum trivial_datum() {
    ModularDatum m;
    m.name = "trivial";
    m.S = {{CycNum(1)}};
    m.twists = {CycNum(1)};
    m.cube_root = CycNum(1);
    return m;
}

ModularDatum sl2_level_k(long k) {
    if (k < 1) throw std::invalid_argument("level must be positive");
    long n = 4 * (k + 2), r = k + 1;
    ModularDatum m;
    m.name = "sl2:" + std::to_string(k);
    m.S.assign(r, std::vector<CycNum>(r));
    for (long i = 0; i < r; ++i)
        for (long j = i; j < r; ++j) m.S[i][j] = m.S[j][i] = quantum_integer((i + 1) * (j + 1), n, 2);
    for (long j = 0; j < r; ++j) m.twists.push_back(CycNum::zeta(n, j * (j + 2)));
    m.cube_root = CycNum::zeta(8 * (k + 2), k);
    return m;
}

ModularDatum sl2_adjoint(long p) {
    require_prime(p, 5);
    long r = (p - 1) / 2;
    ModularDatum m;
    m.name = "sl2-ad:" + std::to_string(p);
    m.S.assign(r, std::vector<CycNum>(r));
    // labels j = 2i; (j+1)(j'+1) is odd so [m]_q lies in Q(zeta_p)
    for (long i = 0; i < r; ++i)
        for (long k = i; k < r; ++k) {
            long q = (2 * i + 1) * (2 * k + 1);
            std::vector<std::pair<long, mpq_class>> t;
            for (long l = 0; l < q; ++l) t.emplace_back((q - 1) / 2 - l, mpq_class(1));
            m.S[i][k] = m.S[k][i] = CycNum::from_terms(p, t);
        }
    for (long i = 0; i < r; ++i) {
        long j = 2 * i;
        m.twists.push_back(CycNum::zeta(p, j * (j + 2) / 4));
    }
    m.cube_root = choose_cube_root(m);
    return m;
}

ModularDatum fibonacci() {
    ModularDatum m = sl2_adjoint(5);
    m.name = "fib";
    return m;
}

ModularDatum pointed_cyclic(long p, const QuadraticForm& eta) {
    require_prime(p, 3);
    if (eta.p != p || static_cast<long>(eta.values.size()) != p) throw std::invalid_argument("quadratic form modulus mismatch");
    if (!eta.satisfies_functional_equations()) throw std::invalid_argument("not a quadratic form");
    ModularDatum m;
    m.name = "pointed-zp:" + std::to_string(p);
    m.S.assign(p, std::vector<CycNum>(p));
    for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b) m.S[a][b] = eta.values[(a + b) % p].conj() * eta.values[a] * eta.values[b];
    m.twists = eta.values;
    bool degenerate = true;
    for (long a = 1; a < p; ++a)
        if (!m.S[1][a].is_one()) degenerate = false;
    if (degenerate) throw std::invalid_argument("degenerate quadratic form");
    m.cube_root = choose_cube_root(m);
    return m;
}

ModularDatum pointed_cyclic(long p, long e) {
    if (mod_l(e, p) == 0) throw std::invalid_argument("degenerate quadratic form");
    ModularDatum m = pointed_cyclic(p, QuadraticForm::from_exponent(p, e));
    m.name = "pointed-zp:" + std::to_string(p) + ":" + std::to_string(e);
    return m;
}

long legendre(long a, long p) {
    long r = 1, b = mod_l(a, p), e = (p - 1) / 2, x = 1;
    while (e) {
        if (e & 1) x = x * b % p;
        b = b * b % p;
        e >>= 1;
    }
    if (x == 0) return 0;
    r = (x == 1) ? 1 : -1;
    return r;
}

CycNum sqrt_pstar(long p) {
    std::vector<std::pair<long, mpq_class>> t;
    for (long x = 1; x < p; ++x) t.emplace_back(x, mpq_class(legendre(x, p)));
    return CycNum::from_terms(p, t);
}

RhoSParameters RhoSParameters::condensation(long p) {
    RhoSParameters r;
    r.p = p;
    r.a = mod_l(-(p - 1) / 2, p);
    long d = (p + 1) / 2;
    for (long k = 1; k < d; ++k) r.lambda.push_back(k % 2 == 0 ? 1 : -1);
    return r;
}

Matrix rho_s_matrix(const RhoSParameters& P) {
    long p = P.p, d = (p + 1) / 2;
    require_prime(p, 5);
    if (mod_l(P.a, p) == 0) throw std::invalid_argument("a must be coprime to p");
    if (static_cast<long>(P.lambda.size()) != d - 1) throw std::invalid_argument("need d-1 signs");
    CycNum g = sqrt_pstar(p);
    long pstar = p % 4 == 1 ? p : -p;
    CycNum beta = g.scaled(qq(legendre(P.a, p), pstar));
    Matrix M(d + 1, std::vector<CycNum>(d + 1));
    M[0][0] = M[1][1] = (beta + CycNum(1)).scaled(qq(1, 2));
    M[0][1] = M[1][0] = (beta - CycNum(1)).scaled(qq(P.mu1 * P.mu2, 2));
    for (long j = 1; j < d; ++j) {
        M[0][1 + j] = M[1 + j][0] = beta.scaled(P.mu1 * P.lambda[j - 1]);
        M[1][1 + j] = M[1 + j][1] = beta.scaled(P.mu2 * P.lambda[j - 1]);
        for (long k = 1; k < d; ++k) {
            long e = mod_l(2 * P.a * j * k, p);
            CycNum c = CycNum::zeta(p, e) + CycNum::zeta(p, -e);
            M[1 + j][1 + k] = (beta * c).scaled(P.lambda[j - 1] * P.lambda[k - 1]);
        }
    }
    return M;
}

CycNum condensation_stated_cube_root(long p) { return CycNum::zeta(p, mod_l((p * p - 1) / 8, p)); }

ModularDatum sl2_condensation_A0(long p) {
    require_prime(p, 5);
    long d = (p + 1) / 2, u = d;
    Matrix M = rho_s_matrix(RhoSParameters::condensation(p));
    CycNum inv = M[u][u].inverse();
    ModularDatum m;
    m.name = "sl2-a0:" + std::to_string(p);
    m.S.assign(d + 1, std::vector<CycNum>(d + 1));
    for (long i = 0; i <= d; ++i)
        for (long j = i; j <= d; ++j) m.S[i][j] = m.S[j][i] = M[i][j] * inv;
    long e = mod_l((p * p - 1) / 8, p);
    m.twists.push_back(CycNum::zeta(p, e));
    m.twists.push_back(CycNum::zeta(p, e));
    for (long j = 1; j < d; ++j) {
        long i = (p - 1) / 2 - j;  // block j carries V_(2i)
        m.twists.push_back(CycNum::zeta(p, i * (i + 1) / 2));
    }
    m.unit = u;
    m.cube_root = condensation_stated_cube_root(p) * CycNum::zeta(4, 3 * (p - 1) / 2);
    std::ostringstream labels;
    labels << "V+,V-";
    for (long j = 1; j < d; ++j) labels << ",V" << (p - 1 - 2 * j);
    m.metadata["simples"] = labels.str();
    m.metadata["twist_exponent_mod_p"] = std::to_string(e);
    m.metadata["twist_exponent_interpretation"] = "(p^2-1)/8 reduced mod p";
    return m;
}

std::vector<CycNum> condensation_twist_ratios(long p) {
    ModularDatum m = sl2_condensation_A0(p);
    CycNum inv = condensation_stated_cube_root(p).conj();
    std::vector<CycNum> r;
    for (auto& t : m.twists) r.push_back(t * inv);
    return r;
}

CycNum choose_cube_root(const ModularDatum& md) {
    GaussSums g = gauss_sums(md);
    auto xi = as_root_of_unity(g.xi);
    if (!xi) throw std::logic_error("central charge is not a root of unity");
    long N = xi->first, k = xi->second;
    CycNum best;
    long best_level = -1;
    for (long j = 0; j < 3; ++j) {
        CycNum c = CycNum::zeta(3 * N, k + j * N);
        long level = 1;
        for (auto& t : md.twists) level = lcm_l(level, as_root_of_unity(t * c.conj())->first);
        if (best_level < 0 || level < best_level) {
            best_level = level;
            best = c;
        }
    }
    return best;
}

ModularDatum from_category_id(const std::string& id) {
    std::vector<std::string> parts;
    std::stringstream ss(id);
    std::string tok;
    while (std::getline(ss, tok, ':')) parts.push_back(tok);
    auto num = [&](std::size_t i) {
        if (i >= parts.size()) throw std::invalid_argument("category id '" + id + "' is missing a parameter");
        std::size_t pos = 0;
        long v = std::stol(parts[i], &pos);
        if (pos != parts[i].size()) throw std::invalid_argument("bad number in category id '" + id + "'");
        return v;
    };
    if (parts.empty()) throw std::invalid_argument("empty category id");
    const std::string& kind = parts[0];
    if (kind == "trivial" && parts.size() == 1) return trivial_datum();
    if (kind == "fib" && parts.size() == 1) return fibonacci();
    if (kind == "sl2" && parts.size() == 2) return sl2_level_k(num(1));
    if (kind == "sl2-ad" && parts.size() == 2) return sl2_adjoint(num(1));
    if (kind == "sl2-a0" && parts.size() == 2) return sl2_condensation_A0(num(1));
    if (kind == "pointed-zp" && (parts.size() == 2 || parts.size() == 3))
        return pointed_cyclic(num(1), parts.size() == 3 ? num(2) : 1);
    throw std::invalid_argument("unknown category id '" + id + "'");
}

}  // namespace mfc
