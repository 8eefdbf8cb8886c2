#include "mfc/modular.hpp"

#include "mfc/number_theory.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace mfc {

long matrix_conductor(const Matrix& m) {
    long n = 1;
    for (auto& row : m)
        for (auto& x : row) n = lcm_l(n, x.conductor());
    return n;
}

Matrix embed_matrix(const Matrix& m, long n) {
    Matrix r = m;
    for (auto& row : r)
        for (auto& x : row)
            if (x.conductor() != n) x = x.embed(n);
    return r;
}

Matrix identity_matrix(long r) {
    Matrix m(r, std::vector<CycNum>(r, CycNum(0)));
    for (long i = 0; i < r; ++i) m[i][i] = CycNum(1);
    return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    long n = lcm_l(matrix_conductor(a), matrix_conductor(b));
    Matrix A = embed_matrix(a, n), B = embed_matrix(b, n);
    std::size_t r = A.size(), k = B.size(), c = B.empty() ? 0 : B[0].size();
    Matrix out(r, std::vector<CycNum>(c));
    std::vector<const CycNum*> row(k), col(k);
    for (std::size_t j = 0; j < c; ++j) {
        for (std::size_t t = 0; t < k; ++t) col[t] = &B[t][j];
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t t = 0; t < k; ++t) row[t] = &A[i][t];
            out[i][j] = dot(row, col);
        }
    }
    return out;
}

Matrix ModularDatum::normalized_S() const {
    long n = matrix_conductor(S);
    Matrix r = embed_matrix(S, n);
    const CycNum s00 = r[unit][unit];
    if (s00.is_one()) return r;
    CycNum inv = s00.inverse();
    for (auto& row : r)
        for (auto& x : row) x = x * inv;
    return embed_matrix(r, lcm_l(n, inv.conductor()));
}

CycNum ModularDatum::dim(long x) const {
    if (S[unit][unit].is_one()) return S[unit][x];
    return S[unit][x] * S[unit][unit].inverse();
}

std::vector<CycNum> ModularDatum::dims() const {
    std::vector<CycNum> d;
    CycNum inv = S[unit][unit].is_one() ? CycNum(1) : S[unit][unit].inverse();
    for (long x = 0; x < rank(); ++x) d.push_back(S[unit][x] * inv);
    return d;
}

CycNum ModularDatum::global_dim() const {
    auto d = dims();
    return dot(d, d);
}

long ModularDatum::conductor() const { return matrix_conductor(S); }

static Matrix conj_transpose(const Matrix& m) {
    std::size_t r = m.size();
    Matrix t(r, std::vector<CycNum>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) t[j][i] = m[i][j].conj();
    return t;
}

void ModularDatum::validate() const {
    long r = rank();
    if (r < 1) throw std::invalid_argument("empty modular datum");
    if (static_cast<long>(twists.size()) != r) throw std::invalid_argument("twist count differs from rank");
    if (unit < 0 || unit >= r) throw std::invalid_argument("unit index out of range");
    for (auto& row : S)
        if (static_cast<long>(row.size()) != r) throw std::invalid_argument("S is not square");
    for (long i = 0; i < r; ++i)
        for (long j = i + 1; j < r; ++j)
            if (S[i][j] != S[j][i]) throw std::invalid_argument("S is not symmetric");
    if (!twists[unit].is_one()) throw std::invalid_argument("twist of the unit is not 1");
    for (auto& t : twists)
        if (!as_root_of_unity(t)) throw std::invalid_argument("twist is not a root of unity");
    auto d = dims();
    for (auto& x : d)
        if (!x.is_real()) throw std::invalid_argument("dimension is not real");
    CycNum D = dot(d, d);
    if (D.is_zero()) throw std::invalid_argument("global dimension vanishes");
    Matrix Sn = normalized_S();
    Matrix P = matmul(Sn, conj_transpose(Sn));
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j)
            if (P[i][j] != (i == j ? D : CycNum(0))) throw std::invalid_argument("S is not unitary up to scale");
}

FusionRing::FusionRing(long r, long u) : rank(r), unit(u), dual(r, 0), N(r * r * r, 0) {}

std::string FusionRing::check_invariants() const {
    long r = rank;
    for (long y = 0; y < r; ++y)
        for (long z = 0; z < r; ++z)
            if (at(unit, y, z) != (y == z ? 1 : 0)) return "unit axiom fails";
    for (long x = 0; x < r; ++x) {
        if (dual[dual[x]] != x) return "duality is not an involution";
        for (long y = 0; y < r; ++y) {
            if (at(x, y, unit) != (y == dual[x] ? 1 : 0)) return "duality axiom fails";
            for (long z = 0; z < r; ++z) {
                if (at(x, y, z) < 0) return "negative coefficient";
                if (at(x, y, z) != at(y, x, z)) return "not commutative";
            }
        }
    }
    // (X Y) Z = X (Y Z)
    std::vector<long> lhs(r), rhs(r);
    for (long x = 0; x < r; ++x)
        for (long y = 0; y < r; ++y)
            for (long z = 0; z < r; ++z) {
                std::fill(lhs.begin(), lhs.end(), 0);
                std::fill(rhs.begin(), rhs.end(), 0);
                for (long w = 0; w < r; ++w) {
                    long a = at(x, y, w), b = at(y, z, w);
                    if (a)
                        for (long v = 0; v < r; ++v) lhs[v] += a * at(w, z, v);
                    if (b)
                        for (long v = 0; v < r; ++v) rhs[v] += b * at(x, w, v);
                }
                if (lhs != rhs) return "not associative";
            }
    return "";
}

std::vector<double> FusionRing::numeric_fp_dims() const {
    long r = rank;
    std::vector<double> v(r, 1.0), w(r);
    for (int it = 0; it < 2000; ++it) {
        std::fill(w.begin(), w.end(), 0.0);
        for (long x = 0; x < r; ++x)
            for (long y = 0; y < r; ++y)
                for (long z = 0; z < r; ++z)
                    if (at(x, y, z)) w[z] += at(x, y, z) * v[y];
        for (long i = 0; i < r; ++i) w[i] += v[i];  // shift keeps the iteration aperiodic
        double s = w[unit];
        double diff = 0;
        for (long i = 0; i < r; ++i) {
            w[i] /= s;
            diff = std::max(diff, std::fabs(w[i] - v[i]));
        }
        v = w;
        if (diff < 1e-14) break;
    }
    return v;
}

namespace {

std::vector<std::vector<std::complex<double>>> numeric(const Matrix& m) {
    std::vector<std::vector<std::complex<double>>> r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (auto& x : m[i]) r[i].push_back(x.to_complex_d());
    return r;
}

long apply_exponent(long a, long n) { return mod_l(a, n); }

CycNum act(const GaloisAut& s, const CycNum& x) {
    if (s.n % x.conductor() != 0) throw std::invalid_argument("automorphism conductor does not contain the element");
    return x.galois(apply_exponent(s.a, x.conductor()));
}

}  // namespace

FusionRing verlinde(const ModularDatum& md) {
    md.validate();
    long r = md.rank(), I = md.unit;
    Matrix Sn = md.normalized_S();
    auto sn = numeric(Sn);
    std::complex<double> Dn = 0;
    for (long x = 0; x < r; ++x) Dn += sn[I][x] * sn[I][x];
    FusionRing fr(r, I);
    for (long x = 0; x < r; ++x)
        for (long y = x; y < r; ++y)
            for (long z = 0; z < r; ++z) {
                std::complex<double> s = 0;
                for (long w = 0; w < r; ++w) s += sn[x][w] * sn[y][w] * std::conj(sn[z][w]) / sn[I][w];
                s /= Dn;
                double re = std::round(s.real());
                double tol = 1e-6 * std::max(1.0, std::fabs(s.real()));
                if (std::fabs(s.imag()) > tol || std::fabs(s.real() - re) > tol)
                    throw VerlindeError("non-integral fusion coefficient");
                if (re < 0) throw VerlindeError("negative fusion coefficient");
                fr.at(x, y, z) = fr.at(y, x, z) = static_cast<long>(re);
            }
    // exact certificate: S_IW * sum_Z N_XY^Z S_ZW = S_XW * S_YW
    for (long x = 0; x < r; ++x)
        for (long y = x; y < r; ++y)
            for (long w = 0; w < r; ++w) {
                CycNum acc(0);
                for (long z = 0; z < r; ++z) {
                    long c = fr.at(x, y, z);
                    if (c == 1) acc += Sn[z][w];
                    else if (c) acc += Sn[z][w].scaled(mpq_class(c));
                }
                if (Sn[I][w] * acc != Sn[x][w] * Sn[y][w]) throw VerlindeError("fusion coefficients fail exact check");
            }
    for (long x = 0; x < r; ++x) {
        long d = -1;
        for (long y = 0; y < r; ++y)
            if (fr.at(x, y, I) == 1) d = y;
        if (d < 0) throw VerlindeError("object without dual");
        fr.dual[x] = d;
    }
    std::string why = fr.check_invariants();
    if (!why.empty()) throw VerlindeError("fusion ring invariant fails: " + why);
    return fr;
}

GaussSums gauss_sums(const ModularDatum& md) {
    auto d = md.dims();
    std::vector<CycNum> sq;
    for (auto& x : d) sq.push_back(x * x);
    CycNum D(0), tp(0), tm(0);
    for (long x = 0; x < md.rank(); ++x) {
        D += sq[x];
        tp += sq[x] * md.twists[x];
        tm += sq[x] * md.twists[x].conj();
    }
    if (tp.is_zero()) throw std::domain_error("Gauss sum vanishes");
    if (tp * tm != D) throw std::domain_error("tau+ tau- differs from the global dimension");
    auto q = tp * tm.inverse();
    auto root = as_root_of_unity(q);
    if (!root) throw std::domain_error("tau+/tau- is not a root of unity");
    CycNum xi = CycNum::zeta(2 * root->first, root->second);
    CycNum s = tp * xi.conj();
    if (!s.is_real() || s * s != D) throw std::domain_error("square root of the global dimension not found");
    if (sign_real(s) < 0) {
        s = -s;
        xi = -xi;
    }
    return {tp, tm, xi, s};
}

NormalizedT normalized_t(const ModularDatum& md, const CycNum& cube_root) {
    GaussSums g = gauss_sums(md);
    if (cube_root.pow(3) != g.xi) throw std::invalid_argument("cube_root is not a cube root of xi");
    NormalizedT out;
    CycNum inv = cube_root.conj();
    long level = 1;
    for (auto& th : md.twists) {
        CycNum t = th * inv;
        auto ord = as_root_of_unity(t);
        if (!ord) throw std::logic_error("normalized twist is not a root of unity");
        level = lcm_l(level, ord->first);
        out.t.push_back(t);
    }
    out.level = level;
    Matrix Sn = md.normalized_S();
    long L = lcm_l(level, matrix_conductor(Sn));
    bool ok = true;
    for (long a : field(L).units) {
        if (a % level != 1 % level) continue;
        for (auto& row : Sn)
            for (auto& x : row)
                if (ok && x.galois(mod_l(a, x.conductor())) != x) ok = false;
        if (!ok) break;
    }
    out.qs_in_qt = ok;
    return out;
}

namespace {

std::vector<long> galois_permutation_of(const Matrix& Sn, long I, const GaloisAut& sigma) {
    long r = static_cast<long>(Sn.size());
    auto sn = numeric(Sn);
    std::vector<long> perm(r, -1);
    std::vector<bool> used(r, false);
    for (long x = 0; x < r; ++x) {
        std::vector<CycNum> row;
        for (long y = 0; y < r; ++y) row.push_back(act(sigma, Sn[x][y]));
        std::vector<std::complex<double>> h(r);
        std::complex<double> base = row[I].to_complex_d();
        for (long y = 0; y < r; ++y) h[y] = row[y].to_complex_d() / base;
        for (long c = 0; c < r && perm[x] < 0; ++c) {
            if (used[c]) continue;
            double diff = 0, scale = 1;
            for (long y = 0; y < r; ++y) {
                std::complex<double> hc = sn[c][y] / sn[c][I];
                diff = std::max(diff, std::abs(hc - h[y]));
                scale = std::max(scale, std::abs(hc));
            }
            if (diff > 1e-7 * scale) continue;
            bool eq = true;
            for (long y = 0; y < r && eq; ++y) eq = row[y] * Sn[c][I] == Sn[c][y] * row[I];
            if (eq) {
                perm[x] = c;
                used[c] = true;
            }
        }
        if (perm[x] < 0) throw std::runtime_error("no matching row for Galois permutation");
    }
    return perm;
}

}  // namespace

std::vector<long> galois_permutation(const ModularDatum& md, const GaloisAut& sigma) {
    return galois_permutation_of(md.normalized_S(), md.unit, sigma);
}

bool check_galois_symmetry(const ModularDatum& md, const CycNum& cube_root) {
    NormalizedT nt;
    try {
        nt = normalized_t(md, cube_root);
    } catch (const std::exception&) {
        return false;
    }
    Matrix Sn = md.normalized_S();
    long L = lcm_l(nt.level, matrix_conductor(Sn));
    for (auto& t : nt.t) L = lcm_l(L, t.conductor());
    for (long a : unit_group_generators(L)) {
        std::vector<long> perm;
        try {
            perm = galois_permutation_of(Sn, md.unit, GaloisAut(L, a));
        } catch (const std::exception&) {
            return false;
        }
        for (long x = 0; x < md.rank(); ++x) {
            const CycNum& tx = nt.t[x];
            if (tx.galois(mod_l(a * a, tx.conductor())) != nt.t[perm[x]]) return false;
        }
    }
    return true;
}

std::vector<std::vector<long>> galois_orbits(const ModularDatum& md) {
    Matrix Sn = md.normalized_S();
    long n = matrix_conductor(Sn), r = md.rank();
    std::vector<long> parent(r);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<long(long)> find = [&](long x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (long a : unit_group_generators(n)) {
        auto perm = galois_permutation_of(Sn, md.unit, GaloisAut(n, a));
        for (long x = 0; x < r; ++x) parent[find(x)] = find(perm[x]);
    }
    std::vector<std::vector<long>> orbits;
    std::vector<long> slot(r, -1);
    for (long x = 0; x < r; ++x) {
        long root = find(x);
        if (slot[root] < 0) {
            slot[root] = static_cast<long>(orbits.size());
            orbits.emplace_back();
        }
        orbits[slot[root]].push_back(x);
    }
    return orbits;
}

std::vector<CycNum> formal_codegrees(const ModularDatum& md, const CodegreeOptions& opt) {
    auto d = md.dims();
    std::vector<CycNum> sq;
    for (auto& x : d) sq.push_back(x * x);
    CycNum D(0);
    for (auto& s : sq) D += s;
    CycNum invD = D.inverse();
    CycNum total(0);
    for (auto& s : sq) total += s * invD;
    if (!total.is_one()) throw std::runtime_error("class equation fails");
    std::vector<CycNum> out;
    std::vector<std::pair<CycNum, CycNum>> cache;
    for (auto& s : sq) {
        const CycNum* hit = nullptr;
        for (auto& c : cache)
            if (c.first == s) hit = &c.second;
        if (hit) {
            out.push_back(*hit);
            continue;
        }
        CycNum f = D * s.inverse();
        if (opt.certify) {
            auto mp = integral_minimal_polynomial(f);
            if (!mp) throw std::runtime_error("formal codegree is not an algebraic integer");
            if (!all_roots_positive(*mp)) throw std::runtime_error("formal codegree is not totally positive");
            if (!is_d_number(*mp)) throw std::runtime_error("formal codegree is not a d-number");
            if (!is_algebraic_integer(D * f.inverse())) throw std::runtime_error("formal codegree does not divide dim");
        }
        cache.emplace_back(s, f);
        out.push_back(f);
    }
    return out;
}

bool verify_sl2z_relations(const ModularDatum& md, const CycNum& cube_root) {
    GaussSums g;
    try {
        g = gauss_sums(md);
    } catch (const std::exception&) {
        return false;
    }
    if (cube_root.pow(3) != g.xi) return false;
    long r = md.rank();
    CycNum D = g.sqrt_dim * g.sqrt_dim;
    Matrix Sn = md.normalized_S();
    Matrix S2 = matmul(Sn, Sn);
    std::vector<long> C(r, -1);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j) {
            if (S2[i][j].is_zero()) continue;
            if (S2[i][j] != D || C[i] >= 0) return false;
            C[i] = j;
        }
    for (long i = 0; i < r; ++i)
        if (C[i] < 0 || C[C[i]] != i) return false;
    Matrix B = Sn;
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j) B[i][j] = Sn[i][j] * md.twists[j];
    Matrix B3 = matmul(matmul(B, B), B);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j)
            if (B3[i][j] != g.tau_plus * S2[i][j]) return false;
    return true;
}

ModularDatum deligne_product(const ModularDatum& a, const ModularDatum& b) {
    ModularDatum m;
    m.name = a.name + " x " + b.name;
    long ra = a.rank(), rb = b.rank();
    m.S.assign(ra * rb, std::vector<CycNum>(ra * rb));
    m.twists.resize(ra * rb);
    for (long i = 0; i < ra; ++i)
        for (long j = 0; j < rb; ++j) {
            m.twists[i * rb + j] = a.twists[i] * b.twists[j];
            for (long k = 0; k < ra; ++k)
                for (long l = 0; l < rb; ++l) m.S[i * rb + j][k * rb + l] = a.S[i][k] * b.S[j][l];
        }
    m.unit = a.unit * rb + b.unit;
    if (a.cube_root && b.cube_root) m.cube_root = *a.cube_root * *b.cube_root;
    return m;
}

ModularDatum galois_conjugate(const ModularDatum& md, const GaloisAut& sigma) {
    long L = lcm_l(sigma.n, md.conductor());
    for (auto& t : md.twists) L = lcm_l(L, t.conductor());
    if (md.cube_root) L = lcm_l(L, md.cube_root->conductor());
    long a = sigma.a;
    while (gcd_l(a, L) != 1) a += sigma.n;
    GaloisAut s(L, a);
    ModularDatum m = md;
    m.name = md.name + "^s" + std::to_string(mod_l(sigma.a, sigma.n));
    for (auto& row : m.S)
        for (auto& x : row) x = act(s, x);
    for (auto& t : m.twists) t = act(s, t);
    m.cube_root.reset();
    if (md.cube_root) {
        CycNum c = act(s, *md.cube_root);
        try {
            CycNum xi = gauss_sums(m).xi;
            if (c.pow(3) == xi) m.cube_root = c;
            else if ((-c).pow(3) == xi) m.cube_root = -c;
        } catch (const std::exception&) {
        }
    }
    return m;
}

std::vector<CycNum> fp_dimensions(const FusionRing& fr, const ModularDatum& md) {
    long r = md.rank(), I = md.unit;
    if (fr.rank != r) throw std::invalid_argument("rank mismatch");
    Matrix Sn = md.normalized_S();
    auto sn = numeric(Sn);
    for (long x = 0; x < r; ++x) {
        bool cand = true;
        for (long y = 0; y < r && cand; ++y) {
            std::complex<double> h = sn[x][y] / sn[x][I];
            cand = std::fabs(h.imag()) < 1e-9 && h.real() > 1 - 1e-9;
        }
        if (!cand) continue;
        CycNum inv = Sn[x][I].inverse();
        std::vector<CycNum> v;
        bool ok = true;
        for (long y = 0; y < r && ok; ++y) {
            CycNum h = Sn[x][y] * inv;
            ok = h.is_real() && compare_real(h, CycNum(1)) >= 0;
            v.push_back(h);
        }
        if (!ok) continue;
        for (long a = 0; a < r && ok; ++a)
            for (long b = a; b < r && ok; ++b) {
                CycNum s(0);
                for (long c = 0; c < r; ++c)
                    if (fr.at(a, b, c)) s += v[c].scaled(mpq_class(fr.at(a, b, c)));
                ok = s == v[a] * v[b];
            }
        if (ok) return v;
    }
    throw std::runtime_error("no row of the S-matrix gives Frobenius-Perron dimensions");
}

std::optional<std::vector<long>> grothendieck_match(const FusionRing& fr, const FusionRing& ref) {
    long r = fr.rank;
    if (ref.rank != r) return std::nullopt;
    auto da = fr.numeric_fp_dims(), db = ref.numeric_fp_dims();
    auto signature = [](const FusionRing& f, const std::vector<double>& d, long x) {
        std::vector<long> s;
        s.push_back(f.dual[x] == x ? 1 : 0);
        long tot = 0;
        for (long y = 0; y < f.rank; ++y)
            for (long z = 0; z < f.rank; ++z) tot += f.at(x, y, z);
        s.push_back(tot);
        std::vector<long> sq;
        for (long z = 0; z < f.rank; ++z) sq.push_back(f.at(x, x, z));
        std::sort(sq.begin(), sq.end());
        s.insert(s.end(), sq.begin(), sq.end());
        s.push_back(std::llround(d[x] * 1e6));
        return s;
    };
    std::vector<std::vector<long>> sa(r), sb(r);
    for (long x = 0; x < r; ++x) {
        sa[x] = signature(fr, da, x);
        sb[x] = signature(ref, db, x);
    }
    std::vector<long> map(r, -1);
    std::vector<bool> used(r, false);
    std::vector<long> order{fr.unit};
    for (long x = 0; x < r; ++x)
        if (x != fr.unit) order.push_back(x);
    auto consistent = [&](long depth) {
        for (long i = 0; i <= depth; ++i)
            for (long j = 0; j <= depth; ++j)
                for (long k = 0; k <= depth; ++k) {
                    long x = order[i], y = order[j], z = order[k];
                    if (i != depth && j != depth && k != depth) continue;
                    if (fr.at(x, y, z) != ref.at(map[x], map[y], map[z])) return false;
                }
        return true;
    };
    std::function<bool(long)> rec = [&](long depth) {
        if (depth == r) return true;
        long x = order[depth];
        for (long c = 0; c < r; ++c) {
            if (used[c] || sa[x] != sb[c]) continue;
            if ((x == fr.unit) != (c == ref.unit)) continue;
            map[x] = c;
            used[c] = true;
            if (consistent(depth) && rec(depth + 1)) return true;
            used[c] = false;
            map[x] = -1;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return map;
}

QuadraticForm QuadraticForm::from_exponent(long p, long e) {
    QuadraticForm q;
    q.p = p;
    for (long a = 0; a < p; ++a) q.values.push_back(CycNum::zeta(p, e * a * a));
    return q;
}

bool QuadraticForm::satisfies_functional_equations() const {
    for (long a = 0; a < p; ++a) {
        if (values[a] != values[mod_l(-a, p)]) return false;
        for (long b = 0; b < p; ++b)
            if (values[(a + b) % p] * values[mod_l(a - b, p)] != values[a].pow(2) * values[b].pow(2)) return false;
    }
    return true;
}

bool same_multiset(std::vector<CycNum> a, std::vector<CycNum> b) {
    if (a.size() != b.size()) return false;
    std::vector<bool> used(b.size(), false);
    for (auto& x : a) {
        bool found = false;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!used[j] && b[j] == x) {
                used[j] = found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

}  // namespace mfc
